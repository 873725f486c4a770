// complab: sink analysis, m-step competition graphs and structural checks
// for bipartite tournaments.
//
// Exit codes: 0 success / all checks pass, 2 input or I/O error,
// 3 a structural check failed (witness written to --witness-out).

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "CLI11.hpp"

#include "complab/characterization.hpp"
#include "complab/competition.hpp"
#include "complab/error.hpp"
#include "complab/generators.hpp"
#include "complab/io.hpp"
#include "complab/sink_analysis.hpp"

namespace {

using namespace complab;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCheckFailed = 3;

struct InputOptions {
  std::string input;
  std::string fixture;
  std::optional<std::size_t> n1;
  std::optional<std::size_t> n2;
  std::uint64_t seed = 0;
  std::string mode = "uniform";
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  auto* file = cmd->add_option("--input,-i", in.input, "Instance JSON file");
  auto* fix = cmd->add_option("--fixture", in.fixture, "fig1_D | fig1_Dprime | fig2_D");
  auto* n1 = cmd->add_option("--n1", in.n1, "Generator: size of part 1");
  auto* n2 = cmd->add_option("--n2", in.n2, "Generator: size of part 2");
  cmd->add_option("--seed", in.seed, "Generator seed")->needs(n1);
  cmd->add_option("--mode", in.mode, "Generator mode: uniform | acyclic | sinkless")->needs(n1);
  n1->needs(n2);
  n2->needs(n1);
  file->excludes(fix, n1, n2);
  fix->excludes(n1, n2);
}

LoadedInstance load(const InputOptions& in) {
  if (!in.input.empty()) return load_instance(in.input);
  if (!in.fixture.empty()) {
    auto bt = fixture(in.fixture);
    return {bt.digraph(), bt};
  }
  if (in.n1) {
    auto bt = generate({*in.n1, *in.n2, in.seed, parse_gen_mode(in.mode)});
    return {bt.digraph(), bt};
  }
  throw Error(ErrorCode::InvalidArgument, "one of --input, --fixture or --n1/--n2 is required");
}

std::size_t safety_cap_for(const Digraph& d, std::optional<std::size_t> flag) {
  if (const char* env = std::getenv("COMPLAB_SAFETY_CAP"); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, std::string("COMPLAB_SAFETY_CAP='") + env + "'");
    }
  }
  return flag.value_or(default_safety_cap(d.vertex_count()));
}

std::string edge_list(const Graph& g, const Digraph& d) {
  std::string out;
  for (const auto& e : g.edges()) {
    if (!out.empty()) out += ' ';
    out += d.label(e.u) + d.label(e.v);
  }
  return out.empty() ? "-" : out;
}

std::string set_text(const VertexSet& s, const Digraph& d) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Vertex v) {
    if (!first) out += ',';
    out += d.label(v);
    first = false;
  });
  return out + "}";
}

// Worker pool over [0, count); results land in slot order.
template <class Result, class Fn>
std::vector<Result> run_indexed(std::size_t count, unsigned threads, Fn&& fn) {
  std::vector<Result> results(count);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < count; i = next++) results[i] = fn(i);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = count;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

// ---- analyze

struct AnalyzeOptions {
  InputOptions in;
  std::optional<std::size_t> m_max;
  std::optional<std::size_t> safety_cap;
  std::string format = "json";
};

int cmd_analyze(const AnalyzeOptions& o) {
  const auto loaded = load(o.in);
  const Digraph& d = loaded.digraph;
  const auto sa = sink_analysis(d);
  const auto profile = competition_profile(d, safety_cap_for(d, o.safety_cap));
  const std::size_t m_max = o.m_max.value_or(std::max<std::size_t>(default_m_max(sa),
                                                                     profile.cindex + profile.cperiod));
  std::vector<Graph> cm;
  for (std::size_t m = 1; m <= m_max; ++m) cm.push_back(m_step_competition_graph(d, m));

  auto part_labels = [&](const Graph& g) {
    std::vector<std::string> out;
    if (loaded.tournament) {
      for (Side s : {Side::First, Side::Second}) {
        out.push_back(classify_structure(g, loaded.tournament->part(s)).label());
      }
    }
    return out;
  };

  if (o.format == "text") {
    std::cout << "vertices " << d.vertex_count() << "  arcs " << d.arc_count() << "\n";
    std::cout << "zeta " << sa.zeta() << "  " << (is_acyclic_via_sinks(sa) ? "acyclic" : "cyclic");
    if (loaded.tournament) std::cout << "  class " << to_string(applicability_of(sa));
    std::cout << "\n";
    for (std::size_t i = 0; i < sa.sink_sets().size(); ++i) {
      std::cout << "W" << i << " " << set_text(sa.sink_set(i), d) << "\n";
    }
    for (std::size_t m = 1; m <= m_max; ++m) {
      std::cout << "C^" << m << " " << edge_list(cm[m - 1], d);
      for (const auto& l : part_labels(cm[m - 1])) std::cout << "  [" << l << "]";
      std::cout << "\n";
    }
    std::cout << "cindex " << profile.cindex << "  cperiod " << profile.cperiod << "\n";
    return kExitOk;
  }

  Json out;
  out["instance"] = loaded.tournament ? to_json(*loaded.tournament) : to_json(d);
  out["sink_analysis"] = to_json(sa, d);
  if (loaded.tournament) out["class"] = to_string(applicability_of(sa));
  Json graphs = Json::array();
  for (std::size_t m = 1; m <= m_max; ++m) {
    Json g = to_json(cm[m - 1], d);
    Json entry{{"m", m}, {"edges", g["edges"]}};
    if (loaded.tournament) entry["parts"] = part_labels(cm[m - 1]);
    graphs.push_back(std::move(entry));
  }
  out["competition_graphs"] = std::move(graphs);
  out["profile"] = to_json(profile);
  out["profile"]["eventual_period"] = profile.eventual_period;
  out["profile"]["matrix_index"] = profile.matrix_index;
  out["profile"]["matrix_period"] = profile.matrix_period;
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

// ---- generate

int cmd_generate(const InputOptions& in) {
  auto bt = generate({*in.n1, *in.n2, in.seed, parse_gen_mode(in.mode)});
  std::cout << to_json(bt).dump(2) << "\n";
  return kExitOk;
}

// ---- verify

struct VerifyOptions {
  InputOptions in;
  std::vector<std::size_t> exhaustive;
  std::optional<std::size_t> m_max;
  unsigned threads = 0;
  std::string witness_out = "complab_witness.json";
  std::string format = "text";
};

bool write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out.flush());
}

int report_failure(const VerificationReport& r, const BipartiteTournament& bt,
                   const std::string& path, const std::string& id) {
  const auto* f = r.first_failure();
  std::cerr << "FAIL " << id << ": " << f->name << ": " << f->witness << "\n";
  if (!write_file(path, to_json(r, bt).dump(2) + "\n")) {
    std::cerr << "cannot write witness to " << path << "\n";
  } else {
    std::cerr << "witness written to " << path << "\n";
  }
  return kExitCheckFailed;
}

int cmd_verify(const VerifyOptions& o) {
  if (!o.exhaustive.empty()) {
    const std::size_t n1 = o.exhaustive[0];
    const std::size_t n2 = o.exhaustive[1];
    const auto range = enumerate_all(n1, n2);
    struct Row {
      bool passed = true;
      std::size_t failed_checks = 0;
    };
    auto rows = run_indexed<Row>(range.size(), o.threads, [&](std::size_t mask) {
      auto bt = orientation_from_mask(n1, n2, mask);
      auto r = verify_instance(bt, o.m_max.value_or(default_m_max(sink_analysis(bt.digraph()))));
      Row row;
      for (const auto& c : r.checks) row.failed_checks += c.status == CheckStatus::Fail;
      row.passed = row.failed_checks == 0;
      return row;
    });
    std::size_t failures = 0;
    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!rows[i].passed) {
        ++failures;
        if (!first) first = i;
      }
    }
    if (o.format == "json") {
      Json out{{"n1", n1}, {"n2", n2}, {"instances", rows.size()}, {"failures", failures}};
      if (first) out["first_failure_mask"] = *first;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << n1 << "x" << n2 << ": " << rows.size() << " instances, " << failures
                << " failing\n";
    }
    if (first) {
      auto bt = orientation_from_mask(n1, n2, *first);
      auto r = verify_instance(bt, o.m_max.value_or(default_m_max(sink_analysis(bt.digraph()))));
      return report_failure(r, bt, o.witness_out, "mask " + std::to_string(*first));
    }
    return kExitOk;
  }

  const auto loaded = load(o.in);
  if (!loaded.tournament) {
    throw Error(ErrorCode::InvalidArgument, "verify needs a bipartite tournament (n1/n2 form)");
  }
  const auto& bt = *loaded.tournament;
  const std::size_t m_max = o.m_max.value_or(default_m_max(sink_analysis(bt.digraph())));
  const auto r = verify_instance(bt, m_max);
  if (o.format == "json") {
    std::cout << to_json(r, bt).dump(2) << "\n";
  } else {
    std::cout << to_text(r);
  }
  if (!r.all_passed()) return report_failure(r, bt, o.witness_out, "instance");
  return kExitOk;
}

// ---- sweep

struct SweepOptions {
  std::string sizes = "2x2";
  bool exhaustive = false;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::string mode = "uniform";
  unsigned threads = 0;
  std::string format = "csv";
};

std::vector<std::pair<std::size_t, std::size_t>> parse_sizes(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto x = item.find('x');
    try {
      if (x == std::string::npos) throw std::invalid_argument(item);
      std::size_t used1 = 0;
      std::size_t used2 = 0;
      const auto a = std::stoull(item.substr(0, x), &used1);
      const auto b = std::stoull(item.substr(x + 1), &used2);
      if (used1 != x || used2 != item.size() - x - 1 || a == 0 || b == 0) {
        throw std::invalid_argument(item);
      }
      out.emplace_back(a, b);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "bad size '" + item + "', expected N1xN2");
    }
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "--sizes is empty");
  return out;
}

struct SweepRow {
  std::string id;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t zeta = 0;
  bool acyclic = false;
  std::string cls;
  std::size_t cindex = 0;
  std::size_t cperiod = 0;
  std::size_t shape_m = 0;
  std::string part1;
  std::string part2;
};

SweepRow sweep_row(std::string id, const BipartiteTournament& bt) {
  const auto sa = sink_analysis(bt.digraph());
  const auto p = competition_profile(bt.digraph(), safety_cap_for(bt.digraph(), std::nullopt));
  SweepRow row;
  row.id = std::move(id);
  row.n1 = bt.part1().count();
  row.n2 = bt.part2().count();
  row.zeta = sa.zeta();
  row.acyclic = is_acyclic_via_sinks(sa);
  row.cls = to_string(applicability_of(sa));
  row.cindex = p.cindex;
  row.cperiod = p.cperiod;
  row.shape_m = std::max<std::size_t>(p.cindex, 2);
  const Graph g = m_step_competition_graph(bt.digraph(), row.shape_m);
  row.part1 = classify_structure(g, bt.part1()).label();
  row.part2 = classify_structure(g, bt.part2()).label();
  return row;
}

int cmd_sweep(const SweepOptions& o) {
  if (!o.exhaustive && o.samples == 0) {
    throw Error(ErrorCode::InvalidArgument, "sweep needs --exhaustive or --samples N");
  }
  const GenMode mode = parse_gen_mode(o.mode);
  std::vector<SweepRow> rows;
  for (const auto& [n1, n2] : parse_sizes(o.sizes)) {
    const std::size_t count = o.exhaustive ? enumerate_all(n1, n2).size() : o.samples;
    auto part = run_indexed<SweepRow>(count, o.threads, [&, n1 = n1, n2 = n2](std::size_t i) {
      if (o.exhaustive) {
        return sweep_row(std::to_string(n1) + "x" + std::to_string(n2) + ":mask" + std::to_string(i),
                         orientation_from_mask(n1, n2, i));
      }
      const std::uint64_t seed = o.seed + i;
      return sweep_row(std::to_string(n1) + "x" + std::to_string(n2) + ":" +
                           std::string(to_string(mode)) + ":seed" + std::to_string(seed),
                       generate({n1, n2, seed, mode}));
    });
    rows.insert(rows.end(), std::make_move_iterator(part.begin()),
                std::make_move_iterator(part.end()));
  }

  std::map<std::tuple<std::string, std::size_t, std::size_t>, std::size_t> freq;
  for (const auto& r : rows) ++freq[{r.cls, r.cindex, r.cperiod}];

  if (o.format == "json") {
    Json jrows = Json::array();
    for (const auto& r : rows) {
      jrows.push_back(Json{{"id", r.id},           {"n1", r.n1},
                           {"n2", r.n2},           {"zeta", r.zeta},
                           {"acyclic", r.acyclic}, {"class", r.cls},
                           {"cindex", r.cindex},   {"cperiod", r.cperiod},
                           {"shape_m", r.shape_m}, {"part1", r.part1},
                           {"part2", r.part2}});
    }
    Json jfreq = Json::array();
    for (const auto& [key, n] : freq) {
      jfreq.push_back(Json{{"class", std::get<0>(key)},
                           {"cindex", std::get<1>(key)},
                           {"cperiod", std::get<2>(key)},
                           {"count", n}});
    }
    std::cout << Json{{"rows", std::move(jrows)}, {"frequencies", std::move(jfreq)}}.dump(2)
              << "\n";
    return kExitOk;
  }

  std::cout << "id,n1,n2,zeta,acyclic,class,cindex,cperiod,shape_m,part1,part2\n";
  for (const auto& r : rows) {
    std::cout << r.id << ',' << r.n1 << ',' << r.n2 << ',' << r.zeta << ','
              << (r.acyclic ? "true" : "false") << ',' << r.cls << ',' << r.cindex << ','
              << r.cperiod << ',' << r.shape_m << ',' << r.part1 << ',' << r.part2 << "\n";
  }
  std::cout << "\nclass,cindex,cperiod,count\n";
  for (const auto& [key, n] : freq) {
    std::cout << std::get<0>(key) << ',' << std::get<1>(key) << ',' << std::get<2>(key) << ','
              << n << "\n";
  }
  return kExitOk;
}

// ---- export

struct ExportOptions {
  InputOptions in;
  std::vector<std::size_t> ms;
  std::string out_dir = ".";
};

int cmd_export(const ExportOptions& o) {
  const auto loaded = load(o.in);
  const Digraph& d = loaded.digraph;
  std::error_code ec;
  std::filesystem::create_directories(o.out_dir, ec);
  auto put = [&](const std::string& name, const std::string& text) {
    const auto path = std::filesystem::path(o.out_dir) / name;
    if (!write_file(path, text)) {
      std::cerr << "cannot write " << path.string() << "\n";
      return false;
    }
    std::cout << path.string() << "\n";
    return true;
  };
  const std::string digraph_dot = loaded.tournament ? to_dot(*loaded.tournament) : to_dot(d);
  if (!put("D.dot", digraph_dot)) return kExitInput;
  for (std::size_t m : o.ms) {
    if (m == 0) throw Error(ErrorCode::InvalidArgument, "--m values must be >= 1");
    const auto name = "C" + std::to_string(m);
    if (!put(name + ".dot", to_dot(m_step_competition_graph(d, m), d, name))) return kExitInput;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sink analysis and m-step competition graphs of bipartite tournaments"};
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "Sink sequence, C^1..C^m_max and competition profile");
  add_input_options(a, analyze.in);
  a->add_option("--m-max", analyze.m_max, "Last m to print")->check(CLI::PositiveNumber);
  a->add_option("--safety-cap", analyze.safety_cap, "Largest matrix power examined");
  a->add_option("--format", analyze.format)->check(CLI::IsMember({"json", "text"}));

  InputOptions gen;
  auto* g = app.add_subcommand("generate", "Print a seeded random bipartite tournament as JSON");
  g->add_option("--n1", gen.n1, "Size of part 1")->required();
  g->add_option("--n2", gen.n2, "Size of part 2")->required();
  g->add_option("--seed", gen.seed, "Seed");
  g->add_option("--mode", gen.mode, "uniform | acyclic | sinkless");

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Run every applicable structural check");
  add_input_options(v, verify.in);
  auto* ex = v->add_option("--exhaustive", verify.exhaustive, "All orientations of N1 x N2")
                 ->expected(2);
  ex->excludes(v->get_option("--input"), v->get_option("--fixture"), v->get_option("--n1"));
  v->add_option("--m-max", verify.m_max)->check(CLI::Range(std::size_t{2}, std::size_t{1000}));
  v->add_option("--threads", verify.threads, "Worker threads (0 = hardware)");
  v->add_option("--witness-out", verify.witness_out, "Where a failing instance is written");
  v->add_option("--format", verify.format)->check(CLI::IsMember({"json", "text"}));

  SweepOptions sweep;
  auto* s = app.add_subcommand("sweep", "Tabulate zeta, cindex, cperiod and part shapes");
  s->add_option("--sizes", sweep.sizes, "Comma-separated N1xN2 list, e.g. 2x2,3x3");
  auto* sx = s->add_flag("--exhaustive", sweep.exhaustive, "Every orientation");
  auto* sn = s->add_option("--samples", sweep.samples, "Seeded samples per size");
  sx->excludes(sn);
  s->add_option("--seed", sweep.seed, "First seed; sample i uses seed + i");
  s->add_option("--mode", sweep.mode, "uniform | acyclic | sinkless");
  s->add_option("--threads", sweep.threads, "Worker threads (0 = hardware)");
  s->add_option("--format", sweep.format)->check(CLI::IsMember({"csv", "json"}));

  ExportOptions exp;
  auto* e = app.add_subcommand("export", "Write DOT for D and for each requested C^m");
  add_input_options(e, exp.in);
  e->add_option("--m", exp.ms, "Comma-separated m values")->delimiter(',');
  e->add_option("--out-dir", exp.out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*a) return cmd_analyze(analyze);
    if (*g) return cmd_generate(gen);
    if (*v) return cmd_verify(verify);
    if (*s) return cmd_sweep(sweep);
    if (*e) return cmd_export(exp);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    if (err.code() == ErrorCode::TooLarge) {
      std::cerr << "hint: exhaustive runs need n1*n2 <= " << kMaxEnumerationBits
                << "; use `sweep --samples N` for larger parts\n";
    }
    return kExitInput;
  }
  return kExitOk;
}
