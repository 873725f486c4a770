#include "complab/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <unordered_map>

#include "complab/error.hpp"

namespace complab {

namespace {

std::vector<std::string> read_labels(const Json& j, const char* key, std::size_t n,
                                     const std::string& prefix) {
  std::vector<std::string> labels;
  if (j.contains(key)) {
    labels = j.at(key).get<std::vector<std::string>>();
    if (labels.size() != n) {
      throw Error(ErrorCode::Parse, std::string(key) + " has " + std::to_string(labels.size()) +
                                        " entries, expected " + std::to_string(n));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i + (prefix.empty() ? 0 : 1)));
  }
  return labels;
}

std::vector<Arc> read_arcs(const Json& j, const std::vector<std::string>& labels) {
  std::unordered_map<std::string, Vertex> index;
  for (Vertex v = 0; v < labels.size(); ++v) {
    if (!index.emplace(labels[v], v).second) {
      throw Error(ErrorCode::Parse, "label '" + labels[v] + "' appears twice");
    }
  }
  auto endpoint = [&](const Json& e) -> Vertex {
    if (e.is_string()) {
      auto it = index.find(e.get<std::string>());
      if (it == index.end()) {
        throw Error(ErrorCode::UnknownLabel, "unknown label '" + e.get<std::string>() + "'");
      }
      return it->second;
    }
    if (e.is_number_integer()) {
      const auto v = e.get<long long>();
      if (v < 0 || static_cast<std::size_t>(v) >= labels.size()) {
        throw Error(ErrorCode::VertexOutOfRange, "vertex index " + std::to_string(v) + " out of range");
      }
      return static_cast<Vertex>(v);
    }
    throw Error(ErrorCode::Parse, "arc endpoint must be a label or an index");
  };
  std::vector<Arc> arcs;
  if (!j.contains("arcs")) return arcs;
  for (const auto& pair : j.at("arcs")) {
    if (!pair.is_array() || pair.size() != 2) {
      throw Error(ErrorCode::Parse, "each arc must be a two-element array");
    }
    arcs.push_back({endpoint(pair[0]), endpoint(pair[1])});
  }
  return arcs;
}

std::size_t read_size(const Json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw Error(ErrorCode::Parse, std::string(key) + " must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

LoadedInstance instance_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw Error(ErrorCode::Parse, "instance must be a JSON object");
    if (j.contains("n1") || j.contains("n2")) {
      const std::size_t n1 = read_size(j, "n1");
      const std::size_t n2 = read_size(j, "n2");
      if (n1 == 0 || n2 == 0) throw Error(ErrorCode::Parse, "part sizes must be >= 1");
      std::vector<std::string> labels = read_labels(j, "labels1", n1, "x");
      auto l2 = read_labels(j, "labels2", n2, "y");
      labels.insert(labels.end(), l2.begin(), l2.end());
      const auto arcs = read_arcs(j, labels);
      const std::size_t n = n1 + n2;
      Digraph d(n, arcs, labels);
      VertexSet p1(n);
      for (std::size_t i = 0; i < n1; ++i) p1.set(i);
      auto bt = validate_bipartite_tournament(d, p1, p1.complement());
      return {bt.digraph(), std::move(bt)};
    }
    if (j.contains("n")) {
      const std::size_t n = read_size(j, "n");
      auto labels = read_labels(j, "labels", n, "");
      const auto arcs = read_arcs(j, labels);
      return {Digraph(n, arcs, std::move(labels)), std::nullopt};
    }
    throw Error(ErrorCode::Parse, "instance needs either n1/n2 or n");
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

LoadedInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, path.string() + ": " + e.what());
  }
  return instance_from_json(j);
}

Json to_json(const Digraph& d) {
  Json arcs = Json::array();
  for (const auto& a : d.arcs()) arcs.push_back({d.label(a.from), d.label(a.to)});
  return Json{{"n", d.vertex_count()}, {"labels", d.labels()}, {"arcs", std::move(arcs)}};
}

Json to_json(const BipartiteTournament& bt) {
  const Digraph& d = bt.digraph();
  std::vector<std::string> l1;
  std::vector<std::string> l2;
  bt.part1().for_each([&](Vertex v) { l1.push_back(d.label(v)); });
  bt.part2().for_each([&](Vertex v) { l2.push_back(d.label(v)); });
  Json arcs = Json::array();
  for (const auto& a : d.arcs()) arcs.push_back({d.label(a.from), d.label(a.to)});
  return Json{{"n1", l1.size()},
              {"n2", l2.size()},
              {"labels1", l1},
              {"labels2", l2},
              {"arcs", std::move(arcs)}};
}

Json to_json(const SinkAnalysis& a, const Digraph& labels_from) {
  Json w = Json::array();
  for (const auto& s : a.sink_sets()) {
    Json level = Json::array();
    s.for_each([&](Vertex v) { level.push_back(labels_from.label(v)); });
    w.push_back(std::move(level));
  }
  return Json{{"zeta", a.zeta()}, {"W", std::move(w)}, {"acyclic", is_acyclic_via_sinks(a)}};
}

Json to_json(const Graph& g, const Digraph& labels_from) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({labels_from.label(e.u), labels_from.label(e.v)});
  }
  return Json{{"vertices", labels_from.labels()}, {"edges", std::move(edges)}};
}

Json to_json(const CompetitionProfile& p) {
  return Json{{"cindex", p.cindex}, {"cperiod", p.cperiod}};
}

Json to_json(const VerificationReport& r, const BipartiteTournament& bt) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(
        Json{{"name", c.name}, {"status", to_string(c.status)}, {"witness", c.witness}});
  }
  return Json{{"instance", to_json(bt)}, {"checks", std::move(checks)}};
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "zeta=" << r.zeta << " class=" << to_string(r.applicability) << " cindex=" << r.cindex
      << " cperiod=" << r.cperiod << " m_max=" << r.m_max << "\n";
  std::size_t width = 0;
  for (const auto& c : r.checks) width = std::max(width, c.name.size());
  for (const auto& c : r.checks) {
    out << std::left << std::setw(static_cast<int>(width)) << c.name << "  " << std::setw(4)
        << to_string(c.status);
    if (!c.witness.empty()) out << "  " << c.witness;
    out << "\n";
  }
  return out.str();
}

std::string to_dot(const Digraph& d, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n";
  for (Vertex v = 0; v < d.vertex_count(); ++v) out << "  " << quote(d.label(v)) << ";\n";
  for (const auto& a : d.arcs()) {
    out << "  " << quote(d.label(a.from)) << " -> " << quote(d.label(a.to)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const BipartiteTournament& bt, const std::string& name) {
  const Digraph& d = bt.digraph();
  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n  rankdir=LR;\n";
  for (const VertexSet* part : {&bt.part1(), &bt.part2()}) {
    out << "  { rank=same;";
    part->for_each([&](Vertex v) { out << " " << quote(d.label(v)) << ";"; });
    out << " }\n";
  }
  for (const auto& a : d.arcs()) {
    out << "  " << quote(d.label(a.from)) << " -> " << quote(d.label(a.to)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Graph& g, const Digraph& labels_from, const std::string& name) {
  std::ostringstream out;
  out << "graph " << quote(name) << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << quote(labels_from.label(v)) << ";\n";
  for (const auto& e : g.edges()) {
    out << "  " << quote(labels_from.label(e.u)) << " -- " << quote(labels_from.label(e.v))
        << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace complab
