#include "complab/characterization.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "complab/error.hpp"

namespace complab {

// ---------------------------------------------------------------------------
// Shapes

CliqueShape CliqueShape::make(std::vector<std::size_t> clique_sizes, std::size_t isolated) {
  CliqueShape s;
  s.isolated = isolated;
  for (auto k : clique_sizes) {
    if (k >= 2) {
      s.cliques.push_back(k);
    } else {
      s.isolated += k;
    }
  }
  std::sort(s.cliques.rbegin(), s.cliques.rend());
  return s;
}

std::size_t CliqueShape::vertex_count() const {
  std::size_t n = isolated;
  for (auto k : cliques) n += k;
  return n;
}

std::string CliqueShape::to_string() const {
  std::string out;
  for (auto k : cliques) {
    if (!out.empty()) out += "+";
    out += "K" + std::to_string(k);
  }
  if (isolated > 0 || out.empty()) {
    if (!out.empty()) out += "+";
    out += "I" + std::to_string(isolated);
  }
  return out;
}

std::optional<CliqueShape> clique_shape_of(const Graph& g, const VertexSet& within) {
  std::vector<std::size_t> sizes;
  for (const auto& comp : g.components(within)) {
    if (!g.is_clique(comp)) return std::nullopt;
    sizes.push_back(comp.count());
  }
  return CliqueShape::make(std::move(sizes), 0);
}

StructureSummary classify_structure(const Graph& g, const VertexSet& part) {
  StructureSummary s;
  const VertexSet isolated = g.isolated_vertices(part);
  const VertexSet rest = part - isolated;
  s.isolated = isolated.count();
  if (rest.none()) {
    s.kind = StructureKind::Edgeless;
    return s;
  }

  const auto comps = g.components(rest);
  if (std::all_of(comps.begin(), comps.end(), [&](const VertexSet& c) { return g.is_clique(c); })) {
    s.kind = StructureKind::CliquesPlusIsolated;
    for (const auto& c : comps) s.clique_sizes.push_back(c.count());
    std::sort(s.clique_sizes.rbegin(), s.clique_sizes.rend());
    return s;
  }

  VertexSet universal(part.size());
  rest.for_each([&](Vertex v) {
    VertexSet others = rest;
    others.reset(v);
    if (others.is_subset_of(g.neighbors(v))) universal.set(v);
  });
  const auto split = g.components(rest - universal);
  if (split.size() == 2 && g.is_clique(split[0]) && g.is_clique(split[1])) {
    VertexSet a = universal | split[0];
    VertexSet b = universal | split[1];
    if (b.count() > a.count()) std::swap(a, b);
    s.kind = StructureKind::TwoOverlappingCliques;
    s.clique_sizes = {a.count(), b.count()};
    s.overlap = universal.count();
    s.cover = {std::move(a), std::move(b)};
    return s;
  }

  s.kind = StructureKind::Irregular;
  s.clique_sizes.clear();
  s.isolated = 0;
  return s;
}

std::string StructureSummary::label() const {
  switch (kind) {
    case StructureKind::Edgeless:
      return "I" + std::to_string(isolated);
    case StructureKind::CliquesPlusIsolated:
      return CliqueShape::make(clique_sizes, isolated).to_string();
    case StructureKind::TwoOverlappingCliques: {
      std::string out = "K" + std::to_string(clique_sizes[0]) + "&K" +
                        std::to_string(clique_sizes[1]) + "(o" + std::to_string(overlap) + ")";
      if (isolated > 0) out += "+I" + std::to_string(isolated);
      return out;
    }
    case StructureKind::Irregular:
      return "irregular";
  }
  return "irregular";
}

bool is_union_of_at_most_two_cliques(const StructureSummary& s) {
  switch (s.kind) {
    case StructureKind::Edgeless:
      return s.isolated <= 2;
    case StructureKind::CliquesPlusIsolated:
      return s.clique_sizes.size() + s.isolated <= 2;
    case StructureKind::TwoOverlappingCliques:
      return s.isolated == 0;
    case StructureKind::Irregular:
      return false;
  }
  return false;
}

bool satisfies_cyclic_structure(const StructureSummary& s) {
  switch (s.kind) {
    case StructureKind::Edgeless:
    case StructureKind::TwoOverlappingCliques:
      return true;
    case StructureKind::CliquesPlusIsolated:
      return s.clique_sizes.size() <= 2;
    case StructureKind::Irregular:
      return false;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Predictions

std::string to_string(Applicability a) {
  switch (a) {
    case Applicability::Acyclic: return "acyclic";
    case Applicability::CyclicZeta0: return "cyclic-zeta0";
    case Applicability::CyclicZeta1: return "cyclic-zeta1";
    case Applicability::CyclicZetaAtLeast2: return "cyclic-zeta>=2";
  }
  return "unknown";
}

std::string Bound::to_string() const {
  return (exact ? "=" : "<=") + std::to_string(value);
}

Applicability applicability_of(const SinkAnalysis& a) {
  if (is_acyclic_via_sinks(a)) return Applicability::Acyclic;
  if (a.zeta() == 0) return Applicability::CyclicZeta0;
  if (a.zeta() == 1) return Applicability::CyclicZeta1;
  return Applicability::CyclicZetaAtLeast2;
}

Prediction predict_acyclic(const BipartiteTournament& bt, const SinkAnalysis& a, std::size_t m) {
  if (!is_acyclic_via_sinks(a)) {
    throw Error(ErrorCode::NotAcyclic, "instance has a directed cycle");
  }
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "m must be >= 1");
  const std::size_t zeta = a.zeta();
  const std::size_t n = bt.vertex_count();

  Prediction p;
  p.applicability = Applicability::Acyclic;
  p.m = m;
  const VertexSet gone = a.eliminated_before(m);
  if (m > zeta) {
    p.whole = CliqueShape::make({}, n);
  } else if (m == zeta) {
    p.whole = CliqueShape::make({a.sink_set(zeta).count()}, gone.count());
  } else {
    p.whole = CliqueShape::make({(bt.part1() - gone).count(), (bt.part2() - gone).count()},
                                gone.count());
  }

  p.cperiod = {1, true};
  const std::size_t top = a.sink_set(zeta).count();
  if (top >= 2) {
    p.cindex = {zeta + 1, true};
  } else if (zeta == 1 || a.sink_set(zeta - 1).count() >= 2) {
    p.cindex = {zeta, true};
  } else {
    p.cindex = {zeta - 1, true};
  }
  return p;
}

Prediction predict_cyclic(const BipartiteTournament& bt, const SinkAnalysis& a, std::size_t m) {
  if (is_acyclic_via_sinks(a)) throw Error(ErrorCode::NotCyclic, "instance is acyclic");
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "cyclic prediction needs m >= 2");
  const std::size_t zeta = a.zeta();

  Prediction p;
  p.applicability = applicability_of(a);
  p.m = m;
  p.part_structure_claim = true;
  switch (p.applicability) {
    case Applicability::CyclicZeta0:
      p.cindex = {4, false};
      p.cperiod = {1, true};
      break;
    case Applicability::CyclicZeta1:
      p.cindex = {4, false};
      p.cperiod = {2, false};
      break;
    default: {
      p.cindex = {zeta, true};
      p.cperiod = {1, true};
      std::array<CliqueShape, 2> shapes;
      for (int i = 0; i < 2; ++i) {
        const VertexSet& part = i == 0 ? bt.part1() : bt.part2();
        if (m >= zeta) {
          const VertexSet core = a.survivor_set(zeta) & part;
          shapes[i] = CliqueShape::make({core.count()}, (part - core).count());
        } else {
          const VertexSet gone = a.eliminated_before(m) & part;
          shapes[i] = CliqueShape::make({(part - gone).count()}, gone.count());
        }
      }
      p.per_part = shapes;
      break;
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Verification

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "unknown";
}

bool VerificationReport::all_passed() const { return first_failure() == nullptr; }

const CheckResult* VerificationReport::first_failure() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return &c;
  }
  return nullptr;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::size_t default_m_max(const SinkAnalysis& a) { return std::max<std::size_t>(a.zeta(), 4) + 2; }

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "sink_sequence_wellformed",
      "sink_union",
      "acyclic_iff_last_sink_set_nonempty",
      "sink_levels_alternate_parts",
      "walk_length_bound",
      "sink_level_out_neighbors",
      "descending_level_paths",
      "no_cross_part_edges",
      "edge_existence_monotone",
      "adjacency_monotone_without_sinks",
      "upper_levels_form_cliques",
      "acyclic_shapes",
      "acyclic_index_period",
      "cyclic_part_structure",
      "cyclic_index_period",
      "cyclic_level_shapes",
      "sinkless_two_clique_cover",
      "sinkless_index_period",
      "profile_consistency",
  };
  return names;
}

namespace {

using Witness = std::optional<std::string>;

std::string set_labels(const VertexSet& s, const Digraph& d) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Vertex v) {
    if (!first) out += ",";
    out += d.label(v);
    first = false;
  });
  return out + "}";
}

std::string part_name(int i) { return i == 0 ? "V1" : "V2"; }

/// C^1, C^2, ... computed on demand from successive matrix powers.
class GraphSequence {
 public:
  explicit GraphSequence(const Digraph& d) : a_(adjacency_matrix(d)) {}

  const Graph& at(std::size_t m) {
    while (graphs_.size() < m) {
      power_ = graphs_.empty() ? a_ : power_ * a_;
      graphs_.push_back(row_graph(power_));
    }
    return graphs_[m - 1];
  }

 private:
  BooleanMatrix a_;
  BooleanMatrix power_;
  std::vector<Graph> graphs_;
};

}  // namespace

VerificationReport verify_instance(const BipartiteTournament& bt, std::size_t m_max) {
  if (m_max < 2) throw Error(ErrorCode::InvalidArgument, "m_max must be >= 2");
  const Digraph& d = bt.digraph();
  const std::size_t n = d.vertex_count();
  const SinkAnalysis a = sink_analysis(d);
  const std::size_t zeta = a.zeta();
  const bool acyclic = is_acyclic_via_sinks(a);
  const bool sinkless = sinks(d).none();
  const CompetitionProfile profile = competition_profile(d);
  const std::size_t horizon = std::max(m_max, zeta + 2);
  GraphSequence seq(d);
  const std::array<const VertexSet*, 2> parts = {&bt.part1(), &bt.part2()};

  VerificationReport report;
  report.zeta = zeta;
  report.applicability = applicability_of(a);
  report.m_max = m_max;
  report.cindex = profile.cindex;
  report.cperiod = profile.cperiod;

  auto run = [&](const std::string& name, bool applies, const std::function<Witness()>& body) {
    CheckResult r{name, CheckStatus::Skip, {}};
    if (applies) {
      if (auto w = body()) {
        r.status = CheckStatus::Fail;
        r.witness = *w;
      } else {
        r.status = CheckStatus::Pass;
      }
    }
    report.checks.push_back(std::move(r));
  };

  run("sink_sequence_wellformed", true, [&]() -> Witness {
    VertexSet covered(n);
    for (std::size_t i = 0; i <= zeta; ++i) {
      const VertexSet& alive = a.survivor_set(i);
      VertexSet expect(n);
      alive.for_each([&](Vertex v) {
        if (!d.out_neighbors(v).intersects(alive)) expect.set(v);
      });
      if (expect != a.sink_set(i)) return "W_" + std::to_string(i) + " is not the sink set of D_i";
      const bool terminal = a.sink_set(i).none() || a.sink_set(i) == alive;
      if (terminal != (i == zeta)) return "stopping rule violated at level " + std::to_string(i);
      if (i < zeta && a.survivor_set(i + 1) != alive - a.sink_set(i)) {
        return "D_" + std::to_string(i + 1) + " is not D_i - W_i";
      }
      if (i < zeta) covered |= a.sink_set(i);
    }
    if (a.survivor_set(zeta).none()) return std::string("V(D_zeta) is empty");
    if ((covered | a.survivor_set(zeta)) != VertexSet::full(n)) {
      return std::string("levels and V(D_zeta) do not cover V(D)");
    }
    return std::nullopt;
  });

  run("sink_union", true, [&]() -> Witness {
    const bool lhs = a.sink_set(zeta) == a.survivor_set(zeta);
    const bool rhs = a.eliminated_before(zeta + 1) == VertexSet::full(n);
    if (lhs != rhs) return "W_zeta = V(D_zeta) is " + std::to_string(lhs) + ", union = V is " +
                           std::to_string(rhs);
    return std::nullopt;
  });

  run("acyclic_iff_last_sink_set_nonempty", true, [&]() -> Witness {
    const bool cyc = has_directed_cycle(d);
    if (acyclic == cyc) {
      return "W_zeta nonempty = " + std::to_string(acyclic) + ", cycle found = " +
             std::to_string(cyc);
    }
    return std::nullopt;
  });

  // Side hosting the even levels; W_0 is nonempty whenever zeta >= 1.
  const Side even_side = zeta >= 1 ? bt.side_of(*a.sink_set(0).first()) : Side::First;
  auto level_side = [&](std::size_t i) { return i % 2 == 0 ? even_side : other(even_side); };

  run("sink_levels_alternate_parts", zeta >= 1, [&]() -> Witness {
    const ParityReport r = check_parity_partition(bt, a);
    if (!r.consistent()) {
      return "straddles=" + std::to_string(r.straddles) + " alternates=" +
             std::to_string(r.alternates) + " unions_equal_parts=" +
             std::to_string(r.unions_equal_parts) + " acyclic=" + std::to_string(r.acyclic);
    }
    return std::nullopt;
  });

  run("walk_length_bound", zeta >= 1, [&]() -> Witness {
    const std::size_t last = acyclic ? zeta : zeta - 1;
    for (std::size_t i = 0; i <= last; ++i) {
      Witness w;
      a.sink_set(i).for_each([&](Vertex v) {
        if (w) return;
        const std::size_t len = max_walk_length_from(d, v, zeta + 1);
        if (len > i) {
          w = "walk of length " + std::to_string(len) + " from " + d.label(v) + " in W_" +
              std::to_string(i);
        }
      });
      if (w) return w;
    }
    return std::nullopt;
  });

  run("sink_level_out_neighbors", zeta >= 2, [&]() -> Witness {
    for (std::size_t i = 1; i < zeta; ++i) {
      const VertexSet pred = bt.part(other(level_side(i))) - a.eliminated_before(i);
      Witness w;
      a.sink_set(i).for_each([&](Vertex v) {
        pred.for_each([&](Vertex u) {
          if (!w && !d.has_arc(u, v)) {
            w = "missing arc " + d.label(u) + " -> " + d.label(v) + " (level " +
                std::to_string(i) + ")";
          }
        });
      });
      if (w) return w;
    }
    return std::nullopt;
  });

  run("descending_level_paths", zeta >= 2 || (acyclic && zeta >= 1), [&]() -> Witness {
    // Every selection v_l -> ... -> v_0 is a path iff all arcs between
    // consecutive levels are present.
    const std::size_t top = acyclic ? zeta : zeta - 1;
    for (std::size_t i = 0; i + 1 <= top; ++i) {
      Witness w;
      a.sink_set(i + 1).for_each([&](Vertex u) {
        a.sink_set(i).for_each([&](Vertex v) {
          if (!w && !d.has_arc(u, v)) {
            w = "missing arc " + d.label(u) + " -> " + d.label(v) + " between levels " +
                std::to_string(i + 1) + " and " + std::to_string(i);
          }
        });
      });
      if (w) return w;
    }
    return std::nullopt;
  });

  run("no_cross_part_edges", true, [&]() -> Witness {
    for (std::size_t m = 1; m <= horizon; ++m) {
      for (const auto& e : seq.at(m).edges()) {
        if (bt.side_of(e.u) != bt.side_of(e.v)) {
          return "m=" + std::to_string(m) + " edge " + d.label(e.u) + "-" + d.label(e.v);
        }
      }
    }
    return std::nullopt;
  });

  run("edge_existence_monotone", true, [&]() -> Witness {
    bool seen_edgeless = false;
    for (std::size_t m = 1; m <= horizon; ++m) {
      const bool edgeless = seq.at(m).is_edgeless();
      if (seen_edgeless && !edgeless) {
        return "C^" + std::to_string(m) + " has edges after an edgeless power";
      }
      seen_edgeless = seen_edgeless || edgeless;
    }
    return std::nullopt;
  });

  run("adjacency_monotone_without_sinks", sinkless, [&]() -> Witness {
    for (std::size_t m = 1; m < horizon; ++m) {
      if (!seq.at(m).is_subgraph_of(seq.at(m + 1))) {
        return "C^" + std::to_string(m) + " not contained in C^" + std::to_string(m + 1);
      }
    }
    return std::nullopt;
  });

  run("upper_levels_form_cliques", zeta >= 2, [&]() -> Witness {
    for (std::size_t m = 1; m < zeta; ++m) {
      const VertexSet gone = a.eliminated_before(m);
      for (int i = 0; i < 2; ++i) {
        const VertexSet s = *parts[i] - gone;
        if (!seq.at(m).is_clique(s)) {
          return part_name(i) + " minus first " + std::to_string(m) + " levels " +
                 set_labels(s, d) + " is not a clique in C^" + std::to_string(m);
        }
      }
    }
    return std::nullopt;
  });

  run("acyclic_shapes", acyclic, [&]() -> Witness {
    for (std::size_t m = 1; m <= horizon; ++m) {
      const Prediction p = predict_acyclic(bt, a, m);
      const auto got = clique_shape_of(seq.at(m), VertexSet::full(n));
      if (!got || !(*got == *p.whole)) {
        return "m=" + std::to_string(m) + " expected " + p.whole->to_string() + " got " +
               (got ? got->to_string() : std::string("non-clique components"));
      }
    }
    return std::nullopt;
  });

  run("acyclic_index_period", acyclic, [&]() -> Witness {
    const Prediction p = predict_acyclic(bt, a, 1);
    if (!p.cindex.admits(profile.cindex) || !p.cperiod.admits(profile.cperiod) ||
        !p.cperiod.admits(profile.eventual_period)) {
      return "expected cindex" + p.cindex.to_string() + " cperiod" + p.cperiod.to_string() +
             ", got (" + std::to_string(profile.cindex) + ", " +
             std::to_string(profile.cperiod) + ")";
    }
    return std::nullopt;
  });

  run("cyclic_part_structure", !acyclic, [&]() -> Witness {
    for (std::size_t m = 2; m <= horizon; ++m) {
      for (int i = 0; i < 2; ++i) {
        const StructureSummary s = classify_structure(seq.at(m), *parts[i]);
        if (!satisfies_cyclic_structure(s)) {
          return "m=" + std::to_string(m) + " " + part_name(i) + " is " + s.label();
        }
      }
    }
    return std::nullopt;
  });

  run("cyclic_index_period", !acyclic, [&]() -> Witness {
    const Prediction p = predict_cyclic(bt, a, 2);
    if (!p.cindex.admits(profile.cindex) || !p.cperiod.admits(profile.cperiod) ||
        !p.cperiod.admits(profile.eventual_period)) {
      return "expected cindex" + p.cindex.to_string() + " cperiod" + p.cperiod.to_string() +
             ", got (" + std::to_string(profile.cindex) + ", " +
             std::to_string(profile.cperiod) + ")";
    }
    return std::nullopt;
  });

  run("cyclic_level_shapes", !acyclic && zeta >= 2, [&]() -> Witness {
    for (std::size_t m = 2; m <= horizon; ++m) {
      const Prediction p = predict_cyclic(bt, a, m);
      for (int i = 0; i < 2; ++i) {
        const auto got = clique_shape_of(seq.at(m), *parts[i]);
        if (!got || !(*got == (*p.per_part)[i])) {
          return "m=" + std::to_string(m) + " " + part_name(i) + " expected " +
                 (*p.per_part)[i].to_string() + " got " +
                 (got ? got->to_string() : std::string("non-clique components"));
        }
      }
    }
    return std::nullopt;
  });

  run("sinkless_two_clique_cover", sinkless, [&]() -> Witness {
    for (std::size_t m = 2; m <= horizon; ++m) {
      for (int i = 0; i < 2; ++i) {
        const StructureSummary s = classify_structure(seq.at(m), *parts[i]);
        if (!is_union_of_at_most_two_cliques(s)) {
          return "m=" + std::to_string(m) + " " + part_name(i) + " is " + s.label();
        }
      }
    }
    return std::nullopt;
  });

  run("sinkless_index_period", sinkless, [&]() -> Witness {
    if (profile.cperiod != 1 || profile.eventual_period != 1 || profile.cindex > 4) {
      return "got (" + std::to_string(profile.cindex) + ", " + std::to_string(profile.cperiod) +
             "), expected cindex<=4 cperiod=1";
    }
    return std::nullopt;
  });

  run("profile_consistency", true, [&]() -> Witness {
    const std::size_t q = profile.cindex;
    const std::size_t p = profile.cperiod;
    const std::size_t e = profile.eventual_period;
    const std::size_t span = profile.matrix_index + profile.matrix_period;
    if (!(seq.at(q) == seq.at(q + p))) return std::string("C^q != C^{q+p}");
    for (std::size_t k = 1; k < p; ++k) {
      if (seq.at(q) == seq.at(q + k)) return "smaller period " + std::to_string(k) + " at q";
    }
    for (std::size_t i = 0; i < span; ++i) {
      if (!(seq.at(q + i) == seq.at(q + i + e))) {
        return "tail not periodic with period " + std::to_string(e) + " at offset " +
               std::to_string(i);
      }
    }
    if (q > 1) {
      for (std::size_t cand = 1; cand <= profile.matrix_period; ++cand) {
        bool periodic = true;
        for (std::size_t i = 0; i < span && periodic; ++i) {
          periodic = seq.at(q - 1 + i) == seq.at(q - 1 + i + cand);
        }
        if (periodic) {
          return "sequence already periodic from " + std::to_string(q - 1) + " with period " +
                 std::to_string(cand);
        }
      }
    }
    return std::nullopt;
  });

  return report;
}

}  // namespace complab
