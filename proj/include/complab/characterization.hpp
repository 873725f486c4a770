#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "complab/competition.hpp"
#include "complab/digraph.hpp"
#include "complab/graph.hpp"
#include "complab/sink_analysis.hpp"

namespace complab {

/// Disjoint union of cliques: nontrivial clique sizes (>= 2, descending)
/// plus a count of isolated vertices. K_1 and K_0 terms fold into the
/// isolated count, so K_1 + I_5 == I_6.
struct CliqueShape {
  std::vector<std::size_t> cliques;
  std::size_t isolated = 0;

  static CliqueShape make(std::vector<std::size_t> clique_sizes, std::size_t isolated);

  std::size_t vertex_count() const;
  bool operator==(const CliqueShape&) const = default;
  std::string to_string() const;
};

/// Shape of g[within] if every component is complete; nullopt otherwise.
std::optional<CliqueShape> clique_shape_of(const Graph& g, const VertexSet& within);

enum class StructureKind { Edgeless, CliquesPlusIsolated, TwoOverlappingCliques, Irregular };

/// Most specific description of an induced subgraph g[part].
struct StructureSummary {
  StructureKind kind = StructureKind::Irregular;
  /// CliquesPlusIsolated: nontrivial component sizes, descending.
  /// TwoOverlappingCliques: sizes of the two covering cliques, larger first.
  std::vector<std::size_t> clique_sizes;
  /// TwoOverlappingCliques only: size of the intersection of the two cliques.
  std::size_t overlap = 0;
  std::size_t isolated = 0;
  /// TwoOverlappingCliques only: the covering cliques, in the order of
  /// `clique_sizes` (ties broken by smallest vertex).
  std::vector<VertexSet> cover;

  std::string label() const;
};

/// Classifies g[part].
///
/// After dropping isolated vertices the remainder R is tested, in order:
/// no vertices -> Edgeless; every component complete -> CliquesPlusIsolated;
/// otherwise, with U the vertices adjacent to all of R, R - U must split
/// into exactly two complete components C1, C2 with no edges between them,
/// and then R = K_{U+C1} union K_{U+C2} -> TwoOverlappingCliques.
/// Anything else is Irregular. U is forced: an overlap vertex of two covering
/// cliques sees all of R, and a universal vertex outside the overlap would
/// make R complete.
StructureSummary classify_structure(const Graph& g, const VertexSet& part);

/// g[part] is a (not necessarily disjoint) union of at most two complete
/// graphs spanning the part.
bool is_union_of_at_most_two_cliques(const StructureSummary& s);

/// Either a disjoint union of cliques with at most two nontrivial, or, after
/// isolated vertices are deleted, a non-disjoint union of two cliques.
bool satisfies_cyclic_structure(const StructureSummary& s);

enum class Applicability { Acyclic, CyclicZeta0, CyclicZeta1, CyclicZetaAtLeast2 };

std::string to_string(Applicability a);

struct Bound {
  std::size_t value = 0;
  bool exact = true;

  bool admits(std::size_t x) const { return exact ? x == value : x <= value; }
  std::string to_string() const;
};

struct Prediction {
  Applicability applicability = Applicability::Acyclic;
  std::size_t m = 1;
  /// Exact shape of the whole C^m (acyclic case).
  std::optional<CliqueShape> whole;
  /// Exact shapes of C^m[V_1], C^m[V_2] (cyclic, zeta >= 2).
  std::optional<std::array<CliqueShape, 2>> per_part;
  /// Each part-induced C^m satisfies `satisfies_cyclic_structure`.
  bool part_structure_claim = false;
  Bound cindex;
  Bound cperiod;
};

Applicability applicability_of(const SinkAnalysis& a);

/// Expected C^m and (cindex, cperiod) for an acyclic bipartite tournament.
/// Throws Error{NotAcyclic}.
Prediction predict_acyclic(const BipartiteTournament& bt, const SinkAnalysis& a, std::size_t m);

/// Expected structure and (cindex, cperiod) for a bipartite tournament with
/// a directed cycle; m >= 2. Throws Error{NotCyclic} or Error{InvalidArgument}.
Prediction predict_cyclic(const BipartiteTournament& bt, const SinkAnalysis& a, std::size_t m);

enum class CheckStatus { Pass, Fail, Skip };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;
};

struct VerificationReport {
  std::size_t zeta = 0;
  Applicability applicability = Applicability::Acyclic;
  std::size_t m_max = 0;
  std::size_t cindex = 0;
  std::size_t cperiod = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult* first_failure() const;
  const CheckResult* find(const std::string& name) const;
};

/// max(zeta, 4) + 2.
std::size_t default_m_max(const SinkAnalysis& a);

/// Runs every structural check that applies to `bt` over C^1..C^{m_max}
/// (extended to zeta + 2 where a check needs it). Failures are recorded in
/// the report, never thrown.
VerificationReport verify_instance(const BipartiteTournament& bt, std::size_t m_max);

/// Names of every check `verify_instance` can emit, in report order.
const std::vector<std::string>& check_names();

}  // namespace complab
