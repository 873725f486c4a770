#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "complab/bitset.hpp"
#include "complab/digraph.hpp"

namespace complab {

/// Vertices of outdegree zero.
VertexSet sinks(const Digraph& d);

/// Result of repeatedly deleting sinks.
///
/// D_0 = D and W_i is the sink set of D_i; D_{i+1} = D_i - W_i. The process
/// stops at the first k (= zeta) with W_k = V(D_k) or W_k empty. Only the
/// vertex sets V(D_i) are kept; `stage` rebuilds D_i on demand.
class SinkAnalysis {
 public:
  std::size_t zeta() const { return zeta_; }
  std::size_t vertex_count() const { return n_; }

  /// W_0 .. W_zeta.
  const std::vector<VertexSet>& sink_sets() const { return w_; }
  const VertexSet& sink_set(std::size_t i) const { return w_[i]; }

  /// V(D_0) .. V(D_zeta).
  const std::vector<VertexSet>& survivors() const { return survivors_; }
  const VertexSet& survivor_set(std::size_t i) const { return survivors_[i]; }

  /// Union of W_0 .. W_{k-1}; empty for k = 0. k may exceed zeta + 1, in
  /// which case every level is included.
  VertexSet eliminated_before(std::size_t k) const;

  /// Level i with v in W_i, if any.
  std::optional<std::size_t> level_of(Vertex v) const;

  /// D_i as an induced subdigraph of `d` (the digraph this was computed on).
  InducedSubdigraph stage(const Digraph& d, std::size_t i) const;

 private:
  friend SinkAnalysis sink_analysis(const Digraph& d);

  std::size_t n_ = 0;
  std::size_t zeta_ = 0;
  std::vector<VertexSet> w_;
  std::vector<VertexSet> survivors_;
};

/// Throws Error{EmptyDigraph} when d has no vertices.
SinkAnalysis sink_analysis(const Digraph& d);

/// W_zeta is nonempty.
bool is_acyclic_via_sinks(const SinkAnalysis& a);

struct ParityReport {
  /// Part hosting the union of the W_i with i even / odd; nullopt when the
  /// union does not fit inside one part. An empty odd union is assigned to
  /// the part opposite the even one.
  std::optional<Side> even_side;
  std::optional<Side> odd_side;
  /// Some W_i meets both parts.
  bool straddles = false;
  /// Even and odd levels sit in opposite parts.
  bool alternates = false;
  /// Union of even levels and union of odd levels are exactly the two parts.
  bool unions_equal_parts = false;
  bool acyclic = false;

  /// No straddling, alternation holds, and part equality coincides with
  /// acyclicity.
  bool consistent() const {
    return !straddles && alternates && unions_equal_parts == acyclic;
  }
};

/// Throws Error{ZetaZero} when zeta = 0.
ParityReport check_parity_partition(const BipartiteTournament& bt, const SinkAnalysis& a);

/// Largest L <= cap such that some walk of length L starts at `source`.
/// Returns cap + 1 when a walk of length cap exists and can be extended.
std::size_t max_walk_length_from(const Digraph& d, Vertex source, std::size_t cap);

}  // namespace complab
