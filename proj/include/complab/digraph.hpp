#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "complab/bitset.hpp"
#include "complab/boolean_matrix.hpp"

namespace complab {

struct Arc {
  Vertex from;
  Vertex to;
  auto operator<=>(const Arc&) const = default;
};

/// Directed graph on dense vertex indices 0..n-1.
///
/// Arcs form a set. Ordinary digraphs reject self-loops; the loop-permitting
/// variant (see `with_loops`) exists for power digraphs, where a vertex on a
/// closed walk of length m is its own m-step prey. Labels are presentation
/// only and default to the decimal vertex index.
class Digraph {
 public:
  Digraph() = default;

  /// Throws Error{SelfLoop}, Error{DuplicateArc} or Error{VertexOutOfRange}.
  Digraph(std::size_t n, std::span<const Arc> arcs, std::vector<std::string> labels = {});

  static Digraph with_loops(std::size_t n, std::span<const Arc> arcs,
                            std::vector<std::string> labels = {});

  /// Digraph whose arc set is the support of `m`.
  static Digraph from_matrix(const BooleanMatrix& m, bool allow_loops,
                             std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return n_; }
  std::size_t arc_count() const { return out_.count(); }
  bool allows_loops() const { return allow_loops_; }

  bool has_arc(Vertex u, Vertex v) const { return out_.get(u, v); }
  const VertexSet& out_neighbors(Vertex v) const { return out_.row(v); }
  const VertexSet& in_neighbors(Vertex v) const { return in_.row(v); }
  std::size_t out_degree(Vertex v) const { return out_.row(v).count(); }

  /// Arcs in lexicographic (from, to) order.
  std::vector<Arc> arcs() const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Vertex v) const { return labels_[v]; }
  std::optional<Vertex> find_label(std::string_view label) const;

  const BooleanMatrix& adjacency() const { return out_; }

  /// Structural equality: vertex count, loop policy and arc set. Labels are
  /// not compared.
  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && allow_loops_ == other.allow_loops_ && out_ == other.out_;
  }

 private:
  Digraph(std::size_t n, std::span<const Arc> arcs, std::vector<std::string> labels,
          bool allow_loops);

  std::size_t n_ = 0;
  bool allow_loops_ = false;
  BooleanMatrix out_;
  BooleanMatrix in_;
  std::vector<std::string> labels_;
};

/// Subdigraph induced by a vertex subset, compacted to indices
/// 0..|keep|-1; `original[i]` is the source vertex of new vertex i.
struct InducedSubdigraph {
  Digraph digraph;
  std::vector<Vertex> original;
};

InducedSubdigraph induced_subdigraph(const Digraph& d, const VertexSet& keep);

enum class Side { First = 1, Second = 2 };

/// A digraph together with a validated bipartition in which every cross
/// pair carries exactly one arc and no arc stays inside a part.
class BipartiteTournament {
 public:
  const Digraph& digraph() const { return digraph_; }
  const VertexSet& part1() const { return part1_; }
  const VertexSet& part2() const { return part2_; }
  const VertexSet& part(Side s) const { return s == Side::First ? part1_ : part2_; }
  Side side_of(Vertex v) const { return part1_.test(v) ? Side::First : Side::Second; }
  std::size_t vertex_count() const { return digraph_.vertex_count(); }

 private:
  BipartiteTournament(Digraph d, VertexSet p1, VertexSet p2)
      : digraph_(std::move(d)), part1_(std::move(p1)), part2_(std::move(p2)) {}

  friend BipartiteTournament validate_bipartite_tournament(Digraph d, const VertexSet& part1,
                                                           const VertexSet& part2);

  Digraph digraph_;
  VertexSet part1_;
  VertexSet part2_;
};

inline Side other(Side s) { return s == Side::First ? Side::Second : Side::First; }

/// Checks the bipartite-tournament conditions. Errors, in scan order:
/// Error{InvalidPartition} when the parts are not two nonempty blocks
/// partitioning the vertex set;
/// Error{SamePartArc} for the first arc (lexicographic) inside a part; then
/// over cross pairs (part1 vertex ascending, part2 vertex ascending)
/// Error{MissingArc} or Error{DoubleArc}. The error's pair() names the pair.
BipartiteTournament validate_bipartite_tournament(Digraph d, const VertexSet& part1,
                                                  const VertexSet& part2);

BooleanMatrix adjacency_matrix(const Digraph& d);

/// D^m: arc (u,v) iff v is an m-step prey of u. Loops are permitted in the
/// result. m >= 1.
Digraph power_digraph(const Digraph& d, std::size_t m);

/// Endpoints of directed walks of length exactly m from `source`, by
/// iterated out-neighborhood expansion. Never touches matrix powers.
VertexSet m_step_prey_set(const Digraph& d, Vertex source, std::size_t m);

/// Depth-first search for a directed cycle (a loop counts as a cycle).
bool has_directed_cycle(const Digraph& d);

}  // namespace complab
