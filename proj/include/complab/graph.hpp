#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "complab/bitset.hpp"

namespace complab {

struct Edge {
  Vertex u;
  Vertex v;
  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1. Equality is exact edge-set
/// equality on the shared indexing.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), adj_(n, Bitset(n)) {}

  /// Throws Error{SelfLoop} / Error{DuplicateArc} / Error{VertexOutOfRange}.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  bool is_edgeless() const { return edge_count_ == 0; }

  bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
  const Bitset& neighbors(Vertex v) const { return adj_[v]; }

  /// Adds {u,v}; returns false if it was already present. u != v required.
  bool add_edge(Vertex u, Vertex v);

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// True iff every two distinct vertices of `s` are adjacent.
  bool is_clique(const VertexSet& s) const;

  /// Connected components of the subgraph induced by `within`, ordered by
  /// smallest vertex.
  std::vector<VertexSet> components(const VertexSet& within) const;

  /// Vertices of `within` with no neighbor inside `within`.
  VertexSet isolated_vertices(const VertexSet& within) const;

  /// True iff every edge of this graph is also an edge of `other`.
  bool is_subgraph_of(const Graph& other) const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

 private:
  std::size_t n_ = 0;
  std::vector<Bitset> adj_;
  std::size_t edge_count_ = 0;
};

}  // namespace complab
