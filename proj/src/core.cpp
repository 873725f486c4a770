#include <algorithm>
#include <string>
#include <vector>

#include "complab/boolean_matrix.hpp"
#include "complab/digraph.hpp"
#include "complab/error.hpp"
#include "complab/graph.hpp"

namespace complab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateArc: return "DuplicateArc";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::MissingArc: return "MissingArc";
    case ErrorCode::DoubleArc: return "DoubleArc";
    case ErrorCode::SamePartArc: return "SamePartArc";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::EmptyDigraph: return "EmptyDigraph";
    case ErrorCode::ZetaZero: return "ZetaZero";
    case ErrorCode::NotAcyclic: return "NotAcyclic";
    case ErrorCode::NotCyclic: return "NotCyclic";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::InfeasibleParts: return "InfeasibleParts";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// BooleanMatrix

BooleanMatrix BooleanMatrix::identity(std::size_t n) {
  BooleanMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

std::size_t BooleanMatrix::count() const {
  std::size_t c = 0;
  for (const auto& r : rows_) c += r.count();
  return c;
}

bool BooleanMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const Bitset& r) { return r.none(); });
}

BooleanMatrix BooleanMatrix::transpose() const {
  BooleanMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    rows_[i].for_each([&](std::size_t j) { t.set(j, i); });
  }
  return t;
}

BooleanMatrix BooleanMatrix::operator*(const BooleanMatrix& other) const {
  if (other.n_ != n_) {
    throw Error(ErrorCode::InvalidArgument, "matrix dimensions differ: " + std::to_string(n_) +
                                                " vs " + std::to_string(other.n_));
  }
  BooleanMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    Bitset& dst = out.rows_[i];
    rows_[i].for_each([&](std::size_t k) { dst |= other.rows_[k]; });
  }
  return out;
}

std::size_t BooleanMatrix::hash() const {
  std::size_t h = n_;
  for (const auto& r : rows_) h = h * 1000003U ^ r.hash();
  return h;
}

BooleanMatrix matrix_power(const BooleanMatrix& a, std::size_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "matrix power exponent must be >= 1");
  BooleanMatrix result;
  bool have_result = false;
  BooleanMatrix base = a;
  while (true) {
    if (m & 1U) {
      result = have_result ? result * base : base;
      have_result = true;
    }
    m >>= 1U;
    if (m == 0) break;
    base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::VertexOutOfRange, "edge endpoint out of range", std::pair{e.u, e.v});
    }
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "graph edge is a loop", std::pair{e.u, e.v});
    if (!add_edge(e.u, e.v)) {
      throw Error(ErrorCode::DuplicateArc, "duplicate edge", std::pair{e.u, e.v});
    }
  }
}

bool Graph::add_edge(Vertex u, Vertex v) {
  if (adj_[u].test(v)) return false;
  adj_[u].set(v);
  adj_[v].set(u);
  ++edge_count_;
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    adj_[u].for_each([&](Vertex v) {
      if (u < v) out.push_back({u, v});
    });
  }
  return out;
}

bool Graph::is_clique(const VertexSet& s) const {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (!ok) return;
    Bitset others = s;
    others.reset(v);
    if (!others.is_subset_of(adj_[v])) ok = false;
  });
  return ok;
}

std::vector<VertexSet> Graph::components(const VertexSet& within) const {
  std::vector<VertexSet> out;
  VertexSet unseen = within;
  while (auto start = unseen.first()) {
    VertexSet comp(n_);
    comp.set(*start);
    VertexSet frontier = comp;
    while (frontier.any()) {
      VertexSet next(n_);
      frontier.for_each([&](Vertex v) { next |= adj_[v]; });
      next &= within;
      next -= comp;
      comp |= next;
      frontier = std::move(next);
    }
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

VertexSet Graph::isolated_vertices(const VertexSet& within) const {
  VertexSet out(n_);
  within.for_each([&](Vertex v) {
    if (!adj_[v].intersects(within)) out.set(v);
  });
  return out;
}

bool Graph::is_subgraph_of(const Graph& other) const {
  if (n_ != other.n_) return false;
  for (Vertex v = 0; v < n_; ++v) {
    if (!adj_[v].is_subset_of(other.adj_[v])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Digraph

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

Digraph::Digraph(std::size_t n, std::span<const Arc> arcs, std::vector<std::string> labels)
    : Digraph(n, arcs, std::move(labels), false) {}

Digraph Digraph::with_loops(std::size_t n, std::span<const Arc> arcs,
                            std::vector<std::string> labels) {
  return Digraph(n, arcs, std::move(labels), true);
}

Digraph::Digraph(std::size_t n, std::span<const Arc> arcs, std::vector<std::string> labels,
                 bool allow_loops)
    : n_(n), allow_loops_(allow_loops), out_(n), in_(n), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_ = default_labels(n);
  } else if (labels_.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(n) + " labels, got " +
                                                std::to_string(labels_.size()));
  }
  for (const auto& a : arcs) {
    if (a.from >= n || a.to >= n) {
      throw Error(ErrorCode::VertexOutOfRange, "arc endpoint out of range",
                  std::pair{a.from, a.to});
    }
    if (a.from == a.to && !allow_loops_) {
      throw Error(ErrorCode::SelfLoop, "self-loop at " + labels_[a.from], std::pair{a.from, a.to});
    }
    if (out_.get(a.from, a.to)) {
      throw Error(ErrorCode::DuplicateArc,
                  "duplicate arc " + labels_[a.from] + " -> " + labels_[a.to],
                  std::pair{a.from, a.to});
    }
    out_.set(a.from, a.to);
    in_.set(a.to, a.from);
  }
}

Digraph Digraph::from_matrix(const BooleanMatrix& m, bool allow_loops,
                             std::vector<std::string> labels) {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < m.dimension(); ++u) {
    m.row(u).for_each([&](Vertex v) { arcs.push_back({u, v}); });
  }
  return Digraph(m.dimension(), arcs, std::move(labels), allow_loops);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count());
  for (Vertex u = 0; u < n_; ++u) {
    out_.row(u).for_each([&](Vertex v) { out.push_back({u, v}); });
  }
  return out;
}

std::optional<Vertex> Digraph::find_label(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

InducedSubdigraph induced_subdigraph(const Digraph& d, const VertexSet& keep) {
  std::vector<Vertex> original = keep.to_vector();
  std::vector<std::size_t> index(d.vertex_count(), 0);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < original.size(); ++i) {
    index[original[i]] = i;
    labels.push_back(d.label(original[i]));
  }
  std::vector<Arc> arcs;
  for (Vertex u : original) {
    (d.out_neighbors(u) & keep).for_each([&](Vertex v) { arcs.push_back({index[u], index[v]}); });
  }
  Digraph sub = d.allows_loops() ? Digraph::with_loops(original.size(), arcs, std::move(labels))
                                 : Digraph(original.size(), arcs, std::move(labels));
  return {std::move(sub), std::move(original)};
}

BipartiteTournament validate_bipartite_tournament(Digraph d, const VertexSet& part1,
                                                  const VertexSet& part2) {
  const std::size_t n = d.vertex_count();
  if (part1.size() != n || part2.size() != n || part1.intersects(part2) ||
      (part1 | part2) != VertexSet::full(n)) {
    throw Error(ErrorCode::InvalidPartition, "parts do not partition the vertex set");
  }
  if (part1.none() || part2.none()) {
    throw Error(ErrorCode::InvalidPartition, "both parts must be nonempty");
  }
  if (d.allows_loops()) {
    for (Vertex v = 0; v < n; ++v) {
      if (d.has_arc(v, v)) {
        throw Error(ErrorCode::SamePartArc, "loop at " + d.label(v), std::pair{v, v});
      }
    }
  }
  for (const auto& a : d.arcs()) {
    if (part1.test(a.from) == part1.test(a.to)) {
      throw Error(ErrorCode::SamePartArc,
                  "arc " + d.label(a.from) + " -> " + d.label(a.to) + " stays inside a part",
                  std::pair{a.from, a.to});
    }
  }
  const auto p1 = part1.to_vector();
  const auto p2 = part2.to_vector();
  for (Vertex u : p1) {
    for (Vertex v : p2) {
      const bool forward = d.has_arc(u, v);
      const bool backward = d.has_arc(v, u);
      if (!forward && !backward) {
        throw Error(ErrorCode::MissingArc,
                    "no arc between " + d.label(u) + " and " + d.label(v), std::pair{u, v});
      }
      if (forward && backward) {
        throw Error(ErrorCode::DoubleArc,
                    "arcs in both directions between " + d.label(u) + " and " + d.label(v),
                    std::pair{u, v});
      }
    }
  }
  return BipartiteTournament(std::move(d), part1, part2);
}

BooleanMatrix adjacency_matrix(const Digraph& d) { return d.adjacency(); }

Digraph power_digraph(const Digraph& d, std::size_t m) {
  return Digraph::from_matrix(matrix_power(d.adjacency(), m), true, d.labels());
}

VertexSet m_step_prey_set(const Digraph& d, Vertex source, std::size_t m) {
  VertexSet frontier(d.vertex_count());
  frontier.set(source);
  for (std::size_t step = 0; step < m && frontier.any(); ++step) {
    VertexSet next(d.vertex_count());
    frontier.for_each([&](Vertex v) { next |= d.out_neighbors(v); });
    frontier = std::move(next);
  }
  return frontier;
}

bool has_directed_cycle(const Digraph& d) {
  enum class Color : unsigned char { White, Grey, Black };
  const std::size_t n = d.vertex_count();
  std::vector<Color> color(n, Color::White);
  // Explicit stack of (vertex, remaining out-neighbors).
  std::vector<std::pair<Vertex, std::vector<Vertex>>> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (color[root] != Color::White) continue;
    color[root] = Color::Grey;
    stack.emplace_back(root, d.out_neighbors(root).to_vector());
    while (!stack.empty()) {
      auto& [v, pending] = stack.back();
      if (pending.empty()) {
        color[v] = Color::Black;
        stack.pop_back();
        continue;
      }
      const Vertex w = pending.back();
      pending.pop_back();
      if (color[w] == Color::Grey) return true;
      if (color[w] == Color::White) {
        color[w] = Color::Grey;
        stack.emplace_back(w, d.out_neighbors(w).to_vector());
      }
    }
  }
  return false;
}

}  // namespace complab
