#include "complab/competition.hpp"

#include <string>
#include <unordered_map>

#include "complab/error.hpp"

namespace complab {

Graph row_graph(const BooleanMatrix& a) {
  const std::size_t n = a.dimension();
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    if (a.row(u).none()) continue;
    for (Vertex v = u + 1; v < n; ++v) {
      if (a.row(u).intersects(a.row(v))) g.add_edge(u, v);
    }
  }
  return g;
}

Graph competition_graph(const Digraph& d) { return row_graph(adjacency_matrix(d)); }

Graph m_step_competition_graph(const Digraph& d, std::size_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "m must be >= 1");
  return row_graph(matrix_power(adjacency_matrix(d), m));
}

Graph m_step_competition_graph_oracle(const Digraph& d, std::size_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "m must be >= 1");
  const std::size_t n = d.vertex_count();
  std::vector<VertexSet> prey;
  prey.reserve(n);
  for (Vertex v = 0; v < n; ++v) prey.push_back(m_step_prey_set(d, v, m));
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (prey[u].intersects(prey[v])) g.add_edge(u, v);
    }
  }
  return g;
}

std::size_t default_safety_cap(std::size_t n) { return 2 * n * n + 16; }

CompetitionProfile competition_profile(const Digraph& d) {
  return competition_profile(d, default_safety_cap(d.vertex_count()));
}

CompetitionProfile competition_profile(const Digraph& d, std::size_t safety_cap) {
  if (safety_cap == 0) throw Error(ErrorCode::InvalidArgument, "safety cap must be >= 1");
  const BooleanMatrix a = adjacency_matrix(d);

  // powers[k-1] = A^k; seen maps a fingerprint to every exponent with it.
  std::vector<BooleanMatrix> powers;
  std::unordered_multimap<std::size_t, std::size_t> seen;
  std::size_t qa = 0;
  std::size_t pa = 0;
  BooleanMatrix current = a;
  for (std::size_t k = 1; k <= safety_cap; ++k) {
    if (k > 1) current = powers.back() * a;
    const std::size_t h = current.hash();
    auto [lo, hi] = seen.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      if (powers[it->second - 1] == current) {
        qa = it->second;
        pa = k - it->second;
        break;
      }
    }
    if (pa != 0) break;
    seen.emplace(h, k);
    powers.push_back(current);
  }
  if (pa == 0) {
    throw Error(ErrorCode::CapExceeded, "no repeated matrix power within " +
                                            std::to_string(safety_cap) + " powers");
  }

  // graphs[k-1] = R(A^k) for k = 1 .. qa + pa - 1; later exponents wrap into
  // the cycle.
  std::vector<Graph> graphs;
  graphs.reserve(powers.size());
  for (const auto& p : powers) graphs.push_back(row_graph(p));
  auto graph_at = [&](std::size_t k) -> const Graph& {
    if (k >= qa + pa) k = qa + (k - qa) % pa;
    return graphs[k - 1];
  };

  std::size_t period = pa;
  for (std::size_t cand = 1; cand < pa; ++cand) {
    if (pa % cand != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i < pa && ok; ++i) ok = graph_at(qa + i) == graph_at(qa + i + cand);
    if (ok) {
      period = cand;
      break;
    }
  }

  std::size_t q = qa;
  while (q > 1 && graph_at(q - 1) == graph_at(q - 1 + period)) --q;

  std::size_t literal = period;
  for (std::size_t cand = 1; cand < period; ++cand) {
    if (graph_at(q) == graph_at(q + cand)) {
      literal = cand;
      break;
    }
  }

  CompetitionProfile out;
  out.cindex = q;
  out.cperiod = literal;
  out.eventual_period = period;
  out.matrix_index = qa;
  out.matrix_period = pa;
  for (std::size_t k = 1; k <= q + literal; ++k) out.graph_sequence_prefix.push_back(graph_at(k));
  return out;
}

}  // namespace complab
