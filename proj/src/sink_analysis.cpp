#include "complab/sink_analysis.hpp"

#include "complab/error.hpp"

namespace complab {

namespace {

VertexSet sinks_within(const Digraph& d, const VertexSet& alive) {
  VertexSet out(d.vertex_count());
  alive.for_each([&](Vertex v) {
    if (!d.out_neighbors(v).intersects(alive)) out.set(v);
  });
  return out;
}

}  // namespace

VertexSet sinks(const Digraph& d) {
  return sinks_within(d, VertexSet::full(d.vertex_count()));
}

SinkAnalysis sink_analysis(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  if (n == 0) throw Error(ErrorCode::EmptyDigraph, "sink analysis needs at least one vertex");

  SinkAnalysis a;
  a.n_ = n;
  VertexSet alive = VertexSet::full(n);
  while (true) {
    VertexSet w = sinks_within(d, alive);
    const bool stop = w.none() || w == alive;
    a.survivors_.push_back(alive);
    alive -= w;
    a.w_.push_back(std::move(w));
    if (stop) break;
  }
  a.zeta_ = a.w_.size() - 1;
  return a;
}

VertexSet SinkAnalysis::eliminated_before(std::size_t k) const {
  VertexSet out(n_);
  for (std::size_t i = 0; i < k && i < w_.size(); ++i) out |= w_[i];
  return out;
}

std::optional<std::size_t> SinkAnalysis::level_of(Vertex v) const {
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (w_[i].test(v)) return i;
  }
  return std::nullopt;
}

InducedSubdigraph SinkAnalysis::stage(const Digraph& d, std::size_t i) const {
  return induced_subdigraph(d, survivors_.at(i));
}

bool is_acyclic_via_sinks(const SinkAnalysis& a) { return a.sink_set(a.zeta()).any(); }

ParityReport check_parity_partition(const BipartiteTournament& bt, const SinkAnalysis& a) {
  if (a.zeta() == 0) throw Error(ErrorCode::ZetaZero, "parity partition needs zeta >= 1");

  const std::size_t n = bt.vertex_count();
  ParityReport r;
  VertexSet even(n);
  VertexSet odd(n);
  for (std::size_t i = 0; i <= a.zeta(); ++i) {
    const auto& w = a.sink_set(i);
    if (w.intersects(bt.part1()) && w.intersects(bt.part2())) r.straddles = true;
    (i % 2 == 0 ? even : odd) |= w;
  }
  auto hosting = [&](const VertexSet& s) -> std::optional<Side> {
    if (s.none()) return std::nullopt;
    if (s.is_subset_of(bt.part1())) return Side::First;
    if (s.is_subset_of(bt.part2())) return Side::Second;
    return std::nullopt;
  };
  r.even_side = hosting(even);
  // An empty odd union (zeta = 1 with W_1 empty) sits vacuously in the other part.
  r.odd_side = odd.none() && r.even_side ? std::optional(other(*r.even_side)) : hosting(odd);
  r.alternates = r.even_side && r.odd_side && *r.even_side != *r.odd_side;
  r.unions_equal_parts = r.alternates && even == bt.part(*r.even_side) &&
                         odd == bt.part(*r.odd_side);
  r.acyclic = is_acyclic_via_sinks(a);
  return r;
}

std::size_t max_walk_length_from(const Digraph& d, Vertex source, std::size_t cap) {
  VertexSet frontier(d.vertex_count());
  frontier.set(source);
  for (std::size_t len = 1; len <= cap + 1; ++len) {
    VertexSet next(d.vertex_count());
    frontier.for_each([&](Vertex v) { next |= d.out_neighbors(v); });
    if (next.none()) return len - 1;
    frontier = std::move(next);
  }
  return cap + 1;
}

}  // namespace complab
