#include "doctest.h"

#include <set>

#include "complab/boolean_matrix.hpp"
#include "complab/digraph.hpp"
#include "complab/error.hpp"
#include "complab/generators.hpp"
#include "complab/graph.hpp"
#include "oracles.hpp"

using namespace complab;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected complab::Error");
  return ErrorCode::InvalidArgument;
}

VertexSet set_of(std::size_t n, std::initializer_list<std::size_t> vs) { return VertexSet::of(n, vs); }

Vertex at(const Digraph& d, const char* label) { return *d.find_label(label); }

}  // namespace

TEST_CASE("bitset basics across word boundaries") {
  Bitset b(130);
  b.set(0);
  b.set(64);
  b.set(129);
  CHECK(b.count() == 3);
  CHECK(b.first() == 0);
  CHECK(b.to_vector() == std::vector<std::size_t>{0, 64, 129});
  const Bitset c = b.complement();
  CHECK(c.count() == 127);
  CHECK_FALSE(c.test(64));
  CHECK((b & c).none());
  CHECK((b | c) == Bitset::full(130));
  CHECK((b - Bitset::of(130, {64})).to_vector() == std::vector<std::size_t>{0, 129});
  CHECK(Bitset::of(130, {64}).is_subset_of(b));
  CHECK(b.intersects(Bitset::of(130, {129})));
}

TEST_CASE("boolean matrix product and powers") {
  SUBCASE("identity is fixed by powers") {
    const auto id = BooleanMatrix::identity(5);
    for (std::size_t m = 1; m <= 6; ++m) CHECK(matrix_power(id, m) == id);
  }
  SUBCASE("single arc squares to zero") {
    BooleanMatrix a(2);
    a.set(0, 1);
    CHECK(matrix_power(a, 1) == a);
    CHECK(matrix_power(a, 2).is_zero());
  }
  SUBCASE("fig2 entry (a,c) of A^2 via a->f->c") {
    const auto bt = fixture("fig2_D");
    const auto& d = bt.digraph();
    const auto a2 = matrix_power(adjacency_matrix(d), 2);
    CHECK(a2.get(at(d, "a"), at(d, "c")));
    const auto adj = oracle::adjacency(d);
    for (Vertex u = 0; u < 6; ++u) {
      const auto e = oracle::endpoints(adj, static_cast<int>(u), 2);
      for (Vertex v = 0; v < 6; ++v) CHECK(a2.get(u, v) == static_cast<bool>(e[v]));
    }
  }
  SUBCASE("m = 0 is rejected") {
    CHECK(code_of([] { matrix_power(BooleanMatrix::identity(2), 0); }) == ErrorCode::InvalidArgument);
  }
  SUBCASE("dimension mismatch") {
    CHECK(code_of([] { (void)(BooleanMatrix(2) * BooleanMatrix(3)); }) == ErrorCode::InvalidArgument);
  }
}

TEST_CASE("matrix power matches walk endpoints for n <= 8, m <= 8") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 1 + seed % 8;
    const auto d = random_digraph(n, seed, 0.15 + 0.1 * static_cast<double>(seed % 5));
    const auto a = adjacency_matrix(d);
    const auto adj = oracle::adjacency(d);
    for (std::size_t m = 1; m <= 8; ++m) {
      const auto am = matrix_power(a, m);
      for (Vertex u = 0; u < n; ++u) {
        const auto e = oracle::endpoints(adj, static_cast<int>(u), static_cast<int>(m));
        for (Vertex v = 0; v < n; ++v) REQUIRE(am.get(u, v) == static_cast<bool>(e[v]));
        CHECK(m_step_prey_set(d, u, m) == am.row(u));
      }
    }
  }
}

TEST_CASE("power additivity A^{m+k} = A^m A^k") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const auto a = adjacency_matrix(random_digraph(3 + seed % 6, seed, 0.3));
    for (std::size_t m = 1; m <= 5; ++m) {
      for (std::size_t k = 1; k <= 5; ++k) {
        CHECK(matrix_power(a, m + k) == matrix_power(a, m) * matrix_power(a, k));
      }
    }
  }
}

TEST_CASE("multi-word rows above 64 vertices") {
  // A directed path on 100 vertices: A^m has exactly n - m ones.
  std::vector<Arc> arcs;
  for (Vertex v = 0; v + 1 < 100; ++v) arcs.push_back({v, v + 1});
  const Digraph d(100, arcs);
  const auto a = adjacency_matrix(d);
  for (std::size_t m : {1, 63, 64, 65, 99}) {
    const auto am = matrix_power(a, m);
    CHECK(am.count() == 100 - m);
    CHECK(am.get(0, m));
  }
  CHECK(matrix_power(a, 100).is_zero());
}

TEST_CASE("digraph construction errors") {
  const std::vector<Arc> loop = {{1, 1}};
  const std::vector<Arc> dup = {{0, 1}, {0, 1}};
  const std::vector<Arc> range = {{0, 3}};
  CHECK(code_of([&] { Digraph(2, loop); }) == ErrorCode::SelfLoop);
  CHECK(code_of([&] { Digraph(2, dup); }) == ErrorCode::DuplicateArc);
  CHECK(code_of([&] { Digraph(2, range); }) == ErrorCode::VertexOutOfRange);
  CHECK(Digraph::with_loops(2, loop).has_arc(1, 1));
}

TEST_CASE("neighborhoods agree with the arc set") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto d = random_digraph(7, seed, 0.4);
    std::set<std::pair<Vertex, Vertex>> arcs;
    for (const auto& a : d.arcs()) arcs.insert({a.from, a.to});
    CHECK(arcs.size() == d.arc_count());
    for (Vertex u = 0; u < 7; ++u) {
      for (Vertex v = 0; v < 7; ++v) {
        const bool in = arcs.count({u, v}) > 0;
        CHECK(d.out_neighbors(u).test(v) == in);
        CHECK(d.in_neighbors(v).test(u) == in);
      }
    }
  }
}

TEST_CASE("validate_bipartite_tournament") {
  SUBCASE("fig1 D is valid") {
    const auto bt = fixture("fig1_D");
    CHECK(bt.part1().count() == 3);
    CHECK(bt.side_of(at(bt.digraph(), "y2")) == Side::Second);
  }
  SUBCASE("both orientations of a pair") {
    const std::vector<Arc> arcs = {{0, 1}, {1, 0}};
    try {
      validate_bipartite_tournament(Digraph(2, arcs), set_of(2, {0}), set_of(2, {1}));
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DoubleArc);
      REQUIRE(e.pair().has_value());
      CHECK(*e.pair() == std::pair<Vertex, Vertex>{0, 1});
    }
  }
  SUBCASE("missing orientation") {
    CHECK(code_of([] {
            validate_bipartite_tournament(Digraph(2, {}), set_of(2, {0}), set_of(2, {1}));
          }) == ErrorCode::MissingArc);
  }
  SUBCASE("arc inside a part") {
    const std::vector<Arc> arcs = {{0, 1}, {0, 2}, {1, 2}};
    CHECK(code_of([&] {
            validate_bipartite_tournament(Digraph(3, arcs), set_of(3, {0, 1}), set_of(3, {2}));
          }) == ErrorCode::SamePartArc);
  }
  SUBCASE("parts must partition and be nonempty") {
    const std::vector<Arc> arcs = {{0, 1}};
    CHECK(code_of([&] {
            validate_bipartite_tournament(Digraph(2, arcs), set_of(2, {0}), set_of(2, {0, 1}));
          }) == ErrorCode::InvalidPartition);
    CHECK(code_of([&] {
            validate_bipartite_tournament(Digraph(2, arcs), set_of(2, {0, 1}), set_of(2, {}));
          }) == ErrorCode::InvalidPartition);
  }
}

TEST_CASE("validate accepts exactly the 2^{pq} orientations") {
  for (auto [p, q] : {std::pair<std::size_t, std::size_t>{1, 2}, {2, 2}, {2, 3}}) {
    const std::size_t n = p + q;
    VertexSet p1(n);
    for (std::size_t i = 0; i < p; ++i) p1.set(i);
    // Every subset of all ordered cross pairs.
    std::vector<Arc> pairs;
    for (Vertex u = 0; u < p; ++u) {
      for (Vertex v = p; v < n; ++v) {
        pairs.push_back({u, v});
        pairs.push_back({v, u});
      }
    }
    std::size_t accepted = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      std::vector<Arc> arcs;
      for (std::size_t b = 0; b < pairs.size(); ++b) {
        if (mask >> b & 1U) arcs.push_back(pairs[b]);
      }
      try {
        validate_bipartite_tournament(Digraph(n, arcs), p1, p1.complement());
        ++accepted;
      } catch (const Error&) {
      }
    }
    CHECK(accepted == (std::size_t{1} << (p * q)));
  }
}

TEST_CASE("adjacency matrix") {
  CHECK(adjacency_matrix(Digraph(3, {})).is_zero());
  const std::vector<Arc> one = {{0, 1}};
  const auto a = adjacency_matrix(Digraph(2, one));
  CHECK(a.get(0, 1));
  CHECK(a.count() == 1);
  const auto f = adjacency_matrix(fixture("fig1_D").digraph());
  CHECK(f.dimension() == 6);
  CHECK(f.count() == 9);
}

TEST_CASE("power digraph") {
  const auto d1 = fixture("fig1_D").digraph();
  const auto p1 = power_digraph(d1, 1);
  CHECK(p1.arcs() == d1.arcs());
  CHECK(power_digraph(d1, 4).arc_count() == 0);

  const auto d2 = fixture("fig2_D").digraph();
  const auto p4 = power_digraph(d2, 4);
  CHECK(p4.allows_loops());
  const auto adj = oracle::adjacency(d2);
  bool some_loop = false;
  for (Vertex u = 0; u < 6; ++u) {
    const auto e = oracle::endpoints(adj, static_cast<int>(u), 4);
    for (Vertex v = 0; v < 6; ++v) CHECK(p4.has_arc(u, v) == static_cast<bool>(e[v]));
    some_loop = some_loop || p4.has_arc(u, u);
  }
  // a -> d -> b -> e -> a closes a 4-cycle.
  CHECK(p4.has_arc(at(d2, "a"), at(d2, "a")));
  CHECK(some_loop);
}

TEST_CASE("m-step prey sets") {
  const auto d = fixture("fig1_D").digraph();
  const Vertex x1 = at(d, "x1");
  CHECK(m_step_prey_set(d, x1, 0) == set_of(6, {x1}));
  CHECK(m_step_prey_set(d, x1, 2) == set_of(6, {at(d, "x2"), at(d, "x3")}));
  CHECK(m_step_prey_set(d, x1, 3) == set_of(6, {at(d, "y3")}));
  CHECK(m_step_prey_set(d, x1, 4).none());
}

TEST_CASE("directed cycle detection") {
  CHECK_FALSE(has_directed_cycle(fixture("fig1_D").digraph()));
  CHECK(has_directed_cycle(fixture("fig1_Dprime").digraph()));
  CHECK_FALSE(has_directed_cycle(Digraph(4, {})));
  CHECK(has_directed_cycle(Digraph::with_loops(1, std::vector<Arc>{{0, 0}})));
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto d = random_digraph(1 + seed % 8, seed, 0.2);
    CHECK(has_directed_cycle(d) == oracle::has_cycle(oracle::adjacency(d)));
  }
}

TEST_CASE("induced subdigraph") {
  const auto d = fixture("fig1_D").digraph();
  const auto sub = induced_subdigraph(d, set_of(6, {at(d, "x1"), at(d, "y1"), at(d, "x2")}));
  CHECK(sub.digraph.vertex_count() == 3);
  CHECK(sub.digraph.arc_count() == 2);
  CHECK(sub.digraph.label(0) == "x1");
  CHECK(sub.original == std::vector<Vertex>{0, 1, 3});
}

TEST_CASE("undirected graph") {
  const std::vector<Edge> e = {{0, 1}, {1, 2}};
  Graph g(4, e);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.add_edge(2, 1));
  CHECK(g.components(VertexSet::full(4)).size() == 2);
  CHECK(g.isolated_vertices(VertexSet::full(4)) == set_of(4, {3}));
  CHECK_FALSE(g.is_clique(set_of(4, {0, 1, 2})));
  CHECK(g.is_clique(set_of(4, {0, 1})));
  const std::vector<Edge> loop = {{2, 2}};
  CHECK(code_of([&] { Graph(3, loop); }) == ErrorCode::SelfLoop);
}
