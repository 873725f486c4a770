#include "doctest.h"

#include "complab/competition.hpp"
#include "complab/error.hpp"
#include "complab/generators.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace complab;

namespace {

oracle::EdgeSet labeled(const Digraph& d, std::initializer_list<const char*> pairs) {
  oracle::EdgeSet out;
  for (const char* p : pairs) {
    const std::string s(p);
    const auto u = static_cast<int>(*d.find_label(s.substr(0, s.size() / 2)));
    const auto v = static_cast<int>(*d.find_label(s.substr(s.size() / 2)));
    out.insert({std::min(u, v), std::max(u, v)});
  }
  return out;
}

}  // namespace

TEST_CASE("row graph") {
  CHECK(row_graph(BooleanMatrix::identity(3)).is_edgeless());
  BooleanMatrix ones(4);
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = 0; v < 4; ++v) ones.set(u, v);
  }
  CHECK(row_graph(ones).edge_count() == 6);
  const auto d = fixture("fig1_D").digraph();
  const auto expected = labeled(d, {"x1x2", "x1x3", "x2x3", "y1y2"});
  CHECK(props::edge_set(row_graph(adjacency_matrix(d))) == expected);
  CHECK(props::edge_set(competition_graph(d)) == expected);
}

TEST_CASE("m-step competition graphs of the figures") {
  const auto d2 = fixture("fig2_D").digraph();
  const auto c3 = labeled(d2, {"ab", "bc", "ac", "de", "ef"});
  auto c4 = c3;
  c4.merge(labeled(d2, {"df"}));
  CHECK(props::edge_set(m_step_competition_graph(d2, 3)) == c3);
  CHECK(props::edge_set(m_step_competition_graph(d2, 4)) == c4);
  CHECK(props::edge_set(m_step_competition_graph_oracle(d2, 3)) == c3);
  CHECK(props::edge_set(m_step_competition_graph_oracle(d2, 4)) == c4);

  const auto d1 = fixture("fig1_D").digraph();
  CHECK(m_step_competition_graph(d1, 4).is_edgeless());
  CHECK(m_step_competition_graph_oracle(d1, 4).is_edgeless());
  CHECK(m_step_competition_graph(d1, 1) == competition_graph(d1));
}

TEST_CASE("oracle route on small digraphs") {
  const std::vector<Arc> one = {{0, 1}};
  CHECK(m_step_competition_graph_oracle(Digraph(2, one), 1).is_edgeless());
  // Directed 4-cycle: every vertex has a single m-step prey and no two share
  // it, so every C^m is edgeless.
  const std::vector<Arc> cyc = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  const Digraph c4(4, cyc);
  const auto adj = oracle::adjacency(c4);
  for (std::size_t m = 1; m <= 8; ++m) {
    CHECK(m_step_competition_graph_oracle(c4, m).is_edgeless());
    CHECK(m_step_competition_graph(c4, m).is_edgeless());
    CHECK(oracle::competition_edges(adj, static_cast<int>(m)).empty());
  }
}

TEST_CASE("matrix route equals walk oracle, n <= 7, m <= 10") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t n = 1 + seed % 7;
    const auto d = random_digraph(n, seed, 0.15 + 0.1 * static_cast<double>(seed % 4));
    const auto adj = oracle::adjacency(d);
    for (std::size_t m = 1; m <= 10; ++m) {
      const auto fast = m_step_competition_graph(d, m);
      REQUIRE(fast == m_step_competition_graph_oracle(d, m));
      REQUIRE(props::edge_set(fast) == oracle::competition_edges(adj, static_cast<int>(m)));
    }
  }
}

TEST_CASE("competition profile") {
  SUBCASE("fig2") {
    const auto p = competition_profile(fixture("fig2_D").digraph());
    CHECK(p.cindex == 4);
    CHECK(p.cperiod == 1);
    CHECK(p.graph_sequence_prefix.size() == 5);
  }
  SUBCASE("fig1 D") {
    const auto p = competition_profile(fixture("fig1_D").digraph());
    CHECK(p.cindex == 3);
    CHECK(p.cperiod == 1);
  }
  SUBCASE("fig1 D'") {
    const auto p = competition_profile(fixture("fig1_Dprime").digraph());
    CHECK(p.cindex == 2);
    CHECK(p.cperiod == 1);
  }
  SUBCASE("single arc") {
    const std::vector<Arc> one = {{0, 1}};
    const auto p = competition_profile(Digraph(2, one));
    CHECK(p.cindex == 1);
    CHECK(p.cperiod == 1);
  }
  SUBCASE("cap exceeded") {
    // A 5-cycle has matrix period 5: A^1..A^5 are all distinct.
    std::vector<Arc> arcs;
    for (Vertex v = 0; v < 5; ++v) arcs.push_back({v, (v + 1) % 5});
    const Digraph d(5, arcs);
    try {
      competition_profile(d, 3);
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::CapExceeded);
    }
    CHECK(competition_profile(d).matrix_period == 5);
  }
  SUBCASE("two cycles of coprime length") {
    // Disjoint 2-cycle and 3-cycle with a shared predator p -> {0, 2}.
    const std::vector<Arc> arcs = {{0, 1}, {1, 0}, {2, 3}, {3, 4}, {4, 2}, {5, 0}, {5, 2}, {6, 1}, {6, 3}};
    const Digraph d(7, arcs);
    const auto p = competition_profile(d);
    const auto n = oracle::naive_profile(oracle::adjacency(d));
    CHECK(p.cindex == static_cast<std::size_t>(n.cindex));
    CHECK(p.cperiod == static_cast<std::size_t>(n.cperiod));
    CHECK(p.matrix_period == 6);
  }
}

TEST_CASE("profile agrees with the definitional scan") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const std::size_t n = 1 + seed % 6;
    const auto d = random_digraph(n, 7000 + seed, 0.2 + 0.1 * static_cast<double>(seed % 4));
    const auto p = competition_profile(d);
    const auto ref = oracle::naive_profile(oracle::adjacency(d));
    CHECK(p.cindex == static_cast<std::size_t>(ref.cindex));
    CHECK(p.cperiod == static_cast<std::size_t>(ref.cperiod));
    CHECK(p.cperiod <= p.eventual_period);
    REQUIRE(p.graph_sequence_prefix.size() == p.cindex + p.cperiod);
    for (std::size_t m = 1; m <= p.graph_sequence_prefix.size(); ++m) {
      CHECK(p.graph_sequence_prefix[m - 1] == m_step_competition_graph(d, m));
    }
  }
}

TEST_CASE("competition graph properties on sampled instances") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const GenMode mode = static_cast<GenMode>(seed % 3);
    const std::size_t n1 = 2 + seed % 4;
    const std::size_t n2 = 2 + (seed / 4) % 4;
    const auto o = props::check_all(generate({n1, n2, seed, mode}));
    if (!o.failures.empty()) FAIL_CHECK("seed " << seed << ": " << o.failures.front());
  }
}
