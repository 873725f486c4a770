#include "doctest.h"

#include "complab/characterization.hpp"
#include "complab/error.hpp"
#include "complab/generators.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace complab;

namespace {

Graph graph_of(std::size_t n, std::initializer_list<Edge> edges) {
  return Graph(n, std::vector<Edge>(edges));
}

}  // namespace

TEST_CASE("clique shapes") {
  CHECK(CliqueShape::make({1, 3, 0, 2}, 2) == CliqueShape::make({2, 3}, 3));
  CHECK(CliqueShape::make({3, 2}, 1).to_string() == "K3+K2+I1");
  CHECK(CliqueShape::make({}, 0).to_string() == "I0");
  const auto g = graph_of(5, {{0, 1}, {2, 3}, {3, 4}, {2, 4}});
  CHECK(clique_shape_of(g, VertexSet::full(5)) == CliqueShape::make({3, 2}, 0));
  const auto path = graph_of(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(clique_shape_of(path, VertexSet::full(3)).has_value());
}

TEST_CASE("classify_structure") {
  SUBCASE("competition graph of fig1 D on part 1") {
    const auto bt = fixture("fig1_D");
    const auto s = classify_structure(competition_graph(bt.digraph()), bt.part1());
    CHECK(s.kind == StructureKind::CliquesPlusIsolated);
    CHECK(s.clique_sizes == std::vector<std::size_t>{3});
    CHECK(s.isolated == 0);
  }
  SUBCASE("path is two overlapping edges") {
    const auto s = classify_structure(graph_of(3, {{0, 1}, {1, 2}}), VertexSet::full(3));
    CHECK(s.kind == StructureKind::TwoOverlappingCliques);
    CHECK(s.clique_sizes == std::vector<std::size_t>{2, 2});
    CHECK(s.overlap == 1);
    CHECK(s.isolated == 0);
    REQUIRE(s.cover.size() == 2);
    CHECK(s.cover[0] == VertexSet::of(3, {0, 1}));
    CHECK(s.cover[1] == VertexSet::of(3, {1, 2}));
    CHECK(is_union_of_at_most_two_cliques(s));
  }
  SUBCASE("edgeless") {
    const auto s = classify_structure(Graph(4), VertexSet::of(4, {0, 2}));
    CHECK(s.kind == StructureKind::Edgeless);
    CHECK(s.isolated == 2);
  }
  SUBCASE("two triangles bridged by one edge are irregular") {
    const auto g = graph_of(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
    CHECK(classify_structure(g, VertexSet::full(6)).kind == StructureKind::Irregular);
    CHECK_FALSE(oracle::two_clique_coverable(props::edge_set(g), {0, 1, 2, 3, 4, 5}));
  }
  SUBCASE("induced path on four vertices is irregular") {
    const auto g = graph_of(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(classify_structure(g, VertexSet::full(4)).kind == StructureKind::Irregular);
  }
  SUBCASE("overlap of size two plus isolated vertex") {
    // K4 on {0,1,2,3} and K3 on {2,3,4}, with 5 isolated.
    const auto g = graph_of(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
    const auto s = classify_structure(g, VertexSet::full(6));
    CHECK(s.kind == StructureKind::TwoOverlappingCliques);
    CHECK(s.clique_sizes == std::vector<std::size_t>{4, 3});
    CHECK(s.overlap == 2);
    CHECK(s.isolated == 1);
    CHECK(s.label() == "K4&K3(o2)+I1");
  }
  SUBCASE("three disjoint cliques are not a two-clique union") {
    const auto g = graph_of(6, {{0, 1}, {2, 3}, {4, 5}});
    const auto s = classify_structure(g, VertexSet::full(6));
    CHECK(s.kind == StructureKind::CliquesPlusIsolated);
    CHECK_FALSE(is_union_of_at_most_two_cliques(s));
    CHECK_FALSE(satisfies_cyclic_structure(s));
  }
}

TEST_CASE("classifier agrees with brute-force two-clique covers") {
  // Every graph on 5 labelled vertices.
  std::vector<Edge> all;
  for (Vertex u = 0; u < 5; ++u) {
    for (Vertex v = u + 1; v < 5; ++v) all.push_back({u, v});
  }
  for (unsigned mask = 0; mask < (1U << all.size()); ++mask) {
    Graph g(5);
    for (std::size_t b = 0; b < all.size(); ++b) {
      if (mask >> b & 1U) g.add_edge(all[b].u, all[b].v);
    }
    const auto s = classify_structure(g, VertexSet::full(5));
    const auto es = props::edge_set(g);
    const std::vector<int> verts = {0, 1, 2, 3, 4};
    CHECK(satisfies_cyclic_structure(s) == oracle::two_clique_coverable(es, verts));
    CHECK((s.kind == StructureKind::CliquesPlusIsolated || s.kind == StructureKind::Edgeless) ==
          oracle::shape(es, verts).has_value());
  }
}

TEST_CASE("acyclic predictions") {
  const auto bt = fixture("fig1_D");
  const auto a = sink_analysis(bt.digraph());
  CHECK(predict_acyclic(bt, a, 1).whole == CliqueShape::make({3, 2}, 1));
  CHECK(predict_acyclic(bt, a, 3).whole == CliqueShape::make({}, 6));
  CHECK(predict_acyclic(bt, a, 4).whole == CliqueShape::make({}, 6));
  const auto p = predict_acyclic(bt, a, 1);
  CHECK(p.cindex.value == 3);
  CHECK(p.cindex.exact);
  CHECK(p.cperiod.value == 1);

  const auto cyc = fixture("fig2_D");
  try {
    predict_acyclic(cyc, sink_analysis(cyc.digraph()), 1);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAcyclic);
  }
}

TEST_CASE("cyclic predictions") {
  SUBCASE("fig2, zeta = 0") {
    const auto bt = fixture("fig2_D");
    const auto a = sink_analysis(bt.digraph());
    const auto p = predict_cyclic(bt, a, 2);
    CHECK(p.applicability == Applicability::CyclicZeta0);
    CHECK_FALSE(p.cindex.exact);
    CHECK(p.cindex.admits(4));
    CHECK_FALSE(p.cindex.admits(5));
    CHECK(p.cperiod.exact);
    CHECK(p.cperiod.admits(1));
  }
  SUBCASE("fig1 D', zeta = 2") {
    const auto bt = fixture("fig1_Dprime");
    const auto a = sink_analysis(bt.digraph());
    const auto p = predict_cyclic(bt, a, 2);
    CHECK(p.applicability == Applicability::CyclicZetaAtLeast2);
    CHECK(p.cindex.exact);
    CHECK(p.cindex.value == 2);
    REQUIRE(p.per_part.has_value());
    CHECK((*p.per_part)[0] == CliqueShape::make({2}, 1));
    CHECK((*p.per_part)[1] == CliqueShape::make({2}, 1));
    const auto g = m_step_competition_graph(bt.digraph(), 2);
    CHECK(clique_shape_of(g, bt.part1()) == (*p.per_part)[0]);
  }
  SUBCASE("smallest cyclic case from the (2,2) enumeration") {
    std::size_t found = 0;
    for (const auto& bt : enumerate_all(2, 2)) {
      const auto a = sink_analysis(bt.digraph());
      if (a.zeta() != 0) continue;
      ++found;
      const auto p = predict_cyclic(bt, a, 2);
      CHECK(p.cindex.admits(competition_profile(bt.digraph()).cindex));
    }
    CHECK(found == 2);
  }
  SUBCASE("errors") {
    const auto bt = fixture("fig1_D");
    const auto a = sink_analysis(bt.digraph());
    try {
      predict_cyclic(bt, a, 2);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotCyclic);
    }
    const auto c = fixture("fig2_D");
    try {
      predict_cyclic(c, sink_analysis(c.digraph()), 1);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidArgument);
    }
  }
}

TEST_CASE("verify_instance on the fixtures") {
  for (const auto& [name, m_max] : {std::pair<const char*, std::size_t>{"fig1_D", 6},
                                    {"fig1_Dprime", 6},
                                    {"fig2_D", 8}}) {
    CAPTURE(name);
    const auto r = verify_instance(fixture(name), m_max);
    CHECK(r.all_passed());
    CHECK(r.checks.size() == check_names().size());
    for (std::size_t i = 0; i < r.checks.size(); ++i) CHECK(r.checks[i].name == check_names()[i]);
  }
  const auto fig2 = verify_instance(fixture("fig2_D"), 8);
  CHECK(fig2.applicability == Applicability::CyclicZeta0);
  CHECK(fig2.cindex == 4);
  CHECK(fig2.find("sinkless_index_period")->status == CheckStatus::Pass);
  CHECK(fig2.find("acyclic_shapes")->status == CheckStatus::Skip);
  const auto fig1 = verify_instance(fixture("fig1_D"), 6);
  CHECK(fig1.find("acyclic_shapes")->status == CheckStatus::Pass);
  CHECK(fig1.find("cyclic_part_structure")->status == CheckStatus::Skip);
}

TEST_CASE("verify_instance passes on every orientation up to (3,3)") {
  for (auto [n1, n2] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 4}, {2, 2}, {2, 3}, {3, 3}}) {
    for (const auto& bt : enumerate_all(n1, n2)) {
      const auto r = verify_instance(bt, default_m_max(sink_analysis(bt.digraph())));
      if (!r.all_passed()) {
        FAIL_CHECK(n1 << "x" << n2 << " " << r.first_failure()->name << ": "
                      << r.first_failure()->witness);
      }
    }
  }
}
