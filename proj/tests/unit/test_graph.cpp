#include <set>

#include "doctest.h"
#include "edgeham/generators.hpp"
#include "edgeham/graph.hpp"
#include "edgeham/oracle.hpp"
#include "edgeham/rng.hpp"
#include "helpers.hpp"

using namespace edgeham;
using edgeham::testing::code_of;

TEST_CASE("build_graph keeps input order and rejects bad pairs") {
  const Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
  CHECK(p3.edge_count() == 2);
  CHECK(p3.edge(1) == VertexPair{1, 2});
  const Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(c4.degree(0) == 2);
  CHECK(c4.find_edge(0, 3) == 3);
  CHECK(c4.find_edge(3, 0) == 3);
  CHECK_FALSE(c4.adjacent(0, 2));
  CHECK(code_of([] { build_graph(2, {{0, 1}, {1, 0}}); }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([] { build_graph(2, {{1, 1}}); }) == ErrorCode::SelfLoop);
  CHECK(code_of([] { build_graph(2, {{0, 2}}); }) == ErrorCode::VertexOutOfRange);
}

TEST_CASE("hypergraph construction") {
  const Hypergraph h(4, {{2, 0}, {3}});
  CHECK(h.edge(0).size() == 2);
  CHECK(h.contains(0, 2));
  CHECK_FALSE(h.contains(1, 0));
  CHECK(code_of([] { Hypergraph(2, {{}}); }) == ErrorCode::EmptyHyperedge);
  CHECK(code_of([] { Hypergraph(2, {{5}}); }) == ErrorCode::VertexOutOfRange);
  // Duplicate hyperedges are allowed.
  CHECK(Hypergraph(2, {{0, 1}, {0, 1}}).edge_count() == 2);
}

TEST_CASE("line graphs") {
  CHECK(line_graph(path_graph(3)) == build_graph(2, {{0, 1}}));
  const Graph star = line_graph(star_graph(3));
  CHECK(star.vertex_count() == 3);
  CHECK(star.edge_count() == 3);
  const Graph c4 = line_graph(cycle_graph(4));
  CHECK(c4.edge_count() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
  // All hyperedges through one vertex give a complete line graph.
  const Hypergraph h(5, {{0, 1}, {0, 2, 3}, {0}, {0, 4}});
  CHECK(line_graph(h).edge_count() == 6);
}

TEST_CASE("validate_edge_sequence") {
  const Graph p4 = path_graph(4);
  CHECK(validate_edge_sequence(p4, EdgeSeq{{0, 1, 2}, Mode::Path}));
  CHECK(validate_edge_sequence(p4, EdgeSeq{{2, 1, 0}, Mode::Path}));
  auto order = testing::iota_order(3);
  do {
    CHECK_FALSE(validate_edge_sequence(p4, EdgeSeq{order, Mode::Cycle}));
  } while (std::next_permutation(order.begin(), order.end()));
  const Graph two = build_graph(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(validate_edge_sequence(two, EdgeSeq{{0, 1}, Mode::Path}));
  CHECK_FALSE(validate_edge_sequence(two, EdgeSeq{{0, 1}, Mode::Cycle}));
  CHECK(validate_edge_sequence(path_graph(3), EdgeSeq{{1, 0}, Mode::Cycle}));
  CHECK(validate_edge_sequence(path_graph(2), EdgeSeq{{0}, Mode::Cycle}));
  CHECK(validate_edge_sequence(Graph{}, EdgeSeq{{}, Mode::Cycle}));
  CHECK(code_of([&] { validate_edge_sequence(p4, EdgeSeq{{0, 0, 1}, Mode::Path}); }) == ErrorCode::NotAPermutation);
  CHECK(code_of([&] { validate_edge_sequence(p4, EdgeSeq{{0, 1}, Mode::Path}); }) == ErrorCode::NotAPermutation);
}

TEST_CASE("reversed valid paths stay valid") {
  SplitMix64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_gnm(6, 1 + rng.below(8), rng());
    const SolveResult r = solve_edge_ham_exact(g, Mode::Path);
    if (!r.is_yes()) continue;
    EdgeSeq rev = r.edge_sequence();
    std::reverse(rev.order.begin(), rev.order.end());
    CHECK(validate_edge_sequence(g, rev));
  }
}

TEST_CASE("validate_des") {
  const Graph k4 = complete_graph(4);
  // Triangle 0-1-2 covers K4.
  const DesSolution tri{{0, 1, 2}, {*k4.find_edge(0, 1), *k4.find_edge(1, 2), *k4.find_edge(0, 2)}};
  std::vector<EdgeId> e0 = tri.e0;
  std::sort(e0.begin(), e0.end());
  CHECK(validate_des(k4, DesSolution{tri.v0, e0}));
  CHECK(validate_des(star_graph(3), DesSolution{{0}, {}}));
  std::string why;
  CHECK_FALSE(validate_des(path_graph(4), DesSolution{{1, 2}, {1}}, &why));
  CHECK_FALSE(why.empty());
  // Not a cover.
  CHECK_FALSE(validate_des(path_graph(4), DesSolution{{1}, {}}));
  // Disconnected: two triangles sharing nothing.
  const Graph two = build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(validate_des(two, DesSolution{{0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}}));
  // V0 must equal the endpoints of E0.
  CHECK_FALSE(validate_des(cycle_graph(3), DesSolution{{0, 1, 2}, {}}));
  CHECK_FALSE(validate_des(cycle_graph(3), DesSolution{{0, 1}, {99}}));
}

TEST_CASE("classify_types") {
  const auto star = classify_types(star_graph(5), std::vector<Vertex>{0});
  CHECK(std::all_of(star.type_of.begin(), star.type_of.end(), [](int t) { return t == 1; }));
  const Graph tri = build_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  const auto t = classify_types(tri, std::vector<Vertex>{0, 1});
  CHECK(t.type_of == std::vector<int>{1, 1, 2});
  CHECK(t.hub(2) == 1);
  const Graph c5 = cycle_graph(5);
  const std::vector<Vertex> all{0, 1, 2, 3, 4};
  const auto ta = classify_types(c5, all);
  for (EdgeId e = 0; e < 5; ++e) {
    const auto [u, v] = c5.edge(e);
    CHECK(ta.type_of[static_cast<std::size_t>(e)] == std::min(u, v) + 1);
  }
  CHECK(code_of([&] { classify_types(c5, std::vector<Vertex>{0}); }) == ErrorCode::NotAHittingSet);
  CHECK(code_of([&] { classify_types(c5, std::vector<Vertex>{0, 0, 2, 3}); }) == ErrorCode::NotAHittingSet);
}

TEST_CASE("decompose_groups") {
  TypeAssignment t{{0, 1}, {1, 1, 2}};
  auto gd = decompose_groups(EdgeSeq{{0, 1, 2}, Mode::Path}, t);
  REQUIRE(gd.groups.size() == 2);
  CHECK(gd.groups[0] == Group{1, 0, 2});
  CHECK(gd.groups[1] == Group{2, 2, 3});
  CHECK(gd.special_edges == std::vector<EdgeId>{0, 1, 2});

  TypeAssignment same{{0}, {1, 1, 1, 1}};
  gd = decompose_groups(EdgeSeq{{3, 1, 0, 2}, Mode::Path}, same);
  CHECK(gd.groups.size() == 1);
  CHECK(gd.special_edges == std::vector<EdgeId>{2, 3});
  gd = decompose_groups(EdgeSeq{{2}, Mode::Path}, TypeAssignment{{0}, {1, 1, 1}});
  CHECK(gd.special_edges.size() == 1);

  TypeAssignment alt{{0, 1}, {1, 2, 1}};
  gd = decompose_groups(EdgeSeq{{0, 1, 2}, Mode::Path}, alt);
  CHECK(gd.groups.size() == 3);
  CHECK(gd.special_edges.size() == 3);
  CHECK(gd.group_count(1) == 2);
  CHECK(gd.special_count(1, alt) == 2);
}

TEST_CASE("normalize_edge_path") {
  // Hub 0 (type 1) and hub 1 (type 2) joined through shared leaves.
  const Graph g = build_graph(5, {{0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}});
  const std::vector<Vertex> s{0, 1};
  const TypeAssignment t = classify_types(g, s);
  const EdgeSeq path{{0, 1, 3, 2, 4, 5}, Mode::Path};  // types 1 2 2 1 1 2
  REQUIRE(validate_edge_sequence(g, path));
  const EdgeSeq zig{{0, 1, 3, 2, 4, 5}, Mode::Path};
  const EdgeSeq out = normalize_edge_path(g, zig, t);
  CHECK(validate_edge_sequence(g, out));
  std::set<std::pair<int, int>> seen;
  for (std::size_t p = 0; p + 1 < out.order.size(); ++p) {
    const int a = t.type_of[static_cast<std::size_t>(out.order[p])];
    const int b = t.type_of[static_cast<std::size_t>(out.order[p + 1])];
    if (a != b) CHECK(seen.insert({a, b}).second);
  }
  // A fixpoint stays put, as does a single-type path.
  CHECK(normalize_edge_path(g, out, t) == out);
  const Graph star = star_graph(4);
  const EdgeSeq sp{{2, 0, 3, 1}, Mode::Path};
  CHECK(normalize_edge_path(star, sp, classify_types(star, std::vector<Vertex>{0})) == sp);
  CHECK(code_of([&] { normalize_edge_path(path_graph(4), EdgeSeq{{0, 2, 1}, Mode::Path},
                                          classify_types(path_graph(4), std::vector<Vertex>{1, 2})); }) ==
        ErrorCode::InvalidInputPath);
}

TEST_CASE("normalize keeps validity and the pattern bound on random paths") {
  SplitMix64 rng(11);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const int k = 1 + rng.below(3);
    const int max_m = k * (7 - k) + k * (k - 1) / 2;
    const GeneratedInstance gi = random_vc_bounded(7, k, 3 + rng.below(max_m - 2), rng());
    const SolveResult r = solve_edge_ham_exact(gi.graph(), Mode::Path);
    if (!r.is_yes()) continue;
    const TypeAssignment t = classify_types(gi.graph(), gi.planted);
    const EdgeSeq out = normalize_edge_path(gi.graph(), r.edge_sequence(), t);
    CHECK(validate_edge_sequence(gi.graph(), out));
    const auto gd = decompose_groups(out, t);
    for (int type = 1; type <= k; ++type) CHECK(gd.special_count(type, t) <= 2 * k);
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("insert_into_type_group") {
  const Graph star = star_graph(4);
  const TypeAssignment t = classify_types(star, std::vector<Vertex>{0});
  std::vector<EdgeId> order{0, 1};
  const std::vector<EdgeId> extra{2, 3};
  CHECK(insert_into_type_group(order, t, 1, extra));
  CHECK(order == std::vector<EdgeId>{0, 2, 3, 1});
  // No type-2 edge anywhere: nothing to attach to.
  const TypeAssignment t2{{0, 1}, {1, 1, 2, 2}};
  std::vector<EdgeId> only_one{0};
  CHECK_FALSE(insert_into_type_group(only_one, t2, 2, std::vector<EdgeId>{2}));
}

TEST_CASE("generators") {
  const Graph s4 = generate_family("star 4", 0).graph();
  CHECK(s4 == star_graph(4));
  CHECK(s4.degree(0) == 4);
  CHECK(generate_family("biclique 5 5", 0).graph().edge_count() == 25);
  const GeneratedInstance vc = generate_family("vc_bounded 10 2 12 seed=1", 99);
  CHECK(vc.seed == 1);
  CHECK(vc.graph().edge_count() == 12);
  for (const auto& [u, v] : vc.graph().edges()) {
    CHECK((std::binary_search(vc.planted.begin(), vc.planted.end(), u) ||
           std::binary_search(vc.planted.begin(), vc.planted.end(), v)));
  }
  CHECK(generate_family("vc_bounded 10 2 12", 5).graph() == generate_family("vc_bounded 10 2 12", 5).graph());
  const GeneratedInstance hh = generate_family("hyper_hs 8 2 10 3", 4);
  CHECK(hh.hypergraph().edge_count() == 10);
  CHECK_NOTHROW(classify_types(hh.hypergraph(), hh.planted));
  CHECK(generate_family("gnm 6 7", 3).graph().edge_count() == 7);
  CHECK(code_of([] { generate_family("gnm 4 7", 0); }) == ErrorCode::InfeasibleSpec);
  CHECK(code_of([] { generate_family("petersen", 0); }) == ErrorCode::InfeasibleSpec);
  CHECK(code_of([] { generate_family("cycle x", 0); }) == ErrorCode::InfeasibleSpec);
}

TEST_CASE("rng is reproducible and unbiased enough") {
  SplitMix64 a(42);
  SplitMix64 b(42);
  for (int i = 0; i < 10; ++i) CHECK(a() == b());
  CHECK(mix_seed(1, 2) != mix_seed(1, 3));
  SplitMix64 r(5);
  std::vector<int> hist(6, 0);
  for (int i = 0; i < 6000; ++i) ++hist[static_cast<std::size_t>(r.below(6))];
  for (int h : hist) CHECK(h > 800);
}
