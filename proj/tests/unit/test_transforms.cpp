#include "doctest.h"
#include "edgeham/generators.hpp"
#include "edgeham/oracle.hpp"
#include "edgeham/rng.hpp"
#include "edgeham/transforms.hpp"
#include "helpers.hpp"

using namespace edgeham;
using edgeham::testing::code_of;

namespace {

bool oracle(const Graph& g, Mode mode) { return solve_edge_ham_exact(g, mode).is_yes(); }

}  // namespace

TEST_CASE("gadget shapes") {
  const Graph p3 = path_graph(3);
  const auto [g1, t1] = ehp_to_ehc_gadget(p3, 0, 2);
  CHECK(g1.vertex_count() == 5);
  CHECK(g1.edge_count() == 5);
  CHECK(t1.added_vertices == std::vector<Vertex>{3, 4});
  CHECK(t1.added_edges == std::vector<EdgeId>{2, 3, 4});
  CHECK(g1.edge(0) == p3.edge(0));
  CHECK(oracle(g1, Mode::Cycle));

  const auto [g2, t2] = ehc_to_ehp_gadget(cycle_graph(3), 0);
  CHECK(g2.vertex_count() == 7);
  CHECK(g2.edge_count() == 7);
  CHECK(t2.anchor == std::vector<Vertex>{0});
  CHECK(oracle(g2, Mode::Path));

  CHECK(code_of([&] { ehp_to_ehc_gadget(p3, 1, 1); }) == ErrorCode::SameVertex);
  CHECK(code_of([&] { ehp_to_ehc_gadget(p3, 0, 3); }) == ErrorCode::VertexOutOfRange);
  CHECK(code_of([&] { ehc_to_ehp_gadget(p3, -1); }) == ErrorCode::VertexOutOfRange);
}

TEST_CASE("P4 cycle gadget has no path") {
  // P4 has no edge-Hamiltonian cycle, so no anchor works.
  const Graph p4 = path_graph(4);
  for (Vertex u = 0; u < 4; ++u) CHECK_FALSE(oracle(ehc_to_ehp_gadget(p4, u).first, Mode::Path));
  CHECK_FALSE(decide_via_transform(p4, Mode::Cycle, [](const Graph& g) { return oracle(g, Mode::Path); }));
  CHECK(decide_via_transform(p4, Mode::Path, [](const Graph& g) { return oracle(g, Mode::Cycle); }));
}

TEST_CASE("decide_via_transform matches the direct oracle") {
  SplitMix64 rng(17);
  for (int i = 0; i < 80; ++i) {
    const Graph g = random_gnm(5, rng.below(7), rng());
    CHECK(decide_via_transform(g, Mode::Path, [](const Graph& x) { return oracle(x, Mode::Cycle); }) ==
          oracle(g, Mode::Path));
    CHECK(decide_via_transform(g, Mode::Cycle, [](const Graph& x) { return oracle(x, Mode::Path); }) ==
          oracle(g, Mode::Cycle));
  }
}

TEST_CASE("edgeless and single-edge graphs use the conventions") {
  int calls = 0;
  const DecisionFn count = [&](const Graph&) {
    ++calls;
    return false;
  };
  CHECK(decide_via_transform(Graph::build(3, {}), Mode::Path, count));
  CHECK(decide_via_transform(Graph::build(3, {}), Mode::Cycle, count));
  CHECK(calls == 0);
}

TEST_CASE("path_from_gadget_cycle") {
  const Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
  const auto [big, trace] = ehp_to_ehc_gadget(g, 0, 2);
  const SolveResult r = solve_edge_ham_exact(big, Mode::Cycle);
  REQUIRE(r.is_yes());
  const EdgeSeq path = path_from_gadget_cycle(trace, r.edge_sequence());
  CHECK(path.mode == Mode::Path);
  CHECK(validate_edge_sequence(g, path));
  CHECK(code_of([&] { path_from_gadget_cycle(trace, EdgeSeq{{0, 1}, Mode::Cycle}); }) ==
        ErrorCode::InvalidInputPath);
}
