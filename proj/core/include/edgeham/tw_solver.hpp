#pragma once

#include <cstdint>
#include <vector>

#include "edgeham/decomposition.hpp"
#include "edgeham/graph.hpp"
#include "edgeham/oracle.hpp"

namespace edgeham {

/// Partial-solution summary at one nice-decomposition node.
///
/// `component[p]` is 0 when the p-th bag vertex is not selected, otherwise the
/// 1-based id of its connected component among the selected bag vertices
/// (ids in first-occurrence order, so equal states compare equal). `odd` has
/// bit p set when that vertex currently has odd degree. `done` records that a
/// whole component has already been completed and forgotten; no further
/// vertex may be selected after that.
struct DpState {
  std::vector<std::uint8_t> component;
  std::uint64_t odd = 0;
  bool done = false;

  friend bool operator==(const DpState&, const DpState&) = default;
};

/// Upper bound 2^w * Bell(w) * 2^w * 2 on distinct states for a bag of size w
/// (saturating).
double dp_state_bound(int bag_size);

/// Decides whether g has a dominating Eulerian subgraph. A yes-result carries
/// the traced-back DesSolution. Throws InvalidNiceDecomposition.
SolveResult des_dp(const Graph& g, const NiceDecomposition& nice);

/// Edge-Hamiltonian cycle built from a DES: an Euler tour of E0 with every
/// other edge spliced in next to a visit of one of its V0 endpoints.
/// Throws InvalidSolution unless validate_des passes.
EdgeSeq des_to_edge_cycle(const Graph& g, const DesSolution& des);

/// Edge-Hamiltonian cycle via the DES characterisation. Graphs with fewer
/// than three edges are answered by the degenerate conventions directly.
bool decide_ehc_tw(const Graph& g, const TreeDecomposition& td);

}  // namespace edgeham
