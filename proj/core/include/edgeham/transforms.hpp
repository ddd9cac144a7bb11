#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "edgeham/graph.hpp"

namespace edgeham {

/// What a gadget added: fresh vertices are appended after the original ids and
/// gadget edges after the original edges, so original indices stay valid.
struct GadgetTrace {
  int base_vertex_count = 0;
  std::vector<Vertex> added_vertices;
  std::vector<EdgeId> added_edges;
  std::vector<Vertex> anchor;
};

/// g plus a 3-edge path u-x-y-v through two fresh vertices. The result has an
/// edge-Hamiltonian cycle iff g has an edge-Hamiltonian path whose first edge
/// holds u and last edge holds v. Throws SameVertex / VertexOutOfRange.
std::pair<Graph, GadgetTrace> ehp_to_ehc_gadget(const Graph& g, Vertex u, Vertex v);

/// g plus two fresh 2-edge paths u-a-b and u-c-d. The result has an
/// edge-Hamiltonian path iff g has an edge-Hamiltonian cycle whose first and
/// last edges both hold u.
std::pair<Graph, GadgetTrace> ehc_to_ehp_gadget(const Graph& g, Vertex u);

/// Exact decision procedure for the opposite problem. Must be side-effect free.
using DecisionFn = std::function<bool(const Graph&)>;

/// want == Path: OR over ordered pairs (u, v), u != v, of inner(ehp_to_ehc_gadget).
/// want == Cycle: OR over u of inner(ehc_to_ehp_gadget). Lexicographic order,
/// stops at the first yes; isolated anchors are skipped. The edgeless graph is
/// answered by convention.
bool decide_via_transform(const Graph& g, Mode want, const DecisionFn& inner);

/// Rotates a valid edge-Hamiltonian cycle of an ehp_to_ehc_gadget graph so
/// that the three gadget edges come last and drops them, leaving a path of
/// the base graph (ids unchanged). Throws InvalidInputPath.
EdgeSeq path_from_gadget_cycle(const GadgetTrace& trace, const EdgeSeq& cycle);

}  // namespace edgeham
