#pragma once

#include <vector>

#include "edgeham/graph.hpp"

namespace edgeham {

struct KernelDeletion {
  EdgeId original_index = -1;
  VertexPair edge;  // (u_i, w) with u_i the cover vertex of the edge's type
  int type = 0;
};

/// Record of a kernelization run. Deleted edges are logged in deletion order;
/// replaying them on the original graph yields `kernel`, whose edges keep the
/// original relative order.
struct KernelTrace {
  Graph original;
  std::vector<Vertex> vertex_cover;
  std::vector<KernelDeletion> deletions;
  Graph kernel;
};

/// Greedy maximal matching, lowest edge index first; both endpoints of every
/// matched edge. Returned sorted.
std::vector<Vertex> two_approx_vc(const Graph& g);

/// The three-condition reduction rule for edge e = (u_i, w) where i is the
/// type of e. The overlap condition only looks at cover vertices u_j != u_i.
/// Throws EdgeNotIncidentToItsType if e does not contain u_{type(e)}.
bool rule_applies(const Graph& g, const TypeAssignment& t, EdgeId e);

/// Repeatedly deletes the lowest-index edge the rule applies to, rescanning
/// after every deletion, until no edge qualifies. The kernel keeps every
/// vertex. Throws NotAVertexCover.
KernelTrace kernelize(const Graph& g, const std::vector<Vertex>& cover);

/// Turns an edge-Hamiltonian path of the kernel into one of the original
/// graph by re-inserting deleted edges in reverse order. Throws
/// InvalidKernelCertificate or NoLargeGroup.
EdgeSeq lift_certificate(const KernelTrace& trace, const EdgeSeq& kernel_path);

}  // namespace edgeham
