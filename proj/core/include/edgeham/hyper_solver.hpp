#pragma once

#include <cstdint>
#include <vector>

#include "edgeham/graph.hpp"
#include "edgeham/oracle.hpp"

namespace edgeham {

/// Where a merged hyperedge came from. Untouched originals have type and
/// color 0 and a single member.
struct MergedEdgeOrigin {
  int type = 0;
  int color = 0;
  std::vector<EdgeId> members;  // original indices, increasing
};

struct ColorMerge {
  int colors_per_type = 0;  // 2k
  std::vector<int> coloring;  // per original edge; 0 for types that were not colored
  Hypergraph merged;  // untouched originals first (index order), then e_{i,c} by type, color
  std::vector<MergedEdgeOrigin> back_map;  // parallel to merged edges
};

struct HyperSolveConfig {
  double delta = 0.01;
  std::uint64_t max_rounds = 1'000'000;
  std::uint64_t seed = 0;
  /// Enumerate every coloring (up to renaming colors) when there are at most
  /// this many; the answer is then exact.
  std::uint64_t deterministic_fallback_threshold = 4096;
  int oracle_cap = kDefaultEdgeHamCap;
};

/// Random 2k-coloring of every type with more than 2k hyperedges (2k distinct
/// pivots take colors 1..2k, the rest are uniform), then each color class is
/// merged into its union.
ColorMerge color_and_merge(const Hypergraph& h, const TypeAssignment& t, std::uint64_t round_seed);

/// Merge for a given coloring (0 = leave the hyperedge alone). Every type
/// with a nonzero color must use all colors 1..colors_per_type.
ColorMerge merge_coloring(const Hypergraph& h, const TypeAssignment& t, std::vector<int> coloring, int colors_per_type);

/// min(max_rounds, ceil(e^{2k^2} ln(1/delta))), saturating.
std::uint64_t planned_rounds(int k, const HyperSolveConfig& cfg);

/// Edge-Hamiltonian path by color coding. Yes answers carry a validated
/// certificate of h; No is returned only when the search was exhaustive,
/// ProbablyNo otherwise. Throws NotAHittingSet, MergedInstanceTooLarge,
/// InvalidConfig.
SolveResult decide_hyper_ehp(const Hypergraph& h, const std::vector<Vertex>& hitting_set,
                             const HyperSolveConfig& cfg = {});

/// Turns an edge-Hamiltonian path of cm.merged into one of h.
/// Throws InvalidMergedCertificate.
EdgeSeq reconstruct_certificate(const Hypergraph& h, const TypeAssignment& t, const ColorMerge& cm,
                                const EdgeSeq& merged_path);

struct ComplementReduction {
  Hypergraph hypergraph;
  std::vector<Vertex> hitting_set;
};

/// coloring[v] in 1..k, each class a clique of g. Color c becomes vertex
/// c-1, edge e of g becomes vertex k+e, and vertex v becomes the hyperedge of
/// its incident edges plus its color. The line graph of the result is g.
/// Throws NotAProperComplementColoring.
ComplementReduction complement_coloring_reduction(const Graph& g, const std::vector<int>& coloring);

}  // namespace edgeham
