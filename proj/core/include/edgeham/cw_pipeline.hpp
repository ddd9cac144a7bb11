#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "edgeham/cwe.hpp"
#include "edgeham/decomposition.hpp"
#include "edgeham/graph.hpp"

namespace edgeham {

inline constexpr int kContainMin = 3;
inline constexpr int kReduceMin = 5;
inline constexpr int kJoinSmallSide = 6;
inline constexpr int kSpliceMin = 7;
inline constexpr int biclique_target(int k) { return 21 * k; }

enum class RewriteStage { BigJoin, Gradual };

std::string_view to_string(RewriteStage s);

/// A, B: the two sides of the replaced biclique; C: the three fresh vertices.
struct ReductionSite {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  std::vector<Vertex> c;
  RewriteStage stage = RewriteStage::BigJoin;
};

/// Drops A x B and connects A and B to three new vertices n, n+1, n+2.
/// Surviving edges keep their order; new edges follow, for v in sorted A then
/// sorted B, to each new vertex in turn. Throws SetsTooSmall, NotABiclique.
std::pair<Graph, ReductionSite> reduce_biclique_graph(const Graph& g, std::vector<Vertex> a, std::vector<Vertex> b);

/// Edits a DES by 4-cycle flips inside A x B until A and B lie in V0 and at
/// least one A x B edge is used. Throws PreconditionViolated.
DesSolution repair_contain(const Graph& g, std::vector<Vertex> a, std::vector<Vertex> b, const DesSolution& sol);

enum class TransferDirection { Forward, Backward };

/// Forward: DES of g (the original) -> DES of reduced. Backward: DES of
/// reduced -> DES of g. `sol` must validate in the source graph (otherwise
/// InvalidSolution). Throws AugmentationStuck if the connectivity repair
/// cannot make progress.
DesSolution transfer_des_across_reduction(TransferDirection dir, const ReductionSite& site, const Graph& g,
                                          const Graph& reduced, const DesSolution& sol);

struct RewriteRecord {
  RewriteStage stage = RewriteStage::BigJoin;
  int node = -1;
  int label_a = 0;  // join labels, or the spliced label and the garbage label
  int label_b = 0;
  int side_a = 0;
  int side_b = 0;
  int edges_before = 0;
  int edges_after = 0;
};

/// Budget k -> k+2 (work k+1, garbage k+2). Each join whose two label
/// classes both have at least 7 vertices becomes: 3 work vertices, join i to
/// work, join j to work, rename work to garbage. Post-order, first site,
/// repeated until none is left.
CwExpr eliminate_big_joins(const CwExpr& e, std::vector<RewriteRecord>* log = nullptr);

/// True iff every join has one side with at most 6 vertices.
bool all_joins_small(const CwExpr& e);

struct GradualSite {
  int node = -1;
  int label = 0;
  std::vector<Vertex> inner;     // V_i^x
  std::vector<Vertex> external;  // common neighbours outside V_x in the final graph
};

/// First (post-order, then label) node x and label i <= max_label with
/// |V_i^x| >= 7 and at least 7 common neighbours outside V_x.
std::optional<GradualSite> find_gradual_site(const CwExpr& e, int max_label);

/// Budget K -> K+2 (work K+1, garbage K+2). Splices 3 work vertices, join,
/// rename i -> garbage, rename work -> i after every gradual site until none
/// is left. Throws PreconditionViolated if a big join is present.
CwExpr eliminate_gradual_bicliques(const CwExpr& e, std::vector<RewriteRecord>* log = nullptr);

struct PipelineReport {
  CwExpr original;
  CwExpr after_big_joins;
  CwExpr after_bicliques;
  Graph final_graph;
  int edges_original = 0;
  int edges_after_big_joins = 0;
  int edges_after_bicliques = 0;
  std::vector<RewriteRecord> rewrites;
  TreeDecomposition decomposition;
  int decomposition_width = -1;
  bool exact_decomposition = false;
  // Filled in when the final graph has at most 15 vertices.
  std::optional<int> exact_treewidth;
  std::optional<int> excluded_biclique;  // smallest t without K_{t,t}
  std::optional<long long> gw_bound;     // 3 (k+4) t
  std::optional<DesSolution> certificate;
  bool answer = false;
};

/// Edge-Hamiltonian cycle of eval(e): big joins, gradual bicliques, tree
/// decomposition (exact when n <= 15, min-fill otherwise), then the DES DP.
PipelineReport decide_ehc_cw(const CwExpr& e);

}  // namespace edgeham
