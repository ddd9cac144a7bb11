#pragma once

#include <cstdint>
#include <vector>

#include "edgeham/graph.hpp"

namespace edgeham {

enum class CwOp { Intro, Union, Rename, Join };

/// One operation. Intro uses `a` as its label; Rename maps a -> b; Join
/// connects labels a and b. Union has children `left` and `right`, Rename
/// and Join only `left`.
struct CwNode {
  CwOp op = CwOp::Intro;
  int a = 0;
  int b = 0;
  int left = -1;
  int right = -1;

  friend bool operator==(const CwNode&, const CwNode&) = default;
};

/// Clique-width expression stored as an arena; `root` names the top node.
/// Vertex ids follow the left-to-right order of the Intro leaves.
struct CwExpr {
  int label_budget = 0;
  std::vector<CwNode> nodes;
  int root = -1;

  int intro(int label);
  int unite(int left, int right);
  int rename(int from, int to, int child);
  int join(int i, int j, int child);

  /// Copy whose arena lists nodes in post-order (children first).
  [[nodiscard]] CwExpr canonical() const;
  /// Node ids reachable from the root, children before parents.
  [[nodiscard]] std::vector<int> post_order() const;
  [[nodiscard]] int vertex_count() const;

  friend bool operator==(const CwExpr&, const CwExpr&) = default;
};

struct LabeledGraph {
  Graph graph;
  std::vector<int> label;  // per vertex
};

/// Throws LabelOutOfBudget, JoinSameLabel.
LabeledGraph eval_cwe(const CwExpr& e);

/// Evaluation with the view from every node: the vertices of the
/// sub-expression at node x are the id range [lo, hi) and `labels` holds
/// their labels at that point.
struct NodeView {
  int lo = 0;
  int hi = 0;
  std::vector<int> labels;

  [[nodiscard]] std::vector<Vertex> with_label(int label) const;
  [[nodiscard]] int count(int label) const;
};

struct FullEvaluation {
  LabeledGraph result;
  std::vector<NodeView> view;  // indexed by node id; unreachable nodes stay empty
};

FullEvaluation eval_cwe_full(const CwExpr& e);

/// Deterministic random expression over labels 1..k with `size` vertices
/// whose graph is connected. Throws GenerationFailed after bounded retries
/// and InvalidConfig for k < 2 or size < 1.
CwExpr random_cwe(int k, int size, std::uint64_t seed);

}  // namespace edgeham
