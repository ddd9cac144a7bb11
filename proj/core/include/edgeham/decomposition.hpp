#pragma once

#include <string>
#include <utility>
#include <vector>

#include "edgeham/graph.hpp"

namespace edgeham {

struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;  // each bag sorted
  std::vector<std::pair<int, int>> tree_edges;

  /// Largest bag size minus one (-1 for no bags).
  [[nodiscard]] int width() const;

  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

/// Checks the three decomposition axioms and that the bag graph is a tree.
bool validate_td(const Graph& g, const TreeDecomposition& td, std::string* diagnostic = nullptr);

/// One bag per eliminated vertex: the vertex plus its later neighbours in the
/// filled graph. Separate components are chained together at their roots.
TreeDecomposition decomposition_from_elimination_order(const Graph& g, const std::vector<Vertex>& order);

/// Greedy min-fill elimination order, ties broken by the lowest vertex id.
std::vector<Vertex> min_fill_order(const Graph& g);
TreeDecomposition min_fill_decomposition(const Graph& g);

enum class NiceKind { Leaf, IntroduceVertex, ForgetVertex, IntroduceEdge, Join };

struct NiceNode {
  NiceKind kind = NiceKind::Leaf;
  Vertex vertex = -1;  // IntroduceVertex / ForgetVertex
  EdgeId edge = -1;    // IntroduceEdge
  std::vector<Vertex> bag;
  std::vector<int> children;
};

/// Rooted nice decomposition. Nodes are stored children-first, so a forward
/// scan visits every child before its parent; `root` is the last node.
struct NiceDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;

  [[nodiscard]] int width() const;
  [[nodiscard]] int count(NiceKind kind) const;
};

/// Converts a valid decomposition (rooted at bag 0). Every edge is introduced
/// once, directly below the forget node that first drops one of its endpoints,
/// i.e. at the topmost node whose bag holds both. Throws InvalidDecomposition.
NiceDecomposition make_nice(const Graph& g, const TreeDecomposition& td);

bool validate_nice(const Graph& g, const NiceDecomposition& nice, std::string* diagnostic = nullptr);

}  // namespace edgeham
