#include "edgeham/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "edgeham/error.hpp"

namespace edgeham {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

bool validate_td(const Graph& g, const TreeDecomposition& td, std::string* diagnostic) {
  auto reject = [&](std::string why) {
    if (diagnostic != nullptr) *diagnostic = std::move(why);
    return false;
  };
  const int n = g.vertex_count();
  const auto nb = td.bags.size();
  if (nb == 0) return n == 0 ? true : reject("no bags");
  if (td.tree_edges.size() != nb - 1) return reject("bag graph must have exactly #bags-1 edges");

  DisjointSets tree(nb);
  for (const auto& [a, b] : td.tree_edges) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= nb || static_cast<std::size_t>(b) >= nb) {
      return reject("tree edge references a missing bag");
    }
    if (!tree.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b))) return reject("bag graph has a cycle");
  }

  std::vector<std::vector<int>> occurs(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < nb; ++i) {
    const auto& bag = td.bags[i];
    for (std::size_t j = 0; j < bag.size(); ++j) {
      if (bag[j] < 0 || bag[j] >= n) return reject("bag " + std::to_string(i) + " has an out-of-range vertex");
      if (j > 0 && bag[j - 1] >= bag[j]) return reject("bag " + std::to_string(i) + " is not sorted and duplicate-free");
      occurs[static_cast<std::size_t>(bag[j])].push_back(static_cast<int>(i));
    }
  }
  auto in_bag = [&](int b, Vertex v) {
    const auto& bag = td.bags[static_cast<std::size_t>(b)];
    return std::binary_search(bag.begin(), bag.end(), v);
  };
  for (Vertex v = 0; v < n; ++v) {
    if (occurs[static_cast<std::size_t>(v)].empty()) return reject("vertex " + std::to_string(v) + " is in no bag");
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    const auto& ou = occurs[static_cast<std::size_t>(u)];
    if (std::none_of(ou.begin(), ou.end(), [&](int b) { return in_bag(b, v); })) {
      return reject("edge " + std::to_string(e) + " is in no bag");
    }
  }
  // In a tree, the bags holding v induce a connected subtree iff they span
  // exactly (#bags holding v) - 1 tree edges.
  std::vector<int> inner(static_cast<std::size_t>(n), 0);
  for (const auto& [a, b] : td.tree_edges) {
    for (Vertex v : td.bags[static_cast<std::size_t>(a)]) {
      if (in_bag(b, v)) ++inner[static_cast<std::size_t>(v)];
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (inner[static_cast<std::size_t>(v)] + 1 != static_cast<int>(occurs[static_cast<std::size_t>(v)].size())) {
      return reject("bags containing vertex " + std::to_string(v) + " are not connected");
    }
  }
  return true;
}

TreeDecomposition decomposition_from_elimination_order(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.vertex_count();
  TreeDecomposition td;
  if (n == 0) {
    td.bags.emplace_back();
    return td;
  }
  if (static_cast<int>(order.size()) != n) fail(ErrorCode::InvalidDecomposition, "order is not a permutation");
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    if (v < 0 || v >= n || position[static_cast<std::size_t>(v)] >= 0) {
      fail(ErrorCode::InvalidDecomposition, "order is not a permutation");
    }
    position[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)].insert(v);
    adj[static_cast<std::size_t>(v)].insert(u);
  }
  td.bags.resize(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    const auto& later = adj[static_cast<std::size_t>(v)];
    std::vector<Vertex> bag(later.begin(), later.end());
    for (Vertex a : later) {
      for (Vertex b : later) {
        if (a < b) {
          adj[static_cast<std::size_t>(a)].insert(b);
          adj[static_cast<std::size_t>(b)].insert(a);
        }
      }
      adj[static_cast<std::size_t>(a)].erase(v);
    }
    if (!bag.empty()) {
      const Vertex next = *std::min_element(bag.begin(), bag.end(), [&](Vertex a, Vertex b) {
        return position[static_cast<std::size_t>(a)] < position[static_cast<std::size_t>(b)];
      });
      parent[i] = position[static_cast<std::size_t>(next)];
    }
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.bags[i] = std::move(bag);
  }
  int previous_root = -1;
  for (int i = 0; i < n; ++i) {
    if (parent[static_cast<std::size_t>(i)] >= 0) {
      td.tree_edges.emplace_back(i, parent[static_cast<std::size_t>(i)]);
    } else {
      if (previous_root >= 0) td.tree_edges.emplace_back(previous_root, i);
      previous_root = i;
    }
  }
  return td;
}

std::vector<Vertex> min_fill_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)].insert(v);
    adj[static_cast<std::size_t>(v)].insert(u);
  }
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    long best_fill = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (gone[static_cast<std::size_t>(v)] != 0) continue;
      const auto& nb = adj[static_cast<std::size_t>(v)];
      long fill = 0;
      for (auto a = nb.begin(); a != nb.end(); ++a) {
        for (auto b = std::next(a); b != nb.end(); ++b) {
          if (adj[static_cast<std::size_t>(*a)].count(*b) == 0) ++fill;
        }
      }
      if (best < 0 || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    const auto& nb = adj[static_cast<std::size_t>(best)];
    for (Vertex a : nb) {
      for (Vertex b : nb) {
        if (a != b) adj[static_cast<std::size_t>(a)].insert(b);
      }
      adj[static_cast<std::size_t>(a)].erase(best);
    }
    adj[static_cast<std::size_t>(best)].clear();
    gone[static_cast<std::size_t>(best)] = 1;
    order.push_back(best);
  }
  return order;
}

TreeDecomposition min_fill_decomposition(const Graph& g) {
  return decomposition_from_elimination_order(g, min_fill_order(g));
}

int NiceDecomposition::width() const {
  int w = -1;
  for (const auto& node : nodes) w = std::max(w, static_cast<int>(node.bag.size()) - 1);
  return w;
}

int NiceDecomposition::count(NiceKind kind) const {
  return static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [&](const NiceNode& x) { return x.kind == kind; }));
}

namespace {

class NiceBuilder {
 public:
  NiceBuilder(const Graph& g, const TreeDecomposition& td) : g_(g), td_(td), tree_(td.bags.size()) {
    for (const auto& [a, b] : td.tree_edges) {
      tree_[static_cast<std::size_t>(a)].push_back(b);
      tree_[static_cast<std::size_t>(b)].push_back(a);
    }
  }

  NiceDecomposition build() {
    int top = td_.bags.empty() ? add(NiceKind::Leaf, -1, {}, {}) : build_bag(0);
    const auto root_bag = nodes_[static_cast<std::size_t>(top)].bag;
    for (Vertex v : root_bag) top = forget(top, v);
    introduce_edges(top);
    return renumber(top);
  }

 private:
  int add(NiceKind kind, Vertex v, std::vector<Vertex> bag, std::vector<int> children) {
    NiceNode node;
    node.kind = kind;
    node.vertex = v;
    node.bag = std::move(bag);
    node.children = std::move(children);
    nodes_.push_back(std::move(node));
    return static_cast<int>(nodes_.size()) - 1;
  }

  int introduce(int child, Vertex v) {
    auto bag = nodes_[static_cast<std::size_t>(child)].bag;
    bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
    return add(NiceKind::IntroduceVertex, v, std::move(bag), {child});
  }

  int forget(int child, Vertex v) {
    auto bag = nodes_[static_cast<std::size_t>(child)].bag;
    bag.erase(std::find(bag.begin(), bag.end(), v));
    return add(NiceKind::ForgetVertex, v, std::move(bag), {child});
  }

  int morph(int node, const std::vector<Vertex>& target) {
    const auto from = nodes_[static_cast<std::size_t>(node)].bag;
    for (Vertex v : from) {
      if (!std::binary_search(target.begin(), target.end(), v)) node = forget(node, v);
    }
    for (Vertex v : target) {
      if (!std::binary_search(from.begin(), from.end(), v)) node = introduce(node, v);
    }
    return node;
  }

  // Iterative DFS over the bag tree so deep paths do not exhaust the stack.
  int build_bag(int root) {
    std::vector<int> parent(td_.bags.size(), -2);
    std::vector<int> order;
    std::vector<int> stack{root};
    parent[static_cast<std::size_t>(root)] = -1;
    while (!stack.empty()) {
      const int b = stack.back();
      stack.pop_back();
      order.push_back(b);
      for (int c : tree_[static_cast<std::size_t>(b)]) {
        if (parent[static_cast<std::size_t>(c)] == -2) {
          parent[static_cast<std::size_t>(c)] = b;
          stack.push_back(c);
        }
      }
    }
    std::vector<int> top(td_.bags.size(), -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int b = *it;
      const auto& bag = td_.bags[static_cast<std::size_t>(b)];
      int cur = -1;
      for (int c : tree_[static_cast<std::size_t>(b)]) {
        if (c == parent[static_cast<std::size_t>(b)]) continue;
        const int sub = morph(top[static_cast<std::size_t>(c)], bag);
        cur = cur < 0 ? sub : add(NiceKind::Join, -1, bag, {cur, sub});
      }
      if (cur < 0) {
        cur = add(NiceKind::Leaf, -1, {}, {});
        for (Vertex v : bag) cur = introduce(cur, v);
      }
      top[static_cast<std::size_t>(b)] = cur;
    }
    return top[static_cast<std::size_t>(root)];
  }

  void introduce_edges(int root) {
    std::vector<char> done(static_cast<std::size_t>(g_.edge_count()), 0);
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (nodes_[static_cast<std::size_t>(x)].kind == NiceKind::ForgetVertex) {
        const Vertex w = nodes_[static_cast<std::size_t>(x)].vertex;
        const int child = nodes_[static_cast<std::size_t>(x)].children[0];
        const auto bag = nodes_[static_cast<std::size_t>(child)].bag;
        int below = child;
        std::vector<EdgeId> here;
        for (EdgeId e : g_.incident(w)) {
          const auto [a, b] = g_.edge(e);
          const Vertex other = a == w ? b : a;
          if (done[static_cast<std::size_t>(e)] == 0 && std::binary_search(bag.begin(), bag.end(), other)) {
            here.push_back(e);
            done[static_cast<std::size_t>(e)] = 1;
          }
        }
        // Lowest edge id ends up nearest the forget node.
        for (auto it = here.rbegin(); it != here.rend(); ++it) {
          const int ie = add(NiceKind::IntroduceEdge, -1, bag, {below});
          nodes_[static_cast<std::size_t>(ie)].edge = *it;
          below = ie;
        }
        nodes_[static_cast<std::size_t>(x)].children[0] = below;
        stack.push_back(child);
        continue;
      }
      for (int c : nodes_[static_cast<std::size_t>(x)].children) stack.push_back(c);
    }
  }

  NiceDecomposition renumber(int root) {
    NiceDecomposition out;
    std::vector<int> id(nodes_.size(), -1);
    // Post-order: (node, expanded?) pairs.
    std::vector<std::pair<int, bool>> stack{{root, false}};
    while (!stack.empty()) {
      auto [x, expanded] = stack.back();
      stack.pop_back();
      if (expanded) {
        NiceNode node = nodes_[static_cast<std::size_t>(x)];
        for (int& c : node.children) c = id[static_cast<std::size_t>(c)];
        id[static_cast<std::size_t>(x)] = static_cast<int>(out.nodes.size());
        out.nodes.push_back(std::move(node));
        continue;
      }
      stack.emplace_back(x, true);
      const auto& ch = nodes_[static_cast<std::size_t>(x)].children;
      for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.emplace_back(*it, false);
    }
    out.root = static_cast<int>(out.nodes.size()) - 1;
    return out;
  }

  const Graph& g_;
  const TreeDecomposition& td_;
  std::vector<std::vector<int>> tree_;
  std::vector<NiceNode> nodes_;
};

}  // namespace

NiceDecomposition make_nice(const Graph& g, const TreeDecomposition& td) {
  std::string why;
  if (!validate_td(g, td, &why)) fail(ErrorCode::InvalidDecomposition, why);
  return NiceBuilder(g, td).build();
}

bool validate_nice(const Graph& g, const NiceDecomposition& nice, std::string* diagnostic) {
  auto reject = [&](std::string why) {
    if (diagnostic != nullptr) *diagnostic = std::move(why);
    return false;
  };
  const auto count = nice.nodes.size();
  if (count == 0 || nice.root != static_cast<int>(count) - 1) return reject("root must be the last node");
  if (!nice.nodes.back().bag.empty()) return reject("root bag must be empty");
  std::vector<int> parents(count, 0);
  std::vector<int> introduced(static_cast<std::size_t>(g.edge_count()), 0);
  std::vector<int> forgotten(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& x = nice.nodes[i];
    if (!std::is_sorted(x.bag.begin(), x.bag.end()) ||
        std::adjacent_find(x.bag.begin(), x.bag.end()) != x.bag.end()) {
      return reject("bag of node " + std::to_string(i) + " is not a sorted set");
    }
    for (int c : x.children) {
      if (c < 0 || static_cast<std::size_t>(c) >= i) return reject("children must precede their parent");
      ++parents[static_cast<std::size_t>(c)];
    }
    auto child_bag = [&](std::size_t j) -> const std::vector<Vertex>& {
      return nice.nodes[static_cast<std::size_t>(x.children[j])].bag;
    };
    auto with = [&](std::vector<Vertex> bag, Vertex v) {
      bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
      return bag;
    };
    switch (x.kind) {
      case NiceKind::Leaf:
        if (!x.children.empty() || !x.bag.empty()) return reject("leaf must be empty and childless");
        break;
      case NiceKind::IntroduceVertex:
        if (x.children.size() != 1 || x.vertex < 0 || x.vertex >= g.vertex_count()) return reject("bad introduce node");
        if (std::binary_search(child_bag(0).begin(), child_bag(0).end(), x.vertex) ||
            with(child_bag(0), x.vertex) != x.bag) {
          return reject("introduce node bag mismatch at " + std::to_string(i));
        }
        break;
      case NiceKind::ForgetVertex:
        if (x.children.size() != 1 || x.vertex < 0 || x.vertex >= g.vertex_count()) return reject("bad forget node");
        if (std::binary_search(x.bag.begin(), x.bag.end(), x.vertex) || with(x.bag, x.vertex) != child_bag(0)) {
          return reject("forget node bag mismatch at " + std::to_string(i));
        }
        ++forgotten[static_cast<std::size_t>(x.vertex)];
        break;
      case NiceKind::IntroduceEdge: {
        if (x.children.size() != 1 || x.edge < 0 || x.edge >= g.edge_count()) return reject("bad edge node");
        if (child_bag(0) != x.bag) return reject("edge node bag mismatch at " + std::to_string(i));
        const auto [u, v] = g.edge(x.edge);
        if (!std::binary_search(x.bag.begin(), x.bag.end(), u) || !std::binary_search(x.bag.begin(), x.bag.end(), v)) {
          return reject("edge introduced where its endpoints are not both in the bag");
        }
        ++introduced[static_cast<std::size_t>(x.edge)];
        break;
      }
      case NiceKind::Join:
        if (x.children.size() != 2 || child_bag(0) != x.bag || child_bag(1) != x.bag) {
          return reject("join node needs two children with its bag at " + std::to_string(i));
        }
        break;
    }
  }
  for (std::size_t i = 0; i + 1 < count; ++i) {
    if (parents[i] != 1) return reject("node " + std::to_string(i) + " does not have exactly one parent");
  }
  for (std::size_t e = 0; e < introduced.size(); ++e) {
    if (introduced[e] != 1) return reject("edge " + std::to_string(e) + " is not introduced exactly once");
  }
  for (std::size_t v = 0; v < forgotten.size(); ++v) {
    if (forgotten[v] != 1) return reject("vertex " + std::to_string(v) + " is not forgotten exactly once");
  }
  return true;
}

}  // namespace edgeham
