#include "edgeham/cwe.hpp"

#include <algorithm>
#include <unordered_set>

#include "edgeham/error.hpp"
#include "edgeham/rng.hpp"

namespace edgeham {

int CwExpr::intro(int label) {
  nodes.push_back(CwNode{CwOp::Intro, label, 0, -1, -1});
  return root = static_cast<int>(nodes.size()) - 1;
}

int CwExpr::unite(int l, int r) {
  nodes.push_back(CwNode{CwOp::Union, 0, 0, l, r});
  return root = static_cast<int>(nodes.size()) - 1;
}

int CwExpr::rename(int from, int to, int child) {
  nodes.push_back(CwNode{CwOp::Rename, from, to, child, -1});
  return root = static_cast<int>(nodes.size()) - 1;
}

int CwExpr::join(int i, int j, int child) {
  nodes.push_back(CwNode{CwOp::Join, i, j, child, -1});
  return root = static_cast<int>(nodes.size()) - 1;
}

std::vector<int> CwExpr::post_order() const {
  std::vector<int> out;
  if (root < 0) return out;
  std::vector<std::pair<int, bool>> stack{{root, false}};
  std::vector<char> seen(nodes.size(), 0);
  while (!stack.empty()) {
    auto [x, expanded] = stack.back();
    stack.pop_back();
    if (x < 0 || static_cast<std::size_t>(x) >= nodes.size()) fail(ErrorCode::SyntaxError, "dangling node reference");
    if (expanded) {
      out.push_back(x);
      continue;
    }
    if (seen[static_cast<std::size_t>(x)] != 0) fail(ErrorCode::SyntaxError, "expression is not a tree");
    seen[static_cast<std::size_t>(x)] = 1;
    stack.emplace_back(x, true);
    const CwNode& n = nodes[static_cast<std::size_t>(x)];
    if (n.op == CwOp::Union) stack.emplace_back(n.right, false);
    if (n.op != CwOp::Intro) stack.emplace_back(n.left, false);
  }
  return out;
}

CwExpr CwExpr::canonical() const {
  CwExpr out;
  out.label_budget = label_budget;
  std::vector<int> remap(nodes.size(), -1);
  for (int x : post_order()) {
    CwNode n = nodes[static_cast<std::size_t>(x)];
    if (n.left >= 0) n.left = remap[static_cast<std::size_t>(n.left)];
    if (n.right >= 0) n.right = remap[static_cast<std::size_t>(n.right)];
    remap[static_cast<std::size_t>(x)] = static_cast<int>(out.nodes.size());
    out.nodes.push_back(n);
  }
  out.root = out.nodes.empty() ? -1 : static_cast<int>(out.nodes.size()) - 1;
  return out;
}

int CwExpr::vertex_count() const {
  int n = 0;
  for (int x : post_order()) n += nodes[static_cast<std::size_t>(x)].op == CwOp::Intro ? 1 : 0;
  return n;
}

std::vector<Vertex> NodeView::with_label(int label) const {
  std::vector<Vertex> out;
  for (std::size_t p = 0; p < labels.size(); ++p) {
    if (labels[p] == label) out.push_back(lo + static_cast<Vertex>(p));
  }
  return out;
}

int NodeView::count(int label) const { return static_cast<int>(std::count(labels.begin(), labels.end(), label)); }

FullEvaluation eval_cwe_full(const CwExpr& e) {
  const int budget = e.label_budget;
  auto check_label = [budget](int l) {
    if (l < 1 || l > budget) fail(ErrorCode::LabelOutOfBudget, "label " + std::to_string(l) + " outside 1.." + std::to_string(budget));
  };
  FullEvaluation out;
  out.view.resize(e.nodes.size());
  std::vector<VertexPair> pairs;
  std::unordered_set<std::uint64_t> present;
  int next_vertex = 0;
  for (int x : e.post_order()) {
    const CwNode& n = e.nodes[static_cast<std::size_t>(x)];
    NodeView& v = out.view[static_cast<std::size_t>(x)];
    switch (n.op) {
      case CwOp::Intro:
        check_label(n.a);
        v.lo = next_vertex++;
        v.hi = next_vertex;
        v.labels = {n.a};
        break;
      case CwOp::Union: {
        NodeView& l = out.view[static_cast<std::size_t>(n.left)];
        NodeView& r = out.view[static_cast<std::size_t>(n.right)];
        v.lo = l.lo;
        v.hi = r.hi;
        v.labels = l.labels;
        v.labels.insert(v.labels.end(), r.labels.begin(), r.labels.end());
        break;
      }
      case CwOp::Rename:
        check_label(n.a);
        check_label(n.b);
        v = out.view[static_cast<std::size_t>(n.left)];
        std::replace(v.labels.begin(), v.labels.end(), n.a, n.b);
        break;
      case CwOp::Join: {
        check_label(n.a);
        check_label(n.b);
        if (n.a == n.b) fail(ErrorCode::JoinSameLabel, "join " + std::to_string(n.a) + " with itself");
        v = out.view[static_cast<std::size_t>(n.left)];
        const auto side_a = v.with_label(n.a);
        const auto side_b = v.with_label(n.b);
        for (Vertex p : side_a) {
          for (Vertex q : side_b) {
            const auto key = (static_cast<std::uint64_t>(std::min(p, q)) << 32) | static_cast<std::uint32_t>(std::max(p, q));
            if (present.insert(key).second) pairs.emplace_back(std::min(p, q), std::max(p, q));
          }
        }
        break;
      }
    }
  }
  out.result.graph = Graph::build(next_vertex, pairs);
  if (e.root >= 0) out.result.label = out.view[static_cast<std::size_t>(e.root)].labels;
  return out;
}

LabeledGraph eval_cwe(const CwExpr& e) { return eval_cwe_full(e).result; }

namespace {

bool connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  DisjointSets ds(static_cast<std::size_t>(g.vertex_count()));
  int parts = g.vertex_count();
  for (const auto& [u, v] : g.edges()) parts -= ds.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) ? 1 : 0;
  return parts == 1;
}

int build_random(CwExpr& e, int k, int size, SplitMix64& rng) {
  if (size == 1) return e.intro(rng.below(k) + 1);
  const int left_size = 1 + rng.below(size - 1);
  const int l = build_random(e, k, left_size, rng);
  const int r = build_random(e, k, size - left_size, rng);
  int x = e.unite(l, r);
  // Joins are favoured so that a connected result is likely.
  const int ops = 1 + rng.below(2);
  for (int s = 0; s < ops; ++s) {
    const int i = rng.below(k) + 1;
    int j = rng.below(k - 1) + 1;
    if (j >= i) ++j;
    x = rng.unit() < 0.75 ? e.join(i, j, x) : e.rename(i, j, x);
  }
  return x;
}

}  // namespace

CwExpr random_cwe(int k, int size, std::uint64_t seed) {
  if (k < 2) fail(ErrorCode::InvalidConfig, "random expressions need at least two labels");
  if (size < 1) fail(ErrorCode::InvalidConfig, "size must be positive");
  constexpr int kAttempts = 1000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
    CwExpr e;
    e.label_budget = k;
    build_random(e, k, size, rng);
    if (connected(eval_cwe(e).graph)) return e;
  }
  fail(ErrorCode::GenerationFailed, "no connected expression after " + std::to_string(kAttempts) + " attempts");
}

}  // namespace edgeham
