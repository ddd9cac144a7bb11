#include "edgeham/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "edgeham/error.hpp"

namespace edgeham {

std::uint64_t Graph::key(Vertex u, Vertex v) noexcept {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
}

Graph Graph::build(int n, std::span<const VertexPair> pairs) {
  if (n < 0) fail(ErrorCode::VertexOutOfRange, "negative vertex count");
  Graph g;
  g.n_ = n;
  g.adj_.resize(static_cast<std::size_t>(n));
  g.inc_.resize(static_cast<std::size_t>(n));
  g.edges_.reserve(pairs.size());
  for (const auto& [u, v] : pairs) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      fail(ErrorCode::VertexOutOfRange,
           "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
    }
    if (u == v) fail(ErrorCode::SelfLoop, "loop at vertex " + std::to_string(u));
    const auto id = static_cast<EdgeId>(g.edges_.size());
    if (!g.index_.emplace(key(u, v), id).second) {
      fail(ErrorCode::DuplicateEdge, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") repeated");
    }
    g.edges_.emplace_back(u, v);
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
    g.inc_[static_cast<std::size_t>(u)].push_back(id);
    g.inc_[static_cast<std::size_t>(v)].push_back(id);
  }
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());
  return g;
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  auto it = index_.find(key(u, v));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Graph build_graph(int n, std::span<const VertexPair> pairs) { return Graph::build(n, pairs); }

Graph build_graph(int n, std::initializer_list<VertexPair> pairs) {
  std::vector<VertexPair> v(pairs);
  return Graph::build(n, v);
}

Hypergraph::Hypergraph(int n, std::vector<std::vector<Vertex>> hyperedges) : n_(n), edges_(std::move(hyperedges)) {
  if (n < 0) fail(ErrorCode::VertexOutOfRange, "negative vertex count");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    if (e.empty()) fail(ErrorCode::EmptyHyperedge, "hyperedge " + std::to_string(i) + " is empty");
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.front() < 0 || e.back() >= n) {
      fail(ErrorCode::VertexOutOfRange, "hyperedge " + std::to_string(i) + " has a member outside 0.." +
                                            std::to_string(n - 1));
    }
  }
}

Hypergraph Hypergraph::from_graph(const Graph& g) {
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Hypergraph(g.vertex_count(), std::move(edges));
}

bool Hypergraph::contains(EdgeId e, Vertex v) const {
  const auto& members = edges_.at(static_cast<std::size_t>(e));
  return std::binary_search(members.begin(), members.end(), v);
}

bool share_vertex(std::span<const Vertex> a, std::span<const Vertex> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

std::string_view to_string(Mode mode) { return mode == Mode::Path ? "path" : "cycle"; }

int GroupDecomposition::group_count(int type) const {
  return static_cast<int>(std::count_if(groups.begin(), groups.end(), [&](const Group& g) { return g.type == type; }));
}

int GroupDecomposition::special_count(int type, const TypeAssignment& t) const {
  return static_cast<int>(std::count_if(special_edges.begin(), special_edges.end(), [&](EdgeId e) {
    return t.type_of.at(static_cast<std::size_t>(e)) == type;
  }));
}

Graph line_graph(const Hypergraph& h) {
  std::vector<VertexPair> pairs;
  const int m = h.edge_count();
  for (EdgeId i = 0; i < m; ++i) {
    for (EdgeId j = i + 1; j < m; ++j) {
      if (share_vertex(h.edge(i), h.edge(j))) pairs.emplace_back(i, j);
    }
  }
  return Graph::build(m, pairs);
}

Graph line_graph(const Graph& g) { return line_graph(Hypergraph::from_graph(g)); }

namespace {

void require_permutation(const std::vector<EdgeId>& order, int m) {
  if (static_cast<int>(order.size()) != m) {
    fail(ErrorCode::NotAPermutation,
         "sequence has " + std::to_string(order.size()) + " entries, graph has " + std::to_string(m) + " edges");
  }
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (EdgeId e : order) {
    if (e < 0 || e >= m || seen[static_cast<std::size_t>(e)]) {
      fail(ErrorCode::NotAPermutation, "edge id " + std::to_string(e) + " out of range or repeated");
    }
    seen[static_cast<std::size_t>(e)] = true;
  }
}

}  // namespace

bool validate_edge_sequence(const Hypergraph& h, const EdgeSeq& s) {
  require_permutation(s.order, h.edge_count());
  const std::size_t m = s.order.size();
  if (m <= 1) return true;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (!share_vertex(h.edge(s.order[i]), h.edge(s.order[i + 1]))) return false;
  }
  if (s.mode == Mode::Cycle && m >= 3) return share_vertex(h.edge(s.order.back()), h.edge(s.order.front()));
  return true;
}

bool validate_edge_sequence(const Graph& g, const EdgeSeq& s) {
  return validate_edge_sequence(Hypergraph::from_graph(g), s);
}

bool validate_des(const Graph& g, const DesSolution& d, std::string* diagnostic) {
  auto reject = [&](std::string why) {
    if (diagnostic != nullptr) *diagnostic = std::move(why);
    return false;
  };
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<char> in_v0(static_cast<std::size_t>(n), 0);
  for (Vertex v : d.v0) {
    if (v < 0 || v >= n) return reject("vertex id " + std::to_string(v) + " out of range");
    if (in_v0[static_cast<std::size_t>(v)] != 0) return reject("vertex " + std::to_string(v) + " listed twice");
    in_v0[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<char> in_e0(static_cast<std::size_t>(m), 0);
  for (EdgeId e : d.e0) {
    if (e < 0 || e >= m) return reject("edge id " + std::to_string(e) + " out of range");
    if (in_e0[static_cast<std::size_t>(e)] != 0) return reject("edge " + std::to_string(e) + " listed twice");
    in_e0[static_cast<std::size_t>(e)] = 1;
  }
  for (EdgeId e = 0; e < m; ++e) {
    const auto [u, v] = g.edge(e);
    if (in_v0[static_cast<std::size_t>(u)] == 0 && in_v0[static_cast<std::size_t>(v)] == 0) {
      return reject("edge " + std::to_string(e) + " is not covered");
    }
  }
  if (d.e0.empty()) {
    if (d.v0.size() != 1) return reject("without edges the subgraph must be a single vertex");
    return true;
  }
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  DisjointSets ds(static_cast<std::size_t>(n));
  for (EdgeId e : d.e0) {
    const auto [u, v] = g.edge(e);
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
    ds.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  for (Vertex v = 0; v < n; ++v) {
    const bool touched = deg[static_cast<std::size_t>(v)] > 0;
    if (touched != (in_v0[static_cast<std::size_t>(v)] != 0)) {
      return reject("vertex set differs from the endpoints of the edge set at vertex " + std::to_string(v));
    }
    if (deg[static_cast<std::size_t>(v)] % 2 != 0) return reject("vertex " + std::to_string(v) + " has odd degree");
  }
  const auto root = ds.find(static_cast<std::size_t>(d.v0.front()));
  for (Vertex v : d.v0) {
    if (ds.find(static_cast<std::size_t>(v)) != root) return reject("subgraph is disconnected");
  }
  return true;
}

TypeAssignment classify_types(const Hypergraph& h, std::span<const Vertex> hitting_set) {
  const int n = h.vertex_count();
  std::vector<int> rank(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < hitting_set.size(); ++i) {
    const Vertex u = hitting_set[i];
    if (u < 0 || u >= n) fail(ErrorCode::NotAHittingSet, "vertex " + std::to_string(u) + " out of range");
    if (rank[static_cast<std::size_t>(u)] != 0) fail(ErrorCode::NotAHittingSet, "vertex listed twice");
    rank[static_cast<std::size_t>(u)] = static_cast<int>(i) + 1;
  }
  TypeAssignment t;
  t.hitting_set.assign(hitting_set.begin(), hitting_set.end());
  t.type_of.resize(static_cast<std::size_t>(h.edge_count()));
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    int best = 0;
    for (Vertex v : h.edge(e)) {
      const int r = rank[static_cast<std::size_t>(v)];
      if (r != 0 && (best == 0 || r < best)) best = r;
    }
    if (best == 0) fail(ErrorCode::NotAHittingSet, "edge " + std::to_string(e) + " is not hit");
    t.type_of[static_cast<std::size_t>(e)] = best;
  }
  return t;
}

TypeAssignment classify_types(const Graph& g, std::span<const Vertex> hitting_set) {
  return classify_types(Hypergraph::from_graph(g), hitting_set);
}

namespace {

std::vector<Group> runs(const std::vector<EdgeId>& order, const TypeAssignment& t) {
  std::vector<Group> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int ty = t.type_of.at(static_cast<std::size_t>(order[i]));
    if (out.empty() || out.back().type != ty) {
      out.push_back(Group{ty, i, i + 1});
    } else {
      out.back().end = i + 1;
    }
  }
  return out;
}

}  // namespace

GroupDecomposition decompose_groups(const EdgeSeq& s, const TypeAssignment& t) {
  GroupDecomposition d;
  d.groups = runs(s.order, t);
  for (const auto& g : d.groups) {
    d.special_edges.push_back(s.order[g.begin]);
    d.special_edges.push_back(s.order[g.end - 1]);
  }
  std::sort(d.special_edges.begin(), d.special_edges.end());
  d.special_edges.erase(std::unique(d.special_edges.begin(), d.special_edges.end()), d.special_edges.end());
  return d;
}

void normalize_edge_order(std::vector<EdgeId>& order, const TypeAssignment& t) {
  auto type_at = [&](std::size_t i) { return t.type_of.at(static_cast<std::size_t>(order[i])); };
  // Each reversal strictly lowers the number of groups, so this terminates.
  for (;;) {
    const int k = t.k();
    std::vector<long> first(static_cast<std::size_t>(k + 1) * static_cast<std::size_t>(k + 1), -1);
    bool changed = false;
    for (std::size_t q = 0; q + 1 < order.size(); ++q) {
      const int i = type_at(q);
      const int j = type_at(q + 1);
      if (i == j) continue;
      auto& slot = first[static_cast<std::size_t>(i) * static_cast<std::size_t>(k + 1) + static_cast<std::size_t>(j)];
      if (slot < 0) {
        slot = static_cast<long>(q);
        continue;
      }
      const auto p = static_cast<std::size_t>(slot);
      std::reverse(order.begin() + static_cast<std::ptrdiff_t>(p + 1), order.begin() + static_cast<std::ptrdiff_t>(q + 1));
      changed = true;
      break;
    }
    if (!changed) return;
  }
}

EdgeSeq normalize_edge_path(const Hypergraph& h, const EdgeSeq& s, const TypeAssignment& t) {
  EdgeSeq path{s.order, Mode::Path};
  bool ok = false;
  try {
    ok = validate_edge_sequence(h, path);
  } catch (const Error&) {
    ok = false;
  }
  if (!ok) fail(ErrorCode::InvalidInputPath, "input is not an edge-Hamiltonian path");
  normalize_edge_order(path.order, t);
  return path;
}

EdgeSeq normalize_edge_path(const Graph& g, const EdgeSeq& s, const TypeAssignment& t) {
  return normalize_edge_path(Hypergraph::from_graph(g), s, t);
}

bool insert_into_type_group(std::vector<EdgeId>& order, const TypeAssignment& t, int type,
                            std::span<const EdgeId> extra) {
  if (extra.empty()) return true;
  if (order.empty()) {
    order.assign(extra.begin(), extra.end());
    return true;
  }
  for (const auto& g : runs(order, t)) {
    if (g.type == type && g.size() >= 2) {
      order.insert(order.begin() + static_cast<std::ptrdiff_t>(g.begin + 1), extra.begin(), extra.end());
      return true;
    }
  }
  if (t.type_of.at(static_cast<std::size_t>(order.front())) == type) {
    order.insert(order.begin(), extra.begin(), extra.end());
    return true;
  }
  if (t.type_of.at(static_cast<std::size_t>(order.back())) == type) {
    order.insert(order.end(), extra.begin(), extra.end());
    return true;
  }
  return false;
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  return true;
}

}  // namespace edgeham
