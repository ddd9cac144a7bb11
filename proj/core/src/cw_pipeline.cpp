#include "edgeham/cw_pipeline.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "edgeham/error.hpp"
#include "edgeham/oracle.hpp"
#include "edgeham/tw_solver.hpp"

namespace edgeham {

std::string_view to_string(RewriteStage s) { return s == RewriteStage::BigJoin ? "bigjoin" : "gradual"; }

namespace {

void sort_unique(std::vector<Vertex>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool disjoint(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  return !share_vertex(a, b);
}

void require_biclique(const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b, ErrorCode code) {
  for (Vertex v : a) {
    if (v < 0 || v >= g.vertex_count()) fail(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
  }
  for (Vertex v : b) {
    if (v < 0 || v >= g.vertex_count()) fail(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
  }
  if (!disjoint(a, b)) fail(code, "A and B overlap");
  for (Vertex u : a) {
    for (Vertex v : b) {
      if (!g.adjacent(u, v)) fail(code, "missing edge " + std::to_string(u) + "-" + std::to_string(v));
    }
  }
}

// Edge set under construction, with flips.
class EdgeSet {
 public:
  explicit EdgeSet(const Graph& g) : g_(g), in_(static_cast<std::size_t>(g.edge_count()), 0) {}

  bool has(Vertex u, Vertex v) const { return in_[static_cast<std::size_t>(id(u, v))] != 0; }
  void flip(Vertex u, Vertex v) { in_[static_cast<std::size_t>(id(u, v))] ^= 1; }
  void flip(EdgeId e) { in_[static_cast<std::size_t>(e)] ^= 1; }
  void set(EdgeId e) { in_[static_cast<std::size_t>(e)] = 1; }

  std::vector<int> degrees() const {
    std::vector<int> d(static_cast<std::size_t>(g_.vertex_count()), 0);
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (in_[static_cast<std::size_t>(e)] == 0) continue;
      const auto [u, v] = g_.edge(e);
      ++d[static_cast<std::size_t>(u)];
      ++d[static_cast<std::size_t>(v)];
    }
    return d;
  }

  // Components with at least one edge, plus the listed vertices left bare.
  int pieces(const std::vector<Vertex>& must_cover) const {
    const auto d = degrees();
    DisjointSets ds(static_cast<std::size_t>(g_.vertex_count()));
    int count = 0;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) count += d[static_cast<std::size_t>(v)] > 0 ? 1 : 0;
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (in_[static_cast<std::size_t>(e)] == 0) continue;
      const auto [u, v] = g_.edge(e);
      count -= ds.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) ? 1 : 0;
    }
    for (Vertex v : must_cover) count += d[static_cast<std::size_t>(v)] == 0 ? 1 : 0;
    return count;
  }

  DesSolution solution() const {
    DesSolution s;
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (in_[static_cast<std::size_t>(e)] == 0) continue;
      s.e0.push_back(e);
      const auto [u, v] = g_.edge(e);
      s.v0.push_back(u);
      s.v0.push_back(v);
    }
    sort_unique(s.v0);
    return s;
  }

 private:
  EdgeId id(Vertex u, Vertex v) const {
    const auto e = g_.find_edge(u, v);
    if (!e) throw std::logic_error("flip on a non-edge");
    return *e;
  }

  const Graph& g_;
  std::vector<char> in_;
};

void flip_square(EdgeSet& s, Vertex u1, Vertex u2, Vertex v1, Vertex v2) {
  s.flip(u1, v1);
  s.flip(u1, v2);
  s.flip(u2, v1);
  s.flip(u2, v2);
}

void require_valid(const Graph& g, const DesSolution& sol, ErrorCode code, const char* what) {
  std::string why;
  if (!validate_des(g, sol, &why)) fail(code, std::string(what) + ": " + why);
}

// Degree pattern towards C realising the requested parities (odd[u]) with
// every vertex of A u B attached and C connected through them.
void attach_to_hub(EdgeSet& s, const std::vector<Vertex>& side, const std::vector<char>& odd, const std::vector<Vertex>& c) {
  std::vector<Vertex> odd_v;
  std::vector<Vertex> even_v;
  for (Vertex u : side) (odd[static_cast<std::size_t>(u)] != 0 ? odd_v : even_v).push_back(u);
  auto link = [&](Vertex u, std::initializer_list<int> which) {
    for (int w : which) s.flip(u, c[static_cast<std::size_t>(w)]);
  };
  if (even_v.size() % 2 == 0) {
    for (Vertex u : odd_v) link(u, {0, 1, 2});
    for (Vertex u : even_v) link(u, {0, 1});
  } else if (even_v.size() >= 3) {
    for (Vertex u : odd_v) link(u, {0, 1, 2});
    for (std::size_t p = 0; p + 2 < even_v.size(); ++p) link(even_v[p], {0, 1});
    link(even_v[even_v.size() - 2], {0, 2});
    link(even_v.back(), {1, 2});
  } else {
    // One even vertex; the odd count is even and at least 2 here.
    link(even_v[0], {0, 1});
    link(odd_v[0], {0});
    link(odd_v[1], {1});
    for (std::size_t p = 2; p < odd_v.size(); ++p) link(odd_v[p], {0, 1, 2});
  }
}

}  // namespace

std::pair<Graph, ReductionSite> reduce_biclique_graph(const Graph& g, std::vector<Vertex> a, std::vector<Vertex> b) {
  sort_unique(a);
  sort_unique(b);
  if (static_cast<int>(a.size()) < kReduceMin || static_cast<int>(b.size()) < kReduceMin) {
    fail(ErrorCode::SetsTooSmall, "both sides need at least " + std::to_string(kReduceMin) + " vertices");
  }
  require_biclique(g, a, b, ErrorCode::NotABiclique);
  const int n = g.vertex_count();
  std::vector<char> in_a(static_cast<std::size_t>(n), 0);
  std::vector<char> in_b(static_cast<std::size_t>(n), 0);
  for (Vertex v : a) in_a[static_cast<std::size_t>(v)] = 1;
  for (Vertex v : b) in_b[static_cast<std::size_t>(v)] = 1;
  std::vector<VertexPair> pairs;
  for (const auto& [u, v] : g.edges()) {
    const bool ab = (in_a[static_cast<std::size_t>(u)] != 0 && in_b[static_cast<std::size_t>(v)] != 0) ||
                    (in_b[static_cast<std::size_t>(u)] != 0 && in_a[static_cast<std::size_t>(v)] != 0);
    if (!ab) pairs.emplace_back(u, v);
  }
  ReductionSite site{a, b, {n, n + 1, n + 2}, RewriteStage::BigJoin};
  for (const auto* side : {&a, &b}) {
    for (Vertex v : *side) {
      for (Vertex c : site.c) pairs.emplace_back(v, c);
    }
  }
  return {Graph::build(n + 3, pairs), std::move(site)};
}

DesSolution repair_contain(const Graph& g, std::vector<Vertex> a, std::vector<Vertex> b, const DesSolution& sol) {
  sort_unique(a);
  sort_unique(b);
  if (static_cast<int>(a.size()) < kContainMin || static_cast<int>(b.size()) < kContainMin) {
    fail(ErrorCode::PreconditionViolated, "both sides need at least " + std::to_string(kContainMin) + " vertices");
  }
  require_biclique(g, a, b, ErrorCode::PreconditionViolated);
  require_valid(g, sol, ErrorCode::PreconditionViolated, "input is not a dominating Eulerian subgraph");

  EdgeSet s(g);
  for (EdgeId e : sol.e0) s.set(e);
  auto in_v0 = [&](Vertex v) { return s.degrees()[static_cast<std::size_t>(v)] > 0; };

  while (true) {
    std::vector<Vertex> miss_a;
    std::vector<Vertex> miss_b;
    for (Vertex v : a) {
      if (!in_v0(v)) miss_a.push_back(v);
    }
    for (Vertex v : b) {
      if (!in_v0(v)) miss_b.push_back(v);
    }
    if (miss_a.empty() && miss_b.empty()) break;
    if (!miss_a.empty() && !miss_b.empty()) throw std::logic_error("vertex cover lost during repair");
    const bool a_side = !miss_a.empty();
    const auto& x = a_side ? a : b;  // side with missing vertices
    const auto& y = a_side ? b : a;  // fully contained side
    const auto& miss = a_side ? miss_a : miss_b;
    const Vertex v1 = miss[0];
    if (miss.size() >= 2) {
      flip_square(s, y[0], y[1], v1, miss[1]);
      continue;
    }
    bool done = false;
    for (Vertex u1 : y) {
      for (Vertex v2 : x) {
        if (v2 == v1 || s.has(u1, v2)) continue;
        const Vertex u2 = u1 == y[0] ? y[1] : y[0];
        flip_square(s, u1, u2, v1, v2);
        done = true;
        break;
      }
      if (done) break;
    }
    if (!done) {
      const Vertex v2 = x[0] == v1 ? x[1] : x[0];
      flip_square(s, y[0], y[1], v1, v2);
    }
  }

  bool uses_ab = false;
  for (Vertex u : a) {
    for (Vertex v : b) uses_ab = uses_ab || s.has(u, v);
  }
  if (!uses_ab) flip_square(s, a[0], a[1], b[0], b[1]);

  DesSolution out = s.solution();
  std::string why;
  if (!validate_des(g, out, &why)) throw std::logic_error("repair_contain produced an invalid solution: " + why);
  return out;
}

DesSolution transfer_des_across_reduction(TransferDirection dir, const ReductionSite& site, const Graph& g,
                                          const Graph& reduced, const DesSolution& sol) {
  std::vector<Vertex> ab = site.a;
  ab.insert(ab.end(), site.b.begin(), site.b.end());
  sort_unique(ab);
  std::vector<char> in_a(static_cast<std::size_t>(reduced.vertex_count()), 0);
  std::vector<char> in_b(static_cast<std::size_t>(reduced.vertex_count()), 0);
  std::vector<char> in_c(static_cast<std::size_t>(reduced.vertex_count()), 0);
  for (Vertex v : site.a) in_a[static_cast<std::size_t>(v)] = 1;
  for (Vertex v : site.b) in_b[static_cast<std::size_t>(v)] = 1;
  for (Vertex v : site.c) in_c[static_cast<std::size_t>(v)] = 1;
  auto is_ab = [&](Vertex u, Vertex v) {
    return (in_a[static_cast<std::size_t>(u)] != 0 && in_b[static_cast<std::size_t>(v)] != 0) ||
           (in_b[static_cast<std::size_t>(u)] != 0 && in_a[static_cast<std::size_t>(v)] != 0);
  };

  if (dir == TransferDirection::Forward) {
    require_valid(g, sol, ErrorCode::InvalidSolution, "not a solution of the original graph");
    const DesSolution base = repair_contain(g, site.a, site.b, sol);

    // Every used A x B edge becomes its three paths through C.
    EdgeSet direct(reduced);
    std::vector<char> odd(static_cast<std::size_t>(reduced.vertex_count()), 0);
    for (EdgeId e : base.e0) {
      const auto [u, v] = g.edge(e);
      if (!is_ab(u, v)) {
        direct.flip(*reduced.find_edge(u, v));
        continue;
      }
      odd[static_cast<std::size_t>(u)] ^= 1;
      odd[static_cast<std::size_t>(v)] ^= 1;
      for (Vertex c : site.c) {
        direct.flip(u, c);
        direct.flip(c, v);
      }
    }
    DesSolution out = direct.solution();
    if (validate_des(reduced, out)) return out;

    // Paths that overlap cancel out; rebuild the C part from parities alone.
    EdgeSet hub(reduced);
    for (EdgeId e : base.e0) {
      const auto [u, v] = g.edge(e);
      if (!is_ab(u, v)) hub.flip(*reduced.find_edge(u, v));
    }
    attach_to_hub(hub, ab, odd, site.c);
    out = hub.solution();
    std::string why;
    if (!validate_des(reduced, out, &why)) fail(ErrorCode::AugmentationStuck, "forward transfer failed: " + why);
    return out;
  }

  require_valid(reduced, sol, ErrorCode::InvalidSolution, "not a solution of the reduced graph");
  const DesSolution base = repair_contain(reduced, ab, site.c, sol);
  EdgeSet s(g);
  for (EdgeId e : base.e0) {
    const auto [u, v] = reduced.edge(e);
    if (in_c[static_cast<std::size_t>(u)] != 0 || in_c[static_cast<std::size_t>(v)] != 0) continue;
    const auto mapped = g.find_edge(u, v);
    if (!mapped) fail(ErrorCode::InvalidSolution, "edge absent from the original graph");
    s.flip(*mapped);
  }

  // Parity repair by shortest A x B paths between odd vertices.
  const auto deg = s.degrees();
  std::vector<Vertex> odd_a;
  std::vector<Vertex> odd_b;
  for (Vertex v : site.a) {
    if (deg[static_cast<std::size_t>(v)] % 2 != 0) odd_a.push_back(v);
  }
  for (Vertex v : site.b) {
    if (deg[static_cast<std::size_t>(v)] % 2 != 0) odd_b.push_back(v);
  }
  while (!odd_a.empty() && !odd_b.empty()) {
    s.flip(odd_a.back(), odd_b.back());
    odd_a.pop_back();
    odd_b.pop_back();
  }
  for (auto [rest, other] : {std::pair{&odd_a, &site.b}, std::pair{&odd_b, &site.a}}) {
    if (rest->size() % 2 != 0) throw std::logic_error("odd number of odd-degree vertices");
    for (std::size_t p = 0; p + 1 < rest->size(); p += 2) {
      const Vertex z = other->front();
      s.flip((*rest)[p], z);
      s.flip(z, (*rest)[p + 1]);
    }
  }

  // Grow connectivity with parity-neutral 4-cycle flips.
  int measure = s.pieces(ab);
  while (measure > 1) {
    bool improved = false;
    for (std::size_t i1 = 0; i1 < site.a.size() && !improved; ++i1) {
      for (std::size_t i2 = i1 + 1; i2 < site.a.size() && !improved; ++i2) {
        for (std::size_t j1 = 0; j1 < site.b.size() && !improved; ++j1) {
          for (std::size_t j2 = j1 + 1; j2 < site.b.size() && !improved; ++j2) {
            flip_square(s, site.b[j1], site.b[j2], site.a[i1], site.a[i2]);
            const int next = s.pieces(ab);
            if (next < measure) {
              measure = next;
              improved = true;
            } else {
              flip_square(s, site.b[j1], site.b[j2], site.a[i1], site.a[i2]);
            }
          }
        }
      }
    }
    if (!improved) fail(ErrorCode::AugmentationStuck, "no 4-cycle flip reduces the number of pieces");
  }
  DesSolution out = s.solution();
  std::string why;
  if (!validate_des(g, out, &why)) fail(ErrorCode::AugmentationStuck, "backward transfer failed: " + why);
  return out;
}

bool all_joins_small(const CwExpr& e) {
  const FullEvaluation full = eval_cwe_full(e);
  for (int x : e.post_order()) {
    const CwNode& n = e.nodes[static_cast<std::size_t>(x)];
    if (n.op != CwOp::Join) continue;
    const NodeView& v = full.view[static_cast<std::size_t>(n.left)];
    if (v.count(n.a) > kJoinSmallSide && v.count(n.b) > kJoinSmallSide) return false;
  }
  return true;
}

CwExpr eliminate_big_joins(const CwExpr& e, std::vector<RewriteRecord>* log) {
  eval_cwe(e);  // rejects labels outside the input budget
  const int k = e.label_budget;
  const int work = k + 1;
  const int garbage = k + 2;
  CwExpr out = e;
  out.label_budget = k + 2;
  while (true) {
    const FullEvaluation full = eval_cwe_full(out);
    int site = -1;
    for (int x : out.post_order()) {
      const CwNode& n = out.nodes[static_cast<std::size_t>(x)];
      if (n.op != CwOp::Join) continue;
      const NodeView& v = full.view[static_cast<std::size_t>(n.left)];
      if (v.count(n.a) > kJoinSmallSide && v.count(n.b) > kJoinSmallSide) {
        site = x;
        break;
      }
    }
    if (site < 0) break;
    const CwNode old = out.nodes[static_cast<std::size_t>(site)];
    const NodeView& v = full.view[static_cast<std::size_t>(old.left)];
    RewriteRecord rec{RewriteStage::BigJoin, site, old.a, old.b, v.count(old.a), v.count(old.b),
                      full.result.graph.edge_count(), 0};
    const int root = out.root;
    const int t1 = out.intro(work);
    const int t2 = out.intro(work);
    const int t3 = out.intro(work);
    const int trio = out.unite(t1, out.unite(t2, t3));
    const int j1 = out.join(old.a, work, out.unite(old.left, trio));
    const int j2 = out.join(old.b, work, j1);
    out.nodes[static_cast<std::size_t>(site)] = CwNode{CwOp::Rename, work, garbage, j2, -1};
    out.root = root;
    rec.edges_after = eval_cwe(out).graph.edge_count();
    if (log != nullptr) log->push_back(rec);
  }
  return out;
}

std::optional<GradualSite> find_gradual_site(const CwExpr& e, int max_label) {
  const FullEvaluation full = eval_cwe_full(e);
  const Graph& g = full.result.graph;
  for (int x : e.post_order()) {
    const NodeView& v = full.view[static_cast<std::size_t>(x)];
    for (int i = 1; i <= max_label; ++i) {
      std::vector<Vertex> inner = v.with_label(i);
      if (static_cast<int>(inner.size()) < kSpliceMin) continue;
      std::vector<Vertex> external;
      for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (u >= v.lo && u < v.hi) continue;
        if (std::all_of(inner.begin(), inner.end(), [&](Vertex w) { return g.adjacent(u, w); })) external.push_back(u);
      }
      if (static_cast<int>(external.size()) >= kSpliceMin) return GradualSite{x, i, std::move(inner), std::move(external)};
    }
  }
  return std::nullopt;
}

CwExpr eliminate_gradual_bicliques(const CwExpr& e, std::vector<RewriteRecord>* log) {
  if (!all_joins_small(e)) fail(ErrorCode::PreconditionViolated, "expression still has a big join");
  const int k = e.label_budget;
  const int work = k + 1;
  const int garbage = k + 2;
  CwExpr out = e;
  out.label_budget = k + 2;
  while (auto site = find_gradual_site(out, k)) {
    const FullEvaluation full = eval_cwe_full(out);
    if (full.view[static_cast<std::size_t>(site->node)].count(work) != 0) {
      throw std::logic_error("work label in use at a splice point");
    }
    RewriteRecord rec{RewriteStage::Gradual, site->node, site->label, garbage, static_cast<int>(site->inner.size()),
                      static_cast<int>(site->external.size()), full.result.graph.edge_count(), 0};
    const int root = out.root;
    const CwNode moved = out.nodes[static_cast<std::size_t>(site->node)];
    out.nodes.push_back(moved);
    const int inner = static_cast<int>(out.nodes.size()) - 1;
    const int t1 = out.intro(work);
    const int t2 = out.intro(work);
    const int t3 = out.intro(work);
    const int trio = out.unite(t1, out.unite(t2, t3));
    const int jn = out.join(site->label, work, out.unite(inner, trio));
    const int r1 = out.rename(site->label, garbage, jn);
    out.nodes[static_cast<std::size_t>(site->node)] = CwNode{CwOp::Rename, work, site->label, r1, -1};
    out.root = root;
    rec.edges_after = eval_cwe(out).graph.edge_count();
    if (log != nullptr) log->push_back(rec);
  }
  return out;
}

PipelineReport decide_ehc_cw(const CwExpr& e) {
  PipelineReport r;
  r.original = e;
  r.edges_original = eval_cwe(e).graph.edge_count();
  r.after_big_joins = eliminate_big_joins(e, &r.rewrites);
  r.edges_after_big_joins = eval_cwe(r.after_big_joins).graph.edge_count();
  r.after_bicliques = eliminate_gradual_bicliques(r.after_big_joins, &r.rewrites);
  r.final_graph = eval_cwe(r.after_bicliques).graph;
  r.edges_after_bicliques = r.final_graph.edge_count();
  const Graph& g = r.final_graph;

  if (g.vertex_count() <= kDefaultTreewidthCap) {
    const TreewidthResult tw = exact_treewidth_small(g);
    r.decomposition = decomposition_from_elimination_order(g, tw.elimination_order);
    r.exact_decomposition = true;
    r.exact_treewidth = tw.width;
    r.excluded_biclique = smallest_excluded_biclique(g);
    r.gw_bound = 3LL * (e.label_budget + 4) * *r.excluded_biclique;
  } else {
    r.decomposition = min_fill_decomposition(g);
  }
  r.decomposition_width = r.decomposition.width();

  if (g.edge_count() >= 3) {
    const SolveResult res = des_dp(g, make_nice(g, r.decomposition));
    r.answer = res.is_yes();
    if (r.answer) r.certificate = res.des();
  } else {
    r.answer = decide_ehc_tw(g, r.decomposition);
  }
  return r;
}

}  // namespace edgeham
