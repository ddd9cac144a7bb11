#include "edgeham/vc_kernel.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "edgeham/error.hpp"

namespace edgeham {

std::vector<Vertex> two_approx_vc(const Graph& g) {
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<Vertex> cover;
  for (const auto& [u, v] : g.edges()) {
    if (used[static_cast<std::size_t>(u)] == 0 && used[static_cast<std::size_t>(v)] == 0) {
      used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
      cover.push_back(u);
      cover.push_back(v);
    }
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

namespace {

// Mutable view of the graph during kernelization.
class WorkingGraph {
 public:
  WorkingGraph(const Graph& g, const TypeAssignment& t)
      : g_(g), t_(t), adj_(static_cast<std::size_t>(g.vertex_count())), alive_(static_cast<std::size_t>(g.edge_count()), 1),
        in_cover_(static_cast<std::size_t>(g.vertex_count()), 0), type_count_(static_cast<std::size_t>(t.k()) + 1, 0) {
    for (const auto& [u, v] : g.edges()) {
      adj_[static_cast<std::size_t>(u)].insert(v);
      adj_[static_cast<std::size_t>(v)].insert(u);
    }
    for (Vertex u : t.hitting_set) in_cover_[static_cast<std::size_t>(u)] = 1;
    for (int ty : t.type_of) ++type_count_[static_cast<std::size_t>(ty)];
  }

  [[nodiscard]] bool alive(EdgeId e) const { return alive_[static_cast<std::size_t>(e)] != 0; }

  void remove(EdgeId e) {
    const auto [u, v] = g_.edge(e);
    adj_[static_cast<std::size_t>(u)].erase(v);
    adj_[static_cast<std::size_t>(v)].erase(u);
    alive_[static_cast<std::size_t>(e)] = 0;
    --type_count_[static_cast<std::size_t>(t_.type_of[static_cast<std::size_t>(e)])];
  }

  [[nodiscard]] bool applies(EdgeId e) const {
    const int type = t_.type_of.at(static_cast<std::size_t>(e));
    const Vertex hub = t_.hub(type);
    const auto [a, b] = g_.edge(e);
    if (a != hub && b != hub) {
      fail(ErrorCode::EdgeNotIncidentToItsType, "edge " + std::to_string(e) + " does not contain its type vertex");
    }
    const Vertex w = a == hub ? b : a;
    if (in_cover_[static_cast<std::size_t>(w)] != 0) return false;
    const int k = t_.k();
    if (type_count_[static_cast<std::size_t>(type)] < k + 1) return false;
    const auto& hub_nb = adj_[static_cast<std::size_t>(hub)];
    for (Vertex uj : t_.hitting_set) {
      if (uj == hub || adj_[static_cast<std::size_t>(w)].count(uj) == 0) continue;
      int overlap = 0;
      for (Vertex z : adj_[static_cast<std::size_t>(uj)]) {
        if (in_cover_[static_cast<std::size_t>(z)] == 0 && hub_nb.count(z) != 0) ++overlap;
      }
      if (overlap <= 4 * k) return false;
    }
    return true;
  }

 private:
  const Graph& g_;
  const TypeAssignment& t_;
  std::vector<std::set<Vertex>> adj_;
  std::vector<char> alive_;
  std::vector<char> in_cover_;
  std::vector<int> type_count_;
};

void require_cover(const Graph& g, const std::vector<Vertex>& cover) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : cover) {
    if (v < 0 || v >= g.vertex_count()) fail(ErrorCode::NotAVertexCover, "cover vertex out of range");
    if (in[static_cast<std::size_t>(v)] != 0) fail(ErrorCode::NotAVertexCover, "cover vertex listed twice");
    in[static_cast<std::size_t>(v)] = 1;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    if (in[static_cast<std::size_t>(u)] == 0 && in[static_cast<std::size_t>(v)] == 0) {
      fail(ErrorCode::NotAVertexCover, "edge " + std::to_string(e) + " is uncovered");
    }
  }
}

}  // namespace

bool rule_applies(const Graph& g, const TypeAssignment& t, EdgeId e) {
  if (e < 0 || e >= g.edge_count()) fail(ErrorCode::EdgeNotIncidentToItsType, "edge id out of range");
  return WorkingGraph(g, t).applies(e);
}

KernelTrace kernelize(const Graph& g, const std::vector<Vertex>& cover) {
  require_cover(g, cover);
  // Types depend only on the cover, so deleting edges never changes them.
  const TypeAssignment t = classify_types(g, cover);
  WorkingGraph work(g, t);
  KernelTrace trace;
  trace.original = g;
  trace.vertex_cover = cover;
  for (bool deleted = true; deleted;) {
    deleted = false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!work.alive(e) || !work.applies(e)) continue;
      const int type = t.type_of[static_cast<std::size_t>(e)];
      const Vertex hub = t.hub(type);
      const auto [a, b] = g.edge(e);
      trace.deletions.push_back(KernelDeletion{e, {hub, a == hub ? b : a}, type});
      work.remove(e);
      deleted = true;
      break;
    }
  }
  std::vector<VertexPair> kept;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (work.alive(e)) kept.push_back(g.edge(e));
  }
  trace.kernel = Graph::build(g.vertex_count(), kept);
  return trace;
}

EdgeSeq lift_certificate(const KernelTrace& trace, const EdgeSeq& kernel_path) {
  const Graph& g = trace.original;
  bool ok = false;
  try {
    ok = validate_edge_sequence(trace.kernel, EdgeSeq{kernel_path.order, Mode::Path});
  } catch (const Error&) {
    ok = false;
  }
  if (!ok) fail(ErrorCode::InvalidKernelCertificate, "not an edge-Hamiltonian path of the kernel");

  std::vector<char> deleted(static_cast<std::size_t>(g.edge_count()), 0);
  for (const auto& d : trace.deletions) deleted.at(static_cast<std::size_t>(d.original_index)) = 1;
  std::vector<EdgeId> kernel_to_original;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (deleted[static_cast<std::size_t>(e)] == 0) kernel_to_original.push_back(e);
  }
  if (static_cast<int>(kernel_to_original.size()) != trace.kernel.edge_count()) {
    fail(ErrorCode::InvalidKernelCertificate, "trace is inconsistent with its kernel");
  }

  const TypeAssignment t = classify_types(g, trace.vertex_cover);
  std::vector<EdgeId> order;
  order.reserve(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e : kernel_path.order) order.push_back(kernel_to_original[static_cast<std::size_t>(e)]);

  for (auto it = trace.deletions.rbegin(); it != trace.deletions.rend(); ++it) {
    normalize_edge_order(order, t);
    const EdgeId e = it->original_index;
    if (!insert_into_type_group(order, t, it->type, std::span<const EdgeId>(&e, 1))) {
      fail(ErrorCode::NoLargeGroup, "no type-" + std::to_string(it->type) + " group to host edge " + std::to_string(e));
    }
  }
  EdgeSeq out{std::move(order), Mode::Path};
  if (!validate_edge_sequence(g, out)) throw std::logic_error("lifted certificate does not validate");
  return out;
}

}  // namespace edgeham
