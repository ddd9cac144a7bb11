#include "edgeham/transforms.hpp"

#include <algorithm>

#include "edgeham/error.hpp"

namespace edgeham {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.vertex_count()) fail(ErrorCode::VertexOutOfRange, "anchor " + std::to_string(v) + " not in graph");
}

std::pair<Graph, GadgetTrace> extend(const Graph& g, int fresh, const std::vector<VertexPair>& extra,
                                     std::vector<Vertex> anchor) {
  GadgetTrace trace;
  trace.base_vertex_count = g.vertex_count();
  trace.anchor = std::move(anchor);
  for (int i = 0; i < fresh; ++i) trace.added_vertices.push_back(g.vertex_count() + i);
  std::vector<VertexPair> pairs = g.edges();
  for (const auto& p : extra) {
    trace.added_edges.push_back(static_cast<EdgeId>(pairs.size()));
    pairs.push_back(p);
  }
  return {Graph::build(g.vertex_count() + fresh, pairs), std::move(trace)};
}

}  // namespace

std::pair<Graph, GadgetTrace> ehp_to_ehc_gadget(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) fail(ErrorCode::SameVertex, "gadget endpoints must differ");
  const Vertex x = g.vertex_count();
  const Vertex y = x + 1;
  return extend(g, 2, {{u, x}, {x, y}, {y, v}}, {u, v});
}

std::pair<Graph, GadgetTrace> ehc_to_ehp_gadget(const Graph& g, Vertex u) {
  check_vertex(g, u);
  const Vertex a = g.vertex_count();
  return extend(g, 4, {{u, a}, {a, a + 1}, {u, a + 2}, {a + 2, a + 3}}, {u});
}

bool decide_via_transform(const Graph& g, Mode want, const DecisionFn& inner) {
  if (g.edge_count() == 0) return true;
  const int n = g.vertex_count();
  // An isolated anchor can never sit in the first or last edge.
  auto usable = [&](Vertex x) { return g.degree(x) > 0; };
  if (want == Mode::Path) {
    for (Vertex u = 0; u < n; ++u) {
      if (!usable(u)) continue;
      for (Vertex v = 0; v < n; ++v) {
        if (u != v && usable(v) && inner(ehp_to_ehc_gadget(g, u, v).first)) return true;
      }
    }
    return false;
  }
  for (Vertex u = 0; u < n; ++u) {
    if (usable(u) && inner(ehc_to_ehp_gadget(g, u).first)) return true;
  }
  return false;
}

EdgeSeq path_from_gadget_cycle(const GadgetTrace& trace, const EdgeSeq& cycle) {
  const auto& order = cycle.order;
  const std::size_t len = order.size();
  auto added = [&](EdgeId e) {
    return std::find(trace.added_edges.begin(), trace.added_edges.end(), e) != trace.added_edges.end();
  };
  if (cycle.mode != Mode::Cycle || len <= trace.added_edges.size()) {
    fail(ErrorCode::InvalidInputPath, "expected a cycle through the gadget");
  }
  std::size_t start = len;
  for (std::size_t p = 0; p < len; ++p) {
    if (!added(order[p]) && added(order[(p + len - 1) % len])) {
      start = p;
      break;
    }
  }
  if (start == len) fail(ErrorCode::InvalidInputPath, "gadget edges not found");
  EdgeSeq path{{}, Mode::Path};
  for (std::size_t p = 0; p < len - trace.added_edges.size(); ++p) {
    const EdgeId e = order[(start + p) % len];
    if (added(e)) fail(ErrorCode::InvalidInputPath, "gadget edges are not consecutive");
    path.order.push_back(e);
  }
  return path;
}

}  // namespace edgeham
