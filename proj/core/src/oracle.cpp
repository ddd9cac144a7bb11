#include "edgeham/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "edgeham/error.hpp"

namespace edgeham {

std::string_view to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::ProbablyNo: return "probably-no";
  }
  return "?";
}

SolveResult SolveResult::yes(const Hypergraph& h, EdgeSeq cert, SolveStats stats) {
  if (!validate_edge_sequence(h, cert)) throw std::logic_error("yes-certificate fails edge-sequence validation");
  return SolveResult(Answer::Yes, std::move(cert), stats);
}

SolveResult SolveResult::yes(const Graph& g, EdgeSeq cert, SolveStats stats) {
  return yes(Hypergraph::from_graph(g), std::move(cert), stats);
}

SolveResult SolveResult::yes(const Graph& g, DesSolution cert, SolveStats stats) {
  std::sort(cert.v0.begin(), cert.v0.end());
  std::sort(cert.e0.begin(), cert.e0.end());
  std::string why;
  if (!validate_des(g, cert, &why)) throw std::logic_error("yes-certificate fails DES validation: " + why);
  return SolveResult(Answer::Yes, std::move(cert), stats);
}

SolveResult SolveResult::no(SolveStats stats) { return SolveResult(Answer::No, std::monostate{}, stats); }

SolveResult SolveResult::probably_no(SolveStats stats) {
  return SolveResult(Answer::ProbablyNo, std::monostate{}, stats);
}

namespace {

using Clock = std::chrono::steady_clock;

// Hamiltonian path/cycle over `adj` (bitmask adjacency, no self loops).
std::optional<std::vector<int>> hamiltonian_order(const std::vector<std::uint32_t>& adj, Mode mode,
                                                  std::uint64_t& nodes) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> order;
  if (n == 0) return order;
  if (n == 1) return std::vector<int>{0};
  if (n == 2) {
    if ((adj[0] & 2U) == 0) return std::nullopt;
    return std::vector<int>{0, 1};
  }
  const std::uint32_t full = (n == 32) ? ~0U : ((1U << n) - 1U);
  std::vector<std::uint32_t> ends(static_cast<std::size_t>(full) + 1U, 0U);
  if (mode == Mode::Cycle) {
    ends[1] = 1U;
  } else {
    for (int i = 0; i < n; ++i) ends[1U << i] = 1U << i;
  }
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const std::uint32_t last = ends[mask];
    if (last == 0) continue;
    std::uint32_t reach = 0;
    for (std::uint32_t rest = last; rest != 0; rest &= rest - 1) reach |= adj[static_cast<std::size_t>(std::countr_zero(rest))];
    reach &= ~mask;
    for (; reach != 0; reach &= reach - 1) {
      const std::uint32_t bit = reach & (~reach + 1U);
      const std::uint32_t next = mask | bit;
      if ((ends[next] & bit) == 0) ++nodes;
      ends[next] |= bit;
    }
  }
  std::uint32_t candidates = ends[full];
  if (mode == Mode::Cycle) candidates &= adj[0];
  if (candidates == 0) return std::nullopt;

  int cur = std::countr_zero(candidates);
  std::uint32_t mask = full;
  order.push_back(cur);
  for (;;) {
    mask &= ~(1U << cur);
    if (mask == 0) break;
    const std::uint32_t prev = ends[mask] & adj[static_cast<std::size_t>(cur)];
    cur = std::countr_zero(prev);
    order.push_back(cur);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

void require_cap(int size, int cap, const char* what) {
  if (cap > 31) cap = 31;
  if (size > cap) {
    fail(ErrorCode::InstanceTooLarge,
         std::string(what) + " count " + std::to_string(size) + " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

SolveResult solve_edge_ham_exact(const Hypergraph& h, Mode mode, int cap) {
  const auto start = Clock::now();
  const int m = h.edge_count();
  require_cap(m, cap, "edge");
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(m), 0U);
  for (EdgeId i = 0; i < m; ++i) {
    for (EdgeId j = i + 1; j < m; ++j) {
      if (share_vertex(h.edge(i), h.edge(j))) {
        adj[static_cast<std::size_t>(i)] |= 1U << j;
        adj[static_cast<std::size_t>(j)] |= 1U << i;
      }
    }
  }
  SolveStats stats;
  auto order = hamiltonian_order(adj, mode, stats.nodes);
  stats.elapsed = Clock::now() - start;
  if (!order) return SolveResult::no(stats);
  return SolveResult::yes(h, EdgeSeq{std::move(*order), mode}, stats);
}

SolveResult solve_edge_ham_exact(const Graph& g, Mode mode, int cap) {
  return solve_edge_ham_exact(Hypergraph::from_graph(g), mode, cap);
}

Hypergraph vertex_incidence_hypergraph(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<std::vector<Vertex>> edges(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    auto& members = edges[static_cast<std::size_t>(v)];
    for (EdgeId e : g.incident(v)) members.push_back(e);
    members.push_back(m + v);
  }
  return Hypergraph(m + n, std::move(edges));
}

SolveResult solve_vertex_ham_exact(const Graph& g, Mode mode, int cap) {
  const auto start = Clock::now();
  const int n = g.vertex_count();
  require_cap(n, cap, "vertex");
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0U);
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= 1U << v;
    adj[static_cast<std::size_t>(v)] |= 1U << u;
  }
  SolveStats stats;
  auto order = hamiltonian_order(adj, mode, stats.nodes);
  stats.elapsed = Clock::now() - start;
  if (!order) return SolveResult::no(stats);
  return SolveResult::yes(vertex_incidence_hypergraph(g), EdgeSeq{std::move(*order), mode}, stats);
}

SolveResult solve_des_exact(const Graph& g, int cap) {
  const auto start = Clock::now();
  const int m = g.edge_count();
  require_cap(m, cap, "edge");
  SolveStats stats;
  auto finish = [&](std::optional<DesSolution> sol) {
    stats.elapsed = Clock::now() - start;
    return sol ? SolveResult::yes(g, std::move(*sol), stats) : SolveResult::no(stats);
  };

  // Single vertex, no edges: the vertex must lie on every edge.
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    ++stats.nodes;
    if (g.degree(v) == m) return finish(DesSolution{{v}, {}});
  }
  if (m == 0) return finish(std::nullopt);

  // Compact ids for non-isolated vertices (at most 2m <= 62 of them).
  std::vector<int> compact(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<Vertex> original;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0) {
      compact[static_cast<std::size_t>(v)] = static_cast<int>(original.size());
      original.push_back(v);
    }
  }
  std::vector<std::uint64_t> ends(static_cast<std::size_t>(m));
  for (EdgeId e = 0; e < m; ++e) {
    const auto [u, v] = g.edge(e);
    ends[static_cast<std::size_t>(e)] = (std::uint64_t{1} << compact[static_cast<std::size_t>(u)]) |
                                        (std::uint64_t{1} << compact[static_cast<std::size_t>(v)]);
  }
  const std::uint32_t limit = 1U << m;
  for (int size = 1; size <= m; ++size) {
    // Gosper's hack: subsets of the given size in increasing numeric order.
    std::uint32_t subset = (1U << size) - 1U;
    while (subset < limit) {
      ++stats.nodes;
      std::uint64_t odd = 0;
      std::uint64_t touched = 0;
      for (std::uint32_t rest = subset; rest != 0; rest &= rest - 1) {
        const auto e = static_cast<std::size_t>(std::countr_zero(rest));
        odd ^= ends[e];
        touched |= ends[e];
      }
      bool ok = odd == 0;
      for (std::size_t e = 0; ok && e < ends.size(); ++e) ok = (ends[e] & touched) != 0;
      if (ok) {
        std::uint64_t comp = touched & (~touched + 1U);
        for (bool grew = true; grew;) {
          grew = false;
          for (std::uint32_t rest = subset; rest != 0; rest &= rest - 1) {
            const auto e = static_cast<std::size_t>(std::countr_zero(rest));
            if ((ends[e] & comp) != 0 && (ends[e] & ~comp) != 0) {
              comp |= ends[e];
              grew = true;
            }
          }
        }
        if (comp == touched) {
          DesSolution sol;
          for (std::uint32_t rest = subset; rest != 0; rest &= rest - 1) sol.e0.push_back(std::countr_zero(rest));
          for (std::size_t i = 0; i < original.size(); ++i) {
            if (((touched >> i) & 1U) != 0) sol.v0.push_back(original[i]);
          }
          return finish(std::move(sol));
        }
      }
      const std::uint32_t low = subset & (~subset + 1U);
      const std::uint32_t ripple = subset + low;
      subset = (((ripple ^ subset) >> 2) / low) | ripple;
    }
  }
  return finish(std::nullopt);
}

bool check_hn_equivalence(const Graph& g, int edge_cap, int des_cap) {
  if (g.edge_count() < 3) {
    fail(ErrorCode::TooFewEdges, "equivalence is only asserted for m >= 3 (m=" + std::to_string(g.edge_count()) + ")");
  }
  const auto ehc = solve_edge_ham_exact(g, Mode::Cycle, edge_cap);
  const auto des = solve_des_exact(g, des_cap);
  return ehc.answer() == des.answer();
}

TreewidthResult exact_treewidth_small(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap || n > 24) {
    fail(ErrorCode::InstanceTooLarge, "exact treewidth limited to " + std::to_string(cap) + " vertices");
  }
  TreewidthResult out;
  if (n == 0) return out;
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0U);
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= 1U << v;
    adj[static_cast<std::size_t>(v)] |= 1U << u;
  }
  // Vertices outside S + v reachable from v through S.
  auto q_size = [&](std::uint32_t s, int v) {
    std::uint32_t seen = 1U << v;
    std::uint32_t frontier = 1U << v;
    std::uint32_t outside = 0;
    while (frontier != 0) {
      const int x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const std::uint32_t nb = adj[static_cast<std::size_t>(x)] & ~seen;
      seen |= nb;
      outside |= nb & ~s;
      frontier |= nb & s;
    }
    return std::popcount(outside);
  };
  const std::uint32_t full = (1U << n) - 1U;
  std::vector<std::int8_t> tw(static_cast<std::size_t>(full) + 1U, 0);
  std::vector<std::int8_t> choice(static_cast<std::size_t>(full) + 1U, -1);
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = 1 << 20;
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint32_t without = s & ~(1U << v);
      const int cost = std::max<int>(tw[without], q_size(without, v));
      if (cost < best) {
        best = cost;
        choice[s] = static_cast<std::int8_t>(v);
      }
    }
    tw[s] = static_cast<std::int8_t>(best);
  }
  out.width = tw[full];
  // choice[S] is eliminated last among S.
  for (std::uint32_t s = full; s != 0; s &= ~(1U << choice[s])) out.elimination_order.push_back(choice[s]);
  std::reverse(out.elimination_order.begin(), out.elimination_order.end());
  return out;
}

namespace {

struct BicliqueSearch {
  const Graph& g;
  int t;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<Vertex> candidates;
  std::vector<Vertex> chosen;

  std::optional<Biclique> run(std::size_t from, const std::vector<Vertex>& common) {
    if (++nodes > budget) fail(ErrorCode::SearchBudgetExceeded, "biclique search exceeded its node budget");
    if (static_cast<int>(chosen.size()) == t) {
      return Biclique{chosen, std::vector<Vertex>(common.begin(), common.begin() + t)};
    }
    const std::size_t need = static_cast<std::size_t>(t) - chosen.size();
    for (std::size_t i = from; i + need <= candidates.size(); ++i) {
      const Vertex v = candidates[i];
      std::vector<Vertex> next;
      const auto nb = g.neighbors(v);
      std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(), std::back_inserter(next));
      if (static_cast<int>(next.size()) < t) continue;
      chosen.push_back(v);
      if (auto found = run(i + 1, next)) return found;
      chosen.pop_back();
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<Biclique> find_biclique(const Graph& g, int t, std::uint64_t node_budget) {
  if (t < 1) fail(ErrorCode::PreconditionViolated, "find_biclique needs t >= 1");
  BicliqueSearch search{g, t, node_budget, 0, {}, {}};
  std::vector<Vertex> all;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    all.push_back(v);
    if (g.degree(v) >= t) search.candidates.push_back(v);
  }
  return search.run(0, all);
}

int smallest_excluded_biclique(const Graph& g, std::uint64_t node_budget) {
  int t = 1;
  while (find_biclique(g, t, node_budget)) ++t;
  return t;
}

}  // namespace edgeham
