#include "edgeham/hyper_solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "edgeham/error.hpp"
#include "edgeham/rng.hpp"

namespace edgeham {

namespace {

std::vector<std::vector<EdgeId>> edges_by_type(const TypeAssignment& t) {
  std::vector<std::vector<EdgeId>> by(static_cast<std::size_t>(t.k()) + 1);
  for (std::size_t e = 0; e < t.type_of.size(); ++e) by[static_cast<std::size_t>(t.type_of[e])].push_back(static_cast<EdgeId>(e));
  return by;
}

// All restricted growth strings of length n with exactly b blocks.
void growth_strings(int n, int b, std::vector<int>& cur, int blocks, std::vector<std::vector<int>>& out) {
  const int pos = static_cast<int>(cur.size());
  if (pos == n) {
    if (blocks == b) out.push_back(cur);
    return;
  }
  if (b - blocks > n - pos) return;
  for (int c = 0; c <= std::min(blocks, b - 1); ++c) {
    cur.push_back(c);
    growth_strings(n, b, cur, std::max(blocks, c + 1), out);
    cur.pop_back();
  }
}

// Stirling number of the second kind, in double.
double stirling2(int n, int b) {
  std::vector<double> row(static_cast<std::size_t>(b) + 1, 0.0);
  row[0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, b); j >= 1; --j) row[static_cast<std::size_t>(j)] = j * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j) - 1];
    row[0] = 0.0;
  }
  return row[static_cast<std::size_t>(b)];
}

SolveResult lift_yes(const Hypergraph& h, const TypeAssignment& t, const ColorMerge& cm, const SolveResult& inner,
                     SolveStats stats) {
  EdgeSeq cert = reconstruct_certificate(h, t, cm, inner.edge_sequence());
  return SolveResult::yes(h, std::move(cert), stats);
}

}  // namespace

ColorMerge merge_coloring(const Hypergraph& h, const TypeAssignment& t, std::vector<int> coloring, int colors_per_type) {
  const int k = t.k();
  ColorMerge cm;
  cm.colors_per_type = colors_per_type;
  cm.coloring = std::move(coloring);
  std::vector<std::vector<Vertex>> edges;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    if (cm.coloring[static_cast<std::size_t>(e)] != 0) continue;
    edges.emplace_back(h.edge(e).begin(), h.edge(e).end());
    cm.back_map.push_back(MergedEdgeOrigin{0, 0, {e}});
  }
  for (int type = 1; type <= k; ++type) {
    std::vector<MergedEdgeOrigin> classes(static_cast<std::size_t>(colors_per_type));
    bool colored = false;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      const int c = cm.coloring[static_cast<std::size_t>(e)];
      if (c == 0 || t.type_of[static_cast<std::size_t>(e)] != type) continue;
      colored = true;
      classes[static_cast<std::size_t>(c - 1)].members.push_back(e);
    }
    if (!colored) continue;
    for (int c = 1; c <= colors_per_type; ++c) {
      auto& cls = classes[static_cast<std::size_t>(c - 1)];
      if (cls.members.empty()) throw std::logic_error("color class left empty");
      std::vector<Vertex> uni;
      for (EdgeId e : cls.members) uni.insert(uni.end(), h.edge(e).begin(), h.edge(e).end());
      std::sort(uni.begin(), uni.end());
      uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
      edges.push_back(std::move(uni));
      cls.type = type;
      cls.color = c;
      cm.back_map.push_back(std::move(cls));
    }
  }
  cm.merged = Hypergraph(h.vertex_count(), std::move(edges));
  return cm;
}

ColorMerge color_and_merge(const Hypergraph& h, const TypeAssignment& t, std::uint64_t round_seed) {
  const int colors = 2 * t.k();
  SplitMix64 rng(round_seed);
  std::vector<int> coloring(static_cast<std::size_t>(h.edge_count()), 0);
  for (auto& members : edges_by_type(t)) {
    if (static_cast<int>(members.size()) <= colors) continue;
    rng.shuffle(members);
    for (std::size_t p = 0; p < members.size(); ++p) {
      const int c = p < static_cast<std::size_t>(colors) ? static_cast<int>(p) + 1 : rng.below(colors) + 1;
      coloring[static_cast<std::size_t>(members[p])] = c;
    }
  }
  return merge_coloring(h, t, std::move(coloring), colors);
}

std::uint64_t planned_rounds(int k, const HyperSolveConfig& cfg) {
  const double want = std::ceil(std::exp(2.0 * k * k) * std::log(1.0 / cfg.delta));
  if (!(want < static_cast<double>(cfg.max_rounds))) return cfg.max_rounds;
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(want));
}

SolveResult decide_hyper_ehp(const Hypergraph& h, const std::vector<Vertex>& hitting_set, const HyperSolveConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  if (!(cfg.delta > 0.0 && cfg.delta < 1.0)) fail(ErrorCode::InvalidConfig, "delta must lie in (0, 1)");
  if (cfg.max_rounds < 1) fail(ErrorCode::InvalidConfig, "max_rounds must be at least 1");
  const TypeAssignment t = classify_types(h, hitting_set);
  const int k = t.k();
  const int colors = 2 * k;
  const auto by_type = edges_by_type(t);

  int merged_size = 0;
  std::vector<int> large;
  for (int type = 1; type <= k; ++type) {
    const int s = static_cast<int>(by_type[static_cast<std::size_t>(type)].size());
    merged_size += std::min(s, colors);
    if (s > colors) large.push_back(type);
  }
  if (merged_size > std::min(cfg.oracle_cap, 31)) {
    fail(ErrorCode::MergedInstanceTooLarge,
         "merged instance has " + std::to_string(merged_size) + " hyperedges, cap is " + std::to_string(cfg.oracle_cap));
  }

  SolveStats stats;
  auto finish = [&](SolveResult r) {
    stats.elapsed = std::chrono::steady_clock::now() - start;
    r.stats() = stats;
    return r;
  };
  auto try_coloring = [&](const ColorMerge& cm) -> std::optional<SolveResult> {
    ++stats.rounds;
    SolveResult inner = solve_edge_ham_exact(cm.merged, Mode::Path, cfg.oracle_cap);
    stats.nodes += inner.stats().nodes;
    if (!inner.is_yes()) return std::nullopt;
    return lift_yes(h, t, cm, inner, stats);
  };

  // Nothing to color: the merge is the identity and one oracle call is exact.
  if (large.empty()) {
    const ColorMerge cm = merge_coloring(h, t, std::vector<int>(static_cast<std::size_t>(h.edge_count()), 0), colors);
    if (auto r = try_coloring(cm)) return finish(std::move(*r));
    return finish(SolveResult::no());
  }

  double exhaustive = 1.0;
  for (int type : large) exhaustive *= stirling2(static_cast<int>(by_type[static_cast<std::size_t>(type)].size()), colors);
  if (exhaustive <= static_cast<double>(cfg.deterministic_fallback_threshold)) {
    std::vector<std::vector<std::vector<int>>> choices;
    for (int type : large) {
      std::vector<std::vector<int>> all;
      std::vector<int> cur;
      growth_strings(static_cast<int>(by_type[static_cast<std::size_t>(type)].size()), colors, cur, 0, all);
      choices.push_back(std::move(all));
    }
    std::vector<std::size_t> digit(large.size(), 0);
    while (true) {
      std::vector<int> coloring(static_cast<std::size_t>(h.edge_count()), 0);
      for (std::size_t l = 0; l < large.size(); ++l) {
        const auto& members = by_type[static_cast<std::size_t>(large[l])];
        const auto& rgs = choices[l][digit[l]];
        for (std::size_t p = 0; p < members.size(); ++p) coloring[static_cast<std::size_t>(members[p])] = rgs[p] + 1;
      }
      if (auto r = try_coloring(merge_coloring(h, t, std::move(coloring), colors))) return finish(std::move(*r));
      std::size_t l = 0;
      while (l < digit.size() && ++digit[l] == choices[l].size()) digit[l++] = 0;
      if (l == digit.size()) break;
    }
    return finish(SolveResult::no());
  }

  const std::uint64_t rounds = planned_rounds(k, cfg);
  for (std::uint64_t r = 0; r < rounds; ++r) {
    if (auto res = try_coloring(color_and_merge(h, t, mix_seed(cfg.seed, r)))) return finish(std::move(*res));
  }
  return finish(SolveResult::probably_no());
}

EdgeSeq reconstruct_certificate(const Hypergraph& h, const TypeAssignment& t, const ColorMerge& cm,
                                const EdgeSeq& merged_path) {
  bool ok = false;
  try {
    ok = merged_path.mode == Mode::Path && validate_edge_sequence(cm.merged, merged_path);
  } catch (const Error&) {
    ok = false;
  }
  if (!ok || cm.back_map.size() != static_cast<std::size_t>(cm.merged.edge_count())) {
    fail(ErrorCode::InvalidMergedCertificate, "not an edge-Hamiltonian path of the merged hypergraph");
  }
  const auto& order = merged_path.order;
  const std::size_t len = order.size();

  // Junction vertex between consecutive merged edges.
  std::vector<Vertex> junction;
  for (std::size_t p = 0; p + 1 < len; ++p) {
    const auto a = cm.merged.edge(order[p]);
    const auto b = cm.merged.edge(order[p + 1]);
    std::vector<Vertex> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    junction.push_back(common.front());
  }

  auto member_with = [&](const MergedEdgeOrigin& o, Vertex v) {
    for (EdgeId e : o.members) {
      if (h.contains(e, v)) return e;
    }
    throw std::logic_error("junction vertex not found in its class");
  };

  std::vector<EdgeId> walk;
  std::vector<char> used(static_cast<std::size_t>(h.edge_count()), 0);
  for (std::size_t p = 0; p < len; ++p) {
    const auto& o = cm.back_map[static_cast<std::size_t>(order[p])];
    std::vector<EdgeId> pick;
    if (len == 1) {
      pick.push_back(o.members.front());
    } else if (p == 0) {
      pick.push_back(member_with(o, junction[0]));
    } else if (p + 1 == len) {
      pick.push_back(member_with(o, junction[p - 1]));
    } else {
      const Vertex in = junction[p - 1];
      const Vertex out = junction[p];
      const auto both = std::find_if(o.members.begin(), o.members.end(),
                                     [&](EdgeId e) { return h.contains(e, in) && h.contains(e, out); });
      if (both != o.members.end()) {
        pick.push_back(*both);
      } else {
        // Two class members both hold the type vertex, so they are adjacent.
        pick.push_back(member_with(o, in));
        pick.push_back(member_with(o, out));
      }
    }
    for (EdgeId e : pick) {
      walk.push_back(e);
      used[static_cast<std::size_t>(e)] = 1;
    }
  }

  normalize_edge_order(walk, t);
  for (int type = 1; type <= t.k(); ++type) {
    std::vector<EdgeId> rest;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      if (used[static_cast<std::size_t>(e)] == 0 && t.type_of[static_cast<std::size_t>(e)] == type) rest.push_back(e);
    }
    if (rest.empty()) continue;
    if (!insert_into_type_group(walk, t, type, rest)) {
      fail(ErrorCode::NoLargeGroup, "no type-" + std::to_string(type) + " group to extend");
    }
  }
  return EdgeSeq{std::move(walk), Mode::Path};
}

ComplementReduction complement_coloring_reduction(const Graph& g, const std::vector<int>& coloring) {
  const int n = g.vertex_count();
  if (static_cast<int>(coloring.size()) != n) fail(ErrorCode::NotAProperComplementColoring, "coloring size differs from vertex count");
  int k = 0;
  for (int c : coloring) {
    if (c < 1) fail(ErrorCode::NotAProperComplementColoring, "colors start at 1");
    k = std::max(k, c);
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coloring[static_cast<std::size_t>(u)] == coloring[static_cast<std::size_t>(v)] && !g.adjacent(u, v)) {
        fail(ErrorCode::NotAProperComplementColoring,
             "vertices " + std::to_string(u) + " and " + std::to_string(v) + " share a color but are not adjacent");
      }
    }
  }
  std::vector<std::vector<Vertex>> edges;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> he{coloring[static_cast<std::size_t>(v)] - 1};
    for (EdgeId e : g.incident(v)) he.push_back(k + e);
    edges.push_back(std::move(he));
  }
  ComplementReduction out{Hypergraph(k + g.edge_count(), std::move(edges)), {}};
  for (Vertex c = 0; c < k; ++c) out.hitting_set.push_back(c);
  return out;
}

}  // namespace edgeham
