#include "edgeham/tw_solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "edgeham/error.hpp"

namespace edgeham {

namespace {

struct StateHash {
  std::size_t operator()(const DpState& s) const noexcept {
    std::size_t h = std::hash<std::uint64_t>{}(s.odd * 2 + (s.done ? 1 : 0));
    for (auto c : s.component) h = h * 1099511628211ULL ^ c;
    return h;
  }
};

// How a state was derived, for trace-back.
struct Derivation {
  int left = -1;   // state index in the (first) child
  int right = -1;  // state index in the second child (join only)
  bool chosen = false;  // vertex selected / edge taken
};

struct Table {
  std::vector<DpState> states;
  std::vector<Derivation> how;
  std::unordered_map<DpState, int, StateHash> index;

  void offer(DpState s, Derivation d) {
    if (index.emplace(s, static_cast<int>(states.size())).second) {
      states.push_back(std::move(s));
      how.push_back(d);
    }
  }
};

void canonicalize(DpState& s) {
  std::uint8_t relabel[256] = {};
  std::uint8_t next = 0;
  for (auto& c : s.component) {
    if (c == 0) continue;
    if (relabel[c] == 0) relabel[c] = ++next;
    c = relabel[c];
  }
}

void merge_components(DpState& s, std::uint8_t a, std::uint8_t b) {
  if (a == b) return;
  for (auto& c : s.component) {
    if (c == b) c = a;
  }
}

std::size_t position_of(const std::vector<Vertex>& bag, Vertex v) {
  return static_cast<std::size_t>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

std::uint64_t insert_bit(std::uint64_t mask, std::size_t p) {
  const std::uint64_t low = mask & ((std::uint64_t{1} << p) - 1);
  return low | ((mask & ~((std::uint64_t{1} << p) - 1)) << 1);
}

std::uint64_t remove_bit(std::uint64_t mask, std::size_t p) {
  const std::uint64_t low = mask & ((std::uint64_t{1} << p) - 1);
  return low | ((mask >> 1) & ~((std::uint64_t{1} << p) - 1));
}

std::uint64_t selected_mask(const DpState& s) {
  std::uint64_t m = 0;
  for (std::size_t p = 0; p < s.component.size(); ++p) {
    if (s.component[p] != 0) m |= std::uint64_t{1} << p;
  }
  return m;
}

}  // namespace

double dp_state_bound(int bag_size) {
  // Bell numbers via the Bell triangle, in double (saturates to inf).
  std::vector<double> row{1.0};
  for (int i = 1; i <= bag_size; ++i) {
    std::vector<double> next{row.back()};
    for (double x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  const double bell = row.front();
  return std::ldexp(bell, 2 * bag_size + 1);
}

SolveResult des_dp(const Graph& g, const NiceDecomposition& nice) {
  const auto start = std::chrono::steady_clock::now();
  std::string why;
  if (!validate_nice(g, nice, &why)) fail(ErrorCode::InvalidNiceDecomposition, why);
  if (nice.width() >= 63) fail(ErrorCode::InstanceTooLarge, "bags larger than 63 vertices are not supported");

  std::vector<Table> tables(nice.nodes.size());
  SolveStats stats;
  for (std::size_t i = 0; i < nice.nodes.size(); ++i) {
    const auto& x = nice.nodes[i];
    Table& out = tables[i];
    switch (x.kind) {
      case NiceKind::Leaf:
        out.offer(DpState{}, {});
        break;

      case NiceKind::IntroduceVertex: {
        const auto& child = tables[static_cast<std::size_t>(x.children[0])];
        const std::size_t p = position_of(x.bag, x.vertex);
        for (std::size_t s = 0; s < child.states.size(); ++s) {
          DpState base = child.states[s];
          base.component.insert(base.component.begin() + static_cast<std::ptrdiff_t>(p), 0);
          base.odd = insert_bit(base.odd, p);
          if (!base.done) {
            DpState picked = base;
            picked.component[p] = 255;  // fresh singleton component
            canonicalize(picked);
            out.offer(std::move(picked), {static_cast<int>(s), -1, true});
          }
          out.offer(std::move(base), {static_cast<int>(s), -1, false});
        }
        break;
      }

      case NiceKind::ForgetVertex: {
        const auto& child_node = nice.nodes[static_cast<std::size_t>(x.children[0])];
        const auto& child = tables[static_cast<std::size_t>(x.children[0])];
        const std::size_t p = position_of(child_node.bag, x.vertex);
        for (std::size_t s = 0; s < child.states.size(); ++s) {
          DpState next = child.states[s];
          const std::uint8_t comp = next.component[p];
          if (comp != 0) {
            if (((next.odd >> p) & 1U) != 0) continue;
            const auto members = std::count(next.component.begin(), next.component.end(), comp);
            if (members == 1) {
              // Last vertex of its component: only allowed if it is the only one.
              const auto selected = std::count_if(next.component.begin(), next.component.end(),
                                                  [](std::uint8_t c) { return c != 0; });
              if (selected != 1) continue;
              next.done = true;
            }
          }
          next.component.erase(next.component.begin() + static_cast<std::ptrdiff_t>(p));
          next.odd = remove_bit(next.odd, p);
          canonicalize(next);
          out.offer(std::move(next), {static_cast<int>(s), -1, false});
        }
        break;
      }

      case NiceKind::IntroduceEdge: {
        const auto& child = tables[static_cast<std::size_t>(x.children[0])];
        const auto [u, v] = g.edge(x.edge);
        const std::size_t pu = position_of(x.bag, u);
        const std::size_t pv = position_of(x.bag, v);
        for (std::size_t s = 0; s < child.states.size(); ++s) {
          const DpState& cur = child.states[s];
          const bool su = cur.component[pu] != 0;
          const bool sv = cur.component[pv] != 0;
          if (!su && !sv) continue;  // edge left uncovered
          out.offer(cur, {static_cast<int>(s), -1, false});
          if (su && sv) {
            DpState taken = cur;
            taken.odd ^= (std::uint64_t{1} << pu) | (std::uint64_t{1} << pv);
            merge_components(taken, taken.component[pu], taken.component[pv]);
            canonicalize(taken);
            out.offer(std::move(taken), {static_cast<int>(s), -1, true});
          }
        }
        break;
      }

      case NiceKind::Join: {
        const auto& left = tables[static_cast<std::size_t>(x.children[0])];
        const auto& right = tables[static_cast<std::size_t>(x.children[1])];
        std::unordered_map<std::uint64_t, std::vector<int>> by_selection;
        for (std::size_t r = 0; r < right.states.size(); ++r) {
          by_selection[selected_mask(right.states[r])].push_back(static_cast<int>(r));
        }
        const std::size_t w = x.bag.size();
        for (std::size_t l = 0; l < left.states.size(); ++l) {
          const DpState& a = left.states[l];
          auto it = by_selection.find(selected_mask(a));
          if (it == by_selection.end()) continue;
          for (int r : it->second) {
            const DpState& b = right.states[static_cast<std::size_t>(r)];
            if (a.done && b.done) continue;
            DpState joined = a;
            joined.done = a.done || b.done;
            joined.odd = a.odd ^ b.odd;
            // Union the two partitions.
            for (std::size_t p = 0; p < w; ++p) {
              if (b.component[p] == 0) continue;
              for (std::size_t q = p + 1; q < w; ++q) {
                if (b.component[q] == b.component[p]) merge_components(joined, joined.component[p], joined.component[q]);
              }
            }
            canonicalize(joined);
            out.offer(std::move(joined), {static_cast<int>(l), r, false});
          }
        }
        break;
      }
    }
    stats.nodes += out.states.size();
    if (static_cast<double>(out.states.size()) > dp_state_bound(static_cast<int>(x.bag.size()))) {
      throw std::logic_error("DP table exceeds its state-count bound");
    }
  }

  const Table& root = tables[static_cast<std::size_t>(nice.root)];
  int accept = -1;
  for (std::size_t s = 0; s < root.states.size(); ++s) {
    if (root.states[s].done) {
      accept = static_cast<int>(s);
      break;
    }
  }
  if (accept < 0) {
    stats.elapsed = std::chrono::steady_clock::now() - start;
    return SolveResult::no(stats);
  }

  DesSolution sol;
  std::vector<std::pair<int, int>> stack{{nice.root, accept}};
  while (!stack.empty()) {
    const auto [node, state] = stack.back();
    stack.pop_back();
    const auto& x = nice.nodes[static_cast<std::size_t>(node)];
    const auto& d = tables[static_cast<std::size_t>(node)].how[static_cast<std::size_t>(state)];
    if (x.kind == NiceKind::IntroduceVertex && d.chosen) sol.v0.push_back(x.vertex);
    if (x.kind == NiceKind::IntroduceEdge && d.chosen) sol.e0.push_back(x.edge);
    if (!x.children.empty()) stack.emplace_back(x.children[0], d.left);
    if (x.children.size() == 2) stack.emplace_back(x.children[1], d.right);
  }
  // A vertex introduced in both branches of a join is recorded twice.
  std::sort(sol.v0.begin(), sol.v0.end());
  sol.v0.erase(std::unique(sol.v0.begin(), sol.v0.end()), sol.v0.end());
  stats.elapsed = std::chrono::steady_clock::now() - start;
  return SolveResult::yes(g, std::move(sol), stats);
}

bool decide_ehc_tw(const Graph& g, const TreeDecomposition& td) {
  const int m = g.edge_count();
  if (m < 3) {
    std::string why;
    if (!validate_td(g, td, &why)) fail(ErrorCode::InvalidDecomposition, why);
    if (m <= 1) return true;
    const auto [a, b] = g.edge(0);
    const auto [c, d] = g.edge(1);
    return a == c || a == d || b == c || b == d;
  }
  return des_dp(g, make_nice(g, td)).is_yes();
}

}  // namespace edgeham

namespace edgeham {

EdgeSeq des_to_edge_cycle(const Graph& g, const DesSolution& des) {
  std::string why;
  if (!validate_des(g, des, &why)) fail(ErrorCode::InvalidSolution, why);
  const int n = g.vertex_count();
  std::vector<char> in_e0(static_cast<std::size_t>(g.edge_count()), 0);
  for (EdgeId e : des.e0) in_e0[static_cast<std::size_t>(e)] = 1;

  // Hierholzer on E0; `tour` lists edges, `at[i]` the vertex after edge i.
  std::vector<EdgeId> tour;
  std::vector<Vertex> at;
  if (des.e0.empty()) {
    at.push_back(des.v0.front());
  } else {
    std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);
    std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
    const Vertex start = g.edge(des.e0.front()).first;
    std::vector<std::pair<Vertex, EdgeId>> stack{{start, -1}};
    std::vector<std::pair<Vertex, EdgeId>> circuit;
    while (!stack.empty()) {
      const Vertex v = stack.back().first;
      const auto inc = g.incident(v);
      auto& p = next[static_cast<std::size_t>(v)];
      while (p < inc.size() && (in_e0[static_cast<std::size_t>(inc[p])] == 0 || used[static_cast<std::size_t>(inc[p])] != 0)) ++p;
      if (p == inc.size()) {
        circuit.push_back(stack.back());
        stack.pop_back();
        continue;
      }
      const EdgeId e = inc[p];
      used[static_cast<std::size_t>(e)] = 1;
      const auto [a, b] = g.edge(e);
      stack.emplace_back(a == v ? b : a, e);
    }
    std::reverse(circuit.begin(), circuit.end());
    for (const auto& [v, e] : circuit) {
      if (e < 0) continue;
      tour.push_back(e);
      at.push_back(v);
    }
  }

  // Remaining edges, grouped by a V0 endpoint.
  std::vector<char> in_v0(static_cast<std::size_t>(n), 0);
  for (Vertex v : des.v0) in_v0[static_cast<std::size_t>(v)] = 1;
  std::vector<std::vector<EdgeId>> hang(static_cast<std::size_t>(n));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (in_e0[static_cast<std::size_t>(e)] != 0) continue;
    const auto [a, b] = g.edge(e);
    hang[static_cast<std::size_t>(in_v0[static_cast<std::size_t>(a)] != 0 ? a : b)].push_back(e);
  }
  EdgeSeq out{{}, Mode::Cycle};
  if (tour.empty()) {
    out.order = hang[static_cast<std::size_t>(at.front())];
  } else {
    for (std::size_t i = 0; i < tour.size(); ++i) {
      out.order.push_back(tour[i]);
      auto& extra = hang[static_cast<std::size_t>(at[i])];
      out.order.insert(out.order.end(), extra.begin(), extra.end());
      extra.clear();
    }
  }
  if (!validate_edge_sequence(g, out)) throw std::logic_error("DES did not yield an edge-Hamiltonian cycle");
  return out;
}

}  // namespace edgeham
