// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "edgeham/cw_pipeline.hpp"
#include "edgeham/cwe.hpp"
#include "edgeham/decomposition.hpp"
#include "edgeham/error.hpp"
#include "edgeham/generators.hpp"
#include "edgeham/hyper_solver.hpp"
#include "edgeham/oracle.hpp"
#include "edgeham/rng.hpp"
#include "edgeham/transforms.hpp"
#include "edgeham/tw_solver.hpp"
#include "edgeham/vc_kernel.hpp"

using namespace edgeham;

namespace {

// Pinned corpus sizes, tolerances and time budgets (seconds).
constexpr int kHnRandom = 2000;
constexpr double kHnSeconds = 60;
constexpr int kEquivGraphs = 500;
constexpr double kEquivSeconds = 120;
constexpr int kKernelInstances = 500;
constexpr double kKernelSeconds = 300;
constexpr int kNormalizeInstances = 500;
constexpr double kNormalizeSeconds = 60;
constexpr int kHyperInstances = 1000;
constexpr double kHyperDetectionRate = 0.99;
constexpr double kHyperSeconds = 600;
constexpr int kTwGraphs = 1000;
constexpr double kTwSeconds = 600;
constexpr int kCwExpressions = 300;
constexpr double kCwSeconds = 900;
constexpr int kContainCases = 100;
constexpr double kReduceSeconds = 60;
constexpr double kGwSeconds = 120;

constexpr std::uint64_t kMasterSeed = 20240611;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  [[nodiscard]] int failures() const { return failures_; }
  [[nodiscard]] const std::string& first() const { return first_; }

 private:
  int failures_ = 0;
  std::string first_;
};

Outcome finish(const Check& c, const std::string& summary) {
  Outcome o;
  o.pass = c.failures() == 0;
  o.detail = summary;
  if (!o.pass) o.detail += "; " + std::to_string(c.failures()) + " failures, first: " + c.first();
  return o;
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.vertex_count() << " E={";
  for (const auto& [u, v] : g.edges()) os << u << '-' << v << ' ';
  os << '}';
  return os.str();
}

// Random graph with m edges on a random number of vertices.
Graph random_graph(SplitMix64& rng, int m_lo, int m_hi, int n_lo, int n_hi) {
  while (true) {
    const int n = n_lo + rng.below(n_hi - n_lo + 1);
    const int m = m_lo + rng.below(m_hi - m_lo + 1);
    if (m > n * (n - 1) / 2) continue;
    return random_gnm(n, m, rng());
  }
}

std::vector<Graph> structured_families(int m_lo, int m_hi) {
  std::vector<Graph> out;
  auto keep = [&](Graph g) {
    if (g.edge_count() >= m_lo && g.edge_count() <= m_hi) out.push_back(std::move(g));
  };
  for (int n = 2; n <= 14; ++n) keep(path_graph(n));
  for (int n = 3; n <= 14; ++n) keep(cycle_graph(n));
  for (int n = 2; n <= 6; ++n) keep(complete_graph(n));
  for (int l = 1; l <= 14; ++l) keep(star_graph(l));
  for (int a = 1; a <= 4; ++a) {
    for (int b = a; b <= 12; ++b) keep(biclique_graph(a, b));
  }
  // Two triangles sharing a vertex; two disjoint triangles; a triangle with pendants.
  keep(build_graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}));
  keep(build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}));
  keep(build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}, {2, 5}}));
  return out;
}

// 1. EHC by line-graph oracle equals the DES oracle.
Outcome criterion_hn() {
  Check c;
  SplitMix64 rng(mix_seed(kMasterSeed, 1));
  std::vector<Graph> corpus = structured_families(3, 12);
  const std::size_t structured = corpus.size();
  for (int i = 0; i < kHnRandom; ++i) corpus.push_back(random_graph(rng, 3, 12, 3, 10));
  int yes = 0;
  for (const Graph& g : corpus) {
    try {
      const bool ehc = solve_edge_ham_exact(g, Mode::Cycle).is_yes();
      const bool des = solve_des_exact(g).is_yes();
      yes += ehc ? 1 : 0;
      c.expect(ehc == des, "mismatch on " + describe(g));
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
  }
  return finish(c, std::to_string(corpus.size()) + " graphs (" + std::to_string(structured) + " structured), " +
                       std::to_string(yes) + " yes");
}

// 2. Gadget transformations agree with the direct oracle, both directions.
Outcome criterion_equiv() {
  Check c;
  SplitMix64 rng(mix_seed(kMasterSeed, 2));
  const DecisionFn ehc = [](const Graph& h) { return solve_edge_ham_exact(h, Mode::Cycle).is_yes(); };
  const DecisionFn ehp = [](const Graph& h) { return solve_edge_ham_exact(h, Mode::Path).is_yes(); };
  int agree_path = 0;
  int agree_cycle = 0;
  for (int i = 0; i < kEquivGraphs; ++i) {
    const Graph g = random_graph(rng, 1, 14, 2, 8);
    const bool path = solve_edge_ham_exact(g, Mode::Path).is_yes();
    const bool cycle = solve_edge_ham_exact(g, Mode::Cycle).is_yes();
    const bool via_path = decide_via_transform(g, Mode::Path, ehc);
    const bool via_cycle = decide_via_transform(g, Mode::Cycle, ehp);
    agree_path += via_path == path ? 1 : 0;
    agree_cycle += via_cycle == cycle ? 1 : 0;
    c.expect(via_path == path, "path direction on " + describe(g));
    c.expect(via_cycle == cycle, "cycle direction on " + describe(g));
  }
  return finish(c, std::to_string(kEquivGraphs) + " graphs, path agree " + std::to_string(agree_path) +
                       ", cycle agree " + std::to_string(agree_cycle));
}

// 3. Vertex-cover kernel.
Outcome criterion_kernel() {
  Check c;
  SplitMix64 rng(mix_seed(kMasterSeed, 3));
  int done = 0;
  int deletions = 0;
  int lifted = 0;
  while (done < kKernelInstances) {
    const int k = 1 + rng.below(3);
    const int n = k + 2 + rng.below(10);
    int max_m = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) max_m += (i < k || j < k) ? 1 : 0;
    }
    const int m = 1 + rng.below(std::min(18, max_m));
    const GeneratedInstance gi = random_vc_bounded(n, k, m, rng());
    const Graph& g = gi.graph();
    ++done;
    const KernelTrace t = kernelize(g, gi.planted);
    deletions += static_cast<int>(t.deletions.size());
    const SolveResult before = solve_edge_ham_exact(g, Mode::Path);
    const SolveResult after = solve_edge_ham_exact(t.kernel, Mode::Path);
    c.expect(before.answer() == after.answer(), "answer changed on " + describe(g));

    const TypeAssignment types = classify_types(t.kernel, gi.planted);
    std::vector<int> outside(static_cast<std::size_t>(k) + 1, 0);
    std::set<Vertex> cover(gi.planted.begin(), gi.planted.end());
    for (EdgeId e = 0; e < t.kernel.edge_count(); ++e) {
      const auto [u, v] = t.kernel.edge(e);
      if (cover.count(u) == 0 || cover.count(v) == 0) ++outside[static_cast<std::size_t>(types.type_of[static_cast<std::size_t>(e)])];
    }
    for (int i = 1; i <= k; ++i) c.expect(outside[static_cast<std::size_t>(i)] <= 4 * k * k, "per-type bound on " + describe(g));
    c.expect(t.kernel.edge_count() <= 4 * k * k * k + k * (k - 1) / 2, "total bound on " + describe(g));
    if (after.is_yes()) {
      try {
        const EdgeSeq up = lift_certificate(t, after.edge_sequence());
        c.expect(validate_edge_sequence(g, up), "lifted certificate invalid on " + describe(g));
        ++lifted;
      } catch (const std::exception& e) {
        c.expect(false, std::string("lift threw: ") + e.what() + " on " + describe(g));
      }
    }
  }
  return finish(c, std::to_string(done) + " instances, " + std::to_string(deletions) + " deletions, " +
                       std::to_string(lifted) + " lifted certificates");
}

// 4. Normalised paths: each ordered type pair at most once, at most 2k
// special edges per type.
Outcome criterion_normalize() {
  Check c;
  SplitMix64 rng(mix_seed(kMasterSeed, 4));
  int done = 0;
  int attempts = 0;
  while (done < kNormalizeInstances && attempts < 50 * kNormalizeInstances) {
    ++attempts;
    const int k = 1 + rng.below(3);
    const bool hyper = rng.below(2) == 1;
    const int n = k + 3 + rng.below(8);
    const int m = 2 + rng.below(15);
    Hypergraph h;
    std::vector<Vertex> hs;
    try {
      const GeneratedInstance gi = hyper ? random_hyper_hs(n, k, m, 4, rng()) : random_vc_bounded(n, k, m, rng());
      h = hyper ? gi.hypergraph() : Hypergraph::from_graph(gi.graph());
      hs = gi.planted;
    } catch (const Error&) {
      continue;
    }
    const SolveResult r = solve_edge_ham_exact(h, Mode::Path);
    if (!r.is_yes()) continue;
    ++done;
    const TypeAssignment t = classify_types(h, hs);
    const EdgeSeq s = normalize_edge_path(h, r.edge_sequence(), t);
    c.expect(validate_edge_sequence(h, s), "normalised path invalid");
    std::map<std::pair<int, int>, int> pattern;
    for (std::size_t p = 0; p + 1 < s.order.size(); ++p) {
      const int a = t.type_of[static_cast<std::size_t>(s.order[p])];
      const int b = t.type_of[static_cast<std::size_t>(s.order[p + 1])];
      if (a != b) ++pattern[{a, b}];
    }
    for (const auto& [pair, count] : pattern) c.expect(count <= 1, "type pair repeated");
    const GroupDecomposition gd = decompose_groups(s, t);
    for (int i = 1; i <= k; ++i) c.expect(gd.special_count(i, t) <= 2 * k, "more than 2k special edges");
  }
  c.expect(done >= kNormalizeInstances, "corpus too small");
  return finish(c, std::to_string(done) + " oracle paths normalised");
}

// 5. Hypergraph colour coding.
Outcome criterion_hyper() {
  Check c;
  SplitMix64 rng(mix_seed(kMasterSeed, 5));
  int oracle_yes = 0;
  int detected = 0;
  int false_yes = 0;
  int exact_no = 0;
  for (int i = 0; i < kHyperInstances; ++i) {
    const int k = 1 + rng.below(2);
    const int n = k + 2 + rng.below(10);
    const int m = 1 + rng.below(18);
    Hypergraph h;
    std::vector<Vertex> hs;
    if (rng.below(4) == 0) {
      // Graph instances with a planted vertex cover.
      try {
        const GeneratedInstance gi = random_vc_bounded(n, k, std::min(m, k * (n - k) + k * (k - 1) / 2), rng());
        h = Hypergraph::from_graph(gi.graph());
        hs = gi.planted;
      } catch (const Error&) {
        --i;
        continue;
      }
    } else {
      const GeneratedInstance gi = random_hyper_hs(n, k, m, 1 + rng.below(4), rng());
      h = gi.hypergraph();
      hs = gi.planted;
    }
    const bool truth = solve_edge_ham_exact(h, Mode::Path).is_yes();
    HyperSolveConfig cfg;
    cfg.seed = mix_seed(kMasterSeed, 500 + static_cast<std::uint64_t>(i));
    const SolveResult r = decide_hyper_ehp(h, hs, cfg);
    if (r.is_yes()) {
      c.expect(truth, "false yes");
      false_yes += truth ? 0 : 1;
      c.expect(validate_edge_sequence(h, r.edge_sequence()), "certificate invalid");
    }
    if (r.answer() == Answer::No) {
      c.expect(!truth, "exact no on a yes instance");
      ++exact_no;
    }
    if (truth) {
      ++oracle_yes;
      detected += r.is_yes() ? 1 : 0;
    }
  }
  const double rate = oracle_yes == 0 ? 1.0 : static_cast<double>(detected) / oracle_yes;
  c.expect(rate >= kHyperDetectionRate, "detection rate " + std::to_string(rate));
  std::ostringstream os;
  os << kHyperInstances << " instances, " << false_yes << " false yes, detection " << detected << "/" << oracle_yes
     << ", exact no " << exact_no;
  return finish(c, os.str());
}

// 6. Treewidth DP against the oracle.
Outcome criterion_tw() {
  Check c;
  SplitMix64 rng(mix_seed(kMasterSeed, 6));
  int exact_runs = 0;
  int yes = 0;
  for (int i = 0; i < kTwGraphs; ++i) {
    const Graph g = random_graph(rng, 0, 16, 1, 16);
    const bool truth = solve_edge_ham_exact(g, Mode::Cycle).is_yes();
    yes += truth ? 1 : 0;
    std::vector<TreeDecomposition> tds{min_fill_decomposition(g)};
    if (g.vertex_count() <= 15) {
      tds.push_back(decomposition_from_elimination_order(g, exact_treewidth_small(g).elimination_order));
      ++exact_runs;
    }
    for (const auto& td : tds) {
      c.expect(decide_ehc_tw(g, td) == truth, "answer differs on " + describe(g));
      if (g.edge_count() >= 3) {
        const SolveResult r = des_dp(g, make_nice(g, td));
        if (r.is_yes()) {
          c.expect(validate_des(g, r.des()), "DES certificate invalid on " + describe(g));
          c.expect(validate_edge_sequence(g, des_to_edge_cycle(g, r.des())), "cycle from DES invalid");
        }
      }
    }
  }
  return finish(c, std::to_string(kTwGraphs) + " graphs, " + std::to_string(yes) + " yes, " +
                       std::to_string(exact_runs) + " with exact decompositions");
}

// Expressions for K_{a,b}: one big join, or grown one vertex at a time.
CwExpr biclique_one_join(int a, int b) {
  CwExpr e;
  e.label_budget = 2;
  int x = e.intro(1);
  for (int i = 1; i < a; ++i) x = e.unite(x, e.intro(1));
  for (int i = 0; i < b; ++i) x = e.unite(x, e.intro(2));
  e.join(1, 2, x);
  return e;
}

CwExpr biclique_gradual(int a, int b) {
  // Side A is built first with label 1; B vertices are added one at a time
  // with label 2, joined to A, then renamed to 3.
  CwExpr e;
  e.label_budget = 3;
  int x = e.intro(1);
  for (int i = 1; i < a; ++i) x = e.unite(x, e.intro(1));
  for (int i = 0; i < b; ++i) x = e.rename(2, 3, e.join(1, 2, e.unite(x, e.intro(2))));
  return e;
}

struct CwStats {
  int expressions = 0;
  int rewrites = 0;
  int gw_checked = 0;
};

// K_{a,b} with a, b >= 2 and side A first: the cycle a1 b1 a2 b2 ... a_s b_s
// with s = min(a, b) dominates every edge.
DesSolution biclique_des(const Graph& g, int a, int b) {
  const int s = std::min(a, b);
  std::vector<Vertex> small, large;
  for (int i = 0; i < a; ++i) (a <= b ? small : large).push_back(i);
  for (int j = 0; j < b; ++j) (a <= b ? large : small).push_back(a + j);
  DesSolution d;
  for (std::size_t i = 0; i < static_cast<std::size_t>(s); ++i) {
    d.e0.push_back(*g.find_edge(small[i], large[i]));
    d.e0.push_back(*g.find_edge(large[i], small[(i + 1) % static_cast<std::size_t>(s)]));
    d.v0.push_back(small[i]);
    d.v0.push_back(large[i]);
  }
  std::sort(d.e0.begin(), d.e0.end());
  std::sort(d.v0.begin(), d.v0.end());
  return d;
}

enum class Truth { Oracle, BicliqueWitness };

void check_pipeline(const CwExpr& e, Check& c, CwStats& st, Truth how, std::vector<PipelineReport>* keep,
                    int a = 0, int b = 0) {
  const Graph g = eval_cwe(e).graph;
  const PipelineReport rep = decide_ehc_cw(e);
  ++st.expressions;
  st.rewrites += static_cast<int>(rep.rewrites.size());
  bool truth = false;
  if (how == Truth::Oracle) {
    truth = solve_edge_ham_exact(g, Mode::Cycle).is_yes();
  } else {
    // The DP on K_{a,b} itself has width min(a, b), too slow for 8 and 9.
    // An explicit witness is checked as a DES and as an edge cycle instead.
    const DesSolution d = biclique_des(g, a, b);
    truth = validate_des(g, d) && validate_edge_sequence(g, des_to_edge_cycle(g, d));
    c.expect(truth, "biclique witness rejected on " + describe(g));
  }
  c.expect(rep.answer == truth, "pipeline answer differs on " + describe(g));
  c.expect(all_joins_small(rep.after_big_joins), "big join survived");
  c.expect(!find_gradual_site(rep.after_bicliques, rep.after_bicliques.label_budget).has_value(), "gradual site survived");
  c.expect(rep.after_big_joins.label_budget <= e.label_budget + 2, "bigjoin label budget");
  c.expect(rep.after_bicliques.label_budget <= e.label_budget + 4, "pipeline label budget");
  c.expect(rep.edges_after_big_joins <= rep.edges_original && rep.edges_after_bicliques <= rep.edges_after_big_joins,
           "edge counts increased");
  for (const auto& r : rep.rewrites) {
    if (r.side_a >= kSpliceMin && r.side_b >= kSpliceMin) c.expect(r.edges_after < r.edges_before, "rewrite did not drop edges");
  }
  if (rep.certificate) c.expect(validate_des(rep.final_graph, *rep.certificate), "pipeline DES invalid");
  if (keep != nullptr) keep->push_back(rep);
}

std::vector<PipelineReport> g_reports;  // shared with criterion 9

// 7. Clique-width pipeline.
Outcome criterion_cw() {
  Check c;
  CwStats st;
  SplitMix64 rng(mix_seed(kMasterSeed, 7));
  int random_done = 0;
  while (random_done < kCwExpressions) {
    const int k = 2 + rng.below(2);
    const int size = 3 + rng.below(8);
    const CwExpr e = random_cwe(k, size, rng());
    if (eval_cwe(e).graph.edge_count() > 18) continue;
    check_pipeline(e, c, st, Truth::Oracle, &g_reports);
    ++random_done;
  }
  const int random_rewrites = st.rewrites;
  // Expressions large enough for the rewrites to fire.
  for (int a = 7; a <= 9; ++a) {
    for (int b = 7; b <= 9; ++b) {
      check_pipeline(biclique_one_join(a, b), c, st, Truth::BicliqueWitness, &g_reports, a, b);
      check_pipeline(biclique_gradual(a, b), c, st, Truth::BicliqueWitness, &g_reports, a, b);
    }
  }
  return finish(c, std::to_string(random_done) + " random expressions (" + std::to_string(random_rewrites) +
                       " rewrites), " + std::to_string(st.expressions - random_done) + " biclique expressions (" +
                       std::to_string(st.rewrites - random_rewrites) + " rewrites)");
}

// Random walk over valid DESs of g by flipping short cycles.
std::vector<DesSolution> des_variants(const Graph& g, const DesSolution& seed, SplitMix64& rng, int want) {
  std::vector<std::vector<EdgeId>> cycles;
  const int n = g.vertex_count();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (Vertex x = b + 1; x < n; ++x) {
        if (g.adjacent(b, x) && g.adjacent(x, a)) cycles.push_back({*g.find_edge(a, b), *g.find_edge(b, x), *g.find_edge(x, a)});
      }
    }
  }
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex c1 : g.neighbors(a)) {
      for (Vertex c2 : g.neighbors(a)) {
        if (c2 <= c1) continue;
        for (Vertex d : g.neighbors(c1)) {
          if (d <= a || d == c2 || !g.adjacent(d, c2)) continue;
          cycles.push_back({*g.find_edge(a, c1), *g.find_edge(c1, d), *g.find_edge(d, c2), *g.find_edge(c2, a)});
        }
      }
    }
  }
  std::vector<DesSolution> out{seed};
  std::set<std::vector<EdgeId>> seen{seed.e0};
  std::vector<char> cur(static_cast<std::size_t>(g.edge_count()), 0);
  for (EdgeId e : seed.e0) cur[static_cast<std::size_t>(e)] = 1;
  for (int step = 0; step < 40 * want && static_cast<int>(out.size()) < want && !cycles.empty(); ++step) {
    const auto& cyc = cycles[static_cast<std::size_t>(rng.below(static_cast<int>(cycles.size())))];
    std::vector<char> next = cur;
    for (EdgeId e : cyc) next[static_cast<std::size_t>(e)] ^= 1;
    DesSolution d;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (next[static_cast<std::size_t>(e)] == 0) continue;
      d.e0.push_back(e);
      d.v0.push_back(g.edge(e).first);
      d.v0.push_back(g.edge(e).second);
    }
    std::sort(d.v0.begin(), d.v0.end());
    d.v0.erase(std::unique(d.v0.begin(), d.v0.end()), d.v0.end());
    if (d.e0.empty() || !validate_des(g, d)) continue;
    cur = next;
    if (seen.insert(d.e0).second) out.push_back(d);
  }
  return out;
}

// K_{a,b} on 0..a+b-1 plus `extra` vertices with random edges.
Graph anchored_biclique(int a, int b, int extra, int extra_edges, SplitMix64& rng) {
  std::vector<VertexPair> pairs;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) pairs.emplace_back(i, a + j);
  }
  const int n = a + b + extra;
  std::set<std::pair<int, int>> have(pairs.begin(), pairs.end());
  for (int t = 0; t < extra_edges; ++t) {
    const int u = rng.below(n);
    const int v = rng.below(n);
    if (u == v) continue;
    const auto key = std::minmax(u, v);
    if ((key.first < a && key.second >= a && key.second < a + b) || !have.insert(key).second) continue;
    pairs.emplace_back(key.first, key.second);
  }
  return Graph::build(n, pairs);
}

std::vector<Vertex> range(int lo, int hi) {
  std::vector<Vertex> v;
  for (int i = lo; i < hi; ++i) v.push_back(i);
  return v;
}

// 8. Biclique reduction and contain repair.
Outcome criterion_reduce() {
  Check c;
  SplitMix64 rng(mix_seed(kMasterSeed, 8));
  int contain_cases = 0;
  int contain_changed = 0;
  int forward = 0;
  int backward = 0;
  // repair_contain on K_{3,3} (+ pendants and chords), seeded by the oracle.
  for (int inst = 0; contain_cases < kContainCases && inst < 400; ++inst) {
    const Graph g = anchored_biclique(3, 3, 1 + rng.below(3), 1 + rng.below(8), rng);
    if (g.edge_count() > kDefaultDesCap) continue;
    const SolveResult seed = solve_des_exact(g);
    if (!seed.is_yes()) continue;
    for (const auto& d : des_variants(g, seed.des(), rng, 6)) {
      const DesSolution r = repair_contain(g, range(0, 3), range(3, 6), d);
      ++contain_cases;
      contain_changed += r == d ? 0 : 1;
      c.expect(validate_des(g, r), "repair output invalid");
      bool has_all = true;
      for (Vertex v : range(0, 6)) has_all = has_all && std::binary_search(r.v0.begin(), r.v0.end(), v);
      c.expect(has_all, "A u B not inside V0");
      bool uses = false;
      for (EdgeId e : r.e0) {
        const auto [u, v] = g.edge(e);
        uses = uses || ((u < 3) != (v < 3) && u < 6 && v < 6);
      }
      c.expect(uses, "no A x B edge used");
    }
  }
  c.expect(contain_cases >= kContainCases, "too few repair cases");

  // Forward and backward transfer on K_{5,5}-anchored graphs.
  for (int inst = 0; inst < 40; ++inst) {
    const int extra = inst == 0 ? 0 : rng.below(4);
    const Graph g = anchored_biclique(5, 5, extra, inst == 0 ? 0 : rng.below(10), rng);
    const auto [red, site] = reduce_biclique_graph(g, range(0, 5), range(5, 10));
    const SolveResult src = des_dp(g, make_nice(g, min_fill_decomposition(g)));
    const SolveResult dst = des_dp(red, make_nice(red, min_fill_decomposition(red)));
    c.expect(src.is_yes() == dst.is_yes(), "reduction changed the answer");
    if (src.is_yes()) {
      for (const auto& d : des_variants(g, src.des(), rng, 4)) {
        try {
          c.expect(validate_des(red, transfer_des_across_reduction(TransferDirection::Forward, site, g, red, d)), "forward invalid");
          ++forward;
        } catch (const std::exception& e) {
          c.expect(false, std::string("forward threw: ") + e.what());
        }
      }
    }
    if (dst.is_yes()) {
      for (const auto& d : des_variants(red, dst.des(), rng, 4)) {
        try {
          c.expect(validate_des(g, transfer_des_across_reduction(TransferDirection::Backward, site, g, red, d)), "backward invalid");
          ++backward;
        } catch (const std::exception& e) {
          c.expect(false, std::string("backward threw: ") + e.what());
        }
      }
    }
  }
  return finish(c, std::to_string(contain_cases) + " repair cases (" + std::to_string(contain_changed) + " edited), " +
                       std::to_string(forward) + " forward, " + std::to_string(backward) + " backward transfers");
}

// 9. Gurski-Wanke spot check on pipeline outputs with n <= 15.
Outcome criterion_gw() {
  Check c;
  int checked = 0;
  for (const auto& rep : g_reports) {
    if (rep.final_graph.vertex_count() > kDefaultTreewidthCap) continue;
    c.expect(rep.exact_treewidth && rep.gw_bound, "missing exact data");
    if (!rep.exact_treewidth || !rep.gw_bound) continue;
    const int t = smallest_excluded_biclique(rep.final_graph);
    c.expect(t == *rep.excluded_biclique, "biclique size differs");
    const long long bound = 3LL * (rep.original.label_budget + 4) * t;
    c.expect(*rep.exact_treewidth <= bound, "treewidth above 3(k+4)t");
    ++checked;
  }
  c.expect(checked > 0, "no pipeline output with n <= 15");
  return finish(c, std::to_string(checked) + " pipeline outputs checked");
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    double budget;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> entries{
      {1, "line-graph oracle == DES oracle", kHnSeconds, criterion_hn},
      {2, "path/cycle gadgets", kEquivSeconds, criterion_equiv},
      {3, "vertex-cover kernel", kKernelSeconds, criterion_kernel},
      {4, "normalised paths", kNormalizeSeconds, criterion_normalize},
      {5, "hypergraph colour coding", kHyperSeconds, criterion_hyper},
      {6, "treewidth DP", kTwSeconds, criterion_tw},
      {7, "clique-width pipeline", kCwSeconds, criterion_cw},
      {8, "biclique reduction and repair", kReduceSeconds, criterion_reduce},
      {9, "treewidth <= 3(k+4)t", kGwSeconds, criterion_gw},
  };
  int failed = 0;
  for (const auto& e : entries) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("uncaught exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > e.budget) {
      o.pass = false;
      o.detail += "; over time budget";
    }
    failed += o.pass ? 0 : 1;
    std::printf("criterion %d: %s  %s (%.1fs / %.0fs) %s\n", e.id, o.pass ? "PASS" : "FAIL", e.name, secs, e.budget,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%s: %d of %zu criteria passed\n", failed == 0 ? "ACCEPTED" : "REJECTED",
              static_cast<int>(entries.size()) - failed, entries.size());
  return failed;
}
