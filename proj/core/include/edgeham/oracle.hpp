#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "edgeham/graph.hpp"

namespace edgeham {

enum class Answer { Yes, No, ProbablyNo };

std::string_view to_string(Answer a);

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t rounds = 0;
  std::chrono::duration<double> elapsed{0.0};
};

/// Outcome of a decision procedure. A yes-result always carries a certificate
/// that has been checked against the instance when the result was built.
class SolveResult {
 public:
  using Certificate = std::variant<std::monostate, EdgeSeq, DesSolution>;

  /// Validates `cert` against `h`; throws std::logic_error if it does not pass.
  static SolveResult yes(const Hypergraph& h, EdgeSeq cert, SolveStats stats = {});
  static SolveResult yes(const Graph& g, EdgeSeq cert, SolveStats stats = {});
  static SolveResult yes(const Graph& g, DesSolution cert, SolveStats stats = {});
  static SolveResult no(SolveStats stats = {});
  static SolveResult probably_no(SolveStats stats = {});

  [[nodiscard]] Answer answer() const noexcept { return answer_; }
  [[nodiscard]] bool is_yes() const noexcept { return answer_ == Answer::Yes; }
  [[nodiscard]] const Certificate& certificate() const noexcept { return cert_; }
  [[nodiscard]] const EdgeSeq& edge_sequence() const { return std::get<EdgeSeq>(cert_); }
  [[nodiscard]] const DesSolution& des() const { return std::get<DesSolution>(cert_); }
  [[nodiscard]] const SolveStats& stats() const noexcept { return stats_; }
  SolveStats& stats() noexcept { return stats_; }

 private:
  SolveResult(Answer a, Certificate c, SolveStats s) : answer_(a), cert_(std::move(c)), stats_(s) {}

  Answer answer_;
  Certificate cert_;
  SolveStats stats_;
};

inline constexpr int kDefaultEdgeHamCap = 22;
inline constexpr int kDefaultDesCap = 20;
inline constexpr int kDefaultTreewidthCap = 15;
inline constexpr std::uint64_t kDefaultBicliqueBudget = 2'000'000;

/// Hamiltonian path/cycle of the line graph by subset DP over edges, states
/// (edge subset, last edge). Bit i is edge i; ties are broken towards the
/// lowest edge index so certificates are reproducible. Throws InstanceTooLarge.
SolveResult solve_edge_ham_exact(const Hypergraph& h, Mode mode, int cap = kDefaultEdgeHamCap);
SolveResult solve_edge_ham_exact(const Graph& g, Mode mode, int cap = kDefaultEdgeHamCap);

/// Hypergraph with one hyperedge per vertex of g (its incident edge ids plus
/// a private marker). Its line graph is g, so vertex orders of g can be
/// checked as edge sequences of this hypergraph.
Hypergraph vertex_incidence_hypergraph(const Graph& g);

/// Vertex Hamiltonian path/cycle by the same DP. The certificate is an EdgeSeq
/// whose `order` lists vertices. Same degenerate conventions as the edge
/// version (n <= 1 yes; two vertices need to be adjacent).
SolveResult solve_vertex_ham_exact(const Graph& g, Mode mode, int cap = kDefaultEdgeHamCap);

/// Dominating Eulerian subgraph by enumeration of edge subsets in order of
/// increasing size (single-vertex solutions first), so certificates are
/// minimum. Throws InstanceTooLarge.
SolveResult solve_des_exact(const Graph& g, int cap = kDefaultDesCap);

/// Compares the EHC oracle with the DES oracle. Throws TooFewEdges for m < 3.
bool check_hn_equivalence(const Graph& g, int edge_cap = kDefaultEdgeHamCap, int des_cap = kDefaultDesCap);

struct TreewidthResult {
  int width = -1;
  std::vector<Vertex> elimination_order;
};

/// Exact treewidth via DP over vertex subsets. Throws InstanceTooLarge.
TreewidthResult exact_treewidth_small(const Graph& g, int cap = kDefaultTreewidthCap);

struct Biclique {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
};

/// Exact search for disjoint A, B of size t with A x B inside E.
/// Throws SearchBudgetExceeded after `node_budget` search nodes.
std::optional<Biclique> find_biclique(const Graph& g, int t, std::uint64_t node_budget = kDefaultBicliqueBudget);

/// Smallest t >= 1 for which the graph has no K_{t,t} subgraph.
int smallest_excluded_biclique(const Graph& g, std::uint64_t node_budget = kDefaultBicliqueBudget);

}  // namespace edgeham
