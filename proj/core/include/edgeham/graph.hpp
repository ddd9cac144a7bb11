#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace edgeham {

using Vertex = int;
using EdgeId = int;
using VertexPair = std::pair<Vertex, Vertex>;

/// Simple undirected graph. Edge identity is the position in the edge list;
/// endpoints are stored in the orientation they were supplied in.
class Graph {
 public:
  Graph() = default;

  /// Throws SelfLoop, DuplicateEdge or VertexOutOfRange.
  static Graph build(int n, std::span<const VertexPair> pairs);

  [[nodiscard]] int vertex_count() const noexcept { return n_; }
  [[nodiscard]] int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  [[nodiscard]] const std::vector<VertexPair>& edges() const noexcept { return edges_; }
  [[nodiscard]] VertexPair edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }

  /// Sorted neighbour list.
  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  /// Incident edge ids in increasing order.
  [[nodiscard]] std::span<const EdgeId> incident(Vertex v) const { return inc_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(adj_.at(static_cast<std::size_t>(v)).size()); }

  [[nodiscard]] std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const { return find_edge(u, v).has_value(); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  static std::uint64_t key(Vertex u, Vertex v) noexcept;

  int n_ = 0;
  std::vector<VertexPair> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::vector<EdgeId>> inc_;
  std::unordered_map<std::uint64_t, EdgeId> index_;
};

Graph build_graph(int n, std::span<const VertexPair> pairs);
Graph build_graph(int n, std::initializer_list<VertexPair> pairs);

/// Hypergraph with an ordered list of non-empty hyperedges. Members of each
/// hyperedge are kept sorted; duplicate hyperedges are allowed.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Throws EmptyHyperedge or VertexOutOfRange.
  Hypergraph(int n, std::vector<std::vector<Vertex>> hyperedges);

  static Hypergraph from_graph(const Graph& g);

  [[nodiscard]] int vertex_count() const noexcept { return n_; }
  [[nodiscard]] int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  [[nodiscard]] const std::vector<std::vector<Vertex>>& edges() const noexcept { return edges_; }
  [[nodiscard]] std::span<const Vertex> edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  [[nodiscard]] bool contains(EdgeId e, Vertex v) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<Vertex>> edges_;
};

/// True iff the two sorted vertex lists intersect.
bool share_vertex(std::span<const Vertex> a, std::span<const Vertex> b);

enum class Mode { Path, Cycle };

std::string_view to_string(Mode mode);

/// A claimed edge-Hamiltonian path or cycle: a permutation of edge ids.
struct EdgeSeq {
  std::vector<EdgeId> order;
  Mode mode = Mode::Path;

  friend bool operator==(const EdgeSeq&, const EdgeSeq&) = default;
};

/// A claimed dominating Eulerian subgraph. Both lists are kept sorted.
struct DesSolution {
  std::vector<Vertex> v0;
  std::vector<EdgeId> e0;

  friend bool operator==(const DesSolution&, const DesSolution&) = default;
};

/// Edge types relative to an ordered hitting set u_1..u_k. Types are 1-based:
/// type_of[e] = i means u_i is in e and no u_j with j < i is.
struct TypeAssignment {
  std::vector<Vertex> hitting_set;
  std::vector<int> type_of;

  [[nodiscard]] int k() const noexcept { return static_cast<int>(hitting_set.size()); }
  [[nodiscard]] Vertex hub(int type) const { return hitting_set.at(static_cast<std::size_t>(type - 1)); }
};

/// Maximal run of same-type edges, as a half-open range of sequence positions.
struct Group {
  int type = 0;
  std::size_t begin = 0;
  std::size_t end = 0;

  [[nodiscard]] std::size_t size() const noexcept { return end - begin; }
  friend bool operator==(const Group&, const Group&) = default;
};

struct GroupDecomposition {
  std::vector<Group> groups;
  std::vector<EdgeId> special_edges;  // sorted

  [[nodiscard]] int group_count(int type) const;
  [[nodiscard]] int special_count(int type, const TypeAssignment& t) const;
};

Graph line_graph(const Graph& g);
Graph line_graph(const Hypergraph& h);

/// Throws NotAPermutation when the order is not a permutation of the edge ids.
/// Conventions: m <= 1 is always valid; a 2-edge cycle is valid iff the two
/// edges share a vertex.
bool validate_edge_sequence(const Hypergraph& h, const EdgeSeq& s);
bool validate_edge_sequence(const Graph& g, const EdgeSeq& s);

/// Checks the vertex-cover, parity and connectivity conditions. On failure
/// the optional diagnostic receives a short reason.
bool validate_des(const Graph& g, const DesSolution& d, std::string* diagnostic = nullptr);

/// Throws NotAHittingSet (also for out-of-range or repeated hitting-set vertices).
TypeAssignment classify_types(const Hypergraph& h, std::span<const Vertex> hitting_set);
TypeAssignment classify_types(const Graph& g, std::span<const Vertex> hitting_set);

GroupDecomposition decompose_groups(const EdgeSeq& s, const TypeAssignment& t);

/// Reverses sub-sequences until every ordered pair of distinct types occurs
/// at most once as consecutive edges. Works on partial sequences as well:
/// only the types of the listed edges are consulted and adjacency is preserved.
void normalize_edge_order(std::vector<EdgeId>& order, const TypeAssignment& t);

/// Throws InvalidInputPath unless s is a valid edge-Hamiltonian path.
EdgeSeq normalize_edge_path(const Hypergraph& h, const EdgeSeq& s, const TypeAssignment& t);
EdgeSeq normalize_edge_path(const Graph& g, const EdgeSeq& s, const TypeAssignment& t);

/// Inserts `extra` (all of the given type) into a valid edge walk `order`.
/// Prefers the gap between the first two edges of a type group of size >= 2;
/// otherwise places them at an end of the walk whose edge has that type.
/// Returns false when neither position exists.
bool insert_into_type_group(std::vector<EdgeId>& order, const TypeAssignment& t, int type,
                            std::span<const EdgeId> extra);

/// Union-find over dense ids.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::size_t find(std::size_t x);
  bool unite(std::size_t a, std::size_t b);

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

}  // namespace edgeham
