#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "edgeham/graph.hpp"

namespace edgeham {

/// A generated instance with the structure planted into it (a vertex cover
/// for vc_bounded, a hitting set for hyper_hs, empty otherwise).
struct GeneratedInstance {
  std::variant<Graph, Hypergraph> instance;
  std::vector<Vertex> planted;
  std::string family;
  std::uint64_t seed = 0;

  [[nodiscard]] const Graph& graph() const { return std::get<Graph>(instance); }
  [[nodiscard]] const Hypergraph& hypergraph() const { return std::get<Hypergraph>(instance); }
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// K_{1,leaves}; vertex 0 is the centre.
Graph star_graph(int leaves);
/// K_{a,b}; side A is 0..a-1, side B is a..a+b-1.
Graph biclique_graph(int a, int b);

Graph random_gnm(int n, int m, std::uint64_t seed);
/// Every edge touches a planted k-set (returned in `planted`, sorted).
GeneratedInstance random_vc_bounded(int n, int k, int m, std::uint64_t seed);
/// Every hyperedge contains a planted hitting-set vertex; sizes in 1..max_size.
GeneratedInstance random_hyper_hs(int n, int k, int m, int max_size, std::uint64_t seed);

/// Parses a family description such as "cycle 6", "biclique 5 5",
/// "gnm 10 15", "vc_bounded 10 2 12" or "hyper_hs 10 2 12 4" and generates
/// it. Throws InfeasibleSpec on unknown families or impossible parameters.
GeneratedInstance generate_family(const std::string& spec, std::uint64_t seed);

}  // namespace edgeham
