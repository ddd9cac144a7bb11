#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "edgeham/cwe.hpp"
#include "edgeham/decomposition.hpp"
#include "edgeham/graph.hpp"
#include "edgeham/vc_kernel.hpp"

namespace edgeham {

// Text formats use 1-based vertex, edge and bag ids; lines starting with 'c'
// are comments. Parsers reject unknown lines and trailing tokens with
// SyntaxError (the message names the line).

/// p edge <n> <m>, then m lines e <u> <v>.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

/// p hyp <n> <m>, then m lines h <v1> <v2> ...
Hypergraph parse_hypergraph(std::string_view text);
std::string serialize_hypergraph(const Hypergraph& h);

/// Either kind, chosen by the header.
std::variant<Graph, Hypergraph> parse_instance(std::string_view text);

/// s td <bags> <width+1> <n>, bag lines b <i> <v...>, then tree edges <i> <j>.
/// Validated against g. Throws InvalidDecomposition.
TreeDecomposition parse_td(std::string_view text, const Graph& g);
/// Without a graph only the syntax and counts are checked.
TreeDecomposition parse_td(std::string_view text, int vertex_count);
std::string serialize_td(const TreeDecomposition& td, int vertex_count);

/// k <budget> followed by one s-expression built from (intro L),
/// (union A B), (rename I J A), (join I J A). The arena comes back in
/// post-order. Throws SyntaxError, LabelOutOfBudget, JoinSameLabel.
CwExpr parse_cwe(std::string_view text);
std::string serialize_cwe(const CwExpr& e);

/// JSON object holding the original graph, the cover, the deletion log and
/// the kernel.
std::string serialize_trace(const KernelTrace& t);
KernelTrace parse_trace(std::string_view text);

/// Whitespace-separated edge ids; 's' lines are ignored as well so solver
/// output can be fed back in.
std::vector<EdgeId> parse_edge_list(std::string_view text);
std::string serialize_edge_list(const std::vector<EdgeId>& order);

/// Lines v <vertices> and e <edge ids>.
DesSolution parse_des(std::string_view text);
std::string serialize_des(const DesSolution& d);

/// 1-based comma- or space-separated vertex list, e.g. "1,4,7".
std::vector<Vertex> parse_vertex_list(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace edgeham
