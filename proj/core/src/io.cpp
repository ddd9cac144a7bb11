#include "edgeham/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "edgeham/error.hpp"

namespace edgeham {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string_view> tokens;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

// Non-empty, non-comment lines split into tokens.
std::vector<Line> split_lines(std::string_view text, std::string_view skip = "c") {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    Line line{number, {}};
    std::size_t i = pos;
    while (i < end) {
      while (i < end && is_space(text[i])) ++i;
      std::size_t j = i;
      while (j < end && !is_space(text[j])) ++j;
      if (j > i) line.tokens.push_back(text.substr(i, j - i));
      i = j;
    }
    const bool skipped = !line.tokens.empty() && line.tokens[0].size() == 1 &&
                         skip.find(line.tokens[0][0]) != std::string_view::npos;
    if (!line.tokens.empty() && !skipped) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void syntax(int line, const std::string& what) {
  fail(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + what);
}

long long to_int(std::string_view tok, int line) {
  long long v = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || p != last) syntax(line, "expected an integer, got '" + std::string(tok) + "'");
  return v;
}

int to_count(std::string_view tok, int line) {
  const long long v = to_int(tok, line);
  if (v < 0 || v > 100'000'000) syntax(line, "count out of range");
  return static_cast<int>(v);
}

// 1-based id in 1..limit to 0-based.
int to_id(std::string_view tok, int line, int limit, ErrorCode code) {
  const long long v = to_int(tok, line);
  if (v < 1 || v > limit) {
    fail(code, "line " + std::to_string(line) + ": id " + std::string(tok) + " outside 1.." + std::to_string(limit));
  }
  return static_cast<int>(v - 1);
}

void expect_tokens(const Line& l, std::size_t n) {
  if (l.tokens.size() != n) syntax(l.number, "expected " + std::to_string(n) + " fields");
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) fail(ErrorCode::SyntaxError, "missing 'p edge' header");
  const Line& h = lines[0];
  if (h.tokens[0] != "p" || h.tokens.size() < 2 || h.tokens[1] != "edge") syntax(h.number, "expected 'p edge <n> <m>'");
  expect_tokens(h, 4);
  const int n = to_count(h.tokens[2], h.number);
  const int m = to_count(h.tokens[3], h.number);
  std::vector<VertexPair> pairs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens[0] != "e") syntax(l.number, "unexpected '" + std::string(l.tokens[0]) + "'");
    expect_tokens(l, 3);
    pairs.emplace_back(to_id(l.tokens[1], l.number, n, ErrorCode::VertexOutOfRange),
                       to_id(l.tokens[2], l.number, n, ErrorCode::VertexOutOfRange));
  }
  if (static_cast<int>(pairs.size()) != m) {
    fail(ErrorCode::CountMismatch, "header announces " + std::to_string(m) + " edges, found " + std::to_string(pairs.size()));
  }
  return Graph::build(n, pairs);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

Hypergraph parse_hypergraph(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) fail(ErrorCode::SyntaxError, "missing 'p hyp' header");
  const Line& h = lines[0];
  if (h.tokens[0] != "p" || h.tokens.size() < 2 || h.tokens[1] != "hyp") syntax(h.number, "expected 'p hyp <n> <m>'");
  expect_tokens(h, 4);
  const int n = to_count(h.tokens[2], h.number);
  const int m = to_count(h.tokens[3], h.number);
  std::vector<std::vector<Vertex>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens[0] != "h") syntax(l.number, "unexpected '" + std::string(l.tokens[0]) + "'");
    std::vector<Vertex> he;
    for (std::size_t t = 1; t < l.tokens.size(); ++t) he.push_back(to_id(l.tokens[t], l.number, n, ErrorCode::VertexOutOfRange));
    edges.push_back(std::move(he));
  }
  if (static_cast<int>(edges.size()) != m) {
    fail(ErrorCode::CountMismatch, "header announces " + std::to_string(m) + " hyperedges, found " + std::to_string(edges.size()));
  }
  return Hypergraph(n, std::move(edges));
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::ostringstream os;
  os << "p hyp " << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (const auto& e : h.edges()) {
    os << 'h';
    for (Vertex v : e) os << ' ' << v + 1;
    os << '\n';
  }
  return os.str();
}

std::variant<Graph, Hypergraph> parse_instance(std::string_view text) {
  const auto lines = split_lines(text);
  if (!lines.empty() && lines[0].tokens.size() >= 2 && lines[0].tokens[0] == "p" && lines[0].tokens[1] == "hyp") {
    return parse_hypergraph(text);
  }
  return parse_graph(text);
}

TreeDecomposition parse_td(std::string_view text, int vertex_count) {
  const auto lines = split_lines(text);
  if (lines.empty()) fail(ErrorCode::SyntaxError, "missing 's td' header");
  const Line& h = lines[0];
  if (h.tokens[0] != "s" || h.tokens.size() < 2 || h.tokens[1] != "td") syntax(h.number, "expected 's td <bags> <width+1> <n>'");
  expect_tokens(h, 5);
  const int bags = to_count(h.tokens[2], h.number);
  const int bag_size = to_count(h.tokens[3], h.number);
  const int n = to_count(h.tokens[4], h.number);
  if (n != vertex_count) {
    fail(ErrorCode::CountMismatch, "decomposition is for " + std::to_string(n) + " vertices, graph has " + std::to_string(vertex_count));
  }
  TreeDecomposition td;
  td.bags.resize(static_cast<std::size_t>(bags));
  std::vector<char> seen(static_cast<std::size_t>(bags), 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens[0] == "b") {
      if (l.tokens.size() < 2) syntax(l.number, "bag line without an id");
      const int id = to_id(l.tokens[1], l.number, bags, ErrorCode::SyntaxError);
      if (seen[static_cast<std::size_t>(id)] != 0) syntax(l.number, "bag listed twice");
      seen[static_cast<std::size_t>(id)] = 1;
      auto& bag = td.bags[static_cast<std::size_t>(id)];
      for (std::size_t t = 2; t < l.tokens.size(); ++t) bag.push_back(to_id(l.tokens[t], l.number, n, ErrorCode::VertexOutOfRange));
      std::sort(bag.begin(), bag.end());
      if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) syntax(l.number, "vertex repeated in a bag");
    } else {
      expect_tokens(l, 2);
      td.tree_edges.emplace_back(to_id(l.tokens[0], l.number, bags, ErrorCode::SyntaxError),
                                 to_id(l.tokens[1], l.number, bags, ErrorCode::SyntaxError));
    }
  }
  if (std::count(seen.begin(), seen.end(), 0) != 0) fail(ErrorCode::CountMismatch, "some announced bags are missing");
  if (td.width() + 1 != bag_size && bags > 0) {
    fail(ErrorCode::CountMismatch, "header announces bag size " + std::to_string(bag_size) + ", largest bag has " +
                                       std::to_string(td.width() + 1));
  }
  return td;
}

TreeDecomposition parse_td(std::string_view text, const Graph& g) {
  TreeDecomposition td = parse_td(text, g.vertex_count());
  std::string why;
  if (!validate_td(g, td, &why)) fail(ErrorCode::InvalidDecomposition, why);
  return td;
}

std::string serialize_td(const TreeDecomposition& td, int vertex_count) {
  std::ostringstream os;
  os << "s td " << td.bags.size() << ' ' << (td.bags.empty() ? 0 : td.width() + 1) << ' ' << vertex_count << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    os << "b " << i + 1;
    for (Vertex v : td.bags[i]) os << ' ' << v + 1;
    os << '\n';
  }
  for (const auto& [a, b] : td.tree_edges) os << a + 1 << ' ' << b + 1 << '\n';
  return os.str();
}

namespace {

struct Token {
  std::string_view text;
  int line = 0;
};

class CweParser {
 public:
  CweParser(std::vector<Token> tokens, CwExpr& out) : tokens_(std::move(tokens)), out_(out) {}

  int parse_all() {
    const int root = parse_node();
    if (pos_ != tokens_.size()) syntax(tokens_[pos_].line, "trailing input after the expression");
    return root;
  }

 private:
  const Token& peek() {
    if (pos_ >= tokens_.size()) fail(ErrorCode::SyntaxError, "unexpected end of expression");
    return tokens_[pos_];
  }
  const Token& take() {
    const Token& t = peek();
    ++pos_;
    return t;
  }
  void expect(std::string_view s) {
    const Token& t = take();
    if (t.text != s) syntax(t.line, "expected '" + std::string(s) + "', got '" + std::string(t.text) + "'");
  }
  int label() {
    const Token& t = take();
    const long long v = to_int(t.text, t.line);
    if (v < 1 || v > out_.label_budget) {
      fail(ErrorCode::LabelOutOfBudget, "line " + std::to_string(t.line) + ": label " + std::string(t.text) +
                                            " outside 1.." + std::to_string(out_.label_budget));
    }
    return static_cast<int>(v);
  }

  int parse_node() {
    expect("(");
    const Token& op = take();
    int id = -1;
    if (op.text == "intro") {
      id = out_.intro(label());
    } else if (op.text == "union") {
      const int l = parse_node();
      const int r = parse_node();
      id = out_.unite(l, r);
    } else if (op.text == "rename") {
      const int a = label();
      const int b = label();
      id = out_.rename(a, b, parse_node());
    } else if (op.text == "join") {
      const int a = label();
      const int b = label();
      if (a == b) fail(ErrorCode::JoinSameLabel, "line " + std::to_string(op.line) + ": join " + std::to_string(a) + " with itself");
      id = out_.join(a, b, parse_node());
    } else {
      syntax(op.line, "unknown operation '" + std::string(op.text) + "'");
    }
    expect(")");
    return id;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  CwExpr& out_;
};

void print_cwe(const CwExpr& e, int x, std::ostream& os) {
  const CwNode& n = e.nodes.at(static_cast<std::size_t>(x));
  switch (n.op) {
    case CwOp::Intro:
      os << "(intro " << n.a << ')';
      return;
    case CwOp::Union:
      os << "(union ";
      print_cwe(e, n.left, os);
      os << ' ';
      print_cwe(e, n.right, os);
      os << ')';
      return;
    case CwOp::Rename:
    case CwOp::Join:
      os << (n.op == CwOp::Rename ? "(rename " : "(join ") << n.a << ' ' << n.b << ' ';
      print_cwe(e, n.left, os);
      os << ')';
      return;
  }
}

}  // namespace

CwExpr parse_cwe(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) fail(ErrorCode::SyntaxError, "missing 'k <budget>' header");
  const Line& h = lines[0];
  if (h.tokens[0] != "k") syntax(h.number, "expected 'k <budget>'");
  expect_tokens(h, 2);
  CwExpr e;
  e.label_budget = to_count(h.tokens[1], h.number);
  std::vector<Token> tokens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    for (std::string_view tok : lines[i].tokens) {
      // Split parentheses off the atoms.
      std::size_t p = 0;
      while (p < tok.size()) {
        if (tok[p] == '(' || tok[p] == ')') {
          tokens.push_back({tok.substr(p, 1), lines[i].number});
          ++p;
          continue;
        }
        std::size_t q = p;
        while (q < tok.size() && tok[q] != '(' && tok[q] != ')') ++q;
        tokens.push_back({tok.substr(p, q - p), lines[i].number});
        p = q;
      }
    }
  }
  if (tokens.empty()) fail(ErrorCode::SyntaxError, "empty expression");
  CweParser(std::move(tokens), e).parse_all();
  return e;
}

std::string serialize_cwe(const CwExpr& e) {
  std::ostringstream os;
  os << "k " << e.label_budget << '\n';
  print_cwe(e, e.root, os);
  os << '\n';
  return os.str();
}

namespace {

nlohmann::json graph_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  std::vector<VertexPair> pairs;
  for (const auto& e : j.at("edges")) {
    const int u = e.at(0).get<int>();
    const int v = e.at(1).get<int>();
    if (e.size() != 2 || u < 1 || v < 1 || u > n || v > n) fail(ErrorCode::VertexOutOfRange, "trace edge out of range");
    pairs.emplace_back(u - 1, v - 1);
  }
  return Graph::build(n, pairs);
}

}  // namespace

std::string serialize_trace(const KernelTrace& t) {
  nlohmann::json j;
  j["format"] = "edgeham-kernel-trace";
  j["version"] = 1;
  j["original"] = graph_json(t.original);
  nlohmann::json cover = nlohmann::json::array();
  for (Vertex v : t.vertex_cover) cover.push_back(v + 1);
  j["vertex_cover"] = cover;
  nlohmann::json dels = nlohmann::json::array();
  for (const auto& d : t.deletions) {
    dels.push_back({{"edge_index", d.original_index + 1}, {"edge", {d.edge.first + 1, d.edge.second + 1}}, {"type", d.type}});
  }
  j["deletions"] = dels;
  j["kernel"] = graph_json(t.kernel);
  return j.dump(2) + "\n";
}

KernelTrace parse_trace(std::string_view text) {
  KernelTrace t;
  try {
    const auto j = nlohmann::json::parse(text.begin(), text.end());
    if (j.at("format").get<std::string>() != "edgeham-kernel-trace") fail(ErrorCode::SyntaxError, "not a kernel trace");
    t.original = graph_from_json(j.at("original"));
    for (const auto& v : j.at("vertex_cover")) {
      const int x = v.get<int>();
      if (x < 1 || x > t.original.vertex_count()) fail(ErrorCode::VertexOutOfRange, "cover vertex out of range");
      t.vertex_cover.push_back(x - 1);
    }
    for (const auto& d : j.at("deletions")) {
      KernelDeletion del;
      del.original_index = d.at("edge_index").get<int>() - 1;
      del.edge = {d.at("edge").at(0).get<int>() - 1, d.at("edge").at(1).get<int>() - 1};
      del.type = d.at("type").get<int>();
      if (del.original_index < 0 || del.original_index >= t.original.edge_count()) {
        fail(ErrorCode::CountMismatch, "deleted edge index out of range");
      }
      const auto [a, b] = t.original.edge(del.original_index);
      if (std::minmax(a, b) != std::minmax(del.edge.first, del.edge.second)) {
        fail(ErrorCode::CountMismatch, "deleted edge does not match the original graph");
      }
      t.deletions.push_back(del);
    }
    t.kernel = graph_from_json(j.at("kernel"));
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorCode::SyntaxError, std::string("trace: ") + ex.what());
  }
  std::vector<char> gone(static_cast<std::size_t>(t.original.edge_count()), 0);
  for (const auto& d : t.deletions) gone[static_cast<std::size_t>(d.original_index)] = 1;
  std::vector<VertexPair> kept;
  for (EdgeId e = 0; e < t.original.edge_count(); ++e) {
    if (gone[static_cast<std::size_t>(e)] == 0) kept.push_back(t.original.edge(e));
  }
  if (!(Graph::build(t.original.vertex_count(), kept) == t.kernel)) {
    fail(ErrorCode::CountMismatch, "kernel is not the original minus the deletions");
  }
  return t;
}

std::vector<EdgeId> parse_edge_list(std::string_view text) {
  std::vector<EdgeId> out;
  for (const Line& l : split_lines(text, "cs")) {
    for (std::string_view tok : l.tokens) {
      const long long v = to_int(tok, l.number);
      if (v < 1 || v > 100'000'000) syntax(l.number, "edge ids start at 1");
      out.push_back(static_cast<EdgeId>(v - 1));
    }
  }
  return out;
}

std::string serialize_edge_list(const std::vector<EdgeId>& order) {
  std::ostringstream os;
  for (std::size_t i = 0; i < order.size(); ++i) os << (i == 0 ? "" : " ") << order[i] + 1;
  os << '\n';
  return os.str();
}

DesSolution parse_des(std::string_view text) {
  DesSolution d;
  for (const Line& l : split_lines(text, "cs")) {
    const bool vertices = l.tokens[0] == "v";
    if (!vertices && l.tokens[0] != "e") syntax(l.number, "expected a 'v' or 'e' line");
    for (std::size_t t = 1; t < l.tokens.size(); ++t) {
      const long long v = to_int(l.tokens[t], l.number);
      if (v < 1 || v > 100'000'000) syntax(l.number, "ids start at 1");
      (vertices ? d.v0 : d.e0).push_back(static_cast<int>(v - 1));
    }
  }
  std::sort(d.v0.begin(), d.v0.end());
  std::sort(d.e0.begin(), d.e0.end());
  return d;
}

std::string serialize_des(const DesSolution& d) {
  std::ostringstream os;
  os << 'v';
  for (Vertex v : d.v0) os << ' ' << v + 1;
  os << "\ne";
  for (EdgeId e : d.e0) os << ' ' << e + 1;
  os << '\n';
  return os.str();
}

std::vector<Vertex> parse_vertex_list(std::string_view text) {
  std::string copy(text);
  std::replace(copy.begin(), copy.end(), ',', ' ');
  std::vector<Vertex> out;
  for (const Line& l : split_lines(copy, "")) {
    for (std::string_view tok : l.tokens) {
      const long long v = to_int(tok, l.number);
      if (v < 1 || v > 100'000'000) syntax(l.number, "vertex ids start at 1");
      out.push_back(static_cast<Vertex>(v - 1));
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace edgeham
