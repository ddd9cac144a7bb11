#include "edgeham/generators.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "edgeham/error.hpp"
#include "edgeham/rng.hpp"

namespace edgeham {

namespace {

void require(bool ok, const std::string& why) {
  if (!ok) fail(ErrorCode::InfeasibleSpec, why);
}

}  // namespace

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<VertexPair> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Graph::build(n, pairs);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<VertexPair> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return Graph::build(n, pairs);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<VertexPair> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return Graph::build(n, pairs);
}

Graph star_graph(int leaves) {
  require(leaves >= 0, "star needs a non-negative leaf count");
  std::vector<VertexPair> pairs;
  for (int i = 1; i <= leaves; ++i) pairs.emplace_back(0, i);
  return Graph::build(leaves + 1, pairs);
}

Graph biclique_graph(int a, int b) {
  require(a >= 0 && b >= 0, "biclique sides must be non-negative");
  std::vector<VertexPair> pairs;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) pairs.emplace_back(i, a + j);
  }
  return Graph::build(a + b, pairs);
}

Graph random_gnm(int n, int m, std::uint64_t seed) {
  require(n >= 0 && m >= 0, "gnm parameters must be non-negative");
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  require(m <= max_edges, "gnm: m exceeds n(n-1)/2");
  std::vector<VertexPair> all;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
  }
  SplitMix64 rng(seed);
  rng.shuffle(all);
  all.resize(static_cast<std::size_t>(m));
  return Graph::build(n, all);
}

GeneratedInstance random_vc_bounded(int n, int k, int m, std::uint64_t seed) {
  require(n >= 1 && k >= 1 && k <= n && m >= 0, "vc_bounded needs 1 <= k <= n and m >= 0");
  SplitMix64 rng(seed);
  std::vector<Vertex> vertices(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) vertices[static_cast<std::size_t>(v)] = v;
  rng.shuffle(vertices);
  std::vector<Vertex> planted(vertices.begin(), vertices.begin() + k);
  std::sort(planted.begin(), planted.end());
  std::vector<char> is_planted(static_cast<std::size_t>(n), 0);
  for (Vertex v : planted) is_planted[static_cast<std::size_t>(v)] = 1;

  std::vector<VertexPair> candidates;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (is_planted[static_cast<std::size_t>(i)] != 0 || is_planted[static_cast<std::size_t>(j)] != 0) {
        candidates.emplace_back(i, j);
      }
    }
  }
  require(m <= static_cast<int>(candidates.size()), "vc_bounded: m exceeds the edges touching the planted set");
  rng.shuffle(candidates);
  candidates.resize(static_cast<std::size_t>(m));
  return GeneratedInstance{Graph::build(n, candidates), planted, "vc_bounded", seed};
}

GeneratedInstance random_hyper_hs(int n, int k, int m, int max_size, std::uint64_t seed) {
  require(n >= 1 && k >= 1 && k <= n && m >= 0 && max_size >= 1, "hyper_hs needs 1 <= k <= n, max_size >= 1");
  SplitMix64 rng(seed);
  std::vector<Vertex> vertices(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) vertices[static_cast<std::size_t>(v)] = v;
  rng.shuffle(vertices);
  std::vector<Vertex> planted(vertices.begin(), vertices.begin() + k);
  std::sort(planted.begin(), planted.end());

  const int cap = std::min(max_size, n);
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const int size = 1 + rng.below(cap);
    std::set<Vertex> members{planted[static_cast<std::size_t>(rng.below(k))]};
    while (static_cast<int>(members.size()) < size) members.insert(rng.below(n));
    edges.emplace_back(members.begin(), members.end());
  }
  return GeneratedInstance{Hypergraph(n, std::move(edges)), planted, "hyper_hs", seed};
}

GeneratedInstance generate_family(const std::string& spec, std::uint64_t seed) {
  std::istringstream in(spec);
  std::string family;
  in >> family;
  std::vector<long long> args;
  std::string token;
  while (in >> token) {
    if (token.rfind("seed=", 0) == 0) {
      seed = std::stoull(token.substr(5));
      continue;
    }
    try {
      std::size_t used = 0;
      args.push_back(std::stoll(token, &used));
      require(used == token.size(), "bad argument '" + token + "'");
    } catch (const std::logic_error&) {
      fail(ErrorCode::InfeasibleSpec, "bad argument '" + token + "' in family spec");
    }
  }
  auto arity = [&](std::size_t want) {
    require(args.size() == want, family + " expects " + std::to_string(want) + " arguments");
  };
  auto arg = [&](std::size_t i) { return static_cast<int>(args.at(i)); };
  auto plain = [&](Graph g) { return GeneratedInstance{std::move(g), {}, spec, seed}; };

  if (family == "path") {
    arity(1);
    return plain(path_graph(arg(0)));
  }
  if (family == "cycle") {
    arity(1);
    return plain(cycle_graph(arg(0)));
  }
  if (family == "complete") {
    arity(1);
    return plain(complete_graph(arg(0)));
  }
  if (family == "star") {
    arity(1);
    return plain(star_graph(arg(0)));
  }
  if (family == "biclique") {
    arity(2);
    return plain(biclique_graph(arg(0), arg(1)));
  }
  if (family == "gnm") {
    arity(2);
    return plain(random_gnm(arg(0), arg(1), seed));
  }
  if (family == "vc_bounded") {
    arity(3);
    auto out = random_vc_bounded(arg(0), arg(1), arg(2), seed);
    out.family = spec;
    return out;
  }
  if (family == "hyper_hs") {
    arity(4);
    auto out = random_hyper_hs(arg(0), arg(1), arg(2), arg(3), seed);
    out.family = spec;
    return out;
  }
  fail(ErrorCode::InfeasibleSpec, "unknown family '" + family + "'");
}

}  // namespace edgeham
