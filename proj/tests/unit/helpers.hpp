#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "edgeham/error.hpp"
#include "edgeham/graph.hpp"

namespace edgeham::testing {

// Runs f and returns the ErrorCode it threw (fails the test if none).
template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected an edgeham::Error");
}

inline std::vector<EdgeId> iota_order(int m) {
  std::vector<EdgeId> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Brute force over all permutations; for tiny graphs only.
inline bool brute_force_ehc(const Graph& g, Mode mode) {
  auto order = iota_order(g.edge_count());
  do {
    if (validate_edge_sequence(g, EdgeSeq{order, mode})) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

}  // namespace edgeham::testing
