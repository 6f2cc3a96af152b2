#pragma once
// Brute-force ground truth at desk scale: exhaustive recognition over B
// permutations and exhaustive enumeration of valid ground orders.

#include <optional>
#include <stdexcept>
#include <vector>

#include "stick/instance.hpp"
#include "stick/patterns.hpp"
#include "stick/representation.hpp"

namespace stick {

struct OracleGuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lexicographically smallest B permutation whose ordered matrix avoids all
// forbidden patterns, or nullopt.  Guard: |B| <= max_b unless overridden.
inline std::optional<std::vector<int>> brute_recognize(const Instance& g, int max_b = 8) {
  if (g.n_b > max_b)
    throw OracleGuardExceeded("brute_recognize guard: |B| = " + std::to_string(g.n_b) +
                              " > " + std::to_string(max_b));
  std::vector<int> perm(static_cast<std::size_t>(g.n_b));
  for (int j = 0; j < g.n_b; ++j) perm[j] = j + 1;
  do {
    if (check_ab_order(g, perm).valid()) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// All ground orders passing verify_representation, sorted lexicographically
// (A-origins before B-origins at equal index by generation order below).
// Iterative: enumerate B permutations, then all interleavings as bitmask-free
// position choices.
inline std::vector<GroundOrder> enumerate_valid_orders(const Instance& g,
                                                       int max_total = 12) {
  if (g.n_a + g.n_b > max_total)
    throw OracleGuardExceeded("enumerate_valid_orders guard: |A|+|B| = " +
                              std::to_string(g.n_a + g.n_b) + " > " +
                              std::to_string(max_total));
  std::vector<GroundOrder> out;
  const int n = g.n_a + g.n_b;
  std::vector<int> perm(static_cast<std::size_t>(g.n_b));
  for (int j = 0; j < g.n_b; ++j) perm[j] = j + 1;
  std::vector<int> slots(static_cast<std::size_t>(g.n_b));  // slot choice per B, ascending
  do {
    // choose positions for the B-subsequence among n slots: combinations via
    // odometer over ascending slot indices.
    for (int j = 0; j < g.n_b; ++j) slots[j] = j;
    for (;;) {
      GroundOrder order;
      order.reserve(static_cast<std::size_t>(n));
      int bi = 0, ai = 1;
      for (int s = 0; s < n; ++s) {
        if (bi < g.n_b && slots[bi] == s) {
          order.push_back(b_origin(perm[bi]));
          ++bi;
        } else {
          order.push_back(a_origin(ai++));
        }
      }
      if (order_is_valid(g, order)) out.push_back(order);
      // next combination
      int t = g.n_b - 1;
      while (t >= 0 && slots[t] == n - g.n_b + t) --t;
      if (t < 0) break;
      ++slots[t];
      for (int u = t + 1; u < g.n_b; ++u) slots[u] = slots[u - 1] + 1;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end(), [](const GroundOrder& x, const GroundOrder& y) {
    for (std::size_t s = 0; s < x.size() && s < y.size(); ++s) {
      if (x[s] == y[s]) continue;
      if (x[s].kind != y[s].kind) return x[s].kind == Kind::A;
      return x[s].index < y[s].index;
    }
    return x.size() < y.size();
  });
  return out;
}

}  // namespace stick
