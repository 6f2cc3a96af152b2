#pragma once
// Shared test fixtures: small named instances used across the suite.

#include "stick/instance.hpp"

namespace stick::fixtures {

// Accepted 5x4 instance whose recognition run and forced pairs are pinned in
// the acceptance suite.
inline Instance g1() {
  return make_instance(5, 4,
                       {{4, 1}, {5, 1}, {2, 2}, {3, 2}, {4, 2}, {1, 3}, {3, 3}, {1, 4}, {2, 4}});
}

// Two crossing B-segments; not recognizable for the fixed A order.
inline Instance g2() {
  return make_instance(4, 2, {{1, 1}, {3, 1}, {2, 2}, {4, 2}});
}

// Nested neighborhoods: the canonical order is not minimum length here.
inline Instance g3() {
  return make_instance(6, 2, {{5, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 2}, {5, 2}, {6, 2}});
}

// Minimal strictly-overlapping incomparable pair.
inline Instance g5() {
  return make_instance(3, 2, {{1, 1}, {2, 1}, {2, 2}, {3, 2}});
}

inline Instance single_edge() { return make_instance(1, 1, {{1, 1}}); }

}  // namespace stick::fixtures
