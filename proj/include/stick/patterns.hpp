#pragma once
// Forbidden ordered-submatrix detection.  A pair (A order, B order) admits a
// representation iff the ordered adjacency matrix avoids three templates
// (rows top to bottom, columns left to right, * unconstrained):
//
//   P1 (3x3): . 1 .      P2 (3x2): 1 .      P3 (2x3): . 1 .
//             . 0 1                0 1                1 0 1
//             1 . .                1 .
//
// find_forbidden is an O(rows*cols) scan; find_forbidden_naive is the
// brute-force template enumerator used as its oracle in tests.

#include <optional>
#include <string>
#include <vector>

#include "stick/instance.hpp"

namespace stick {

enum class PatternKind : std::uint8_t { P1, P2, P3 };

inline const char* pattern_name(PatternKind k) {
  switch (k) {
    case PatternKind::P1: return "P1";
    case PatternKind::P2: return "P2";
    case PatternKind::P3: return "P3";
  }
  return "?";
}

struct PatternWitness {
  PatternKind kind;
  std::vector<int> rows;  // A-indices (3 for P1/P2, 2 for P3)
  std::vector<int> cols;  // column positions, 1-based (3 for P1/P3, 2 for P2)
};

// Replays a witness against the matrix: true iff every constrained cell of
// the template matches.
inline bool witness_matches(const OrderedMatrix& m, const PatternWitness& w) {
  auto in_rows = [&](std::size_t n) {
    if (w.rows.size() != n) return false;
    for (std::size_t x = 0; x < n; ++x) {
      if (w.rows[x] < 1 || w.rows[x] > m.rows) return false;
      if (x && w.rows[x] <= w.rows[x - 1]) return false;
    }
    return true;
  };
  auto in_cols = [&](std::size_t n) {
    if (w.cols.size() != n) return false;
    for (std::size_t x = 0; x < n; ++x) {
      if (w.cols[x] < 1 || w.cols[x] > m.cols) return false;
      if (x && w.cols[x] <= w.cols[x - 1]) return false;
    }
    return true;
  };
  switch (w.kind) {
    case PatternKind::P1:
      return in_rows(3) && in_cols(3) && m.at(w.rows[0], w.cols[1]) &&
             !m.at(w.rows[1], w.cols[1]) && m.at(w.rows[1], w.cols[2]) &&
             m.at(w.rows[2], w.cols[0]);
    case PatternKind::P2:
      return in_rows(3) && in_cols(2) && m.at(w.rows[0], w.cols[0]) &&
             !m.at(w.rows[1], w.cols[0]) && m.at(w.rows[1], w.cols[1]) &&
             m.at(w.rows[2], w.cols[0]);
    case PatternKind::P3:
      return in_rows(2) && in_cols(3) && m.at(w.rows[0], w.cols[1]) &&
             m.at(w.rows[1], w.cols[0]) && !m.at(w.rows[1], w.cols[1]) &&
             m.at(w.rows[1], w.cols[2]);
  }
  return false;
}

// Fast scan.  All three templates hinge on a 0 cell (j,q) with a 1 above it
// (P1, P2, P3) or specific 1s in row j / below-left, so one pass over the
// cells with prefix/suffix tables decides everything.
inline std::optional<PatternWitness> find_forbidden(const OrderedMatrix& m) {
  const int R = m.rows, C = m.cols;
  if (R < 2 || C < 2) return std::nullopt;
  // above[(j,q)]: smallest i < j with M(i,q)=1, or 0.
  // below[(j,q)]: smallest k > j with M(k,q)=1, or 0.
  // row_next[(j,q)]: smallest r > q with M(j,r)=1, or 0.
  // row_prev[(j,q)]: largest p < q with M(j,p)=1, or 0.
  // bl[(j,q)]: some (k,p) with k > j, p < q, M(k,p)=1 (for P1), stored as the
  //            smallest such k for column p = the best column; 0 if none.
  std::vector<int> above(static_cast<std::size_t>(R + 1) * (C + 1), 0);
  std::vector<int> below(above), first_one(static_cast<std::size_t>(C + 1), 0);
  for (int q = 1; q <= C; ++q) {
    for (int j = 2; j <= R; ++j) {
      int prev = above[static_cast<std::size_t>(j - 1) * (C + 1) + q];
      above[static_cast<std::size_t>(j) * (C + 1) + q] =
          prev ? prev : (m.at(j - 1, q) ? j - 1 : 0);
    }
    for (int j = R - 1; j >= 1; --j) {
      below[static_cast<std::size_t>(j) * (C + 1) + q] =
          m.at(j + 1, q) ? j + 1 : below[static_cast<std::size_t>(j + 1) * (C + 1) + q];
    }
  }
  auto ab = [&](int j, int q) { return above[static_cast<std::size_t>(j) * (C + 1) + q]; };
  auto be = [&](int j, int q) { return below[static_cast<std::size_t>(j) * (C + 1) + q]; };

  for (int j = 1; j <= R; ++j) {
    // Row-local scans: nearest 1 to the left/right of each column in row j.
    std::vector<int> left(static_cast<std::size_t>(C + 2), 0), right(left);
    for (int q = 1; q <= C; ++q) left[q] = m.at(j, q) ? q : left[q - 1];
    for (int q = C; q >= 1; --q) right[q] = m.at(j, q) ? q : right[q + 1];
    // For P1: a column p < q with a 1 strictly below row j.
    int bl_col = 0;
    for (int q = 1; q <= C; ++q) {
      if (q > 1 && be(j, q - 1) && !bl_col) bl_col = q - 1;
      if (m.at(j, q)) continue;
      const int i_above = ab(j, q);
      if (!i_above) continue;  // every template needs a 1 above the 0
      const int r_right = right[q + 1] ? right[q + 1] : 0;
      if (r_right) {
        if (bl_col) {
          // P1: rows (i_above, j, k), cols (bl_col, q, r_right).
          return PatternWitness{PatternKind::P1,
                                {i_above, j, be(j, bl_col)},
                                {bl_col, q, r_right}};
        }
        if (be(j, q)) {
          // P2: rows (i_above, j, k_below), cols (q, r_right).
          return PatternWitness{PatternKind::P2, {i_above, j, be(j, q)}, {q, r_right}};
        }
        if (left[q]) {
          // P3: rows (i_above, j), cols (left, q, r_right).
          return PatternWitness{PatternKind::P3, {i_above, j}, {left[q], q, r_right}};
        }
      }
    }
  }
  return std::nullopt;
}

// Brute-force enumerator over all row/column tuples; oracle for find_forbidden.
inline std::optional<PatternWitness> find_forbidden_naive(const OrderedMatrix& m) {
  const int R = m.rows, C = m.cols;
  auto try_w = [&](PatternWitness w) -> std::optional<PatternWitness> {
    if (witness_matches(m, w)) return w;
    return std::nullopt;
  };
  for (int i = 1; i <= R; ++i)
    for (int j = i + 1; j <= R; ++j) {
      for (int k = j + 1; k <= R; ++k)
        for (int p = 1; p <= C; ++p)
          for (int q = p + 1; q <= C; ++q) {
            for (int r = q + 1; r <= C; ++r)
              if (auto w = try_w({PatternKind::P1, {i, j, k}, {p, q, r}})) return w;
            if (auto w = try_w({PatternKind::P2, {i, j, k}, {p, q}})) return w;
          }
      for (int p = 1; p <= C; ++p)
        for (int q = p + 1; q <= C; ++q)
          for (int r = q + 1; r <= C; ++r)
            if (auto w = try_w({PatternKind::P3, {i, j}, {p, q, r}})) return w;
    }
  return std::nullopt;
}

struct AbVerdict {
  std::optional<PatternWitness> witness;  // empty means valid
  std::vector<int> b_order;               // the checked column order
  bool valid() const { return !witness.has_value(); }
};

// STICK decision for a fixed pair of orders (A order is the index order).
inline AbVerdict check_ab_order(const Instance& g, const std::vector<int>& b_order) {
  AbVerdict v;
  v.b_order = b_order;
  v.witness = find_forbidden(ordered_matrix(g, b_order));
  return v;
}

// CLI rendering: `PATTERN P2 rows=a1,a2,a3 cols=b1,b2` (columns named by the
// B-origin occupying them).
inline std::string format_witness(const PatternWitness& w, const std::vector<int>& b_order) {
  std::string s = std::string("PATTERN ") + pattern_name(w.kind) + " rows=";
  for (std::size_t x = 0; x < w.rows.size(); ++x)
    s += (x ? "," : "") + ("a" + std::to_string(w.rows[x]));
  s += " cols=";
  for (std::size_t x = 0; x < w.cols.size(); ++x)
    s += (x ? "," : "") + ("b" + std::to_string(b_order[w.cols[x] - 1]));
  return s;
}

}  // namespace stick
