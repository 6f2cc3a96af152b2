#pragma once
// Geometric layer: steady shortest Stick representations built from ground
// orders, intersection verification against the edge set, total length, SVG.
//
// Geometry: origin at ground slot p sits at (p,-p); A-segments run rightward
// (horizontal), B-segments run upward (vertical).  Steady: consecutive ground
// slots are distance 1 apart.  Shortest: each tip lies on the farthest
// segment it must intersect.  Tip contact counts as intersection.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stick/instance.hpp"

namespace stick {

struct StickRepresentation {
  GroundOrder order;
  OrderPositions pos;         // ground slots 1..(n_a+n_b)
  std::vector<int> a_len;     // a_len[i], 1-based
  std::vector<int> b_len;     // b_len[j], 1-based
};

// Builds the steady shortest representation for `order`.  Throws ParseError
// if the order is malformed or some b_j precedes one of its A-neighbors.
// Makes no validity claim: pair with verify_representation.
inline StickRepresentation build_representation(const Instance& g, const GroundOrder& order) {
  if (auto err = validate_ground_order(g, order); !err.empty()) throw ParseError(err);
  StickRepresentation r;
  r.order = order;
  r.pos = order_positions(g, order);
  r.a_len.assign(static_cast<std::size_t>(g.n_a) + 1, 1);
  r.b_len.assign(static_cast<std::size_t>(g.n_b) + 1, 1);
  for (int j = 1; j <= g.n_b; ++j) {
    for (int a : g.b_nbrs[j])
      if (r.pos.b[j] < r.pos.a[a])
        throw ParseError("b" + std::to_string(j) + " precedes its neighbor a" +
                         std::to_string(a));
    r.b_len[j] = r.pos.b[j] - r.pos.a[g.one(j)];
  }
  for (int i = 1; i <= g.n_a; ++i) {
    int far = 0;  // slot of the max-order B-neighbor
    for (int b : g.a_nbrs[i]) far = std::max(far, r.pos.b[b]);
    r.a_len[i] = g.a_nbrs[i].empty() ? 1 : far - r.pos.a[i];
  }
  return r;
}

inline long long total_length(const StickRepresentation& r) {
  long long sum = 0;
  for (std::size_t i = 1; i < r.a_len.size(); ++i) sum += r.a_len[i];
  for (std::size_t j = 1; j < r.b_len.size(); ++j) sum += r.b_len[j];
  return sum;
}

struct Violation {
  int a = 0, b = 0;
  bool missing = false;  // true: required edge not realized; false: spurious crossing
};

// A_i intersects B_j iff pos(a_i) < pos(b_j) <= pos(a_i)+a_len(i) and
// pos(b_j)-pos(a_i) <= b_len(j).  Valid iff that holds exactly for edges.
// Reports the first offending pair in (i,j) lexicographic order.
inline std::optional<Violation> verify_representation(const Instance& g,
                                                      const StickRepresentation& r) {
  for (int i = 1; i <= g.n_a; ++i)
    for (int j = 1; j <= g.n_b; ++j) {
      const int pa = r.pos.a[i], pb = r.pos.b[j];
      const bool crosses = pa < pb && pb <= pa + r.a_len[i] && pb - pa <= r.b_len[j];
      if (crosses != g.has_edge(i, j)) return Violation{i, j, !crosses};
    }
  return std::nullopt;
}

inline std::string format_violation(const Violation& v) {
  std::ostringstream out;
  if (v.missing)
    out << "missing intersection: edge a" << v.a << " b" << v.b << " not realized";
  else
    out << "violation: A-segment of a" << v.a << " crosses B-segment of b" << v.b
        << " (non-edge)";
  return out.str();
}

// Convenience: true iff `order` yields a valid representation of g.
inline bool order_is_valid(const Instance& g, const GroundOrder& order) {
  try {
    // build_representation throws when the order is malformed or some b
    // precedes one of its neighbors; both mean "no valid representation".
    return !verify_representation(g, build_representation(g, order)).has_value();
  } catch (const ParseError&) {
    return false;
  }
}

// Deterministic SVG rendering: scale 20 units per ground position.
inline std::string render_svg(const StickRepresentation& r) {
  const int scale = 20;
  const int n = static_cast<int>(r.order.size());
  const int margin = 2 * scale;
  const int span = (n + 1) * scale;
  std::ostringstream out;
  auto x = [&](int slot) { return margin + slot * scale; };
  auto y = [&](int slot) { return margin + slot * scale; };  // down = positive svg y
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << span + 2 * margin
      << "\" height=\"" << span + 2 * margin << "\">\n";
  out << "  <line class=\"ground\" x1=\"" << x(0) << "\" y1=\"" << y(0) << "\" x2=\""
      << x(n + 1) << "\" y2=\"" << y(n + 1) << "\" stroke=\"gray\"/>\n";
  for (const auto& o : r.order) {
    const int slot = (o.kind == Kind::A ? r.pos.a : r.pos.b)[o.index];
    if (o.kind == Kind::A) {
      out << "  <line class=\"a-seg\" x1=\"" << x(slot) << "\" y1=\"" << y(slot)
          << "\" x2=\"" << x(slot + r.a_len[o.index]) << "\" y2=\"" << y(slot)
          << "\" stroke=\"black\"/>\n";
    } else {
      out << "  <line class=\"b-seg\" x1=\"" << x(slot) << "\" y1=\"" << y(slot)
          << "\" x2=\"" << x(slot) << "\" y2=\"" << y(slot - r.b_len[o.index])
          << "\" stroke=\"blue\"/>\n";
    }
    out << "  <text x=\"" << x(slot) - scale / 4 << "\" y=\"" << y(slot) + scale / 2 + 6
        << "\" font-size=\"10\">" << format_origin(o) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace stick
