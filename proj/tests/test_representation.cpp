#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "stick/representation.hpp"

using namespace stick;

namespace {
StickRepresentation rep_of(const Instance& g, const std::string& order) {
  return build_representation(g, parse_ground_order(order));
}
}  // namespace

TEST_CASE("build_representation on the pinned orders") {
  auto g1 = fixtures::g1();
  auto r = rep_of(g1, "a1 a2 b4 a3 a4 b2 a5 b1 b3");
  CHECK(r.b_len[4] == 2);
  CHECK(r.b_len[2] == 4);
  CHECK(r.b_len[1] == 3);
  CHECK(r.b_len[3] == 8);
  CHECK(r.a_len == std::vector<int>{1, 8, 4, 5, 3, 1});
  CHECK(total_length(r) == 38);

  auto rs = rep_of(fixtures::single_edge(), "a1 b1");
  CHECK(rs.a_len[1] == 1);
  CHECK(rs.b_len[1] == 1);
  CHECK(total_length(rs) == 2);

  auto g3 = fixtures::g3();
  CHECK(total_length(rep_of(g3, "a1 a2 a3 a4 a5 b1 a6 b2")) == 34);
  CHECK(total_length(rep_of(g3, "a1 a2 a3 a4 a5 a6 b2 b1")) == 31);

  // b before one of its neighbors violates the construction
  CHECK_THROWS_AS(rep_of(g1, "a1 b1 a2 b4 a3 a4 b2 a5 b3"), ParseError);
}

TEST_CASE("verify_representation") {
  auto g1 = fixtures::g1();
  CHECK_FALSE(verify_representation(g1, rep_of(g1, "a1 a2 b4 a3 a4 b2 a5 b1 b3")).has_value());

  auto bad = verify_representation(g1, rep_of(g1, "a1 a2 a3 a4 a5 b3 b4 b2 b1"));
  REQUIRE(bad.has_value());
  CHECK(bad->a == 2);
  CHECK(bad->b == 3);
  CHECK_FALSE(bad->missing);
  CHECK(format_violation(*bad) ==
        "violation: A-segment of a2 crosses B-segment of b3 (non-edge)");

  auto se = fixtures::single_edge();
  CHECK_FALSE(verify_representation(se, rep_of(se, "a1 b1")).has_value());

  CHECK(order_is_valid(g1, parse_ground_order("a1 a2 b4 a3 a4 b2 a5 b1 b3")));
  CHECK_FALSE(order_is_valid(g1, parse_ground_order("a1 a2 a3 a4 a5 b3 b4 b2 b1")));
  CHECK_FALSE(order_is_valid(g1, parse_ground_order("a1 a2 b4")));
}

TEST_CASE("shortest rule: any single shortening breaks a required intersection") {
  auto g = fixtures::g1();
  auto r = rep_of(g, "a1 a2 b4 a3 a4 b2 a5 b1 b3");
  for (int i = 1; i <= g.n_a; ++i) {
    if (g.a_nbrs[i].empty()) continue;
    auto shorter = r;
    shorter.a_len[i] -= 1;
    auto v = verify_representation(g, shorter);
    REQUIRE(v.has_value());
    CHECK(v->missing);
  }
  for (int j = 1; j <= g.n_b; ++j) {
    auto shorter = r;
    shorter.b_len[j] -= 1;
    auto v = verify_representation(g, shorter);
    REQUIRE(v.has_value());
    CHECK(v->missing);
  }
}

TEST_CASE("render_svg") {
  auto se = fixtures::single_edge();
  auto svg = render_svg(build_representation(se, parse_ground_order("a1 b1")));
  CHECK(svg.find("<svg") == 0);
  // one A-segment, one B-segment, one ground line
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t p = svg.find(needle); p != std::string::npos; p = svg.find(needle, p + 1)) ++n;
    return n;
  };
  CHECK(count("a-seg") == 1);
  CHECK(count("b-seg") == 1);
  CHECK(count("ground") == 1);

  auto g1 = fixtures::g1();
  auto svg1 = render_svg(rep_of(g1, "a1 a2 b4 a3 a4 b2 a5 b1 b3"));
  std::size_t labels = 0;
  for (std::size_t p = svg1.find("<text"); p != std::string::npos; p = svg1.find("<text", p + 1))
    ++labels;
  CHECK(labels == 9);

  // deterministic
  CHECK(svg1 == render_svg(rep_of(g1, "a1 a2 b4 a3 a4 b2 a5 b1 b3")));

  // segment pixel lengths proportional to logical lengths (scale 20)
  auto g3 = fixtures::g3();
  auto r3 = build_representation(g3, parse_ground_order("a1 a2 a3 a4 a5 b1 a6 b2"));
  auto svg3 = render_svg(r3);
  // b1 spans b_len[1] * 20 = 20 vertical units from slot 6
  CHECK(svg3.find("y2=\"" + std::to_string(40 + 6 * 20 - r3.b_len[1] * 20) + "\"") !=
        std::string::npos);
}
