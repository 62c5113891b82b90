#include "goeritz/error.hpp"
#include "goeritz/surface_complex.hpp"

#include <doctest.h>

#include <set>

using namespace goeritz;

TEST_CASE("complex has the expected cell counts") {
  const auto& k = build_complex();
  CHECK(k.vertices().size() == 6);
  CHECK(k.edges().size() == 12);
  CHECK(k.hexagons().size() == 4);
  CHECK(k.euler_characteristic() == -2);
  CHECK(k.is_orientable());
}

TEST_CASE("vertex set is the six meeting pairs") {
  std::set<std::string> names;
  for (const auto& v : build_complex().vertices()) names.insert(v.name());
  CHECK(names == std::set<std::string>{"AY", "AZ", "BX", "BZ", "CX", "CY"});
}

TEST_CASE("every edge has two distinct adjacent hexagons, crossing the curve") {
  const auto& k = build_complex();
  for (const Edge& e : k.edges()) {
    auto [h1, h2] = k.adjacent_hexagons(e);
    CHECK(h1 != h2);
    CHECK(cross(h1, e.curve) == h2);
    CHECK(k.other_hexagon(e, h2) == h1);
  }
}

TEST_CASE("side tables") {
  const auto& k = build_complex();
  // Sigma_1 front hexagon meets the index-1 copies of everything.
  for (Curve c : kAllCurves) CHECK(k.side_on(Hexagon::H1, c).index == 1);
  CHECK(k.side_on(Hexagon::H2, Curve::A).name() == "A2");
  CHECK(k.side_on(Hexagon::H2, Curve::X).name() == "X1");
  CHECK(k.side_on(Hexagon::H3, Curve::A).name() == "A1");
  CHECK(k.side_on(Hexagon::H3, Curve::X).name() == "X2");
  CHECK(k.side_on(Hexagon::H4, Curve::B).name() == "B2");
  CHECK(k.side_on(Hexagon::H4, Curve::Z).name() == "Z2");
}

TEST_CASE("adjacent sides of a hexagon meet in a vertex") {
  const auto& k = build_complex();
  for (Hexagon h : kAllHexagons) {
    const auto& s = k.sides(h);
    for (int i = 0; i < 6; ++i) CHECK(curves_intersect(s[i].curve, s[(i + 1) % 6].curve));
  }
}

TEST_CASE("symmetry relations") {
  Relabeling id = Relabeling::identity();
  Relabeling a = complex_symmetry(Symmetry::Alpha);
  Relabeling g = complex_symmetry(Symmetry::Gamma);
  Relabeling d = complex_symmetry(Symmetry::Delta);
  CHECK(d * d * d == id);
  CHECK(g * g == id);
  CHECK(a * a == id);
  CHECK(d * d == complex_symmetry(Symmetry::DeltaInv));
  for (const auto& r : {a, g, d}) CHECK(r.is_automorphism());
  CHECK(d.preserves_orientation());
  CHECK(a.preserves_orientation());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_curve('Q'), Error);
  CHECK_THROWS_AS(parse_edge("A3"), Error);
  CHECK_THROWS_AS(parse_hexagon("H5"), Error);
  CHECK_THROWS_AS(parse_symmetry("beta"), Error);
  CHECK(parse_edge("Z2").id() == 11);
}
