#include "goeritz/curve.hpp"
#include "goeritz/error.hpp"

#include <doctest.h>

#include <random>

using namespace goeritz;

namespace {

std::vector<Step> steps_of(std::initializer_list<std::pair<const char*, const char*>> raw) {
  std::vector<Step> out;
  for (auto [e, h] : raw) out.push_back(Step{parse_edge(e), parse_hexagon(h)});
  return out;
}

CurveWord word(Hexagon start, const std::string& letters) {
  std::vector<Curve> w;
  for (char ch : letters) w.push_back(parse_curve(ch));
  return CurveWord(start, w);
}

} // namespace

TEST_CASE("standard P from explicit steps") {
  auto s = steps_of({{"A1", "H1"}, {"X1", "H2"}, {"A2", "H4"}, {"X2", "H3"}});
  CurveWord p = validate(s);
  CHECK(p == standard_P());
  CHECK(p.to_string() == "H3:AXAX");
  Counts k = counts(p);
  CHECK(k.triple() == std::array<std::int64_t, 3>{2, 0, 0});
  CHECK(is_separating(p));
  ArcCensus c = arc_census(p);
  CHECK(c(0, ArcType::AA) == 1);
  CHECK(c(1, ArcType::AA) == 1);
}

TEST_CASE("pushoffs match their step lists") {
  CHECK(pushoff(Curve::A).steps() == steps_of({{"Y1", "H2"}, {"Z1", "H1"}}));
  CHECK(pushoff(Curve::B).steps() == steps_of({{"Z1", "H2"}, {"X1", "H1"}}));
  CHECK(pushoff(Curve::X).steps() == steps_of({{"B1", "H3"}, {"C1", "H1"}}));
  for (Curve c : kAllCurves) {
    CurveWord w = pushoff(c);
    CHECK(validate(w.steps()) == w);
    CHECK(normalize(w) == w);
    CHECK(counts(w)[c] == 0);
    CHECK_FALSE(is_separating(w));
  }
}

TEST_CASE("validate rejects broken input") {
  CHECK_THROWS_AS(validate(std::vector<Step>{}), Error);
  try {
    validate(steps_of({{"A1", "H1"}, {"X2", "H2"}}));
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParityViolation);
  }
  try {
    validate(steps_of({{"A1", "H1"}, {"X1", "H2"}, {"A1", "H4"}, {"X2", "H3"}}));
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedWord);
  }
}

TEST_CASE("a spur pair is accepted then normalizes to nothing") {
  auto s = steps_of({{"A1", "H1"}, {"A1", "H3"}});
  CurveWord w = validate(s);
  try {
    normalize(w);
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyAfterNormalization);
  }
}

TEST_CASE("proper powers are not embeddable") {
  CurveWord p = standard_P();
  std::vector<Step> twice = p.steps();
  twice.insert(twice.end(), p.steps().begin(), p.steps().end());
  try {
    validate(twice);
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotEmbeddable);
  }
}

TEST_CASE("normalize removes spurs and bigons") {
  // P with an inserted back-and-forth across Y.
  CHECK(normalize(word(Hexagon::H3, "AXYYAX")) == standard_P());
  // Z meets A, so A Z A X slides to Z X.
  CurveWord w = normalize(word(Hexagon::H3, "AZAX"));
  CHECK(w.size() == 2);
  CHECK_THROWS_AS(normalize(word(Hexagon::H3, "AZAZ")), Error);
  // Seam bigon: X ... X across the cyclic join.
  CHECK(normalize(word(Hexagon::H3, "XAXA")).size() == 4);
}

TEST_CASE("normal coordinates round trip") {
  std::vector<CurveWord> curves{standard_P()};
  for (Curve c : kAllCurves) curves.push_back(pushoff(c));
  for (const CurveWord& w : curves) {
    auto comps = from_normal_coordinates(to_normal_coordinates(w));
    REQUIRE(comps.size() == 1);
    CHECK(canonical_form(comps[0]) == canonical_form(w));
  }
}

TEST_CASE("inconsistent coordinates are rejected") {
  NormalCoordinates nc;
  nc(Hexagon::H1, Curve::A, Curve::X) = 1;
  CHECK_THROWS_AS(from_normal_coordinates(nc), Error);
}

TEST_CASE("canonical form is invariant under rotation, reversal and seam moves") {
  std::mt19937 rng(7);
  std::vector<CurveWord> curves{standard_P()};
  for (Curve c : kAllCurves) curves.push_back(pushoff(c));
  for (const CurveWord& w : curves) {
    CurveWord key = canonical_form(w);
    for (std::size_t k = 0; k < w.size(); ++k) {
      CHECK(canonical_form(w.rotated(k)) == key);
      CHECK(canonical_form(w.rotated(k).reversed()) == key);
    }
  }
  CHECK(canonical_form(pushoff(Curve::A)) != canonical_form(pushoff(Curve::B)));
}

TEST_CASE("canonical form identifies commutation-equivalent words") {
  // Z and A commute, so the two orders describe the same curve.
  CurveWord u = normalize(word(Hexagon::H3, "AZBX"));
  CurveWord v = normalize(word(Hexagon::H3, "ZABX"));
  CHECK(canonical_form(u) == canonical_form(v));
}

TEST_CASE("embedded form is a valid simple curve") {
  std::vector<CurveWord> curves{standard_P()};
  for (Curve c : kAllCurves) curves.push_back(pushoff(c));
  curves.push_back(normalize(word(Hexagon::H1, "XAXAZCXAXAZC")));
  for (const CurveWord& w : curves) {
    CurveWord e = embedded_form(w);
    CHECK(validate(e.steps()) == e);
    CHECK(counts(e) == counts(normalize(w)));
    CHECK(validate(canonical_form(w).steps()) == canonical_form(w));
  }
}
