#include "goeritz/error.hpp"
#include "goeritz/handlebody.hpp"
#include "goeritz/mcg.hpp"
#include "goeritz/selftest.hpp"

#include <doctest.h>

#include <random>

using namespace goeritz;

namespace {

// Independent twist about a standard curve D by splicing letters: right after
// entering hexagon h through D, a left turn walks along D and crosses first the
// side before D in h's counterclockwise order, then the side after it.
CurveWord splice_twist(const CurveWord& w, Curve d) {
  const auto& k = SurfaceComplex::instance();
  std::vector<Curve> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.push_back(w.letters()[i]);
    if (w.letters()[i] != d) continue;
    Hexagon h = w.steps()[i].dest;
    int pos = k.side_position(h, d);
    out.push_back(k.sides(h)[(pos + 5) % 6].curve);
    out.push_back(k.sides(h)[(pos + 1) % 6].curve);
  }
  return normalize(CurveWord(w.start(), out));
}

// The same twist spliced in before leaving the previous hexagon through D.
CurveWord splice_twist_before(const CurveWord& w, Curve d) {
  const auto& k = SurfaceComplex::instance();
  std::vector<Curve> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.letters()[i] == d) {
      Hexagon g = w.hexagon_before(i);
      int pos = k.side_position(g, d);
      out.push_back(k.sides(g)[(pos + 1) % 6].curve);
      out.push_back(k.sides(g)[(pos + 5) % 6].curve);
    }
    out.push_back(w.letters()[i]);
  }
  return normalize(CurveWord(w.start(), out));
}

CurveWord random_curve(std::mt19937& rng, int length) {
  std::uniform_int_distribution<int> pick(0, 5);
  GoeritzWord word;
  for (int i = 0; i < length; ++i) word.push_back(kAllGenerators[pick(rng)]);
  return apply_word(standard_P(), word);
}

std::vector<CurveWord> sample_curves() {
  std::vector<CurveWord> out{standard_P()};
  for (Curve c : kAllCurves) out.push_back(pushoff(c));
  std::mt19937 rng(2024);
  for (int i = 0; i < 40; ++i) out.push_back(random_curve(rng, 1 + i % 4));
  return out;
}

bool same(const CurveWord& u, const CurveWord& v) { return canonical_form(u) == canonical_form(v); }

} // namespace

TEST_CASE("goeritz word syntax") {
  GoeritzWord w = parse_goeritz_word("bDDg");
  CHECK(w == GoeritzWord{Generator::Beta, Generator::DeltaInv, Generator::DeltaInv, Generator::Gamma});
  CHECK(format_goeritz_word(w) == "bDDg");
  CHECK(format_goeritz_word(inverse_word(w)) == "gddB");
  CHECK(parse_generator_name("delta_inv") == Generator::DeltaInv);
  CHECK_THROWS_AS(parse_goeritz_word("bx"), Error);
}

TEST_CASE("a twist fixes its own curve and disjoint curves") {
  for (Curve c : kAllCurves) {
    TwistSpec t = TwistSpec::about(c);
    CHECK(same(apply_twist(pushoff(c), t), pushoff(c)));
    CHECK(same(apply_twist(pushoff(avoided_partner(c)), t), pushoff(avoided_partner(c))));
  }
  CHECK(same(apply_twist(standard_P(), TwistSpec::about(Curve::B)), standard_P()));
  CHECK(same(apply_twist(standard_P(), TwistSpec::about_P()), standard_P()));
}

TEST_CASE("geometric twists agree with the letter-splice oracle") {
  for (const CurveWord& w : sample_curves()) {
    for (Curve c : kAllCurves) {
      CurveWord expected = splice_twist(w, c);
      CHECK(same(expected, splice_twist_before(w, c)));
      CHECK(same(apply_twist(w, TwistSpec::about(c, TwistDirection::Left)), expected));
    }
  }
}

TEST_CASE("twists preserve the intersection with their curve and invert") {
  for (const CurveWord& w : sample_curves()) {
    for (Curve c : kAllCurves) {
      CurveWord left = apply_twist(w, TwistSpec::about(c, TwistDirection::Left));
      CHECK(counts(left)[c] == counts(w)[c]);
      CHECK(same(apply_twist(left, TwistSpec::about(c, TwistDirection::Right)), w));
    }
  }
}

TEST_CASE("braid relation for the handle twists") {
  TwistSpec tb = TwistSpec::about(Curve::B), tz = TwistSpec::about(Curve::Z);
  for (const CurveWord& w : sample_curves()) {
    CurveWord lhs = apply_twist(apply_twist(apply_twist(w, tb), tz), tb);
    CurveWord rhs = apply_twist(apply_twist(apply_twist(w, tz), tb), tz);
    CHECK(same(lhs, rhs));
  }
}

TEST_CASE("beta") {
  CHECK(same(apply_generator(standard_P(), Generator::Beta), standard_P()));
  CHECK(same(apply_generator(standard_P(), Generator::BetaInv), standard_P()));
  for (const CurveWord& w : sample_curves()) {
    CurveWord b = apply_generator(w, Generator::Beta);
    Counts k = counts(w), kb = counts(b);
    CHECK(kb.b() == k.b());
    CHECK(kb.c() == k.c());
    CHECK(kb.y() == k.y());
    CHECK(kb.z() == k.z());
    CHECK(same(apply_generator(b, Generator::BetaInv), w));
    CHECK(same(apply_generator(b, Generator::Beta), full_twist_P(w)));
  }
}

TEST_CASE("relabeling generators") {
  CurveWord p1 = apply_generator(standard_P(), Generator::Delta);
  CHECK(counts(p1).triple() == std::array<std::int64_t, 3>{0, 2, 0});
  CHECK(counts(apply_generator(standard_P(), Generator::DeltaInv)).triple() ==
        std::array<std::int64_t, 3>{0, 0, 2});
  CHECK(same(apply_word(standard_P(), parse_goeritz_word("ddd")), standard_P()));
  CHECK(same(apply_word(standard_P(), parse_goeritz_word("bB")), standard_P()));
  for (const CurveWord& w : sample_curves()) {
    Counts k = counts(w);
    Counts kd = counts(apply_generator(w, Generator::Delta));
    CHECK(kd.triple() == std::array<std::int64_t, 3>{k.c(), k.a(), k.b()});
    Counts kg = counts(apply_generator(w, Generator::Gamma));
    CHECK(kg.b() == k.c());
    CHECK(kg.y() == k.z());
    CHECK(counts(apply_generator(w, Generator::Alpha)) == k);
  }
}

TEST_CASE("alpha is central at the level of curves") {
  for (const CurveWord& w : sample_curves()) {
    CHECK(same(apply_generator(w, Generator::Alpha), w));
    for (Generator g : kAllGenerators) {
      CHECK(same(apply_generator(apply_generator(w, g), Generator::Alpha),
                 apply_generator(apply_generator(w, Generator::Alpha), g)));
    }
  }
}

TEST_CASE("frozen beta image of the A pushoff matches the splice oracle") {
  CurveWord w = pushoff(Curve::A);
  for (int i = 0; i < 3; ++i) w = splice_twist(splice_twist(w, Curve::Z), Curve::B);
  CHECK(canonical_form(w).to_string() == kBetaOfPushoffA);
  CHECK(counts(w).triple() == std::array<std::int64_t, 3>{2, 0, 0});
}
