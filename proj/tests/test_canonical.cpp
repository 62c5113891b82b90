#include "goeritz/mcg.hpp"
#include "trace_oracle.hpp"

#include <doctest.h>

#include <random>

using namespace goeritz;

namespace {

std::vector<CurveWord> corpus() {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> pick(0, 5), len(0, 7);
  std::vector<CurveWord> out;
  for (Curve c : kAllCurves) out.push_back(pushoff(c));
  for (int i = 0; i < 150; ++i) {
    GoeritzWord w;
    int n = len(rng);
    for (int k = 0; k < n; ++k) w.push_back(kAllGenerators[pick(rng)]);
    out.push_back(apply_word(standard_P(), w));
  }
  return out;
}

// Random swaps of adjacent commuting letters, including across the seam.
CurveWord shuffle(const CurveWord& w, std::mt19937& rng) {
  CurveWord cur = w;
  std::uniform_int_distribution<std::size_t> at(0, w.size() - 1);
  for (int t = 0; t < 40; ++t) {
    cur = cur.rotated(at(rng));
    std::vector<Curve> letters = cur.letters();
    std::size_t i = at(rng) % (letters.size() - 1);
    if (curves_intersect(letters[i], letters[i + 1])) std::swap(letters[i], letters[i + 1]);
    cur = CurveWord(cur.start(), letters);
  }
  return cur;
}

} // namespace

TEST_CASE("geodesic and trace canonical forms decide the same equality") {
  auto curves = corpus();
  std::vector<CurveWord> geo, trace;
  for (const auto& w : curves) {
    geo.push_back(canonical_form(w));
    trace.push_back(oracle::trace_canonical_form(normalize(w)));
  }
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    bool first = true;
    for (std::size_t j = 0; j < curves.size(); ++j) {
      CHECK((geo[i] == geo[j]) == (trace[i] == trace[j]));
      if (j < i && geo[i] == geo[j]) first = false;
    }
    distinct += first ? 1 : 0;
  }
  CHECK(distinct > 20);
}

TEST_CASE("canonical form ignores commutations, rotation and reversal") {
  std::mt19937 rng(5);
  for (const auto& w : corpus()) {
    CurveWord key = canonical_form(w);
    CurveWord s = shuffle(normalize(w), rng);
    CHECK(canonical_form(s) == key);
    CHECK(canonical_form(s.reversed()) == key);
    CHECK(oracle::trace_canonical_form(s) == oracle::trace_canonical_form(normalize(w)));
  }
}
