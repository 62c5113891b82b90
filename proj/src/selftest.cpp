#include "goeritz/selftest.hpp"

#include "goeritz/atlas.hpp"
#include "goeritz/error.hpp"
#include "goeritz/handlebody.hpp"
#include "goeritz/reduction.hpp"
#include "goeritz/signature.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

namespace goeritz {

std::vector<CorpusEntry> random_corpus(std::size_t size, int max_length, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, 5), length(0, max_length);
  std::vector<CorpusEntry> out;
  out.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    GoeritzWord gw;
    for (int k = length(rng); k > 0; --k) gw.push_back(kAllGenerators[pick(rng)]);
    out.push_back({gw, apply_word(standard_P(), gw)});
  }
  return out;
}

namespace {

using Triple = std::array<std::int64_t, 3>;

// Collects failures; keeps the first few messages for the detail column.
struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first = what;
  }
  std::string summary(const std::string& unit) const {
    std::string s = std::to_string(checked - failed) + "/" + std::to_string(checked) + " " + unit;
    if (failed) s += "; first failure: " + first;
    return s;
  }
};

std::string triple_text(const Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

std::string label(const CorpusEntry& e) {
  return e.word.empty() ? std::string("P") : format_goeritz_word(e.word);
}

bool non_triangular(const Triple& t) { return t[0] > t[1] + t[2] || t[1] > t[2] + t[0] || t[2] > t[0] + t[1]; }

CheckResult timed(int criterion, std::string name, const std::function<std::pair<bool, std::string>()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  CheckResult r{criterion, std::move(name), false, "", 0};
  try {
    auto [ok, detail] = body();
    r.pass = ok;
    r.detail = std::move(detail);
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// delta or its inverse turns a B- or C-dominant curve into an A-dominant one.
CurveWord a_dominant(const CurveWord& q) {
  switch (classify(q)) {
  case Dominance::A: return q;
  case Dominance::B: return apply_generator(q, Generator::DeltaInv);
  case Dominance::C: return apply_generator(q, Generator::Delta);
  }
  return q;
}

std::pair<bool, std::string> complex_sanity() {
  const auto& k = build_complex();
  Tally t;
  t.expect(k.vertices().size() == 6, "vertex count");
  t.expect(k.edges().size() == 12, "edge count");
  t.expect(k.hexagons().size() == 4, "hexagon count");
  t.expect(k.euler_characteristic() == -2, "Euler characteristic");
  t.expect(k.is_orientable(), "orientability");
  Relabeling id = Relabeling::identity();
  Relabeling d = complex_symmetry(Symmetry::Delta), g = complex_symmetry(Symmetry::Gamma);
  Relabeling a = complex_symmetry(Symmetry::Alpha);
  t.expect(d * d * d == id, "delta^3");
  t.expect(g * g == id, "gamma^2");
  t.expect(a * a == id, "alpha^2");
  t.expect(d * complex_symmetry(Symmetry::DeltaInv) == id, "delta * delta^-1");
  for (const Relabeling& r : {a, g, d}) t.expect(r.is_automorphism(), "automorphism");
  return {t.failed == 0, t.summary("facts")};
}

std::pair<bool, std::string> standard_anchors() {
  Tally t;
  CurveWord p = standard_P();
  t.expect(counts(p).triple() == Triple{2, 0, 0}, "P counts");
  t.expect(is_reducing(p), "P reducing");
  ArcCensus c = arc_census(embedded_form(p));
  t.expect(c(0, ArcType::AA) == 1 && c(1, ArcType::AA) == 1, "P census");
  Triple d1 = counts(apply_generator(p, Generator::Delta)).triple();
  Triple d2 = counts(apply_generator(p, Generator::DeltaInv)).triple();
  t.expect(std::set<Triple>{d1, d2} == std::set<Triple>{{0, 2, 0}, {0, 0, 2}}, "delta images");
  return {t.failed == 0, t.summary("facts") + "; delta(P) " + triple_text(d1) + ", delta^-1(P) " + triple_text(d2)};
}

std::pair<bool, std::string> calibration() {
  Tally t;
  // Arcs AZ, ZX, XY, YA starting in the front ball of the first pants.
  std::vector<Step> path{{parse_edge("A1"), Hexagon::H3},
                         {parse_edge("Z2"), Hexagon::H4},
                         {parse_edge("X2"), Hexagon::H3},
                         {parse_edge("Y2"), Hexagon::H4}};
  FreeWord row = read_pi1(path);
  t.expect(row.to_string() == "bC", "AZ,ZX,XY,YA reads " + row.to_string());
  CurveWord b = pushoff(Curve::B), x = pushoff(Curve::X);
  t.expect(read_pi1(b.steps()).cyclically_reduced().to_string() == "b", "pushoff of B reading");
  t.expect(bounds_disk(b, Side::W) && !bounds_disk(b, Side::V), "pushoff of B disks");
  t.expect(bounds_disk(x, Side::V) && !bounds_disk(x, Side::W), "pushoff of X disks");
  return {t.failed == 0, t.summary("facts") + "; row word " + row.to_string()};
}

std::pair<bool, std::string> count_laws(const std::vector<CorpusEntry>& corpus) {
  Tally t;
  for (const auto& e : corpus) {
    Triple k = counts(e.curve).triple();
    auto image = [&](Generator g) { return counts(apply_generator(e.curve, g)).triple(); };
    Triple b = image(Generator::Beta), bi = image(Generator::BetaInv);
    t.expect(b[1] == k[1] && b[2] == k[2] && bi[1] == k[1] && bi[2] == k[2], "beta on " + label(e));
    t.expect(image(Generator::Gamma) == Triple{k[0], k[2], k[1]}, "gamma on " + label(e));
    t.expect(image(Generator::Alpha) == k, "alpha on " + label(e));
    t.expect(image(Generator::Delta) == Triple{k[2], k[0], k[1]}, "delta on " + label(e));
    t.expect(image(Generator::DeltaInv) == Triple{k[1], k[2], k[0]}, "delta^-1 on " + label(e));
  }
  return {t.failed == 0, t.summary("laws")};
}

struct TheoremTallies {
  Tally reducing, trichotomy, no_sum, incompatible;
  std::array<Tally, 6> kinds; // by ConstraintKind
};

TheoremTallies theorem_tallies(const std::vector<CorpusEntry>& corpus) {
  TheoremTallies T;
  for (const auto& e : corpus) {
    const std::string who = label(e);
    bool reducing = is_reducing(e.curve);
    T.reducing.expect(reducing, who);
    if (!reducing) continue;
    Triple k = counts(e.curve).triple();
    T.no_sum.expect(k[0] != k[1] + k[2] && k[1] != k[2] + k[0] && k[2] != k[0] + k[1], who + " " + triple_text(k));
    try {
      classify(e.curve);
      T.trichotomy.expect(true, who);
    } catch (const Error& err) {
      T.trichotomy.expect(false, who + ": " + err.what());
      continue;
    }
    ArcCensus census = arc_census(embedded_form(e.curve));
    bool clash = false;
    for (int p = 0; p < 2; ++p) {
      for (auto [s, u] : kIncompatibleArcTypes) clash = clash || (census(p, s) > 0 && census(p, u) > 0);
    }
    T.incompatible.expect(!clash, who);
    ConstraintReport r = word_constraints(a_dominant(e.curve));
    std::array<std::string, 6> first;
    for (std::size_t i = 0; i < r.violations.size(); ++i) {
      int kind = static_cast<int>(r.violation_kinds[i]);
      if (first[kind].empty()) first[kind] = who + ": " + r.violations[i];
    }
    for (int kind = 0; kind < 6; ++kind) T.kinds[kind].expect(first[kind].empty(), first[kind]);
  }
  return T;
}

std::pair<bool, std::string> theorems(const std::vector<CorpusEntry>& corpus) {
  TheoremTallies T = theorem_tallies(corpus);
  std::size_t failed = T.reducing.failed + T.trichotomy.failed + T.no_sum.failed + T.incompatible.failed;
  std::string first;
  for (const Tally* t : {&T.reducing, &T.trichotomy, &T.no_sum, &T.incompatible}) {
    if (first.empty() && t->failed) first = t->first;
  }
  for (const Tally& t : T.kinds) {
    failed += t.failed;
    if (first.empty() && t.failed) first = t.first;
  }
  std::string detail = std::to_string(T.reducing.checked) + " curves, " + std::to_string(failed) + " failures";
  if (failed) detail += "; first: " + first;
  return {failed == 0, detail};
}

std::pair<bool, std::string> reduction_round_trip(const std::vector<CorpusEntry>& corpus) {
  Tally t;
  const CurveSignature sp = signature(standard_P());
  std::size_t most = 0;
  for (const auto& e : corpus) {
    const std::string who = label(e);
    try {
      ReductionCertificate cert = reduce_to_standard(e.curve);
      auto sums = cert.iteration_sums();
      bool decreasing = true;
      for (std::size_t i = 1; i < sums.size(); ++i) decreasing = decreasing && sums[i] < sums[i - 1];
      std::int64_t bound = (cert.input_triple[0] + cert.input_triple[1] + cert.input_triple[2]) / 2 + 4;
      most = std::max(most, static_cast<std::size_t>(cert.iterations));
      t.expect(cert.iterations <= bound, who + " took " + std::to_string(cert.iterations) + " iterations");
      t.expect(decreasing, who + " sum did not decrease");
      t.expect(signature(apply_word(e.curve, cert.word())) == sp, who + " certificate misses P");
      t.expect(signature(apply_word(standard_P(), express_from_standard(cert))) == signature(e.curve),
               who + " inverse word misses the input");
    } catch (const Error& err) {
      t.expect(false, who + ": " + err.what());
    }
  }
  return {t.failed == 0, t.summary("checks") + "; most iterations " + std::to_string(most)};
}

std::pair<bool, std::string> beta_realization(const std::vector<CorpusEntry>& corpus) {
  Tally t;
  const CurveWord p = standard_P();
  t.expect(signature(apply_generator(p, Generator::Beta)) == signature(p), "beta(P) != P");
  std::size_t n = 0;
  for (const auto& e : corpus) {
    if (n == 50) break;
    ++n;
    CurveWord bb = apply_word(e.curve, {Generator::Beta, Generator::Beta});
    t.expect(signature(bb) == signature(full_twist_P(e.curve)), "beta^2 vs full twist on " + label(e));
  }
  std::string got = signature(apply_generator(pushoff(Curve::A), Generator::Beta)).canonical;
  t.expect(got == kBetaOfPushoffA, "beta(A pushoff) = " + got);
  return {t.failed == 0, t.summary("checks") + "; beta(A pushoff) = " + got};
}

std::pair<bool, std::string> atlas_checks(const SelftestOptions& o) {
  Tally t;
  auto dump = [](const AtlasStore& s) {
    std::string out;
    for (const auto& r : s.records()) out += r.to_json().dump() + "\n";
    return out;
  };
  AtlasStore a, b, c;
  enumerate(o.atlas_depth, a, 1);
  enumerate(o.atlas_depth, b, std::max(2u, o.workers));
  enumerate(o.atlas_depth, c, 1);
  t.expect(dump(a) == dump(b), "worker count changes the atlas");
  t.expect(dump(a) == dump(c), "rerun changes the atlas");
  for (const auto& e : lambda_triples(a)) {
    const Triple& k = e.triple;
    t.expect(non_triangular(k), "triangular triple " + triple_text(k));
    t.expect(k[0] % 2 == 0 && k[1] % 2 == 0 && k[2] % 2 == 0, "odd triple " + triple_text(k));
  }
  AtlasStore one;
  enumerate(1, one, o.workers);
  std::set<Triple> seen;
  for (const auto& e : lambda_triples(one)) seen.insert(e.triple);
  for (Triple k : {Triple{2, 0, 0}, Triple{0, 2, 0}, Triple{0, 0, 2}}) {
    t.expect(seen.contains(k), triple_text(k) + " missing at depth 1");
  }
  return {t.failed == 0, t.summary("checks") + "; " + std::to_string(a.size()) + " curves, " +
                             std::to_string(lambda_triples(a).size()) + " triples at depth " +
                             std::to_string(o.atlas_depth)};
}

} // namespace

std::vector<CheckResult> run_selftest(const SelftestOptions& o) {
  std::vector<CorpusEntry> corpus = random_corpus(o.corpus_size, o.max_length, o.seed);
  std::vector<CheckResult> out;
  out.push_back(timed(1, "complex sanity", complex_sanity));
  out.push_back(timed(2, "standard curve anchors", standard_anchors));
  out.push_back(timed(3, "reading and disk calibration", calibration));
  out.push_back(timed(4, "generator count laws", [&] { return count_laws(corpus); }));
  out.push_back(timed(5, "reducing-curve theorems", [&] { return theorems(corpus); }));
  out.push_back(timed(6, "reduction round trip", [&] { return reduction_round_trip(corpus); }));
  out.push_back(timed(7, "beta realization", [&] { return beta_realization(corpus); }));
  out.push_back(timed(8, "atlas determinism and triples", [&] { return atlas_checks(o); }));
  return out;
}

std::vector<CheckResult> run_invariant_table(const SelftestOptions& o) {
  std::vector<CorpusEntry> corpus = random_corpus(o.corpus_size, o.max_length, o.seed);
  auto t0 = std::chrono::steady_clock::now();
  TheoremTallies T = theorem_tallies(corpus);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  auto row = [&](std::string name, const Tally& t) {
    return CheckResult{5, std::move(name), t.failed == 0, t.summary("curves"), secs};
  };
  using K = ConstraintKind;
  auto kind = [&](K k) -> const Tally& { return T.kinds[static_cast<int>(k)]; };
  return {
      row("every image of P is reducing", T.reducing),
      row("trichotomy: exactly one dominance inequality", T.trichotomy),
      row("no count equals the sum of the other two", T.no_sum),
      row("incompatible arc types never share a pants", T.incompatible),
      row("dominant census: AA/AB/AC only, equal per pants", kind(K::Census)),
      row("every AA arc crosses X once", kind(K::AACrossesX)),
      row("AA arc words have length at most 2", kind(K::AALength)),
      row("AB/AC words have the form w b^k, w c^k, |w| <= 1", kind(K::WordForm)),
      row("no trivial relator at arc joins", kind(K::JoinRelator)),
      row("two-letter AA words not on both pants", kind(K::Exclusion)),
  };
}

std::string format_results(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  for (const CheckResult& r : results) {
    os << (r.pass ? "PASS" : "FAIL") << "  [" << r.criterion << "] " << std::left << std::setw(50) << r.name
       << std::right << std::fixed << std::setprecision(2) << std::setw(7) << r.seconds << "s  " << r.detail
       << "\n";
  }
  return os.str();
}

} // namespace goeritz
