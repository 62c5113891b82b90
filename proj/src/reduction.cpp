#include "goeritz/reduction.hpp"

#include "goeritz/error.hpp"
#include "goeritz/handlebody.hpp"

namespace goeritz {

std::string dominance_name(Dominance d) {
  switch (d) {
  case Dominance::A: return "A_dominant";
  case Dominance::B: return "B_dominant";
  case Dominance::C: return "C_dominant";
  }
  return "?";
}

namespace {

void require_reducing(const CurveWord& w) {
  ReducingVerdict v = reducing_verdict(w);
  if (!v.reducing) throw Error(ErrorCode::NotReducing, reducing_reason_name(v.reason));
}

std::optional<Dominance> dominance_of(const Counts& k) {
  std::optional<Dominance> found;
  int hits = 0;
  if (k.a() > k.b() + k.c()) found = Dominance::A, ++hits;
  if (k.b() > k.c() + k.a()) found = Dominance::B, ++hits;
  if (k.c() > k.a() + k.b()) found = Dominance::C, ++hits;
  return hits == 1 ? found : std::nullopt;
}

std::string triple_string(const Counts& k) {
  return "(" + std::to_string(k.a()) + "," + std::to_string(k.b()) + "," + std::to_string(k.c()) + ")";
}

} // namespace

Dominance classify(const CurveWord& input) {
  require_reducing(input);
  CurveWord w = embedded_form(input);
  Counts k = counts(w);
  auto d = dominance_of(k);
  if (!d) throw Error(ErrorCode::TrichotomyViolation, "counts " + triple_string(k));
  // The dominant curve D forces arcs DD, DE, DF only, equally many on each pants.
  Curve dom = static_cast<Curve>(static_cast<int>(*d));
  ArcCensus census = arc_census(w);
  for (ArcType t : kAllArcTypes) {
    bool touches = false;
    for (Curve e : {Curve::A, Curve::B, Curve::C}) {
      if (arc_type_of(dom, e) == t) touches = true;
    }
    if (!touches && census(0, t) + census(1, t) > 0) {
      throw Error(ErrorCode::TrichotomyViolation, arc_type_name(t) + " arcs on a " + dominance_name(*d) + " curve");
    }
    if (census(0, t) != census(1, t)) {
      throw Error(ErrorCode::TrichotomyViolation, "unequal " + arc_type_name(t) + " counts on the two pants");
    }
  }
  return *d;
}

std::string standard_curve_name(StandardCurve s) {
  switch (s) {
  case StandardCurve::P: return "P";
  case StandardCurve::PPrime: return "P_prime";
  case StandardCurve::PDoublePrime: return "P_double_prime";
  case StandardCurve::None: return "none";
  }
  return "?";
}

StandardCurve is_standard(const CurveWord& w) {
  require_reducing(w);
  auto t = counts(normalize(w)).triple();
  if (t == std::array<std::int64_t, 3>{2, 0, 0}) return StandardCurve::P;
  if (t == std::array<std::int64_t, 3>{0, 2, 0}) return StandardCurve::PPrime;
  if (t == std::array<std::int64_t, 3>{0, 0, 2}) return StandardCurve::PDoublePrime;
  return StandardCurve::None;
}

GoeritzWord ReductionCertificate::word() const {
  GoeritzWord out;
  for (const auto& s : steps) out.push_back(s.generator);
  return out;
}

std::vector<std::int64_t> ReductionCertificate::iteration_sums() const {
  std::vector<std::int64_t> sums{input_triple[0] + input_triple[1] + input_triple[2]};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    bool last_of_iteration = steps[i].iteration > 0 &&
                             (i + 1 == steps.size() || steps[i + 1].iteration != steps[i].iteration);
    if (last_of_iteration) sums.push_back(steps[i].after[0] + steps[i].after[1] + steps[i].after[2]);
  }
  return sums;
}

ReductionCertificate reduce_to_standard(const CurveWord& input, std::optional<int> limit) {
  require_reducing(input);
  ReductionCertificate cert;
  CurveWord q = canonical_form(input);
  cert.input = q;
  cert.input_signature = signature(q);
  cert.input_triple = counts(q).triple();
  const int max_iterations = limit.value_or(static_cast<int>(counts(q).abc_sum() / 2) + 4);

  auto apply = [&](Generator g, CurveWord next, int iteration) {
    q = std::move(next);
    cert.steps.push_back(ReductionStep{g, counts(q).triple(), iteration});
  };

  while (counts(q).abc_sum() > 2) {
    if (cert.iterations == max_iterations) {
      throw Error(ErrorCode::IterationLimitExceeded,
                  "no standard curve after " + std::to_string(max_iterations) + " iterations");
    }
    const int iteration = ++cert.iterations;
    const std::int64_t before = counts(q).abc_sum();

    // Step (i): make A dominant.
    Counts k = counts(q);
    if (!(k.a() > k.b() + k.c())) {
      CurveWord r1 = apply_generator(q, Generator::Delta);
      CurveWord r2 = apply_generator(q, Generator::DeltaInv);
      Counts k1 = counts(r1), k2 = counts(r2);
      bool d1 = k1.a() > k1.b() + k1.c();
      bool d2 = k2.a() > k2.b() + k2.c();
      if (d1 == d2) throw Error(ErrorCode::TrichotomyViolation, "counts " + triple_string(k));
      if (d1) {
        apply(Generator::Delta, std::move(r1), iteration);
      } else {
        apply(Generator::DeltaInv, std::move(r2), iteration);
      }
    }

    // Step (ii): whichever of beta, beta^{-1} lowers a, the larger drop first.
    const std::int64_t a = counts(q).a();
    CurveWord s1 = apply_generator(q, Generator::Beta);
    CurveWord s2 = apply_generator(q, Generator::BetaInv);
    std::int64_t drop1 = a - counts(s1).a(), drop2 = a - counts(s2).a();
    if (drop1 <= 0 && drop2 <= 0) {
      throw Error(ErrorCode::BetaReductionFailure,
                  "neither beta nor its inverse lowers a at " + triple_string(counts(q)));
    }
    if (drop1 >= drop2) {
      apply(Generator::Beta, std::move(s1), iteration);
    } else {
      apply(Generator::BetaInv, std::move(s2), iteration);
    }
    if (counts(q).abc_sum() >= before) {
      throw Error(ErrorCode::BetaReductionFailure, "a + b + c did not decrease");
    }
  }

  cert.terminal = is_standard(q);
  if (cert.terminal == StandardCurve::PPrime) apply(Generator::DeltaInv, apply_generator(q, Generator::DeltaInv), 0);
  if (cert.terminal == StandardCurve::PDoublePrime) apply(Generator::Delta, apply_generator(q, Generator::Delta), 0);
  return cert;
}

GoeritzWord express_from_standard(const ReductionCertificate& cert) { return inverse_word(cert.word()); }

} // namespace goeritz
