#pragma once

#include "goeritz/mcg.hpp"
#include "goeritz/signature.hpp"

#include <optional>
#include <string>
#include <vector>

namespace goeritz {

// Which of a > b + c, b > c + a, c > a + b holds.
enum class Dominance { A, B, C };
std::string dominance_name(Dominance d);

// Throws NotReducing, or TrichotomyViolation when not exactly one inequality
// holds or the census does not have the shape the dominant curve forces.
Dominance classify(const CurveWord& w);

enum class StandardCurve { P, PPrime, PDoublePrime, None };
std::string standard_curve_name(StandardCurve s);
StandardCurve is_standard(const CurveWord& w);

struct ReductionStep {
  Generator generator;
  std::array<std::int64_t, 3> after; // (a, b, c) after applying it
  int iteration = 0;                 // 0 for the closing relabeling
};

struct ReductionCertificate {
  CurveWord input;             // canonical form of the input
  CurveSignature input_signature;
  std::array<std::int64_t, 3> input_triple{};
  std::vector<ReductionStep> steps;
  StandardCurve terminal = StandardCurve::P; // standard curve reached before the closing relabeling
  int iterations = 0;

  // Applying this word to the input gives P.
  GoeritzWord word() const;
  // a + b + c at the end of each loop iteration, preceded by the input sum.
  std::vector<std::int64_t> iteration_sums() const;
};

// limit defaults to (a + b + c) / 2 + 4 loop iterations.
ReductionCertificate reduce_to_standard(const CurveWord& w, std::optional<int> limit = std::nullopt);

// The reversed, inverted certificate word: applying it to P gives the input.
GoeritzWord express_from_standard(const ReductionCertificate& cert);

} // namespace goeritz
