#pragma once

#include "goeritz/curve.hpp"

#include <string>
#include <vector>

namespace goeritz {

enum class Generator { Alpha, Beta, BetaInv, Gamma, Delta, DeltaInv };

inline constexpr std::array<Generator, 6> kAllGenerators = {Generator::Alpha, Generator::Beta,
                                                            Generator::BetaInv, Generator::Gamma,
                                                            Generator::Delta, Generator::DeltaInv};

// Compact alphabet: a, b, B, g, d, D.
char generator_char(Generator g);
Generator parse_generator_char(char ch);
// Long names: alpha, beta, beta_inv, gamma, delta, delta_inv.
std::string generator_name(Generator g);
Generator parse_generator_name(const std::string& name);
Generator inverse(Generator g);

using GoeritzWord = std::vector<Generator>;

GoeritzWord parse_goeritz_word(const std::string& text);
std::string format_goeritz_word(const GoeritzWord& word);
// Word whose left-to-right application undoes `word`.
GoeritzWord inverse_word(const GoeritzWord& word);

enum class TwistDirection { Left, Right };

struct TwistSpec {
  CurveWord curve; // an embedded, spur-free curve
  TwistDirection direction = TwistDirection::Left;

  static TwistSpec about(Curve c, TwistDirection d = TwistDirection::Left);
  static TwistSpec about_P(TwistDirection d = TwistDirection::Left);
};

// Dehn twist; a left twist turns left onto the twisting curve at every
// crossing. The input is normalized first; the result is normalized.
CurveWord apply_twist(const CurveWord& w, const TwistSpec& t);

CurveWord apply_relabeling(const CurveWord& w, const Relabeling& r);

// beta = (t_B t_Z)^3 with left twists about the pushoffs of B and Z: the half
// twist of the handle cut off by P.
CurveWord apply_generator(const CurveWord& w, Generator g);
// Left-to-right: the first letter acts first.
CurveWord apply_word(const CurveWord& w, const GoeritzWord& word);

// Left Dehn twist about P; agrees with beta^2.
CurveWord full_twist_P(const CurveWord& w);

} // namespace goeritz
