#pragma once

#include "goeritz/surface_complex.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace goeritz {

// One transverse crossing: the edge crossed and the hexagon entered.
struct Step {
  Edge edge;
  Hexagon dest = Hexagon::H1;

  bool operator==(const Step&) const = default;
};

// A closed edge path in the dual graph of the hexagon complex. Because every
// hexagon has exactly one side on each standard curve, the path is determined
// by the hexagon it starts in and the sequence of curves it crosses.
class CurveWord {
public:
  CurveWord() = default;
  CurveWord(Hexagon start, std::vector<Curve> letters);

  // Hexagon occupied before the first step (= destination of the last step).
  Hexagon start() const { return start_; }
  const std::vector<Curve>& letters() const { return letters_; }
  const std::vector<Step>& steps() const { return steps_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  // Hexagon occupied just before step i.
  Hexagon hexagon_before(std::size_t i) const;
  CurveWord rotated(std::size_t k) const;
  CurveWord reversed() const;

  std::string to_string() const; // e.g. "H3:AXAX"

  bool operator==(const CurveWord&) const = default;

private:
  Hexagon start_ = Hexagon::H1;
  std::vector<Curve> letters_;
  std::vector<Step> steps_;
};

// Chain, parity and embeddability checks.
CurveWord validate(std::span<const Step> steps);

// Minimal position with respect to all six curves at once: repeatedly removes
// same-side arcs (D D) and vertex-spanning bigons (D u D with every letter of u
// meeting D), including across the cyclic seam.
CurveWord normalize(const CurveWord& w);

struct Counts {
  std::array<std::int64_t, 6> n{};

  std::int64_t operator[](Curve c) const { return n[curve_id(c)]; }
  std::int64_t a() const { return n[0]; }
  std::int64_t b() const { return n[1]; }
  std::int64_t c() const { return n[2]; }
  std::int64_t x() const { return n[3]; }
  std::int64_t y() const { return n[4]; }
  std::int64_t z() const { return n[5]; }
  std::int64_t abc_sum() const { return n[0] + n[1] + n[2]; }
  std::array<std::int64_t, 3> triple() const { return {n[0], n[1], n[2]}; }

  bool operator==(const Counts&) const = default;
};

Counts counts(const CurveWord& w);
bool is_separating(const CurveWord& w);

enum class ArcType { AA = 0, AB, AC, BB, BC, CC };
inline constexpr std::array<ArcType, 6> kAllArcTypes = {ArcType::AA, ArcType::AB, ArcType::AC,
                                                        ArcType::BB, ArcType::BC, ArcType::CC};
std::string arc_type_name(ArcType t);
ArcType arc_type_of(Curve a, Curve b);

// Pairs of arc types that cannot coexist on one pair of pants.
inline constexpr std::array<std::pair<ArcType, ArcType>, 6> kIncompatibleArcTypes = {{
    {ArcType::AA, ArcType::BB},
    {ArcType::AA, ArcType::BC},
    {ArcType::AA, ArcType::CC},
    {ArcType::AB, ArcType::CC},
    {ArcType::AC, ArcType::BB},
    {ArcType::BB, ArcType::CC},
}};

struct ArcCensus {
  // n[pants][type], pants 0 = Sigma_1.
  std::array<std::array<std::int64_t, 6>, 2> n{};

  std::int64_t operator()(int pants, ArcType t) const { return n[pants][static_cast<int>(t)]; }
  std::int64_t total(int pants) const;
  bool operator==(const ArcCensus&) const = default;
};

// A maximal sub-path between consecutive crossings of A, B or C.
struct Arc {
  Curve start_curve = Curve::A;
  Curve end_curve = Curve::A;
  Edge start_edge;
  Edge end_edge;
  int pants = 0;
  // Meridian crossings strictly inside the arc.
  std::vector<Step> interior;
  // Index (in the curve word) of the step crossing start_edge.
  std::size_t start_index = 0;

  ArcType type() const { return arc_type_of(start_curve, end_curve); }
};

// Arcs in curve order, starting with the arc after the first A/B/C crossing.
// Empty when the curve avoids A, B and C.
std::vector<Arc> split_arcs(const CurveWord& w);

ArcCensus arc_census(const CurveWord& w);

// Counts of normal arcs per hexagon and unordered pair of distinct curves.
struct NormalCoordinates {
  std::array<std::array<std::int64_t, 15>, 4> n{};

  static int pair_index(Curve p, Curve q);
  static std::pair<Curve, Curve> pair_curves(int index);

  std::int64_t& operator()(Hexagon h, Curve p, Curve q) { return n[hexagon_id(h)][pair_index(p, q)]; }
  std::int64_t operator()(Hexagon h, Curve p, Curve q) const {
    return n[hexagon_id(h)][pair_index(p, q)];
  }
  bool operator==(const NormalCoordinates&) const = default;
};

// Requires a word without same-side arcs.
NormalCoordinates to_normal_coordinates(const CurveWord& w);
std::vector<CurveWord> from_normal_coordinates(const NormalCoordinates& nc);

// Where a normal strand sits on its edge, used by rendering: for each hexagon,
// side position and ccw rank, the matched side position and rank.
struct StrandLayout {
  // ends[h][side] = list of (partner side, partner rank) in ccw order.
  std::array<std::array<std::vector<std::pair<int, int>>, 6>, 4> ends;
};
StrandLayout strand_layout(const NormalCoordinates& nc);

// Canonical representative of the free homotopy class of an unoriented curve:
// the rotation of the embedded form (either orientation) whose step tokens
// are lexicographically smallest. Equal for homotopic curves, so it decides
// isotopy of essential simple closed curves.
CurveWord canonical_form(const CurveWord& w);

// The crossing word of the closed geodesic in the hyperbolic metric built from
// regular right-angled hexagons: normalized and, for a simple curve, embedded.
CurveWord embedded_form(const CurveWord& w);

CurveWord standard_P();
// Pushoff of a standard curve into Sigma_1 / the front ball.
CurveWord pushoff(Curve c);

} // namespace goeritz
