#pragma once

#include "goeritz/curve.hpp"

#include <map>
#include <string>

namespace goeritz {

// Invariant bundle used as the equality test for curves. The canonical key
// alone already decides isotopy; the other fields make records readable.
struct CurveSignature {
  Counts counts;
  ArcCensus census;
  bool disk_v = false;
  bool disk_w = false;
  // Per pants: "A1-A2" style endpoint-edge pairs of the arcs, with multiplicity.
  std::array<std::map<std::string, int>, 2> arc_ends;
  std::string canonical; // CurveWord::to_string() of canonical_form

  bool operator==(const CurveSignature&) const = default;
};

CurveSignature signature(const CurveWord& w);

} // namespace goeritz
