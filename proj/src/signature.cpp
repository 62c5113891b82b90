#include "goeritz/signature.hpp"

#include "goeritz/handlebody.hpp"

namespace goeritz {

CurveSignature signature(const CurveWord& w) {
  CurveWord c = canonical_form(w);
  CurveSignature s;
  s.counts = counts(c);
  s.census = arc_census(c);
  s.disk_v = bounds_disk(c, Side::V);
  s.disk_w = bounds_disk(c, Side::W);
  for (const Arc& arc : split_arcs(c)) {
    std::string p = arc.start_edge.name(), q = arc.end_edge.name();
    if (q < p) std::swap(p, q);
    s.arc_ends[arc.pants][p + "-" + q] += 1;
  }
  s.canonical = c.to_string();
  return s;
}

} // namespace goeritz
