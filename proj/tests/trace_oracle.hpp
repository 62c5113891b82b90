#pragma once

// Independent canonical form used to cross-check the geodesic one: the
// lexicographic normal form of the periodic trace (Cartier-Foata style), cut at
// occurrences of the rarest letter. Letters commute iff their curves meet.

#include "goeritz/curve.hpp"
#include "goeritz/error.hpp"

#include <optional>
#include <string>

namespace oracle {

using namespace goeritz;

inline bool dependent(Curve a, Curve b) { return a == b || !curves_intersect(a, b); }

struct Candidate {
  std::string letters;
  Hexagon start;

  auto operator<=>(const Candidate&) const = default;
};

// Lexicographic normal form of the trace cut out between the principal
// ideals below occurrence p and below occurrence p + n of the periodic word.
inline Candidate block_candidate(const CurveWord& w, std::size_t p) {
  const auto& L = w.letters();
  const std::int64_t n = static_cast<std::int64_t>(L.size());
  auto letter = [&](std::int64_t i) { return L[static_cast<std::size_t>(((i % n) + n) % n)]; };

  for (std::int64_t periods = 8;; periods *= 2) {
    const std::int64_t lo = static_cast<std::int64_t>(p) - periods * n;
    const std::int64_t hi = static_cast<std::int64_t>(p) + n;
    const std::size_t width = static_cast<std::size_t>(hi - lo + 1);

    auto down_set = [&](std::int64_t top) {
      std::vector<bool> in(width, false);
      std::array<bool, 6> seen{};
      for (std::int64_t i = top; i >= lo; --i) {
        Curve c = letter(i);
        bool member = (i == top);
        for (Curve t : kAllCurves) {
          if (seen[curve_id(t)] && dependent(c, t)) member = true;
        }
        if (member) {
          in[static_cast<std::size_t>(i - lo)] = true;
          seen[curve_id(c)] = true;
        }
      }
      return in;
    };
    std::vector<bool> lower = down_set(static_cast<std::int64_t>(p));
    std::vector<bool> upper = down_set(hi);

    // The window must reach below the point where the ideals become full.
    bool saturated = true;
    for (std::int64_t i = lo; i < lo + n; ++i) {
      if (!lower[static_cast<std::size_t>(i - lo)]) saturated = false;
    }
    if (!saturated) {
      if (periods > 1024) throw Error(ErrorCode::MalformedWord, "letter dependence is disconnected");
      continue;
    }

    // Hexagon at the cut: parity of the symmetric difference with {i < 0}.
    Hexagon start = w.start();
    std::vector<std::int64_t> block;
    for (std::int64_t i = lo; i <= hi; ++i) {
      bool in_lower = lower[static_cast<std::size_t>(i - lo)];
      if (in_lower != (i < 0)) start = cross(start, letter(i));
      if (upper[static_cast<std::size_t>(i - lo)] && !in_lower) block.push_back(i);
    }
    if (static_cast<std::int64_t>(block.size()) != n) {
      throw Error(ErrorCode::MalformedWord, "inconsistent periodic block");
    }

    std::array<std::vector<std::int64_t>, 6> queues;
    for (std::int64_t i : block) queues[curve_id(letter(i))].push_back(i);
    std::array<std::size_t, 6> head{};
    Candidate cand{std::string(), start};
    cand.letters.reserve(block.size());
    for (std::int64_t step = 0; step < n; ++step) {
      int pick = -1;
      for (int t = 0; t < 6 && pick < 0; ++t) {
        if (head[t] >= queues[t].size()) continue;
        std::int64_t pos = queues[t][head[t]];
        bool minimal = true;
        for (int u = 0; u < 6; ++u) {
          if (u == t || head[u] >= queues[u].size()) continue;
          if (dependent(static_cast<Curve>(t), static_cast<Curve>(u)) && queues[u][head[u]] < pos) {
            minimal = false;
          }
        }
        if (minimal) pick = t;
      }
      ++head[pick];
      cand.letters.push_back(curve_char(static_cast<Curve>(pick)));
    }
    return cand;
  }
}

inline CurveWord trace_canonical_form(const CurveWord& w) {
  if (w.empty()) return w;
  Counts k = counts(w);
  // Cut only at occurrences of the rarest letter (ties: earliest letter).
  Curve pivot = Curve::A;
  std::int64_t best_count = -1;
  for (Curve c : kAllCurves) {
    if (k[c] > 0 && (best_count < 0 || k[c] < best_count)) {
      best_count = k[c];
      pivot = c;
    }
  }
  // A word whose letters all meet some curve D can be slid across D.
  std::vector<Curve> strip;
  for (Curve d : kAllCurves) {
    bool all = true;
    for (Curve c : kAllCurves) {
      if (k[c] > 0 && !curves_intersect(c, d)) all = false;
    }
    if (all) strip.push_back(d);
  }

  std::optional<Candidate> best;
  for (const CurveWord& oriented : {w, w.reversed()}) {
    std::vector<CurveWord> variants{oriented};
    for (Curve d : strip) variants.emplace_back(cross(oriented.start(), d), oriented.letters());
    for (const CurveWord& v : variants) {
      for (std::size_t p = 0; p < v.size(); ++p) {
        if (v.letters()[p] != pivot) continue;
        Candidate c = block_candidate(v, p);
        if (!best || c < *best) best = std::move(c);
      }
    }
  }
  std::vector<Curve> letters;
  for (char ch : best->letters) letters.push_back(parse_curve(ch));
  return CurveWord(best->start, std::move(letters));
}


} // namespace oracle
