#include "goeritz/mcg.hpp"

#include "goeritz/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace goeritz {

char generator_char(Generator g) {
  switch (g) {
  case Generator::Alpha: return 'a';
  case Generator::Beta: return 'b';
  case Generator::BetaInv: return 'B';
  case Generator::Gamma: return 'g';
  case Generator::Delta: return 'd';
  case Generator::DeltaInv: return 'D';
  }
  return '?';
}

Generator parse_generator_char(char ch) {
  for (Generator g : kAllGenerators) {
    if (generator_char(g) == ch) return g;
  }
  throw Error(ErrorCode::MalformedInput, std::string("unknown generator letter '") + ch + "'");
}

std::string generator_name(Generator g) {
  switch (g) {
  case Generator::Alpha: return "alpha";
  case Generator::Beta: return "beta";
  case Generator::BetaInv: return "beta_inv";
  case Generator::Gamma: return "gamma";
  case Generator::Delta: return "delta";
  case Generator::DeltaInv: return "delta_inv";
  }
  return "?";
}

Generator parse_generator_name(const std::string& name) {
  for (Generator g : kAllGenerators) {
    if (generator_name(g) == name) return g;
  }
  throw Error(ErrorCode::MalformedInput, "unknown generator '" + name + "'");
}

Generator inverse(Generator g) {
  switch (g) {
  case Generator::Beta: return Generator::BetaInv;
  case Generator::BetaInv: return Generator::Beta;
  case Generator::Delta: return Generator::DeltaInv;
  case Generator::DeltaInv: return Generator::Delta;
  default: return g;
  }
}

GoeritzWord parse_goeritz_word(const std::string& text) {
  GoeritzWord out;
  for (char ch : text) out.push_back(parse_generator_char(ch));
  return out;
}

std::string format_goeritz_word(const GoeritzWord& word) {
  std::string out;
  for (Generator g : word) out.push_back(generator_char(g));
  return out;
}

GoeritzWord inverse_word(const GoeritzWord& word) {
  GoeritzWord out;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

TwistSpec TwistSpec::about(Curve c, TwistDirection d) { return TwistSpec{pushoff(c), d}; }
TwistSpec TwistSpec::about_P(TwistDirection d) { return TwistSpec{standard_P(), d}; }

namespace {

struct Point {
  double x = 0, y = 0;
};

Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
double cross2(Point a, Point b) { return a.x * b.y - a.y * b.x; }

// Each hexagon is drawn as a regular hexagon; side i runs from corner i to
// corner i+1 counterclockwise.
Point corner(int k) {
  double angle = 2.0 * std::numbers::pi * k / 6.0;
  return {std::cos(angle), std::sin(angle)};
}

struct Chord {
  Point p, q;
  double from = 0, to = 0; // perimeter parameters in [0, 6)
};

// Point on the side of h carrying `e`, at parameter t along e (lo -> hi).
std::pair<Point, double> place(Hexagon h, const Edge& e, double t) {
  const auto& complex = SurfaceComplex::instance();
  int i = complex.side_position(h, e.curve);
  const auto& s = complex.sides(h);
  Vertex from = vertex_between(s[(i + 5) % 6].curve, s[i].curve);
  double along = from == complex.endpoints(e).first ? t : 1.0 - t;
  Point a = corner(i), b = corner(i + 1);
  return {{a.x + along * (b.x - a.x), a.y + along * (b.y - a.y)}, i + along};
}

// chords[i] is the piece of w in hexagon steps[i].dest, from crossing i to
// crossing i+1. Crossings of one edge are spread at (k + offset) / (count + 1).
std::vector<Chord> draw(const CurveWord& w, double offset) {
  const auto& steps = w.steps();
  std::array<int, 12> total{}, seen{};
  for (const Step& s : steps) ++total[s.edge.id()];
  std::vector<double> t(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    int id = steps[i].edge.id();
    t[i] = (seen[id]++ + offset) / (total[id] + 1);
  }
  std::vector<Chord> chords(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    std::size_t j = (i + 1) % steps.size();
    Hexagon h = steps[i].dest;
    auto [p, pf] = place(h, steps[i].edge, t[i]);
    auto [q, qf] = place(h, steps[j].edge, t[j]);
    chords[i] = Chord{p, q, pf, qf};
  }
  return chords;
}

bool chords_cross(const Chord& a, const Chord& b) {
  double lo = std::min(a.from, a.to), hi = std::max(a.from, a.to);
  bool c_in = lo < b.from && b.from < hi;
  bool d_in = lo < b.to && b.to < hi;
  return c_in != d_in;
}

} // namespace

CurveWord apply_twist(const CurveWord& input, const TwistSpec& spec) {
  const CurveWord& twist = spec.curve;
  if (twist.empty()) throw Error(ErrorCode::MalformedInput, "empty twisting curve");
  for (std::size_t i = 0; i < twist.size(); ++i) {
    if (twist.letters()[i] == twist.letters()[(i + 1) % twist.size()]) {
      throw Error(ErrorCode::MalformedInput, "twisting curve has a same-side arc");
    }
  }
  CurveWord w = normalize(input);
  // Irrational offset keeps the two curves' crossings apart on shared edges.
  constexpr double kOffset = 0.6180339887498949;
  std::vector<Chord> wc = draw(w, 1.0);
  std::vector<Chord> tc = draw(twist, kOffset);
  const std::size_t n = twist.size();
  const auto& tl = twist.letters();

  std::vector<Curve> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.push_back(w.letters()[i]);
    Hexagon h = w.steps()[i].dest;
    const Chord& c = wc[i];
    Point dq = c.q - c.p;
    std::vector<std::pair<double, std::vector<Curve>>> loops;
    for (std::size_t j = 0; j < n; ++j) {
      if (twist.steps()[j].dest != h || !chords_cross(c, tc[j])) continue;
      Point dt = tc[j].q - tc[j].p;
      double lambda = cross2(tc[j].p - c.p, dt) / cross2(dq, dt);
      // T passes from the right of w to its left: a left turn follows T forward.
      bool forward = (cross2(dq, dt) > 0) == (spec.direction == TwistDirection::Left);
      std::vector<Curve> loop;
      for (std::size_t k = 1; k <= n; ++k) {
        loop.push_back(forward ? tl[(j + k) % n] : tl[(j + n + 1 - k) % n]);
      }
      loops.emplace_back(lambda, std::move(loop));
    }
    std::sort(loops.begin(), loops.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [lambda, loop] : loops) out.insert(out.end(), loop.begin(), loop.end());
  }
  return normalize(CurveWord(w.start(), std::move(out)));
}

CurveWord apply_relabeling(const CurveWord& w, const Relabeling& r) {
  std::vector<Curve> letters;
  letters.reserve(w.size());
  for (Curve c : w.letters()) letters.push_back(r(c));
  return CurveWord(r(w.start()), std::move(letters));
}

CurveWord apply_generator(const CurveWord& w, Generator g) {
  switch (g) {
  case Generator::Alpha: return normalize(apply_relabeling(w, complex_symmetry(Symmetry::Alpha)));
  case Generator::Gamma: return normalize(apply_relabeling(w, complex_symmetry(Symmetry::Gamma)));
  case Generator::Delta: return normalize(apply_relabeling(w, complex_symmetry(Symmetry::Delta)));
  case Generator::DeltaInv: return normalize(apply_relabeling(w, complex_symmetry(Symmetry::DeltaInv)));
  case Generator::Beta:
  case Generator::BetaInv: {
    static const TwistSpec tb = TwistSpec::about(Curve::B, TwistDirection::Left);
    static const TwistSpec tz = TwistSpec::about(Curve::Z, TwistDirection::Left);
    static const TwistSpec tb_inv = TwistSpec::about(Curve::B, TwistDirection::Right);
    static const TwistSpec tz_inv = TwistSpec::about(Curve::Z, TwistDirection::Right);
    CurveWord r = normalize(w);
    for (int rep = 0; rep < 3; ++rep) {
      if (g == Generator::Beta) {
        r = apply_twist(apply_twist(r, tz), tb);
      } else {
        r = apply_twist(apply_twist(r, tb_inv), tz_inv);
      }
    }
    return r;
  }
  }
  throw Error(ErrorCode::MalformedInput, "unknown generator");
}

CurveWord apply_word(const CurveWord& w, const GoeritzWord& word) {
  CurveWord r = normalize(w);
  for (Generator g : word) r = apply_generator(r, g);
  return r;
}

CurveWord full_twist_P(const CurveWord& w) { return apply_twist(w, TwistSpec::about_P(TwistDirection::Left)); }

} // namespace goeritz
