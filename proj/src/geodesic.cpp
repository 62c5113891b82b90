// Embedded representatives via the hyperbolic structure.
//
// Gluing four regular right-angled hexagons gives a hyperbolic metric on the
// surface in which all six standard curves are geodesics. The universal cover
// is the tiling of H^2 by reflections in the sides of one hexagon, and a curve
// word is a gallery of tiles. The closed geodesic of the curve is the axis of
// the holonomy; reading the walls in the order the axis crosses them gives an
// embedded, minimal-position word. Two walls can only be crossed in a
// different order when they meet, i.e. when the letters commute, so sorting
// adjacent commuting pairs along the axis is enough.
//
// With cosh(side) = 2, a model with quadratic form -x0 y0 / 2 + x1 y1 + x2 y2
// puts every reflection matrix in Z[sqrt 3], so all sign tests are exact.

#include "goeritz/curve.hpp"
#include "goeritz/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>

namespace goeritz {

namespace {

using Int = boost::multiprecision::cpp_int;

// a + b sqrt(3)
struct Q3 {
  Int a = 0, b = 0;

  Q3 operator+(const Q3& o) const { return {a + o.a, b + o.b}; }
  Q3 operator-(const Q3& o) const { return {a - o.a, b - o.b}; }
  Q3 operator-() const { return {-a, -b}; }
  Q3 operator*(const Q3& o) const { return {a * o.a + 3 * b * o.b, a * o.b + b * o.a}; }
  bool is_zero() const { return a == 0 && b == 0; }

  int sign() const {
    int sa = a.sign(), sb = b.sign();
    if (sa == 0) return sb;
    if (sb == 0 || sa == sb) return sa;
    // Opposite signs: compare a^2 with 3 b^2.
    Int lhs = a * a, rhs = 3 * b * b;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
  }
};

using Vec = std::array<Q3, 3>;
using Mat = std::array<Vec, 3>;

Mat identity() {
  Mat m;
  for (int i = 0; i < 3; ++i) m[i][i] = Q3{1, 0};
  return m;
}

Mat operator*(const Mat& x, const Mat& y) {
  Mat out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Q3 s;
      for (int k = 0; k < 3; ++k) s = s + x[i][k] * y[k][j];
      out[i][j] = s;
    }
  }
  return out;
}

Vec operator*(const Mat& m, const Vec& v) {
  Vec out;
  for (int i = 0; i < 3; ++i) out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  return out;
}

Vec cross3(const Vec& u, const Vec& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

// Twice the quadratic form, applied to one argument: form(u, v) = u . lower(v).
Vec lower(const Vec& v) { return {-v[0], v[1] + v[1], v[2] + v[2]}; }

Q3 form(const Vec& u, const Vec& v) {
  Vec lv = lower(v);
  return u[0] * lv[0] + u[1] * lv[1] + u[2] * lv[2];
}

bool is_zero(const Vec& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

// Outward normal of the base tile's side at position j (counterclockwise,
// angle 60 j degrees), scaled by 2: (2, 2 cos, 2 sin).
Vec doubled_normal(int j) {
  static const std::array<Vec, 6> normals = {{
      {Q3{2, 0}, Q3{2, 0}, Q3{0, 0}},
      {Q3{2, 0}, Q3{1, 0}, Q3{0, 1}},
      {Q3{2, 0}, Q3{-1, 0}, Q3{0, 1}},
      {Q3{2, 0}, Q3{-2, 0}, Q3{0, 0}},
      {Q3{2, 0}, Q3{-1, 0}, Q3{0, -1}},
      {Q3{2, 0}, Q3{1, 0}, Q3{0, -1}},
  }};
  return normals[j];
}

struct Walls {
  std::array<Vec, 6> normal; // indexed by curve id
  std::array<Mat, 6> reflection;
};

const Walls& walls() {
  static const Walls w = [] {
    Walls out;
    const auto& sides = SurfaceComplex::instance().sides(Hexagon::H1);
    for (int j = 0; j < 6; ++j) {
      int id = curve_id(sides[j].curve);
      Vec n2 = doubled_normal(j);
      out.normal[id] = n2;
      // Reflection x - 2 <x,n> n / <n,n> with n = n2 / 2 and <n,n> = 1/2.
      Vec jn = {Q3{-1, 0}, n2[1], n2[2]};
      Mat r = identity();
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) r[a][b] = r[a][b] - n2[a] * jn[b];
      }
      out.reflection[id] = r;
    }
    return out;
  }();
  return w;
}

// Normal of the axis of the holonomy of the word: a fixed vector of g.
Vec axis_normal(const std::vector<Curve>& letters) {
  const Walls& W = walls();
  Mat g = identity();
  for (Curve c : letters) g = g * W.reflection[curve_id(c)];
  Mat m = g;
  for (int i = 0; i < 3; ++i) m[i][i] = m[i][i] - Q3{1, 0};
  for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
    Vec k = cross3(m[i], m[j]);
    if (!is_zero(k)) return k;
  }
  throw Error(ErrorCode::MalformedWord, "holonomy is not hyperbolic");
}

// One sweep over adjacent pairs; returns whether anything moved.
bool sweep(std::vector<Curve>& letters) {
  const Walls& W = walls();
  const Vec axis = lower(axis_normal(letters));
  bool moved = false;
  Mat prefix = identity();
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
    Curve d = letters[i], e = letters[i + 1];
    if (curves_intersect(d, e)) {
      Vec first = prefix * W.normal[curve_id(d)];
      Vec second = prefix * W.normal[curve_id(e)];
      // Where the axis meets the first wall, on the upper sheet.
      Vec p = cross3(axis, lower(first));
      if (form(p, p).sign() >= 0) throw Error(ErrorCode::MalformedWord, "axis misses a crossed wall");
      if (p[0].sign() < 0) p = {-p[0], -p[1], -p[2]};
      // Negative: still on the near side of the second wall, order is right.
      int side = form(p, second).sign();
      bool swap = side > 0 || (side == 0 && curve_id(e) < curve_id(d));
      if (swap) {
        std::swap(letters[i], letters[i + 1]);
        moved = true;
      }
    }
    prefix = prefix * W.reflection[curve_id(letters[i])];
  }
  return moved;
}

} // namespace

CurveWord embedded_form(const CurveWord& input) {
  CurveWord w = normalize(input);
  if (w.size() < 2) return w;
  Hexagon start = w.start();
  std::vector<Curve> letters = w.letters();
  std::size_t guard = 4 * letters.size() * letters.size() + 16;
  while (true) {
    bool moved = sweep(letters);
    // Rotate by one so the seam pair is swept as an interior pair next time.
    CurveWord rotated = CurveWord(start, letters).rotated(1);
    start = rotated.start();
    letters = rotated.letters();
    moved = sweep(letters) || moved;
    if (!moved) break;
    if (guard-- == 0) throw Error(ErrorCode::MalformedWord, "geodesic ordering did not settle");
  }
  return CurveWord(start, std::move(letters));
}

namespace {

std::string token_key(const CurveWord& w) {
  std::string out;
  out.reserve(w.size());
  for (const Step& s : w.steps()) out.push_back(static_cast<char>('0' + s.edge.id() * 4 + hexagon_id(s.dest)));
  return out;
}

} // namespace

CurveWord canonical_form(const CurveWord& input) {
  CurveWord w = normalize(input);
  std::vector<CurveWord> seeds{w, w.reversed()};
  // A curve all of whose letters meet D runs alongside D and can be slid
  // across it, changing the hexagons but not the letters.
  for (Curve d : kAllCurves) {
    bool alongside = std::all_of(w.letters().begin(), w.letters().end(),
                                 [d](Curve c) { return curves_intersect(c, d); });
    if (!alongside) continue;
    CurveWord slid(cross(w.start(), d), w.letters());
    seeds.push_back(slid);
    seeds.push_back(slid.reversed());
  }
  CurveWord best;
  std::string best_key;
  for (const CurveWord& seed : seeds) {
    CurveWord e = embedded_form(seed);
    for (std::size_t k = 0; k < e.size(); ++k) {
      CurveWord r = e.rotated(k);
      std::string key = token_key(r);
      if (best_key.empty() || key < best_key) {
        best_key = std::move(key);
        best = std::move(r);
      }
    }
  }
  return best;
}

} // namespace goeritz
