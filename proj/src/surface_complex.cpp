#include "goeritz/surface_complex.hpp"

#include "goeritz/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace goeritz {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
  case ErrorCode::MalformedInput: return "MalformedInput";
  case ErrorCode::MalformedWord: return "MalformedWord";
  case ErrorCode::NotEmbeddable: return "NotEmbeddable";
  case ErrorCode::ParityViolation: return "ParityViolation";
  case ErrorCode::EmptyAfterNormalization: return "EmptyAfterNormalization";
  case ErrorCode::InconsistentCoordinates: return "InconsistentCoordinates";
  case ErrorCode::TrichotomyViolation: return "TrichotomyViolation";
  case ErrorCode::NotReducing: return "NotReducing";
  case ErrorCode::BetaReductionFailure: return "BetaReductionFailure";
  case ErrorCode::IterationLimitExceeded: return "IterationLimitExceeded";
  case ErrorCode::ConstraintViolation: return "ConstraintViolation";
  case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

namespace {

// Counterclockwise side order of a positively oriented hexagon.
constexpr std::array<Curve, 6> kPositiveOrder = {Curve::A, Curve::Z, Curve::B,
                                                 Curve::X, Curve::C, Curve::Y};

int edge_index_in(Hexagon h, Curve c) {
  return in_separating_system(c) ? ball_side(h) + 1 : pants_side(h) + 1;
}

} // namespace

bool curves_intersect(Curve a, Curve b) {
  for (int i = 0; i < 6; ++i) {
    Curve p = kPositiveOrder[i];
    Curve q = kPositiveOrder[(i + 1) % 6];
    if ((p == a && q == b) || (p == b && q == a)) return true;
  }
  return false;
}

std::array<Curve, 2> intersecting_curves(Curve c) {
  for (int i = 0; i < 6; ++i) {
    if (kPositiveOrder[i] == c) return {kPositiveOrder[(i + 5) % 6], kPositiveOrder[(i + 1) % 6]};
  }
  return {c, c};
}

char curve_char(Curve c) { return "ABCXYZ"[curve_id(c)]; }

Curve parse_curve(char ch) {
  switch (ch) {
  case 'A': return Curve::A;
  case 'B': return Curve::B;
  case 'C': return Curve::C;
  case 'X': return Curve::X;
  case 'Y': return Curve::Y;
  case 'Z': return Curve::Z;
  default: throw Error(ErrorCode::MalformedInput, std::string("unknown curve letter '") + ch + "'");
  }
}

std::string hexagon_name(Hexagon h) { return "H" + std::to_string(hexagon_id(h) + 1); }

Hexagon parse_hexagon(std::string_view token) {
  if (token.size() == 2 && token[0] == 'H' && token[1] >= '1' && token[1] <= '4') {
    return static_cast<Hexagon>(token[1] - '1');
  }
  throw Error(ErrorCode::MalformedInput, "bad hexagon token '" + std::string(token) + "'");
}

std::string Vertex::name() const { return {curve_char(separating), curve_char(meridian)}; }

Vertex vertex_between(Curve a, Curve b) {
  if (!curves_intersect(a, b)) {
    throw Error(ErrorCode::MalformedInput,
                std::string("curves ") + curve_char(a) + " and " + curve_char(b) + " are disjoint");
  }
  return in_separating_system(a) ? Vertex{a, b} : Vertex{b, a};
}

std::string Edge::name() const { return std::string(1, curve_char(curve)) + std::to_string(index); }

Edge parse_edge(std::string_view token) {
  if (token.size() != 2 || (token[1] != '1' && token[1] != '2')) {
    throw Error(ErrorCode::MalformedInput, "bad edge token '" + std::string(token) + "'");
  }
  return Edge{parse_curve(token[0]), token[1] - '0'};
}

Edge edge_from_id(int id) { return Edge{static_cast<Curve>(id / 2), id % 2 + 1}; }

const SurfaceComplex& SurfaceComplex::instance() {
  static const SurfaceComplex complex;
  return complex;
}

const SurfaceComplex& build_complex() { return SurfaceComplex::instance(); }

SurfaceComplex::SurfaceComplex() {
  for (Curve s : {Curve::A, Curve::B, Curve::C}) {
    for (Curve m : {Curve::X, Curve::Y, Curve::Z}) {
      if (curves_intersect(s, m)) vertices_.push_back(Vertex{s, m});
    }
  }
  for (Curve c : kAllCurves) {
    edges_.push_back(Edge{c, 1});
    edges_.push_back(Edge{c, 2});
  }
  for (Hexagon h : kAllHexagons) {
    hexagons_.push_back(h);
    auto& sides = sides_[hexagon_id(h)];
    for (int i = 0; i < 6; ++i) {
      // Reversed hexagons read the positive order backwards, starting at A.
      Curve c = orientation_sign(h) > 0 ? kPositiveOrder[i] : kPositiveOrder[(6 - i) % 6];
      sides[i] = Edge{c, edge_index_in(h, c)};
    }
  }
}

Edge SurfaceComplex::side_on(Hexagon h, Curve c) const { return Edge{c, edge_index_in(h, c)}; }

int SurfaceComplex::side_position(Hexagon h, Curve c) const {
  const auto& s = sides(h);
  for (int i = 0; i < 6; ++i) {
    if (s[i].curve == c) return i;
  }
  return -1;
}

bool SurfaceComplex::is_side(Hexagon h, const Edge& e) const { return side_on(h, e.curve) == e; }

std::pair<Hexagon, Hexagon> SurfaceComplex::adjacent_hexagons(const Edge& e) const {
  std::vector<Hexagon> found;
  for (Hexagon h : kAllHexagons) {
    if (is_side(h, e)) found.push_back(h);
  }
  return {found.at(0), found.at(1)};
}

Hexagon SurfaceComplex::other_hexagon(const Edge& e, Hexagon h) const {
  if (!is_side(h, e)) {
    throw Error(ErrorCode::MalformedWord, e.name() + " is not a side of " + hexagon_name(h));
  }
  return cross(h, e.curve);
}

std::pair<Vertex, Vertex> SurfaceComplex::endpoints(const Edge& e) const {
  auto [p, q] = intersecting_curves(e.curve);
  Vertex u = vertex_between(e.curve, p);
  Vertex v = vertex_between(e.curve, q);
  if (v.name() < u.name()) std::swap(u, v);
  return {u, v};
}

int SurfaceComplex::euler_characteristic() const {
  return static_cast<int>(vertices_.size()) - static_cast<int>(edges_.size()) +
         static_cast<int>(hexagons_.size());
}

bool SurfaceComplex::is_orientable() const {
  // Each edge must be traversed in opposite directions by its two hexagons.
  std::map<int, std::vector<std::pair<std::string, std::string>>> traversals;
  for (Hexagon h : hexagons_) {
    const auto& s = sides(h);
    for (int i = 0; i < 6; ++i) {
      Vertex from = vertex_between(s[(i + 5) % 6].curve, s[i].curve);
      Vertex to = vertex_between(s[i].curve, s[(i + 1) % 6].curve);
      traversals[s[i].id()].emplace_back(from.name(), to.name());
    }
  }
  for (const auto& [id, t] : traversals) {
    if (t.size() != 2) return false;
    if (t[0].first != t[1].second || t[0].second != t[1].first) return false;
  }
  return true;
}

Symmetry parse_symmetry(std::string_view label) {
  if (label == "alpha") return Symmetry::Alpha;
  if (label == "gamma") return Symmetry::Gamma;
  if (label == "delta") return Symmetry::Delta;
  if (label == "delta_inv") return Symmetry::DeltaInv;
  throw Error(ErrorCode::MalformedInput, "not a relabeling symmetry: '" + std::string(label) + "'");
}

Edge Relabeling::operator()(const Edge& e) const {
  const auto& complex = SurfaceComplex::instance();
  Hexagon h = complex.adjacent_hexagons(e).first;
  return complex.side_on((*this)(h), (*this)(e.curve));
}

Relabeling Relabeling::operator*(const Relabeling& other) const {
  Relabeling r;
  for (Curve c : kAllCurves) r.curve_map[curve_id(c)] = (*this)(other(c));
  for (Hexagon h : kAllHexagons) r.hexagon_map[hexagon_id(h)] = (*this)(other(h));
  return r;
}

Relabeling Relabeling::identity() {
  Relabeling r;
  r.curve_map = kAllCurves;
  r.hexagon_map = kAllHexagons;
  return r;
}

bool Relabeling::is_automorphism() const {
  const auto& complex = SurfaceComplex::instance();
  std::set<Curve> curve_image(curve_map.begin(), curve_map.end());
  std::set<Hexagon> hex_image(hexagon_map.begin(), hexagon_map.end());
  if (curve_image.size() != 6 || hex_image.size() != 4) return false;
  for (const Edge& e : complex.edges()) {
    auto [h1, h2] = complex.adjacent_hexagons(e);
    Edge img = complex.side_on((*this)(h1), (*this)(e.curve));
    if (complex.side_on((*this)(h2), (*this)(e.curve)) != img) return false;
    auto [g1, g2] = complex.adjacent_hexagons(img);
    std::set<Hexagon> want{g1, g2}, got{(*this)(h1), (*this)(h2)};
    if (want != got) return false;
  }
  for (Hexagon h : kAllHexagons) {
    const auto& src = complex.sides(h);
    const auto& dst = complex.sides((*this)(h));
    int offset = complex.side_position((*this)(h), (*this)(src[0].curve));
    bool forward = true, backward = true;
    for (int i = 0; i < 6; ++i) {
      Edge mapped = (*this)(src[i]);
      forward = forward && dst[(offset + i) % 6] == mapped;
      backward = backward && dst[(offset - i + 6) % 6] == mapped;
    }
    if (!forward && !backward) return false;
  }
  return true;
}

bool Relabeling::preserves_orientation() const {
  const auto& complex = SurfaceComplex::instance();
  for (Hexagon h : kAllHexagons) {
    const auto& src = complex.sides(h);
    const auto& dst = complex.sides((*this)(h));
    int offset = complex.side_position((*this)(h), (*this)(src[0].curve));
    for (int i = 0; i < 6; ++i) {
      if (dst[(offset + i) % 6] != (*this)(src[i])) return false;
    }
  }
  return true;
}

Relabeling complex_symmetry(Symmetry g) {
  using C = Curve;
  using H = Hexagon;
  Relabeling r;
  switch (g) {
  case Symmetry::Alpha:
    r.curve_map = kAllCurves;
    r.hexagon_map = {H::H4, H::H3, H::H2, H::H1};
    return r;
  case Symmetry::Gamma:
    r.curve_map = {C::A, C::C, C::B, C::X, C::Z, C::Y};
    r.hexagon_map = {H::H2, H::H1, H::H4, H::H3};
    return r;
  case Symmetry::Delta:
    r.curve_map = {C::B, C::C, C::A, C::Y, C::Z, C::X};
    r.hexagon_map = kAllHexagons;
    return r;
  case Symmetry::DeltaInv:
    r.curve_map = {C::C, C::A, C::B, C::Z, C::X, C::Y};
    r.hexagon_map = kAllHexagons;
    return r;
  }
  return Relabeling::identity();
}

} // namespace goeritz
