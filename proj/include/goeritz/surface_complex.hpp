#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace goeritz {

// The six standard curves. A, B, C bound disks in W and cut the surface into
// the pants Sigma_1, Sigma_2; X, Y, Z bound disks in V and cut it into the
// front and back pants.
enum class Curve : std::uint8_t { A = 0, B, C, X, Y, Z };

inline constexpr std::array<Curve, 6> kAllCurves = {Curve::A, Curve::B, Curve::C,
                                                    Curve::X, Curve::Y, Curve::Z};

enum class CurveSystem { Separating, Meridian };

constexpr int curve_id(Curve c) { return static_cast<int>(c); }
constexpr CurveSystem curve_system(Curve c) {
  return curve_id(c) < 3 ? CurveSystem::Separating : CurveSystem::Meridian;
}
constexpr bool in_separating_system(Curve c) { return curve_id(c) < 3; }

// A<->X, B<->Y, C<->Z.
constexpr Curve avoided_partner(Curve c) { return static_cast<Curve>((curve_id(c) + 3) % 6); }

// Two distinct standard curves meet (exactly once) iff they are neighbours in
// the cycle A-Z-B-X-C-Y. These are also the pairs of letters that commute.
bool curves_intersect(Curve a, Curve b);

char curve_char(Curve c);
Curve parse_curve(char ch);

// Curves are pairwise intersecting across systems except for the partner.
std::array<Curve, 2> intersecting_curves(Curve c);

enum class Hexagon : std::uint8_t { H1 = 0, H2, H3, H4 };

inline constexpr std::array<Hexagon, 4> kAllHexagons = {Hexagon::H1, Hexagon::H2, Hexagon::H3,
                                                        Hexagon::H4};

constexpr int hexagon_id(Hexagon h) { return static_cast<int>(h); }
// 0 for Sigma_1, 1 for Sigma_2.
constexpr int pants_side(Hexagon h) { return hexagon_id(h) >> 1; }
// 0 for the front ball of V, 1 for the back ball.
constexpr int ball_side(Hexagon h) { return hexagon_id(h) & 1; }
// +1 when the counterclockwise side order is A,Z,B,X,C,Y; -1 when reversed.
constexpr int orientation_sign(Hexagon h) { return ((pants_side(h) + ball_side(h)) & 1) ? -1 : 1; }

// Crossing a curve of the separating system switches pants; a meridian
// switches balls.
constexpr Hexagon cross(Hexagon h, Curve c) {
  return static_cast<Hexagon>(hexagon_id(h) ^ (in_separating_system(c) ? 2 : 1));
}

std::string hexagon_name(Hexagon h);
Hexagon parse_hexagon(std::string_view token);

struct Vertex {
  Curve separating; // one of A, B, C
  Curve meridian;   // one of X, Y, Z

  auto operator<=>(const Vertex&) const = default;
  std::string name() const;
};

Vertex vertex_between(Curve a, Curve b);

struct Edge {
  Curve curve = Curve::A;
  int index = 1; // 1 or 2

  auto operator<=>(const Edge&) const = default;
  int id() const { return curve_id(curve) * 2 + (index - 1); }
  std::string name() const;
};

Edge parse_edge(std::string_view token);
Edge edge_from_id(int id);

class SurfaceComplex {
public:
  static const SurfaceComplex& instance();

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Hexagon>& hexagons() const { return hexagons_; }

  // Counterclockwise sides with respect to the surface orientation.
  const std::array<Edge, 6>& sides(Hexagon h) const { return sides_[hexagon_id(h)]; }
  // The side of h lying on curve c.
  Edge side_on(Hexagon h, Curve c) const;
  // Position of the curve c among the oriented sides of h.
  int side_position(Hexagon h, Curve c) const;
  std::pair<Hexagon, Hexagon> adjacent_hexagons(const Edge& e) const;
  bool is_side(Hexagon h, const Edge& e) const;
  Hexagon other_hexagon(const Edge& e, Hexagon h) const;
  // Endpoints ordered (lower-named vertex first); edge positions run lo -> hi.
  std::pair<Vertex, Vertex> endpoints(const Edge& e) const;

  int euler_characteristic() const;
  bool is_orientable() const;

private:
  SurfaceComplex();

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Hexagon> hexagons_;
  std::array<std::array<Edge, 6>, 4> sides_{};
};

const SurfaceComplex& build_complex();

enum class Symmetry { Alpha, Gamma, Delta, DeltaInv };

Symmetry parse_symmetry(std::string_view label);

// A cellular automorphism given by a permutation of curves and of hexagons.
// Edge indices follow from the hexagon map.
struct Relabeling {
  std::array<Curve, 6> curve_map{};
  std::array<Hexagon, 4> hexagon_map{};

  Curve operator()(Curve c) const { return curve_map[curve_id(c)]; }
  Hexagon operator()(Hexagon h) const { return hexagon_map[hexagon_id(h)]; }
  Edge operator()(const Edge& e) const;

  // (this * other)(x) = this(other(x)).
  Relabeling operator*(const Relabeling& other) const;
  bool operator==(const Relabeling&) const = default;

  static Relabeling identity();
  // Preserves adjacency and cyclic side orders up to rotation/reflection.
  bool is_automorphism() const;
  bool preserves_orientation() const;
};

Relabeling complex_symmetry(Symmetry g);

} // namespace goeritz
