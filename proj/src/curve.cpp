#include "goeritz/curve.hpp"

#include "goeritz/error.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace goeritz {

namespace {

// Letters commute exactly when the curves meet: the square around the vertex.
bool commute(Curve a, Curve b) { return curves_intersect(a, b); }

char step_code(const Step& s) {
  return static_cast<char>('0' + s.edge.id() * 4 + hexagon_id(s.dest));
}

std::string step_string(const std::vector<Step>& steps) {
  std::string out;
  out.reserve(steps.size());
  for (const Step& s : steps) out.push_back(step_code(s));
  return out;
}

bool same_cyclic_curve(const CurveWord& u, const CurveWord& v) {
  if (u.size() != v.size()) return false;
  std::string su = step_string(u.steps());
  std::string doubled = su + su;
  if (doubled.find(step_string(v.steps())) != std::string::npos) return true;
  return doubled.find(step_string(v.reversed().steps())) != std::string::npos;
}

// One pass of free reduction in the right-angled Coxeter group: a new letter
// cancels against the last occurrence of itself if only commuting letters lie
// in between.
std::vector<Curve> reduce_linear(const std::vector<Curve>& in) {
  std::vector<Curve> out;
  out.reserve(in.size());
  for (Curve d : in) {
    bool cancelled = false;
    for (std::size_t k = out.size(); k-- > 0;) {
      if (out[k] == d) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(k));
        cancelled = true;
        break;
      }
      if (!commute(out[k], d)) break;
    }
    if (!cancelled) out.push_back(d);
  }
  return out;
}

std::optional<std::size_t> front_movable(const std::vector<Curve>& w, Curve d) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == d) return i;
    if (!commute(w[i], d)) return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::size_t> back_movable(const std::vector<Curve>& w, Curve d) {
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] == d) return i;
    if (!commute(w[i], d)) return std::nullopt;
  }
  return std::nullopt;
}

bool interleave(int i, int j, int k, int l) {
  if (i > j) std::swap(i, j);
  if (k > l) std::swap(k, l);
  if (i == k || i == l || j == k || j == l) return false;
  bool k_in = i < k && k < j;
  bool l_in = i < l && l < j;
  return k_in != l_in;
}

void check_chords_planar(const NormalCoordinates& nc) {
  const auto& complex = SurfaceComplex::instance();
  for (Hexagon h : kAllHexagons) {
    std::vector<std::pair<int, int>> chords;
    for (int idx = 0; idx < 15; ++idx) {
      if (nc.n[hexagon_id(h)][idx] <= 0) continue;
      auto [p, q] = NormalCoordinates::pair_curves(idx);
      chords.emplace_back(complex.side_position(h, p), complex.side_position(h, q));
    }
    for (std::size_t a = 0; a < chords.size(); ++a) {
      for (std::size_t b = a + 1; b < chords.size(); ++b) {
        if (interleave(chords[a].first, chords[a].second, chords[b].first, chords[b].second)) {
          throw Error(ErrorCode::NotEmbeddable, "interleaving chords in " + hexagon_name(h));
        }
      }
    }
  }
}

// Rank along the edge (lo -> hi) of the r-th of m strand ends counted ccw on
// side `pos` of h.
std::int64_t edge_rank(Hexagon h, int pos, std::int64_t r, std::int64_t m) {
  const auto& complex = SurfaceComplex::instance();
  const auto& s = complex.sides(h);
  Vertex from = vertex_between(s[(pos + 5) % 6].curve, s[pos].curve);
  return from == complex.endpoints(s[pos]).first ? r : m - 1 - r;
}

} // namespace

CurveWord::CurveWord(Hexagon start, std::vector<Curve> letters)
    : start_(start), letters_(std::move(letters)) {
  const auto& complex = SurfaceComplex::instance();
  steps_.reserve(letters_.size());
  Hexagon h = start_;
  for (Curve c : letters_) {
    Edge e = complex.side_on(h, c);
    h = cross(h, c);
    steps_.push_back(Step{e, h});
  }
  if (h != start_) throw Error(ErrorCode::ParityViolation, "letter sequence does not close up");
}

Hexagon CurveWord::hexagon_before(std::size_t i) const {
  if (i == 0 || steps_.empty()) return start_;
  return steps_[i - 1].dest;
}

CurveWord CurveWord::rotated(std::size_t k) const {
  if (letters_.empty()) return *this;
  k %= letters_.size();
  std::vector<Curve> r(letters_.begin() + static_cast<std::ptrdiff_t>(k), letters_.end());
  r.insert(r.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(k));
  return CurveWord(hexagon_before(k), std::move(r));
}

CurveWord CurveWord::reversed() const {
  std::vector<Curve> r(letters_.rbegin(), letters_.rend());
  return CurveWord(start_, std::move(r));
}

std::string CurveWord::to_string() const {
  std::string out = hexagon_name(start_) + ":";
  for (Curve c : letters_) out.push_back(curve_char(c));
  return out;
}

CurveWord validate(std::span<const Step> steps) {
  if (steps.empty()) throw Error(ErrorCode::MalformedWord, "empty step list");
  std::size_t separating = 0;
  for (const Step& s : steps) separating += in_separating_system(s.edge.curve) ? 1 : 0;
  if (separating % 2 != 0 || (steps.size() - separating) % 2 != 0) {
    throw Error(ErrorCode::ParityViolation, "odd number of crossings with one of the systems");
  }
  const auto& complex = SurfaceComplex::instance();
  std::vector<Curve> letters;
  letters.reserve(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    Hexagon prev = steps[(i + steps.size() - 1) % steps.size()].dest;
    const Step& s = steps[i];
    if (!complex.is_side(prev, s.edge) || s.dest != cross(prev, s.edge.curve)) {
      throw Error(ErrorCode::MalformedWord,
                  "step " + std::to_string(i) + " (" + s.edge.name() + "," + hexagon_name(s.dest) +
                      ") does not continue from " + hexagon_name(prev));
    }
    letters.push_back(s.edge.curve);
  }
  CurveWord w(steps.back().dest, std::move(letters));

  bool has_spur = false;
  NormalCoordinates nc;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Curve p = w.letters()[i];
    Curve q = w.letters()[(i + 1) % w.size()];
    if (p == q) {
      has_spur = true;
      continue;
    }
    nc(w.steps()[i].dest, p, q) += 1;
  }
  check_chords_planar(nc);
  if (!has_spur) {
    auto components = from_normal_coordinates(nc);
    if (components.size() != 1 || !same_cyclic_curve(components.front(), w)) {
      throw Error(ErrorCode::NotEmbeddable, "word does not trace a simple closed curve");
    }
  }
  return w;
}

CurveWord normalize(const CurveWord& w) {
  Hexagon start = w.start();
  std::vector<Curve> letters = reduce_linear(w.letters());
  bool changed = true;
  while (changed && !letters.empty()) {
    changed = false;
    for (Curve d : kAllCurves) {
      auto first = front_movable(letters, d);
      auto last = back_movable(letters, d);
      if (!first || !last || *first == *last) continue;
      // Conjugate by d: rotate the leading d to the end where it cancels.
      letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(*last));
      letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(*first));
      start = cross(start, d);
      changed = true;
      break;
    }
  }
  if (letters.empty()) {
    throw Error(ErrorCode::EmptyAfterNormalization, "curve is null-homotopic");
  }
  return CurveWord(start, std::move(letters));
}

Counts counts(const CurveWord& w) {
  Counts out;
  for (Curve c : w.letters()) out.n[curve_id(c)] += 1;
  return out;
}

bool is_separating(const CurveWord& w) {
  // Mod-2 intersection with the symplectic pairs (B,Z), (C,Y).
  Counts k = counts(w);
  return k.b() % 2 == 0 && k.c() % 2 == 0 && k.y() % 2 == 0 && k.z() % 2 == 0;
}

std::string arc_type_name(ArcType t) {
  static const std::array<const char*, 6> names = {"AA", "AB", "AC", "BB", "BC", "CC"};
  return names[static_cast<int>(t)];
}

ArcType arc_type_of(Curve a, Curve b) {
  if (!in_separating_system(a) || !in_separating_system(b)) {
    throw Error(ErrorCode::MalformedInput, "arc ends must lie on A, B or C");
  }
  int i = std::min(curve_id(a), curve_id(b));
  int j = std::max(curve_id(a), curve_id(b));
  static const int table[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  return static_cast<ArcType>(table[i][j]);
}

std::int64_t ArcCensus::total(int pants) const {
  std::int64_t t = 0;
  for (auto v : n[pants]) t += v;
  return t;
}

std::vector<Arc> split_arcs(const CurveWord& w) {
  std::vector<std::size_t> cuts;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (in_separating_system(w.letters()[i])) cuts.push_back(i);
  }
  std::vector<Arc> arcs;
  if (cuts.empty()) return arcs;
  const auto& steps = w.steps();
  for (std::size_t t = 0; t < cuts.size(); ++t) {
    std::size_t from = cuts[t];
    std::size_t to = cuts[(t + 1) % cuts.size()];
    Arc arc;
    arc.start_curve = steps[from].edge.curve;
    arc.end_curve = steps[to].edge.curve;
    arc.start_edge = steps[from].edge;
    arc.end_edge = steps[to].edge;
    arc.pants = pants_side(steps[from].dest);
    arc.start_index = from;
    for (std::size_t k = (from + 1) % w.size(); k != to; k = (k + 1) % w.size()) {
      arc.interior.push_back(steps[k]);
    }
    arcs.push_back(std::move(arc));
  }
  return arcs;
}

ArcCensus arc_census(const CurveWord& w) {
  ArcCensus census;
  for (const Arc& arc : split_arcs(w)) census.n[arc.pants][static_cast<int>(arc.type())] += 1;
  for (int pants = 0; pants < 2; ++pants) {
    for (auto [s, t] : kIncompatibleArcTypes) {
      if (census(pants, s) > 0 && census(pants, t) > 0) {
        throw Error(ErrorCode::NotEmbeddable, arc_type_name(s) + " and " + arc_type_name(t) +
                                                  " arcs on Sigma_" + std::to_string(pants + 1));
      }
    }
  }
  return census;
}

int NormalCoordinates::pair_index(Curve p, Curve q) {
  int i = curve_id(p), j = curve_id(q);
  if (i == j) throw Error(ErrorCode::MalformedInput, "normal arcs join distinct sides");
  if (i > j) std::swap(i, j);
  // Row-major index into the strict upper triangle of a 6x6 table.
  return i * 6 - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<Curve, Curve> NormalCoordinates::pair_curves(int index) {
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (pair_index(static_cast<Curve>(i), static_cast<Curve>(j)) == index) {
        return {static_cast<Curve>(i), static_cast<Curve>(j)};
      }
    }
  }
  throw Error(ErrorCode::MalformedInput, "bad side-pair index");
}

NormalCoordinates to_normal_coordinates(const CurveWord& w) {
  NormalCoordinates nc;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Curve p = w.letters()[i];
    Curve q = w.letters()[(i + 1) % w.size()];
    if (p == q) throw Error(ErrorCode::MalformedWord, "same-side arc; normalize first");
    nc(w.steps()[i].dest, p, q) += 1;
  }
  return nc;
}

StrandLayout strand_layout(const NormalCoordinates& nc) {
  const auto& complex = SurfaceComplex::instance();
  StrandLayout layout;
  for (Hexagon h : kAllHexagons) {
    const auto& s = complex.sides(h);
    auto& ends = layout.ends[hexagon_id(h)];
    // Group offsets: on side i, ends heading to side (i+d) for d = 5..1.
    std::array<std::array<std::int64_t, 6>, 6> group_start{};
    std::array<std::array<std::int64_t, 6>, 6> group_size{};
    for (int i = 0; i < 6; ++i) {
      std::int64_t offset = 0;
      for (int d = 5; d >= 1; --d) {
        int j = (i + d) % 6;
        group_start[i][j] = offset;
        group_size[i][j] = nc(h, s[i].curve, s[j].curve);
        offset += group_size[i][j];
      }
      ends[i].resize(static_cast<std::size_t>(offset));
    }
    for (int i = 0; i < 6; ++i) {
      for (int d = 5; d >= 1; --d) {
        int j = (i + d) % 6;
        std::int64_t cnt = group_size[i][j];
        for (std::int64_t k = 0; k < cnt; ++k) {
          ends[i][static_cast<std::size_t>(group_start[i][j] + k)] = {
              j, static_cast<int>(group_start[j][i] + cnt - 1 - k)};
        }
      }
    }
  }
  return layout;
}

std::vector<CurveWord> from_normal_coordinates(const NormalCoordinates& nc) {
  const auto& complex = SurfaceComplex::instance();
  for (const auto& row : nc.n) {
    for (auto v : row) {
      if (v < 0) throw Error(ErrorCode::InconsistentCoordinates, "negative coordinate");
    }
  }
  check_chords_planar(nc);
  StrandLayout layout = strand_layout(nc);

  // Strand ends per edge, which must agree from both sides.
  std::array<std::int64_t, 12> on_edge{};
  for (const Edge& e : complex.edges()) {
    auto [h1, h2] = complex.adjacent_hexagons(e);
    auto m1 = layout.ends[hexagon_id(h1)][complex.side_position(h1, e.curve)].size();
    auto m2 = layout.ends[hexagon_id(h2)][complex.side_position(h2, e.curve)].size();
    if (m1 != m2) {
      throw Error(ErrorCode::InconsistentCoordinates,
                  "edge " + e.name() + " has " + std::to_string(m1) + " vs " + std::to_string(m2) +
                      " strand ends");
    }
    on_edge[e.id()] = static_cast<std::int64_t>(m1);
  }

  std::array<std::vector<bool>, 12> visited;
  for (int id = 0; id < 12; ++id) visited[id].assign(static_cast<std::size_t>(on_edge[id]), false);

  std::vector<CurveWord> components;
  for (const Edge& e0 : complex.edges()) {
    for (std::int64_t p0 = 0; p0 < on_edge[e0.id()]; ++p0) {
      if (visited[e0.id()][static_cast<std::size_t>(p0)]) continue;
      std::vector<Step> steps;
      Edge e = e0;
      std::int64_t p = p0;
      Hexagon h = complex.adjacent_hexagons(e0).first;
      while (true) {
        visited[e.id()][static_cast<std::size_t>(p)] = true;
        steps.push_back(Step{e, h});
        int side = complex.side_position(h, e.curve);
        std::int64_t m = on_edge[e.id()];
        // Convert the edge rank into the ccw rank on this side.
        std::int64_t r = edge_rank(h, side, p, m);
        auto [side_out, rank_out] = layout.ends[hexagon_id(h)][side][static_cast<std::size_t>(r)];
        Edge next = complex.sides(h)[side_out];
        std::int64_t m_out = on_edge[next.id()];
        std::int64_t p_out = edge_rank(h, side_out, rank_out, m_out);
        Hexagon h_next = cross(h, next.curve);
        if (next == e0 && p_out == p0 && h_next == complex.adjacent_hexagons(e0).first) break;
        e = next;
        p = p_out;
        h = h_next;
        if (steps.size() > 4 * 1'000'000) {
          throw Error(ErrorCode::InconsistentCoordinates, "strand tracing did not close");
        }
      }
      std::vector<Curve> letters;
      for (const Step& s : steps) letters.push_back(s.edge.curve);
      components.emplace_back(steps.back().dest, std::move(letters));
    }
  }
  return components;
}

CurveWord standard_P() {
  return CurveWord(Hexagon::H3, {Curve::A, Curve::X, Curve::A, Curve::X});
}

CurveWord pushoff(Curve c) {
  using C = Curve;
  switch (c) {
  case C::A: return CurveWord(Hexagon::H1, {C::Y, C::Z});
  case C::B: return CurveWord(Hexagon::H1, {C::Z, C::X});
  case C::C: return CurveWord(Hexagon::H1, {C::X, C::Y});
  case C::X: return CurveWord(Hexagon::H1, {C::B, C::C});
  case C::Y: return CurveWord(Hexagon::H1, {C::A, C::C});
  case C::Z: return CurveWord(Hexagon::H1, {C::A, C::B});
  }
  return {};
}

} // namespace goeritz
