#include "goeritz/handlebody.hpp"

#include "goeritz/error.hpp"

#include <cctype>
#include <sstream>

namespace goeritz {

std::string side_name(Side s) { return s == Side::V ? "V" : "W"; }

std::string ThetaWord::to_string() const {
  std::string out;
  for (Curve c : letters) out.push_back(curve_char(c));
  return out;
}

ThetaWord theta_word(const CurveWord& w, Side side) {
  ThetaWord t{side, {}};
  for (Curve c : w.letters()) {
    if (in_separating_system(c) == (side == Side::W)) t.letters.push_back(c);
  }
  return t;
}

bool bounds_disk(const CurveWord& w, Side side) {
  std::vector<Curve> stack;
  for (Curve c : theta_word(w, side).letters) {
    if (!stack.empty() && stack.back() == c) {
      stack.pop_back();
    } else {
      stack.push_back(c);
    }
  }
  // Cyclic cancellation across the seam.
  std::size_t lo = 0, hi = stack.size();
  while (hi - lo >= 2 && stack[lo] == stack[hi - 1]) {
    ++lo;
    --hi;
  }
  return lo == hi;
}

char FreeWord::inverse_letter(char letter) {
  switch (letter) {
  case 'b': return 'B';
  case 'B': return 'b';
  case 'c': return 'C';
  case 'C': return 'c';
  default: throw Error(ErrorCode::MalformedInput, std::string("not a free-group letter: ") + letter);
  }
}

FreeWord FreeWord::parse(const std::string& text) {
  FreeWord w;
  if (text == "1") return w;
  for (char ch : text) w.append(ch);
  return w;
}

void FreeWord::append(char letter) {
  char inv = inverse_letter(letter);
  if (!letters_.empty() && letters_.back() == inv) {
    letters_.pop_back();
  } else {
    letters_.push_back(letter);
  }
}

FreeWord FreeWord::operator*(const FreeWord& other) const {
  FreeWord out = *this;
  for (char ch : other.letters_) out.append(ch);
  return out;
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(inverse_letter(*it));
  return out;
}

FreeWord FreeWord::cyclically_reduced() const {
  std::size_t lo = 0, hi = letters_.size();
  while (hi - lo >= 2 && letters_[hi - 1] == inverse_letter(letters_[lo])) {
    ++lo;
    --hi;
  }
  FreeWord out;
  out.letters_ = letters_.substr(lo, hi - lo);
  return out;
}

std::string FreeWord::to_string() const { return letters_.empty() ? "1" : letters_; }

FreeWord read_pi1(std::span<const Step> steps) {
  FreeWord out;
  for (const Step& s : steps) {
    bool into_back = ball_side(s.dest) == 1;
    if (s.edge.curve == Curve::Z) out.append(into_back ? 'b' : 'B');
    if (s.edge.curve == Curve::Y) out.append(into_back ? 'C' : 'c');
  }
  return out;
}

ArcWordReport arc_pi1_words(const CurveWord& w) {
  ArcWordReport report;
  FreeWord product;
  for (Arc& arc : split_arcs(w)) {
    FreeWord word = read_pi1(arc.interior);
    product = product * word;
    report.arcs.push_back(ArcWord{std::move(arc), std::move(word)});
  }
  // A curve avoiding A, B, C is a single closed loop in one pants.
  if (report.arcs.empty()) product = read_pi1(w.steps());
  report.cyclic_product = product.cyclically_reduced();
  return report;
}

std::string reducing_reason_name(ReducingReason r) {
  switch (r) {
  case ReducingReason::Reducing: return "reducing";
  case ReducingReason::Empty: return "empty";
  case ReducingReason::Nonseparating: return "nonseparating";
  case ReducingReason::NoDiskInV: return "no-disk-in-V";
  case ReducingReason::NoDiskInW: return "no-disk-in-W";
  }
  return "unknown";
}

ReducingVerdict reducing_verdict(const CurveWord& w) {
  CurveWord n;
  try {
    n = normalize(w);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::EmptyAfterNormalization) throw;
    return {false, ReducingReason::Empty};
  }
  if (!is_separating(n)) return {false, ReducingReason::Nonseparating};
  if (!bounds_disk(n, Side::V)) return {false, ReducingReason::NoDiskInV};
  if (!bounds_disk(n, Side::W)) return {false, ReducingReason::NoDiskInW};
  return {true, ReducingReason::Reducing};
}

bool is_reducing(const CurveWord& w) { return reducing_verdict(w).reducing; }

namespace {

bool is_power_of(const std::string& s, char letter) {
  char inv = FreeWord::inverse_letter(letter);
  return s.find_first_not_of(std::string{letter}) == std::string::npos ||
         s.find_first_not_of(std::string{inv}) == std::string::npos;
}

// Arc word read from its A end.
FreeWord from_a_end(const ArcWord& aw) {
  return aw.arc.start_curve == Curve::A ? aw.word : aw.word.inverse();
}

std::string arc_label(std::size_t i, const ArcWord& aw) {
  std::ostringstream os;
  os << "arc " << i << " (" << curve_char(aw.arc.start_curve) << curve_char(aw.arc.end_curve)
     << " on Sigma_" << aw.arc.pants + 1 << ", word " << aw.word.to_string() << ")";
  return os.str();
}

} // namespace

ConstraintReport word_constraints(const CurveWord& input) {
  // Arc words depend on which side of a vertex each strand passes, so read
  // them off the geodesic representative.
  CurveWord w = embedded_form(input);
  ConstraintReport report;
  report.words = arc_pi1_words(w);
  const auto& arcs = report.words.arcs;
  auto fail = [&](ConstraintKind kind, const std::string& msg) {
    report.violations.push_back(msg);
    report.violation_kinds.push_back(kind);
  };

  ArcCensus census = arc_census(w);
  for (ArcType t : {ArcType::BB, ArcType::BC, ArcType::CC}) {
    if (census(0, t) + census(1, t) > 0) fail(ConstraintKind::Census, "census has " + arc_type_name(t) + " arcs");
  }
  for (ArcType t : {ArcType::AA, ArcType::AB, ArcType::AC}) {
    if (census(0, t) != census(1, t)) fail(ConstraintKind::Census, "unequal " + arc_type_name(t) + " counts on the two pants");
  }

  bool single_letter_aa = false;
  std::array<bool, 2> two_letter_aa{};
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const ArcWord& aw = arcs[i];
    switch (aw.arc.type()) {
    case ArcType::AA: {
      std::size_t x_crossings = 0;
      for (const Step& s : aw.arc.interior) x_crossings += s.edge.curve == Curve::X ? 1 : 0;
      if (x_crossings != 1) fail(ConstraintKind::AACrossesX, arc_label(i, aw) + " crosses X " + std::to_string(x_crossings) + " times");
      if (aw.word.length() > 2) fail(ConstraintKind::AALength, arc_label(i, aw) + " is longer than two letters");
      if (aw.word.length() == 1) single_letter_aa = true;
      if (aw.word.length() == 2) two_letter_aa[aw.arc.pants] = true;
      break;
    }
    case ArcType::AB:
    case ArcType::AC: {
      char tail = aw.arc.type() == ArcType::AB ? 'b' : 'c';
      std::string s = from_a_end(aw).letters();
      std::size_t cut = s.size();
      while (cut > 0 && is_power_of(s.substr(cut - 1), tail)) --cut;
      if (cut > 1) fail(ConstraintKind::WordForm, arc_label(i, aw) + " is not of the form w" + tail + "^k with |w| <= 1");
      break;
    }
    default: break;
    }
  }
  if (!single_letter_aa && two_letter_aa[0] && two_letter_aa[1]) {
    fail(ConstraintKind::Exclusion, "two-letter AA words on both pants without a single-letter AA word");
  }

  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const ArcWord& cur = arcs[i];
    const ArcWord& next = arcs[(i + 1) % arcs.size()];
    bool cancels = !cur.word.empty() && !next.word.empty() &&
                   FreeWord::inverse_letter(cur.word.last()) == next.word.first();
    report.joins.push_back(cancels ? JoinStatus::Cancels : JoinStatus::Clean);
    if (!cancels) continue;
    char letter = static_cast<char>(std::tolower(cur.word.last()));
    Curve at = cur.arc.end_curve;
    bool forbidden = at == Curve::A || (at == Curve::B && letter == 'b') || (at == Curve::C && letter == 'c');
    if (forbidden) {
      fail(ConstraintKind::JoinRelator, "trivial relator at the " + std::string(1, curve_char(at)) + " join of arcs " + std::to_string(i) +
           " and " + std::to_string((i + 1) % arcs.size()));
    }
  }
  return report;
}

std::string constraint_kind_name(ConstraintKind k) {
  switch (k) {
  case ConstraintKind::Census: return "census";
  case ConstraintKind::AACrossesX: return "aa-crosses-x";
  case ConstraintKind::AALength: return "aa-length";
  case ConstraintKind::WordForm: return "word-form";
  case ConstraintKind::Exclusion: return "two-letter-exclusion";
  case ConstraintKind::JoinRelator: return "join-relator";
  }
  return "?";
}

void check_word_constraints(const CurveWord& w) {
  ConstraintReport r = word_constraints(w);
  if (!r.ok()) throw Error(ErrorCode::ConstraintViolation, r.violations.front());
}

std::string ConstraintReport::to_table() const {
  std::ostringstream os;
  os << "arc  type  pants  start  word    join\n";
  for (std::size_t i = 0; i < words.arcs.size(); ++i) {
    const ArcWord& aw = words.arcs[i];
    std::string type{curve_char(aw.arc.start_curve), curve_char(aw.arc.end_curve)};
    os << i << std::string(5 - std::min<std::size_t>(4, std::to_string(i).size()), ' ') << type << "    "
       << aw.arc.pants + 1 << "      " << aw.arc.start_edge.name() << "     " << aw.word.to_string()
       << std::string(8 - std::min<std::size_t>(7, aw.word.to_string().size()), ' ')
       << (i < joins.size() && joins[i] == JoinStatus::Cancels ? "cancels" : "clean") << "\n";
  }
  for (const auto& v : violations) os << "violation: " << v << "\n";
  return os.str();
}

} // namespace goeritz
