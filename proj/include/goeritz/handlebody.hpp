#pragma once

#include "goeritz/curve.hpp"

#include <span>
#include <string>
#include <vector>

namespace goeritz {

// V is cut into two balls by the disks bounded by X, Y, Z; W likewise by A, B, C.
enum class Side { V, W };

std::string side_name(Side s);

struct ThetaWord {
  Side side = Side::V;
  std::vector<Curve> letters; // cyclic

  std::string to_string() const;
};

ThetaWord theta_word(const CurveWord& w, Side side);
// Cancels adjacent equal letters cyclically; empty result means the curve is
// null-homotopic in the handlebody, hence bounds a disk there.
bool bounds_disk(const CurveWord& w, Side side);

// Reduced word in pi_1(V) = <b, c>. Letters 'b', 'c'; inverses 'B', 'C'.
class FreeWord {
public:
  FreeWord() = default;
  // Accepts any string over bBcC and reduces it.
  static FreeWord parse(const std::string& text);

  const std::string& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void append(char letter);
  FreeWord operator*(const FreeWord& other) const;
  FreeWord inverse() const;
  FreeWord cyclically_reduced() const;
  char first() const { return letters_.front(); }
  char last() const { return letters_.back(); }

  // "1" for the empty word.
  std::string to_string() const;
  bool operator==(const FreeWord&) const = default;

  static char inverse_letter(char letter);

private:
  std::string letters_;
};

// Z crossings read b^{+-1}, Y crossings c^{+-1}, X crossings nothing. The sign
// records which ball of V the crossing leaves.
FreeWord read_pi1(std::span<const Step> steps);

struct ArcWord {
  Arc arc;
  FreeWord word;
};

struct ArcWordReport {
  std::vector<ArcWord> arcs;   // curve order
  FreeWord cyclic_product;     // product of all arc words, cyclically reduced
};

ArcWordReport arc_pi1_words(const CurveWord& w);

enum class ReducingReason { Reducing, Empty, Nonseparating, NoDiskInV, NoDiskInW };
std::string reducing_reason_name(ReducingReason r);

struct ReducingVerdict {
  bool reducing = false;
  ReducingReason reason = ReducingReason::Empty;
};

ReducingVerdict reducing_verdict(const CurveWord& w);
bool is_reducing(const CurveWord& w);

enum class JoinStatus { Clean, Cancels };

enum class ConstraintKind { Census, AACrossesX, AALength, WordForm, Exclusion, JoinRelator };
std::string constraint_kind_name(ConstraintKind k);

struct ConstraintReport {
  ArcWordReport words;
  std::vector<JoinStatus> joins; // join i sits between arc i and arc i+1
  std::vector<std::string> violations;
  std::vector<ConstraintKind> violation_kinds; // parallel to violations

  bool ok() const { return violations.empty(); }
  std::string to_table() const;
};

// Word-form constraints for a reducing curve with a > b + c, read from its
// embedded form. Never throws for a violated constraint; the violations are
// listed in the report.
ConstraintReport word_constraints(const CurveWord& w);
// Throws ConstraintViolation naming the first failing check.
void check_word_constraints(const CurveWord& w);

} // namespace goeritz
