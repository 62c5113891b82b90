#pragma once

#include "goeritz/mcg.hpp"

#include <string>
#include <vector>

namespace goeritz {

struct CorpusEntry {
  GoeritzWord word;
  CurveWord curve; // word applied to P
};

// Uniformly random Goeritz words of length 0..max_length applied to P.
std::vector<CorpusEntry> random_corpus(std::size_t size, int max_length, unsigned seed);

struct SelftestOptions {
  std::size_t corpus_size = 500;
  int max_length = 6;
  unsigned seed = 20240611u;
  unsigned workers = 4;
  int atlas_depth = 3;
};

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// The eight acceptance criteria, each as one check.
std::vector<CheckResult> run_selftest(const SelftestOptions& options = {});
// The finer invariant table behind criterion 5, one row per property.
std::vector<CheckResult> run_invariant_table(const SelftestOptions& options = {});

std::string format_results(const std::vector<CheckResult>& results);

// Canonical form of beta applied to the pushoff of A, traced once with the
// letter-splice twist on the hexagon net and frozen here.
inline constexpr const char* kBetaOfPushoffA = "H3:AZXAYX";

} // namespace goeritz
