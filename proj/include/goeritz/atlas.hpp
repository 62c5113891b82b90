#pragma once

#include "goeritz/io.hpp"
#include "goeritz/mcg.hpp"
#include "goeritz/signature.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace goeritz {

struct AtlasRecord {
  CurveSignature signature;
  std::array<std::int64_t, 3> triple{};
  GoeritzWord witness; // applied to P, left to right
  int depth = 0;       // witness length
  CurveWord curve;     // canonical form

  Json to_json() const;
  static AtlasRecord from_json(const Json& line);
};

struct AtlasMetadata {
  int depth = -1; // deepest completed level, -1 before any
  std::string generators = "abBgdD";
  std::string date; // UTC date of the last run; kept out of the record file
};

// Append-only, signature-deduplicated, insertion order = breadth-first order.
class AtlasStore {
public:
  AtlasStore() = default;
  // Records go to FILE (one JSON object per line), the index to FILE.idx.
  // Loads whatever the files already hold.
  static AtlasStore open(const std::filesystem::path& file);

  const std::vector<AtlasRecord>& records() const { return records_; }
  const AtlasMetadata& metadata() const { return meta_; }
  std::size_t size() const { return records_.size(); }

  const AtlasRecord* find(const CurveSignature& s) const;
  // False (and no change) when the signature is already present.
  bool insert(AtlasRecord r);
  void mark_level_complete(int depth);

  // Appends records not yet written and rewrites the index. No-op in memory.
  void flush();
  std::optional<std::filesystem::path> file() const { return file_; }

private:
  std::vector<AtlasRecord> records_;
  std::unordered_map<std::string, std::size_t> index_; // canonical key -> record
  AtlasMetadata meta_;
  std::optional<std::filesystem::path> file_;
  std::size_t flushed_ = 0;
};

// Breadth-first images of P under all generator words up to length depth,
// continuing from the deepest completed level already in the store. workers
// threads expand each frontier; the merge is in frontier and generator order,
// so the result does not depend on workers. Flushes after every level.
AtlasStore& enumerate(int depth, AtlasStore& store, unsigned workers = 1);

struct TripleEntry {
  std::array<std::int64_t, 3> triple{};
  int signatures = 0;       // distinct curves with this triple
  GoeritzWord witness;      // shortest, first found
};
std::vector<TripleEntry> lambda_triples(const AtlasStore& store);

// Plain table: triple, count, shortest witness.
std::string triples_table(const AtlasStore& store);

} // namespace goeritz
