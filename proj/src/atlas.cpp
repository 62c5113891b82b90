#include "goeritz/atlas.hpp"

#include "goeritz/error.hpp"
#include "goeritz/handlebody.hpp"

#include <ctime>
#include <exception>
#include <iomanip>
#include <fstream>
#include <sstream>
#include <thread>

namespace goeritz {

namespace {

std::string today_utc() {
  std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[16];
  std::strftime(buf, sizeof buf, "%Y-%m-%d", &utc);
  return buf;
}

std::filesystem::path index_path(const std::filesystem::path& file) {
  std::filesystem::path p = file;
  p += ".idx";
  return p;
}

AtlasRecord make_record(const CurveWord& curve, GoeritzWord witness) {
  if (!is_reducing(curve)) {
    throw Error(ErrorCode::NotReducing, "image of P under " + format_goeritz_word(witness) + " is not reducing");
  }
  AtlasRecord r;
  r.curve = canonical_form(curve);
  r.signature = signature(r.curve);
  r.triple = r.signature.counts.triple();
  r.depth = static_cast<int>(witness.size());
  r.witness = std::move(witness);
  return r;
}

} // namespace

Json AtlasRecord::to_json() const {
  Json j;
  j["triple"] = Json::array({triple[0], triple[1], triple[2]});
  j["witness"] = witness.empty() ? "1" : format_goeritz_word(witness);
  j["depth"] = depth;
  j["signature"] = signature_to_json(signature);
  j["curve"] = curve_to_json(curve);
  return j;
}

AtlasRecord AtlasRecord::from_json(const Json& line) {
  try {
    std::string w = line.at("witness").get<std::string>();
    AtlasRecord r = make_record(curve_from_json(line.at("curve")), w == "1" ? GoeritzWord{} : parse_goeritz_word(w));
    if (line.at("signature").at("canonical").get<std::string>() != r.signature.canonical ||
        line.at("depth").get<int>() != r.depth) {
      throw Error(ErrorCode::MalformedInput, "atlas record does not match its curve: " + line.dump());
    }
    return r;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("atlas record: ") + e.what());
  }
}

AtlasStore AtlasStore::open(const std::filesystem::path& file) {
  AtlasStore store;
  store.file_ = file;
  if (std::filesystem::exists(file)) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + file.string());
    std::string text;
    while (std::getline(in, text)) {
      if (text.empty()) continue;
      Json line;
      try {
        line = Json::parse(text);
      } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::MalformedInput, file.string() + ": " + e.what());
      }
      if (!store.insert(AtlasRecord::from_json(line))) {
        throw Error(ErrorCode::MalformedInput, file.string() + ": duplicate signature");
      }
    }
    store.flushed_ = store.records_.size();
  }
  if (std::filesystem::exists(index_path(file))) {
    Json idx = read_document(index_path(file));
    store.meta_.depth = idx.value("depth", -1);
    store.meta_.generators = idx.value("generators", store.meta_.generators);
    store.meta_.date = idx.value("date", "");
  }
  return store;
}

const AtlasRecord* AtlasStore::find(const CurveSignature& s) const {
  auto it = index_.find(s.canonical);
  return it == index_.end() ? nullptr : &records_[it->second];
}

bool AtlasStore::insert(AtlasRecord r) {
  if (index_.contains(r.signature.canonical)) return false;
  index_.emplace(r.signature.canonical, records_.size());
  records_.push_back(std::move(r));
  return true;
}

void AtlasStore::mark_level_complete(int depth) {
  meta_.depth = std::max(meta_.depth, depth);
  meta_.date = today_utc();
}

void AtlasStore::flush() {
  if (!file_) return;
  {
    std::ofstream out(*file_, std::ios::app);
    if (!out) throw Error(ErrorCode::Io, "cannot append to " + file_->string());
    for (; flushed_ < records_.size(); ++flushed_) out << records_[flushed_].to_json().dump() << "\n";
    if (!out) throw Error(ErrorCode::Io, "write failed for " + file_->string());
  }
  Json idx;
  idx["depth"] = meta_.depth;
  idx["generators"] = meta_.generators;
  idx["date"] = meta_.date;
  idx["records"] = records_.size();
  Json keys = Json::object();
  for (std::size_t i = 0; i < records_.size(); ++i) keys[records_[i].signature.canonical] = i;
  idx["index"] = std::move(keys);
  write_document(index_path(*file_), idx);
}

AtlasStore& enumerate(int depth, AtlasStore& store, unsigned workers) {
  if (depth < 0) throw Error(ErrorCode::MalformedInput, "depth must be nonnegative");
  workers = std::max(1u, workers);
  if (store.metadata().depth < 0) {
    store.insert(make_record(standard_P(), {}));
    store.mark_level_complete(0);
    store.flush();
  }
  for (int level = store.metadata().depth + 1; level <= depth; ++level) {
    std::vector<const AtlasRecord*> frontier;
    for (const AtlasRecord& r : store.records()) {
      if (r.depth == level - 1) frontier.push_back(&r);
    }
    const std::size_t jobs = frontier.size() * kAllGenerators.size();
    std::vector<std::optional<AtlasRecord>> images(jobs);
    std::vector<std::exception_ptr> failures(workers);
    auto work = [&](unsigned t) {
      try {
        for (std::size_t j = t; j < jobs; j += workers) {
          const AtlasRecord& parent = *frontier[j / kAllGenerators.size()];
          Generator g = kAllGenerators[j % kAllGenerators.size()];
          GoeritzWord witness = parent.witness;
          witness.push_back(g);
          images[j] = make_record(apply_generator(parent.curve, g), std::move(witness));
        }
      } catch (...) {
        failures[t] = std::current_exception();
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work, t);
    work(0);
    for (auto& th : pool) th.join();
    for (auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }
    // frontier points into store.records(); insert only after it is no longer read.
    frontier.clear();
    for (auto& img : images) store.insert(std::move(*img));
    store.mark_level_complete(level);
    store.flush();
  }
  return store;
}

std::vector<TripleEntry> lambda_triples(const AtlasStore& store) {
  std::map<std::array<std::int64_t, 3>, TripleEntry> by_triple;
  for (const AtlasRecord& r : store.records()) {
    auto [it, fresh] = by_triple.try_emplace(r.triple);
    if (fresh) {
      it->second.triple = r.triple;
      it->second.witness = r.witness;
    }
    ++it->second.signatures;
  }
  std::vector<TripleEntry> out;
  for (auto& [t, e] : by_triple) out.push_back(std::move(e));
  return out;
}

std::string triples_table(const AtlasStore& store) {
  std::ostringstream os;
  os << std::left << std::setw(18) << "triple (a,b,c)" << std::right << std::setw(7) << "curves"
     << "  shortest witness\n";
  for (const TripleEntry& e : lambda_triples(store)) {
    std::string t = "(" + std::to_string(e.triple[0]) + "," + std::to_string(e.triple[1]) + "," +
                    std::to_string(e.triple[2]) + ")";
    os << std::left << std::setw(18) << t << std::right << std::setw(7) << e.signatures << "  "
       << (e.witness.empty() ? "1" : format_goeritz_word(e.witness)) << "\n";
  }
  return os.str();
}

} // namespace goeritz
