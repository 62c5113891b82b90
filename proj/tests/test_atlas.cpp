#include "goeritz/atlas.hpp"
#include "goeritz/error.hpp"
#include "goeritz/handlebody.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace goeritz;

namespace {

using Triple = std::array<std::int64_t, 3>;

std::set<Triple> triples_of(const AtlasStore& s) {
  std::set<Triple> out;
  for (const auto& e : lambda_triples(s)) out.insert(e.triple);
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("goeritz-atlas-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

} // namespace

TEST_CASE("depth 0 and depth 1") {
  AtlasStore s0;
  enumerate(0, s0);
  REQUIRE(s0.size() == 1);
  CHECK(s0.records()[0].triple == Triple{2, 0, 0});
  CHECK(triples_of(s0) == std::set<Triple>{{2, 0, 0}});

  AtlasStore s1;
  enumerate(1, s1);
  auto t = triples_of(s1);
  CHECK(t.contains(Triple{2, 0, 0}));
  CHECK(t.contains(Triple{0, 2, 0}));
  CHECK(t.contains(Triple{0, 0, 2}));
}

TEST_CASE("depth 3 records") {
  AtlasStore s;
  enumerate(3, s, 4);
  CHECK(s.metadata().depth == 3);
  std::set<std::string> keys;
  int last_depth = 0;
  for (const auto& r : s.records()) {
    CHECK(keys.insert(r.signature.canonical).second);
    CHECK(r.depth >= last_depth);
    last_depth = r.depth;
    auto [a, b, c] = r.triple;
    CHECK((a > b + c || b > c + a || c > a + b));
    CHECK(a % 2 == 0);
    CHECK(b % 2 == 0);
    CHECK(c % 2 == 0);
    CHECK(signature(apply_word(standard_P(), r.witness)) == r.signature);
    CHECK(is_reducing(r.curve));
  }
  std::int64_t total = 0;
  for (const auto& e : lambda_triples(s)) total += e.signatures;
  CHECK(total == static_cast<std::int64_t>(s.size()));
}

TEST_CASE("enumeration is independent of worker count and of resuming") {
  AtlasStore one, many, resumed;
  enumerate(3, one, 1);
  enumerate(3, many, 8);
  enumerate(2, resumed, 3);
  enumerate(3, resumed, 2);
  REQUIRE(one.size() == many.size());
  REQUIRE(one.size() == resumed.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one.records()[i].to_json() == many.records()[i].to_json());
    CHECK(one.records()[i].to_json() == resumed.records()[i].to_json());
  }
}

TEST_CASE("deeper enumeration keeps shallower records") {
  AtlasStore s2, s3;
  enumerate(2, s2);
  enumerate(3, s3);
  REQUIRE(s3.size() >= s2.size());
  for (std::size_t i = 0; i < s2.size(); ++i) {
    CHECK(s3.records()[i].signature == s2.records()[i].signature);
    CHECK(s3.records()[i].witness == s2.records()[i].witness);
  }
}

TEST_CASE("persistence") {
  auto dir = scratch_dir("persist");
  auto f1 = dir / "one.jsonl", f2 = dir / "two.jsonl";
  {
    AtlasStore a = AtlasStore::open(f1);
    enumerate(2, a, 2);
    AtlasStore b = AtlasStore::open(f2);
    enumerate(2, b, 5);
  }
  CHECK(slurp(f1) == slurp(f2));
  CHECK(std::filesystem::exists(dir / "one.jsonl.idx"));

  AtlasStore loaded = AtlasStore::open(f1);
  CHECK(loaded.metadata().depth == 2);
  enumerate(3, loaded);
  AtlasStore fresh;
  enumerate(3, fresh);
  REQUIRE(loaded.size() == fresh.size());
  AtlasStore reloaded = AtlasStore::open(f1);
  CHECK(reloaded.size() == fresh.size());
  CHECK(reloaded.metadata().depth == 3);
  CHECK(triples_table(reloaded) == triples_table(fresh));

  std::ofstream(dir / "bad.jsonl") << "{\"triple\": [2,0,0]}\n";
  CHECK_THROWS_AS(AtlasStore::open(dir / "bad.jsonl"), Error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("triple table") {
  AtlasStore s;
  enumerate(1, s);
  std::string table = triples_table(s);
  CHECK(table.find("(2,0,0)") != std::string::npos);
  CHECK(table.find("(0,2,0)") != std::string::npos);
  CHECK(table.find("shortest witness") != std::string::npos);
}
