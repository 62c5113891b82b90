#include "goeritz/selftest.hpp"

#include "goeritz/error.hpp"
#include "goeritz/io.hpp"

#include <doctest.h>

using namespace goeritz;

TEST_CASE("curve documents round trip in both representations") {
  for (const auto& e : random_corpus(60, 6, 17u)) {
    for (Representation rep : {Representation::Steps, Representation::Normal}) {
      Json doc = curve_to_json(e.curve, rep);
      CurveWord back = curve_from_json(Json::parse(doc.dump()));
      CHECK(canonical_form(back) == canonical_form(e.curve));
      CHECK(curve_to_json(back, rep) == doc);
    }
  }
}

TEST_CASE("curve documents are canonical") {
  CurveWord p = standard_P();
  CHECK(curve_to_json(p) == curve_to_json(p.rotated(2).reversed()));
  Json doc = curve_to_json(p);
  CHECK(doc["format"] == "goeritz-curve/1");
  CHECK(doc["representation"] == "steps");
  CHECK(doc["steps"].size() == 4);
  Json normal = curve_to_json(p, Representation::Normal);
  std::int64_t total = 0;
  for (const auto& [h, cell] : normal["normal"].items()) {
    for (const auto& [key, n] : cell.items()) total += n.get<std::int64_t>();
  }
  CHECK(total == 4);
}

TEST_CASE("malformed curve documents") {
  auto code_of = [](const Json& doc) {
    try {
      curve_from_json(doc);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io; // sentinel: nothing thrown
  };
  CHECK(code_of(Json::object()) == ErrorCode::MalformedInput);
  CHECK(code_of(Json{{"format", "goeritz-curve/2"}, {"representation", "steps"}, {"steps", Json::array()}}) ==
        ErrorCode::MalformedInput);
  CHECK(code_of(Json{{"format", "goeritz-curve/1"}, {"representation", "polar"}}) == ErrorCode::MalformedInput);
  CHECK(code_of(Json{{"format", "goeritz-curve/1"}, {"representation", "steps"}, {"steps", Json::array({1, 2})}}) ==
        ErrorCode::MalformedInput);
  Json bad_side{{"format", "goeritz-curve/1"},
                {"representation", "normal"},
                {"normal", Json{{"H1", Json{{"A1-A2", 1}}}}}};
  CHECK(code_of(bad_side) == ErrorCode::MalformedInput);

  // Two parallel copies of P are a valid multicurve but not a single curve.
  Json twice = curve_to_json(standard_P(), Representation::Normal);
  for (auto& [h, cell] : twice["normal"].items()) {
    for (auto& [key, n] : cell.items()) n = n.get<std::int64_t>() * 2;
  }
  CHECK(code_of(twice) == ErrorCode::InconsistentCoordinates);
}

TEST_CASE("certificate documents") {
  CurveWord q = apply_word(standard_P(), parse_goeritz_word("dbgB"));
  ReductionCertificate cert = reduce_to_standard(q);
  Json doc = certificate_to_json(cert);
  CHECK(doc["format"] == "goeritz-certificate/1");
  CHECK(certificate_word(doc) == cert.word());
  CHECK(doc["steps"].size() == cert.steps.size());
  CHECK(curve_from_json(doc["output"]) == canonical_form(standard_P()));
  CHECK(canonical_form(curve_from_json(doc["input"])) == canonical_form(q));

  Json p1 = certificate_to_json(reduce_to_standard(apply_generator(standard_P(), Generator::Delta)));
  CHECK(p1["generators"] == "D");
  CHECK(p1["terminal"] == "P_prime");
}

TEST_CASE("constraint report document mirrors the arc words") {
  CurveWord q = apply_word(standard_P(), parse_goeritz_word("db"));
  ConstraintReport r = word_constraints(apply_generator(q, Generator::Delta));
  Json doc = constraint_report_to_json(r);
  CHECK(doc["arcs"].size() == r.words.arcs.size());
  CHECK(doc["ok"] == r.ok());
  CHECK(doc["cyclic_product"] == "1");
}
