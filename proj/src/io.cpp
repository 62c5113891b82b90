#include "goeritz/io.hpp"

#include "goeritz/error.hpp"

#include <fstream>
#include <sstream>

namespace goeritz {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

std::string token(const Json& v) {
  if (!v.is_string()) malformed("expected a string token, got " + v.dump());
  return v.get<std::string>();
}

Json triple_json(const std::array<std::int64_t, 3>& t) { return Json::array({t[0], t[1], t[2]}); }

std::string side_pair_key(Hexagon h, Curve p, Curve q) {
  const auto& k = SurfaceComplex::instance();
  return k.side_on(h, p).name() + "-" + k.side_on(h, q).name();
}

} // namespace

Representation parse_representation(const std::string& name) {
  if (name == "steps") return Representation::Steps;
  if (name == "normal") return Representation::Normal;
  malformed("unknown representation \"" + name + "\"");
}

Json curve_to_json(const CurveWord& input, Representation rep) {
  CurveWord w = canonical_form(input);
  Json doc;
  doc["format"] = kCurveFormat;
  if (rep == Representation::Steps) {
    doc["representation"] = "steps";
    Json steps = Json::array();
    for (const Step& s : w.steps()) steps.push_back(Json::array({s.edge.name(), hexagon_name(s.dest)}));
    doc["steps"] = std::move(steps);
    return doc;
  }
  doc["representation"] = "normal";
  NormalCoordinates nc = to_normal_coordinates(w);
  Json normal = Json::object();
  for (Hexagon h : kAllHexagons) {
    Json cell = Json::object();
    for (int i = 0; i < 15; ++i) {
      auto [p, q] = NormalCoordinates::pair_curves(i);
      if (std::int64_t n = nc(h, p, q); n > 0) cell[side_pair_key(h, p, q)] = n;
    }
    normal[hexagon_name(h)] = std::move(cell);
  }
  doc["normal"] = std::move(normal);
  return doc;
}

CurveWord curve_from_json(const Json& doc) {
  if (token(field(doc, "format")) != kCurveFormat) malformed("not a " + std::string(kCurveFormat) + " document");
  Representation rep = parse_representation(token(field(doc, "representation")));
  try {
    if (rep == Representation::Steps) {
      const Json& list = field(doc, "steps");
      if (!list.is_array()) malformed("\"steps\" must be a list");
      std::vector<Step> steps;
      for (const Json& pair : list) {
        if (!pair.is_array() || pair.size() != 2) malformed("each step is an [edge, hexagon] pair");
        steps.push_back(Step{parse_edge(token(pair[0])), parse_hexagon(token(pair[1]))});
      }
      return validate(steps);
    }
    const Json& normal = field(doc, "normal");
    if (!normal.is_object()) malformed("\"normal\" must be a map from hexagon to side pairs");
    const auto& k = SurfaceComplex::instance();
    NormalCoordinates nc;
    for (const auto& [hname, cell] : normal.items()) {
      Hexagon h = parse_hexagon(hname);
      if (!cell.is_object()) malformed("coordinates of " + hname + " must be a map");
      for (const auto& [key, value] : cell.items()) {
        auto dash = key.find('-');
        if (dash == std::string::npos) malformed("side pair \"" + key + "\" needs the form E1-E2");
        Edge e1 = parse_edge(key.substr(0, dash));
        Edge e2 = parse_edge(key.substr(dash + 1));
        if (k.side_on(h, e1.curve) != e1 || k.side_on(h, e2.curve) != e2 || e1.curve == e2.curve) {
          malformed("\"" + key + "\" is not a pair of distinct sides of " + hname);
        }
        if (!value.is_number_integer()) malformed("count for " + key + " must be an integer");
        nc(h, e1.curve, e2.curve) = value.get<std::int64_t>();
      }
    }
    std::vector<CurveWord> parts = from_normal_coordinates(nc);
    if (parts.size() != 1) {
      throw Error(ErrorCode::InconsistentCoordinates,
                  "coordinates describe " + std::to_string(parts.size()) + " components");
    }
    return validate(parts.front().steps());
  } catch (const Json::exception& e) {
    malformed(e.what());
  }
}

Json certificate_to_json(const ReductionCertificate& cert) {
  Json doc;
  doc["format"] = kCertificateFormat;
  doc["generators"] = format_goeritz_word(cert.word());
  doc["input_triple"] = triple_json(cert.input_triple);
  Json steps = Json::array();
  for (const auto& s : cert.steps) {
    steps.push_back(Json{{"generator", std::string(1, generator_char(s.generator))},
                         {"triple", triple_json(s.after)},
                         {"iteration", s.iteration}});
  }
  doc["steps"] = std::move(steps);
  doc["iterations"] = cert.iterations;
  doc["iteration_sums"] = cert.iteration_sums();
  doc["terminal"] = standard_curve_name(cert.terminal);
  doc["input"] = curve_to_json(cert.input);
  doc["output"] = curve_to_json(apply_word(cert.input, cert.word()));
  return doc;
}

GoeritzWord certificate_word(const Json& doc) {
  if (token(field(doc, "format")) != kCertificateFormat) {
    malformed("not a " + std::string(kCertificateFormat) + " document");
  }
  return parse_goeritz_word(token(field(doc, "generators")));
}

Json constraint_report_to_json(const ConstraintReport& report) {
  Json doc;
  doc["format"] = kConstraintFormat;
  Json arcs = Json::array();
  for (std::size_t i = 0; i < report.words.arcs.size(); ++i) {
    const ArcWord& a = report.words.arcs[i];
    Json entry{{"index", i},
               {"type", arc_type_name(a.arc.type())},
               {"pants", a.arc.pants + 1},
               {"from", a.arc.start_edge.name()},
               {"to", a.arc.end_edge.name()},
               {"word", a.word.to_string()}};
    if (i < report.joins.size()) entry["join"] = report.joins[i] == JoinStatus::Clean ? "clean" : "cancels";
    arcs.push_back(std::move(entry));
  }
  doc["arcs"] = std::move(arcs);
  doc["cyclic_product"] = report.words.cyclic_product.to_string();
  Json violations = Json::array();
  for (std::size_t i = 0; i < report.violations.size(); ++i) {
    violations.push_back(
        Json{{"kind", constraint_kind_name(report.violation_kinds[i])}, {"message", report.violations[i]}});
  }
  doc["violations"] = std::move(violations);
  doc["ok"] = report.ok();
  return doc;
}

Json signature_to_json(const CurveSignature& s) {
  Json doc;
  Json counts = Json::object();
  for (Curve c : kAllCurves) counts[std::string(1, curve_char(c))] = s.counts[c];
  doc["counts"] = std::move(counts);
  Json census = Json::array();
  for (int p = 0; p < 2; ++p) {
    Json row = Json::object();
    for (ArcType t : kAllArcTypes) {
      if (s.census(p, t) > 0) row[arc_type_name(t)] = s.census(p, t);
    }
    census.push_back(std::move(row));
  }
  doc["census"] = std::move(census);
  doc["disk_v"] = s.disk_v;
  doc["disk_w"] = s.disk_w;
  doc["arc_ends"] = Json::array({Json(s.arc_ends[0]), Json(s.arc_ends[1])});
  doc["canonical"] = s.canonical;
  return doc;
}

Json read_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    malformed(path.string() + ": " + e.what());
  }
}

void write_document(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << doc.dump(2) << "\n";
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

} // namespace goeritz
