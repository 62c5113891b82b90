#include "goeritz/atlas.hpp"
#include "goeritz/error.hpp"
#include "goeritz/handlebody.hpp"
#include "goeritz/io.hpp"
#include "goeritz/reduction.hpp"
#include "goeritz/render.hpp"
#include "goeritz/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <thread>

using namespace goeritz;

namespace {

enum Exit { kOk = 0, kUsage = 2, kBadCurve = 3, kNotReducing = 4, kInternal = 5 };

int exit_code(ErrorCode code) {
  switch (code) {
  case ErrorCode::MalformedInput:
  case ErrorCode::MalformedWord:
  case ErrorCode::NotEmbeddable:
  case ErrorCode::ParityViolation:
  case ErrorCode::EmptyAfterNormalization:
  case ErrorCode::InconsistentCoordinates: return kBadCurve;
  case ErrorCode::NotReducing: return kNotReducing;
  case ErrorCode::Io: return kUsage;
  case ErrorCode::TrichotomyViolation:
  case ErrorCode::BetaReductionFailure:
  case ErrorCode::IterationLimitExceeded:
  case ErrorCode::ConstraintViolation: return kInternal;
  }
  return kInternal;
}

struct Options {
  std::string in, out, word, svg, curve;
  std::string format = "steps";
  int depth = 3;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
};

CurveWord builtin_curve(const std::string& name) {
  if (name == "P") return standard_P();
  if (name == "P_prime") return apply_generator(standard_P(), Generator::Delta);
  if (name == "P_double_prime") return apply_generator(standard_P(), Generator::DeltaInv);
  if (name.size() == 9 && name.starts_with("pushoff_")) return pushoff(parse_curve(name.back()));
  throw CLI::ValidationError("--curve", "unknown curve \"" + name + "\"");
}

CurveWord input_curve(const Options& o) {
  if (!o.in.empty()) return curve_from_json(read_document(o.in));
  return builtin_curve(o.curve.empty() ? "P" : o.curve);
}

void emit(const Options& o, const Json& doc) {
  if (o.out.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    write_document(o.out, doc);
  }
}

std::string triple_text(const Counts& k) {
  return "(" + std::to_string(k.a()) + "," + std::to_string(k.b()) + "," + std::to_string(k.c()) + ")";
}

// Word constraints are stated for A-dominant curves; relabel the others.
std::pair<CurveWord, std::string> a_dominant(const CurveWord& w) {
  switch (classify(w)) {
  case Dominance::A: return {w, ""};
  case Dominance::B: return {apply_generator(w, Generator::DeltaInv), "D"};
  case Dominance::C: return {apply_generator(w, Generator::Delta), "d"};
  }
  return {w, ""};
}

int cmd_validate(const Options& o) {
  CurveWord w = input_curve(o);
  std::cout << "valid " << canonical_form(w).to_string() << " " << w.size() << " crossings\n";
  if (!o.out.empty()) write_document(o.out, curve_to_json(w, parse_representation(o.format)));
  return kOk;
}

int cmd_normalize(const Options& o) {
  emit(o, curve_to_json(input_curve(o), parse_representation(o.format)));
  return kOk;
}

int cmd_counts(const Options& o) {
  Counts k = counts(canonical_form(input_curve(o)));
  for (Curve c : kAllCurves) std::cout << static_cast<char>(std::tolower(curve_char(c))) << "=" << k[c] << " ";
  std::cout << "\n";
  return kOk;
}

int cmd_census(const Options& o) {
  CurveWord w = canonical_form(input_curve(o));
  ArcCensus c = arc_census(w);
  std::cout << "type  pants1  pants2\n";
  for (ArcType t : kAllArcTypes) {
    std::cout << arc_type_name(t) << "    " << c(0, t) << "       " << c(1, t) << "\n";
  }
  return kOk;
}

int cmd_words(const Options& o) {
  CurveWord w = input_curve(o);
  if (!is_reducing(w)) throw Error(ErrorCode::NotReducing, reducing_reason_name(reducing_verdict(w).reason));
  auto [q, relabel] = a_dominant(w);
  if (!relabel.empty()) std::cout << "relabelled by " << relabel << " to make A dominant\n";
  ConstraintReport r = word_constraints(q);
  std::cout << r.to_table();
  if (!o.out.empty()) write_document(o.out, constraint_report_to_json(r));
  return r.ok() ? kOk : kInternal;
}

int cmd_verify(const Options& o) {
  CurveWord w = input_curve(o);
  ReducingVerdict v = reducing_verdict(w);
  if (!v.reducing) {
    std::cout << "not reducing: " << reducing_reason_name(v.reason) << "\n";
    return kNotReducing;
  }
  Counts k = counts(canonical_form(w));
  Dominance d = classify(w);
  check_word_constraints(a_dominant(w).first);
  std::cout << "reducing " << dominance_name(d) << " (a,b,c)=" << triple_text(k) << " word constraints hold\n";
  return kOk;
}

int cmd_apply(const Options& o) {
  GoeritzWord g;
  try {
    if (o.word != "1") g = parse_goeritz_word(o.word);
  } catch (const Error& e) {
    throw CLI::ValidationError("--word", e.what());
  }
  emit(o, curve_to_json(apply_word(input_curve(o), g), parse_representation(o.format)));
  return kOk;
}

int cmd_reduce(const Options& o) {
  ReductionCertificate cert = reduce_to_standard(input_curve(o));
  emit(o, certificate_to_json(cert));
  return kOk;
}

int cmd_atlas(const Options& o) {
  AtlasStore store = o.out.empty() ? AtlasStore() : AtlasStore::open(o.out);
  enumerate(o.depth, store, o.workers);
  std::cout << "depth " << store.metadata().depth << ", " << store.size() << " curves\n" << triples_table(store);
  return kOk;
}

int cmd_render(const Options& o) {
  std::string svg = render_svg(input_curve(o));
  if (o.svg.empty()) {
    std::cout << svg;
  } else {
    std::ofstream out(o.svg);
    if (!(out << svg)) throw Error(ErrorCode::Io, "cannot write " + o.svg);
  }
  return kOk;
}

int cmd_selftest(const Options& o) {
  SelftestOptions so;
  so.workers = o.workers;
  auto criteria = run_selftest(so);
  auto invariants = run_invariant_table(so);
  std::cout << "acceptance criteria\n" << format_results(criteria) << "\ninvariants over the corpus\n"
            << format_results(invariants);
  bool ok = true;
  for (const auto& r : criteria) ok = ok && r.pass;
  for (const auto& r : invariants) ok = ok && r.pass;
  return ok ? kOk : kInternal;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curves on the genus-2 Heegaard surface: verification, Goeritz action, reduction, atlas."};
  app.require_subcommand(1);
  Options o;

  auto add_in = [&](CLI::App* c) {
    auto* in = c->add_option("--in", o.in, "Curve document")->check(CLI::ExistingFile);
    c->add_option("--curve", o.curve, "Built-in curve: P, P_prime, P_double_prime, pushoff_A..pushoff_Z")
        ->excludes(in);
  };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output representation")->check(CLI::IsMember({"steps", "normal"}));
  };
  std::map<CLI::App*, int (*)(const Options&)> handlers;
  auto sub = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    CLI::App* c = app.add_subcommand(name, help);
    handlers[c] = fn;
    return c;
  };

  auto* validate = sub("validate", "Check a curve document and print its canonical form", cmd_validate);
  add_in(validate);
  validate->add_option("--out", o.out, "Write the canonical curve document");
  add_format(validate);

  auto* normalize = sub("normalize", "Write the canonical curve document", cmd_normalize);
  add_in(normalize);
  normalize->add_option("--out", o.out, "Output file (default stdout)");
  add_format(normalize);

  add_in(sub("counts", "Intersection counts with A, B, C, X, Y, Z", cmd_counts));
  add_in(sub("census", "Arc types on each pair of pants", cmd_census));

  auto* words = sub("words", "Arc words in pi_1(V) and the word-form constraints", cmd_words);
  add_in(words);
  words->add_option("--out", o.out, "Write the report as a structured document");

  add_in(sub("verify", "Decide whether the curve is reducing and check the constraints", cmd_verify));

  auto* apply = sub("apply", "Apply a Goeritz word (letters a b B g d D, left to right)", cmd_apply);
  add_in(apply);
  apply->add_option("--word,-w", o.word, "Generator string, \"1\" for the empty word")->required();
  apply->add_option("--out", o.out, "Output file (default stdout)");
  add_format(apply);

  auto* reduce = sub("reduce", "Reduce to P and emit the certificate", cmd_reduce);
  add_in(reduce);
  reduce->add_option("--out", o.out, "Certificate file (default stdout)");

  auto* atlas = sub("atlas", "Enumerate images of P and tabulate their triples", cmd_atlas);
  atlas->add_option("--depth", o.depth, "Maximum word length")->check(CLI::NonNegativeNumber);
  atlas->add_option("--out", o.out, "Record file (JSON lines; index in FILE.idx); resumes if present");
  atlas->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);

  auto* render = sub("render", "Draw the curve on the hexagon net as SVG", cmd_render);
  add_in(render);
  render->add_option("--svg", o.svg, "SVG file (default stdout)");

  auto* selftest = sub("selftest", "Run the acceptance checks and invariant table", cmd_selftest);
  selftest->add_option("--workers", o.workers, "Worker threads for the atlas check")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  for (auto& [c, fn] : handlers) {
    if (!c->parsed()) continue;
    try {
      return fn(o);
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return exit_code(e.code());
    } catch (const CLI::ValidationError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const std::exception& e) {
      std::cerr << "internal error: " << e.what() << "\n";
      return kInternal;
    }
  }
  return kUsage;
}
