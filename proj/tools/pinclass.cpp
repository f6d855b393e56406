#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pinclass/classify.hpp"
#include "pinclass/errors.hpp"
#include "pinclass/json_io.hpp"
#include "pinclass/oracle.hpp"
#include "pinclass/pimap.hpp"
#include "pinclass/pipeline.hpp"

using namespace pinclass;

namespace {

enum Exit { kOk = 0, kParse = 2, kPrecondition = 3, kNumeric = 4, kMismatch = 5 };

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedSyntax:
    case ErrorKind::AlignmentViolation:
    case ErrorKind::EmptyInput:
    case ErrorKind::NonAlternatingCycle:
    case ErrorKind::NotAPermutation:
    case ErrorKind::NoOrigin:
    case ErrorKind::MultipleOrigins:
      return kParse;
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::EmptyPermutation:
    case ErrorKind::NonIndecomposableElement:
    case ErrorKind::NotInterior:
    case ErrorKind::NotRecurrent:
    case ErrorKind::DisconnectedQuadrants:
    case ErrorKind::CensusTooLarge:
      return kPrecondition;
    case ErrorKind::DivisionByZero:
    case ErrorKind::NonzeroConstantTerm:
    case ErrorKind::PoleAtZero:
    case ErrorKind::StabilizationFailure:
    case ErrorKind::BoundViolation:
    case ErrorKind::NoRootInRange:
    case ErrorKind::ConvergenceNotReached:
      return kNumeric;
  }
  return kNumeric;
}

struct Common {
  std::string format = "text";
  unsigned jobs = 1;
  bool json() const { return format == "json"; }
};

std::vector<std::string> stdin_lines() {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(line);
  }
  return out;
}

void print_gseq(const GSequence& s) {
  std::cout << "g  = " << s.g.to_string() << "\n";
  for (int q = 0; q < 4; ++q) std::cout << "g" << q + 1 << " = " << s.gq[q].to_string() << "\n";
  std::cout << "G  = " << s.G.to_string() << "\n";
}

void print_growth(const GrowthResult& g) {
  std::cout << "growth = " << g.decimal << "  (root of " << g.polynomial.to_string() << " in [" << rational_text(g.lo) << ", "
            << rational_text(g.hi) << "])\n";
}

GfMode parse_mode(const std::string& m) {
  if (m == "class") return GfMode::Class;
  if (m == "closure") return GfMode::Closure;
  if (m == "interior") return GfMode::Interior;
  throw PinError(ErrorKind::MalformedSyntax, "unknown mode '" + m + "'");
}

int cmd_perm(const Common& c, std::vector<std::string> words) {
  if (words.empty() || (words.size() == 1 && words[0] == "-")) words = stdin_lines();
  if (words.empty()) throw PinError(ErrorKind::EmptyInput, "no pin words given");
  Json arr = Json::array();
  for (const auto& text : words) {
    const PinWord w = parse_pin_word(text);
    const CentredPerm p = pi_map(w);
    if (c.json()) {
      Json j = to_json(p);
      j["word"] = w.to_string();
      j["text"] = p.to_string();
      arr.push_back(j);
    } else {
      std::cout << (words.size() > 1 ? w.to_string() + "\t" : "") << p.to_string() << "\n";
    }
  }
  if (c.json()) std::cout << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
  return kOk;
}

int cmd_gf(const Common& c, const std::string& spec_text, const std::string& mode, const std::string& tol) {
  const auto r = run_pipeline(parse_pin_spec(spec_text), parse_mode(mode), parse_rational(tol));
  if (c.json()) {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    std::cout << "spec " << r.spec << "  mode " << mode_name(r.mode) << "\n";
    std::cout << "f  = " << r.f.to_string() << "\n";
    print_gseq(r.seq);
    print_growth(r.growth);
  }
  return kOk;
}

int cmd_growth(const Common& c, const std::string& spec_text, const std::string& poly, const std::string& mode, const std::string& tol) {
  const Rational t = parse_rational(tol);
  GrowthResult g;
  if (!poly.empty()) {
    g = smallest_positive_root(parse_poly(poly), t);
  } else {
    if (spec_text.empty()) throw PinError(ErrorKind::EmptyInput, "give a pin sequence or --poly");
    g = run_pipeline(parse_pin_spec(spec_text), parse_mode(mode), t).growth;
  }
  if (c.json())
    std::cout << to_json(g).dump(2) << "\n";
  else
    print_growth(g);
  return kOk;
}

int cmd_verify(const Common& c, std::size_t n_max) {
  const auto reports = verify_tables(n_max, c.jobs);
  bool all = true;
  Json arr = Json::array();
  for (const auto& r : reports) {
    all = all && r.table_match;
    if (c.json()) {
      arr.push_back(to_json(r));
      continue;
    }
    std::size_t pairs = 0, quads = 0, other = 0;
    for (const auto& g : r.collision_groups) (g.size() == 2 ? pairs : g.size() == 4 ? quads : other)++;
    std::cout << "n=" << r.length << "  words=" << r.word_count << "  decomposable=" << r.decomposable_words.size()
              << "  collisions=" << pairs << " pairs";
    if (quads) std::cout << ", " << quads << " quadruples";
    if (other) std::cout << ", " << other << " other";
    std::cout << "  table_match=" << (r.table_match ? "true" : "false") << "\n";
    for (const auto& d : r.discrepancies) std::cout << "    " << d << "\n";
  }
  if (c.json()) std::cout << Json{{"reports", arr}, {"table_match", all}}.dump(2) << "\n";
  return all ? kOk : kMismatch;
}

int cmd_oracle(const Common& c, const std::string& spec_text, std::size_t n, const std::string& method, const std::string& dump) {
  CensusOptions opt;
  opt.jobs = c.jobs;
  ClassCensus census;
  std::optional<RatGF> expected;
  if (spec_text == "complete") {
    census = enumerate_pin_permutations(n, opt);
    expected = complete_class_gf({1, 2, 3, 4});
  } else {
    const PinSpec spec = parse_pin_spec(spec_text);
    if (method == "subset") {
      opt.subset_guard = std::max<std::size_t>(opt.subset_guard, n);
      census = enumerate_class_subset(spec, n, opt);
    } else if (method == "composition") {
      census = enumerate_class_composition(spec, n, opt);
    } else {
      throw PinError(ErrorKind::MalformedSyntax, "unknown method '" + method + "'");
    }
    if (is_recurrent(spec)) expected = class_gf(spec);
  }
  bool match = true;
  std::vector<Rational> want;
  if (expected) {
    want = coeffs(*expected, n);
    for (std::size_t i = 0; i <= n; ++i) match = match && want[i] == census.counts[i];
  }
  if (!dump.empty()) {
    std::ofstream out(dump);
    for (const auto& level : census.perms)
      for (const auto& p : level) out << p.to_string() << "\n";
  }
  if (c.json()) {
    Json j = to_json(census);
    if (expected) {
      j["gf"] = to_json(*expected);
      j["matches_gf"] = match;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "method " << method_name(census.method) << "  counts";
    for (long v : census.counts) std::cout << " " << v;
    std::cout << "\n";
    if (census.method == CensusMethod::Subset) std::cout << "depth " << census.depth << " (empirical stopping rule)\n";
    if (expected) {
      std::cout << "gf     ";
      for (const auto& v : want) std::cout << " " << rational_text(v);
      std::cout << "\n" << (match ? "match" : "MISMATCH") << "\n";
    }
  }
  return match ? kOk : kMismatch;
}

int cmd_complete(const Common& c, const std::string& quads, const std::string& tol) {
  const auto qs = parse_quadrants(quads);
  const auto s = complete_class_G(qs);
  const RatGF f = seq(s.G);
  const auto g = growth_rate(f, GrowthTarget::DenominatorRoot, parse_rational(tol));
  if (c.json()) {
    Json quads_json = Json::array();
    for (const auto& q : s.gq) quads_json.push_back(to_json(q));
    std::cout << Json{{"quadrants", qs}, {"g", to_json(s.g)}, {"g_quadrants", quads_json}, {"G", to_json(s.G)}, {"f", to_json(f)}, {"growth", to_json(g)}}.dump(2)
              << "\n";
  } else {
    std::cout << "f  = " << f.to_string() << "\n";
    print_gseq(s);
    print_growth(g);
  }
  return kOk;
}

int cmd_closure_of(const Common& c, const std::string& perms_text, const std::string& tol) {
  std::vector<std::string> perms{perms_text};
  if (perms_text.empty() || perms_text == "-") perms = stdin_lines();
  std::vector<CentredPerm> gens;
  for (const auto& text : perms) {
    // Several permutations may share one argument, separated by ';' or spaces.
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
      std::stringstream inner(item);
      std::string tok;
      while (inner >> tok) gens.push_back(CentredPerm::from_oneline(tok));
    }
  }
  const auto s = finite_closure_G(gens);
  const RatGF f = seq(s.G);
  const auto g = growth_rate(f, GrowthTarget::DenominatorRoot, parse_rational(tol));
  if (c.json()) {
    Json gj = Json::array();
    for (const auto& p : gens) gj.push_back(p.to_string());
    std::cout << Json{{"generators", gj}, {"g", to_json(s.g)}, {"G", to_json(s.G)}, {"f", to_json(f)}, {"growth", to_json(g)}}.dump(2) << "\n";
  } else {
    std::cout << "f  = " << f.to_string() << "\n";
    print_gseq(s);
    print_growth(g);
  }
  return kOk;
}

int cmd_render(const std::string& target, std::size_t steps, const std::string& format, const std::string& out) {
  PinWord w;
  if (target.find('(') != std::string::npos) {
    const PinSpec spec = parse_pin_spec(target);
    w = spec.initial(steps ? steps : spec.prefix_length() + 2 * spec.period());
  } else {
    w = parse_pin_word(target);
    if (steps && steps < w.length()) w.letters.resize(steps - 1);
  }
  const auto dia = build_diagram(w);
  std::string text;
  if (format == "svg")
    text = render_svg(dia);
  else if (format == "ascii")
    text = render_ascii(dia);
  else
    throw PinError(ErrorKind::MalformedSyntax, "unknown render format '" + format + "'");
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw PinError(ErrorKind::EmptyInput, "cannot write " + out);
    f << text;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pin sequences, centred permutation classes and their generating functions"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", common.jobs, "Worker threads for verify-tables and oracle")->check(CLI::Range(1u, 64u));

  std::vector<std::string> words;
  auto* perm = app.add_subcommand("perm", "Centred pin permutation of a pin word (reads stdin for '-' or no word)");
  perm->add_option("words", words, "Pin words");

  std::string spec_text, mode = "class", tol = "1e-12", poly;
  auto* gf = app.add_subcommand("gf", "Generating functions of a pin sequence");
  gf->add_option("spec", spec_text, "Pin sequence, e.g. 1(ru)*")->required();
  gf->add_option("--mode", mode, "class | closure | interior")->check(CLI::IsMember({"class", "closure", "interior"}));
  gf->add_option("--tol", tol, "Root isolation tolerance");

  auto* growth = app.add_subcommand("growth", "Certified growth rate of a sequence or a polynomial's smallest root");
  auto* growth_spec = growth->add_option("spec", spec_text, "Pin sequence");
  growth->add_option("--poly", poly, "Polynomial such as 1-2z-z^3")->excludes(growth_spec);
  growth->add_option("--mode", mode, "class | closure | interior")->check(CLI::IsMember({"class", "closure", "interior"}));
  growth->add_option("--tol", tol, "Root isolation tolerance");

  std::size_t n_max = 12;
  auto* verify = app.add_subcommand("verify-tables", "Re-derive the decomposable and collision tables exhaustively");
  verify->add_option("--n-max", n_max, "Largest word length");

  std::size_t n = 6;
  std::string method = "composition", dump;
  auto* oracle = app.add_subcommand("oracle", "Brute-force census of a pin class (spec 'complete' for all pin permutations)");
  oracle->add_option("spec", spec_text, "Pin sequence or 'complete'")->required();
  oracle->add_option("--n", n, "Largest length");
  oracle->add_option("--method", method, "subset | composition")->check(CLI::IsMember({"subset", "composition"}));
  oracle->add_option("--dump-perms", dump, "Write members one per line");

  std::string quads = "1234";
  auto* complete = app.add_subcommand("complete", "Complete pin class confined to a set of quadrants");
  complete->add_option("--quadrants", quads, "e.g. 1,2");
  complete->add_option("--tol", tol, "Root isolation tolerance");

  std::string perms;
  auto* closure = app.add_subcommand("closure-of", "Box-closure of finitely many centred permutations");
  closure->add_option("--perms", perms, "Permutations in bracket notation separated by ';' or spaces (stdin for '-' or none)");
  closure->add_option("--tol", tol, "Root isolation tolerance");

  std::string target, render_format = "svg", out;
  std::size_t steps = 0;
  auto* render = app.add_subcommand("render", "Draw a pin diagram");
  render->add_option("target", target, "Pin word or sequence")->required();
  render->add_option("--steps", steps, "Number of points to draw");
  render->add_option("--format", render_format, "svg | ascii")->check(CLI::IsMember({"svg", "ascii"}));
  render->add_option("--out", out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kParse;
  }

  try {
    if (*perm) return cmd_perm(common, words);
    if (*gf) return cmd_gf(common, spec_text, mode, tol);
    if (*growth) return cmd_growth(common, spec_text, poly, mode, tol);
    if (*verify) return cmd_verify(common, n_max);
    if (*oracle) return cmd_oracle(common, spec_text, n, method, dump);
    if (*complete) return cmd_complete(common, quads, tol);
    if (*closure) return cmd_closure_of(common, perms, tol);
    if (*render) return cmd_render(target, steps, render_format, out);
  } catch (const PinError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kNumeric;
  }
  return kOk;
}
