#include "pinclass/json_io.hpp"

#include "pinclass/errors.hpp"

namespace pinclass {

namespace {

Json words_json(const std::set<PinWord>& words) {
  Json a = Json::array();
  for (const auto& w : words) a.push_back(w.to_string());
  return a;
}

}  // namespace

Json to_json(const CentredPerm& p) { return {{"filled", p.filled_values()}, {"origin", p.origin() + 1}}; }

CentredPerm perm_from_json(const Json& j) {
  try {
    const auto origin = j.at("origin").get<std::size_t>();
    if (origin < 1) throw PinError(ErrorKind::IndexOutOfRange, "origin is 1-based");
    return CentredPerm(j.at("filled").get<std::vector<int>>(), origin - 1);
  } catch (const Json::exception& e) {
    throw PinError(ErrorKind::MalformedSyntax, std::string("bad permutation JSON: ") + e.what());
  }
}

Json to_json(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(rational_text(c));
  return a;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw PinError(ErrorKind::MalformedSyntax, "polynomial JSON must be an array");
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(parse_rational(e.is_string() ? e.get<std::string>() : e.dump()));
  return Poly(std::move(c));
}

Json to_json(const RatGF& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}, {"text", f.to_string()}}; }

RatGF ratgf_from_json(const Json& j) {
  if (!j.contains("num") || !j.contains("den")) throw PinError(ErrorKind::MalformedSyntax, "rational function JSON needs num and den");
  return RatGF(poly_from_json(j["num"]), poly_from_json(j["den"]));
}

Json to_json(const GrowthResult& g) {
  return {{"interval", {rational_text(g.lo), rational_text(g.hi)}}, {"decimal", g.decimal}, {"polynomial", to_json(g.polynomial)}};
}

GrowthResult growth_from_json(const Json& j) {
  try {
    GrowthResult g;
    g.lo = parse_rational(j.at("interval").at(0).get<std::string>());
    g.hi = parse_rational(j.at("interval").at(1).get<std::string>());
    g.decimal = j.at("decimal").get<std::string>();
    if (j.contains("polynomial")) g.polynomial = poly_from_json(j["polynomial"]);
    return g;
  } catch (const Json::exception& e) {
    throw PinError(ErrorKind::MalformedSyntax, std::string("bad growth JSON: ") + e.what());
  }
}

Json to_json(const PipelineResult& r) {
  Json quads = Json::array();
  for (const auto& q : r.seq.gq) quads.push_back(to_json(q));
  return {{"spec", r.spec},     {"mode", std::string(mode_name(r.mode))}, {"g", to_json(r.seq.g)}, {"g_quadrants", quads},
          {"G", to_json(r.seq.G)}, {"f", to_json(r.f)},                      {"growth", to_json(r.growth)}};
}

Json to_json(const ClassCensus& c) {
  Json j = {{"method", std::string(method_name(c.method))}, {"counts", c.counts}, {"n_max", c.n_max}, {"description", c.description}};
  if (c.method == CensusMethod::Subset) {
    j["depth"] = c.depth;
    j["stopping_rule"] = "empirical";
  }
  return j;
}

ClassCensus census_from_json(const Json& j) {
  try {
    ClassCensus c;
    const auto m = j.at("method").get<std::string>();
    if (m == "subset")
      c.method = CensusMethod::Subset;
    else if (m == "composition")
      c.method = CensusMethod::Composition;
    else if (m == "representation")
      c.method = CensusMethod::Representation;
    else if (m == "generators")
      c.method = CensusMethod::Generators;
    else
      throw PinError(ErrorKind::MalformedSyntax, "unknown census method '" + m + "'");
    c.counts = j.at("counts").get<std::vector<long>>();
    c.n_max = j.at("n_max").get<std::size_t>();
    c.description = j.value("description", "");
    c.depth = j.value("depth", std::size_t{0});
    return c;
  } catch (const Json::exception& e) {
    throw PinError(ErrorKind::MalformedSyntax, std::string("bad census JSON: ") + e.what());
  }
}

Json to_json(const ClassificationReport& r) {
  Json groups = Json::array();
  for (const auto& g : r.collision_groups) groups.push_back(words_json(g));
  return {{"length", r.length},
          {"word_count", r.word_count},
          {"decomposable_words", words_json(r.decomposable_words)},
          {"collision_groups", groups},
          {"table_match", r.table_match},
          {"discrepancies", r.discrepancies}};
}

}  // namespace pinclass
