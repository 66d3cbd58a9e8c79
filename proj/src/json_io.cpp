#include "reldiv/json_io.hpp"

namespace reldiv {

namespace {

Json term_list(const std::set<Term>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) out.push_back(to_string(t));
  return out;
}

Json var_list(VarSet m, int n) {
  Json out = Json::array();
  for (Var v : m.members()) out.push_back(var_name(n, v));
  return out;
}

template <class T>
T field(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

Json to_json(const RelDivision& div) {
  const int n = div.nvars();
  Json doc;
  doc["n"] = n;
  doc["degree"] = div.degree() ? Json(*div.degree()) : Json(nullptr);
  doc["variables"] = var_names(n);
  Json mult = Json::object();
  for (const auto& e : div.entries()) mult[to_string(e.term)] = var_list(e.mult, n);
  doc["multiplicative"] = std::move(mult);
  return doc;
}

RelDivision division_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("a division must be a JSON object");
  const int n = field<int>(doc, "n");
  if (n < 1 || n > 32) throw ParseError("'n' must be in 1..32");
  if (doc.contains("variables") && field<std::vector<std::string>>(doc, "variables") != var_names(n)) {
    throw ParseError("'variables' must list the standard names for n = " + std::to_string(n));
  }
  if (!doc.contains("degree")) throw ParseError("missing field 'degree'");
  const Json& mult = doc.at("multiplicative");
  if (!mult.is_object()) throw ParseError("'multiplicative' must be an object");

  std::vector<RelDivision::Entry> entries;
  for (const auto& [key, value] : mult.items()) {
    if (!value.is_array()) throw ParseError("multiplicative set of '" + key + "' must be an array");
    VarSet m;
    for (const auto& name : value) {
      if (!name.is_string()) throw ParseError("variable names must be strings");
      m = m.with(parse_var(n, name.get<std::string>()));
    }
    entries.push_back({parse_term(n, key), m});
  }
  if (doc.at("degree").is_null()) return RelDivision::on_set(n, std::move(entries));
  const int degree = field<int>(doc, "degree");
  if (degree < 0) throw ParseError("'degree' must be non-negative");
  return RelDivision::on_slice(n, degree, std::move(entries));
}

RelDivision parse_division(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return division_from_json(doc);
}

Json to_json(const ValidationReport& report, int n) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json item;
    if (const auto* o = std::get_if<Overlap>(&v)) {
      item["kind"] = "overlap";
      item["u"] = to_string(o->u);
      item["v"] = to_string(o->v);
      item["witness"] = to_string(o->witness);
    } else if (const auto* p = std::get_if<ProfileMismatch>(&v)) {
      item["kind"] = "profile-mismatch";
      item["observed"] = p->observed;
      item["expected"] = p->expected;
    } else if (const auto* pp = std::get_if<PurePowerNotMultiplicative>(&v)) {
      item["kind"] = "pure-power";
      item["variable"] = var_name(n, pp->var);
    } else if (const auto* mp = std::get_if<MultiplePeaks>(&v)) {
      item["kind"] = "multiple-peaks";
      item["peaks"] = term_list({mp->peaks.begin(), mp->peaks.end()});
    } else if (std::holds_alternative<NoPeak>(v)) {
      item["kind"] = "no-peak";
    } else if (const auto* u = std::get_if<Uncovered>(&v)) {
      item["kind"] = "uncovered";
      item["term"] = to_string(u->term);
    } else if (const auto* d = std::get_if<DoubleCovered>(&v)) {
      item["kind"] = "double-covered";
      item["term"] = to_string(d->term);
      item["u"] = to_string(d->u);
      item["v"] = to_string(d->v);
    }
    violations.push_back(std::move(item));
  }
  Json doc;
  doc["valid"] = report.valid();
  doc["coverage_checked"] = report.coverage_checked;
  doc["violations"] = std::move(violations);
  return doc;
}

Json to_json(const ClosureReport& report) {
  Json doc;
  doc["seed"] = term_list(report.seed);
  doc["closure"] = term_list(report.closure);
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) {
    Json item;
    item["added"] = to_string(w.added);
    item["s"] = to_string(w.s);
    item["t"] = to_string(w.t);
    item["lcm"] = to_string(w.lcm);
    item["vertex"] = to_string(w.vertex);
    witnesses.push_back(std::move(item));
  }
  doc["witnesses"] = std::move(witnesses);
  return doc;
}

Json to_json(const LabeledDigraph& g) {
  Json nodes = Json::array();
  for (const auto& t : g.nodes()) nodes.push_back(to_string(t));
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    edges.push_back(Json::array({to_string(g.nodes()[e.tail]), to_string(g.nodes()[e.head]),
                                 e.label ? Json(var_name(g.nvars(), *e.label)) : Json(nullptr)}));
  }
  Json doc;
  doc["nodes"] = std::move(nodes);
  doc["edges"] = std::move(edges);
  return doc;
}

std::string dump(const Json& doc) { return doc.dump(); }

}  // namespace reldiv
