#include "reldiv/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "reldiv/builder.hpp"
#include "reldiv/classical.hpp"
#include "reldiv/closures.hpp"
#include "reldiv/enumerate.hpp"
#include "reldiv/graphs.hpp"
#include "reldiv/json_io.hpp"
#include "reldiv/oracle.hpp"

namespace reldiv {

namespace {

// Raised for bad command-line input that CLI11 cannot see (unreadable files,
// malformed variable orders).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), {}};
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(file), {}};
}

RelDivision load(const std::string& path, std::istream& in) {
  return parse_division(read_text(path, in));
}

std::string tuple(const std::vector<std::uint64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

VarOrder parse_order(int n, const std::string& text) {
  VarOrder order;
  std::string names = text;
  std::replace(names.begin(), names.end(), ',', ' ');
  std::istringstream is(names);
  for (std::string name; is >> name;) order.push_back(parse_var(n, name));
  try {
    check_order(order, n);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--order: ") + e.what());
  }
  return order;
}

struct Options {
  // gen
  std::string kind;
  int n = 0;
  int degree = 0;
  std::string order;
  // validate / graph / closure / sigma
  std::string file;
  int oracle = -1;
  bool json = false;
  // enumerate
  bool orbits = false;
  bool summary = false;
  unsigned jobs = 1;
  // graph
  std::string graph_kind = "ufnarovsky";
  std::string format = "dot";
  // closure
  std::string mode;
  std::vector<std::string> seeds;
  int certify = kDefaultMargin;
  // build
  std::string script;
  // vandermonde
  int dmax = 0;
};

int cmd_gen(const Options& o, std::ostream& out) {
  RelDivision div = o.kind == "pommaret" ? pommaret_on_slice(o.n, o.degree)
                                         : RelDivision::on_slice(o.n, o.degree,
                                                                 janet_general(enumerate_terms(o.n, o.degree), o.n).entries());
  if (!o.order.empty()) div = permute(div, parse_order(o.n, o.order));
  out << dump(to_json(div)) << '\n';
  return 0;
}

int cmd_validate(const Options& o, std::istream& in, std::ostream& out) {
  const RelDivision div = load(o.file, in);
  ValidationReport report = validate(div);
  if (o.oracle >= 0) {
    const auto bounded = verify_division_covering(div, o.oracle);
    for (const auto& v : bounded.violations) {
      if (std::find(report.violations.begin(), report.violations.end(), v) ==
          report.violations.end()) {
        report.violations.push_back(v);
      }
    }
    report.coverage_checked = true;
  }
  if (o.json) {
    out << dump(to_json(report, div.nvars())) << '\n';
  } else {
    out << (report.valid() ? "valid" : "invalid") << '\n';
    for (const auto& v : report.violations) out << "  " << describe(v, div.nvars()) << '\n';
    if (!report.coverage_checked) out << "  coverage not checked (use --oracle k)\n";
  }
  return report.valid() ? 0 : 1;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  std::size_t count = 0;
  Json sizes = Json::array();
  EnumerationOptions options;
  options.up_to_symmetry = o.orbits;
  options.jobs = std::max(1u, o.jobs);
  enumerate_divisions(o.n, o.degree, options, [&](const RelDivision& div) {
    out << dump(to_json(div)) << '\n';
    ++count;
    if (o.summary) sizes.push_back(orbit_size(div));
  });
  if (o.summary) {
    Json s;
    s["count"] = count;
    s["orbit_sizes"] = std::move(sizes);
    out << dump(Json{{"summary", std::move(s)}}) << '\n';
  }
  return 0;
}

int cmd_graph(const Options& o, std::istream& in, std::ostream& out) {
  const RelDivision div = load(o.file, in);
  const LabeledDigraph g = o.graph_kind == "ufnarovsky"    ? ufnarovsky_graph(div)
                           : o.graph_kind == "generalized" ? generalized_graph(div)
                                                           : redundant_graph(div);
  if (o.format == "dot") {
    out << to_dot(g);
  } else {
    out << dump(to_json(g)) << '\n';
  }
  return 0;
}

int cmd_closure(const Options& o, std::istream& in, std::ostream& out) {
  const RelDivision div = load(o.file, in);
  std::set<Term> seed;
  for (const auto& s : o.seeds) seed.insert(parse_term(div.nvars(), s));
  const bool ideal = o.mode == "ideal";
  const ClosureReport report = ideal ? compliant_closure(div, seed) : revenant_closure(div, seed);
  Json doc = to_json(report);
  bool certified = false;
  Json counterexample = nullptr;
  if (ideal) {
    const auto check = verify_ideal_equality(div, report.closure, o.certify);
    certified = check.holds;
    if (check.counterexample) counterexample = to_string(*check.counterexample);
  } else {
    const auto check = verify_order_ideal(div, report.closure, o.certify);
    certified = check.holds;
    if (check.counterexample) {
      counterexample = Json::array(
          {to_string(check.counterexample->first), to_string(check.counterexample->second)});
    }
  }
  doc["margin"] = o.certify;
  doc["certified"] = certified;
  doc["counterexample"] = std::move(counterexample);
  out << dump(doc) << '\n';
  return certified ? 0 : 1;
}

int cmd_build(const Options& o, std::istream& in, std::ostream& out, std::ostream& err,
              const CliEnvironment& env) {
  std::ifstream script;
  const bool scripted = !o.script.empty();
  if (scripted) {
    script.open(o.script);
    if (!script) throw UsageError("cannot read '" + o.script + "'");
  } else if (!env.stdin_is_terminal) {
    throw UsageError("build needs an interactive terminal or --script FILE");
  }
  std::istream& source = scripted ? static_cast<std::istream&>(script) : in;

  BuildSession session(o.n, o.degree);
  const bool color = env.color;
  out << session.render(color);
  std::string line;
  while (!session.complete()) {
    if (!scripted) out << "assign (term: variables)> " << std::flush;
    if (!std::getline(source, line)) break;
    std::optional<Choice> choice;
    try {
      choice = parse_choice(o.n, line);
    } catch (const std::exception& e) {
      (scripted ? out : err) << "rejected: " << e.what() << '\n';
      continue;
    }
    if (!choice) continue;
    if (scripted) out << "> " << line << '\n';
    if (auto conflict = session.choose(*choice)) {
      out << "rejected: " << *conflict << '\n';
      continue;
    }
    out << session.render(color);
  }
  if (!session.complete()) {
    std::size_t open = 0;
    for (std::size_t i = 0; i < session.state().size(); ++i) open += !session.state().row(i).assigned;
    out << "incomplete: " << open << " term(s) unassigned\n";
    return 1;
  }
  const RelDivision div = session.state().to_division();
  const ValidationReport report = validate(div);
  out << (report.valid() ? "valid" : "invalid") << '\n';
  out << dump(to_json(div)) << '\n';
  return report.valid() ? 0 : 1;
}

int cmd_sigma(const Options& o, std::istream& in, std::ostream& out) {
  const RelDivision div = load(o.file, in);
  if (!div.is_full_slice()) throw InvalidDivisionError("sigma needs a full degree slice");
  const auto observed = sigma_profile(div);
  const auto expected = sigma_expected(div.nvars(), *div.degree());
  out << "observed " << tuple(observed) << '\n' << "expected " << tuple(expected) << '\n';
  return observed == expected ? 0 : 1;
}

int cmd_vandermonde(const Options& o, std::ostream& out) {
  const bool holds = vandermonde_identity_check(o.n, o.degree, o.dmax);
  out << (holds ? "holds" : "fails") << '\n';
  return holds ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err, const CliEnvironment& env) {
  CLI::App app{"Relative involutive divisions of degree slices", "reldiv"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Print the Pommaret or Janet division of T_D");
  gen->add_option("kind", o.kind)->required()->check(CLI::IsMember({"pommaret", "janet"}));
  gen->add_option("n", o.n)->required()->check(CLI::Range(1, 16));
  gen->add_option("D", o.degree)->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--order", o.order, "Variables in increasing order, e.g. z,y,x");

  auto* val = app.add_subcommand("validate", "Check a division file");
  val->add_option("file", o.file)->required();
  val->add_option("--oracle", o.oracle, "Also scan degrees up to max + k")->check(CLI::NonNegativeNumber);
  val->add_flag("--json", o.json, "Print the report as JSON");

  auto* en = app.add_subcommand("enumerate", "Stream every division of T_D as JSON lines");
  en->add_option("n", o.n)->required()->check(CLI::Range(1, 16));
  en->add_option("D", o.degree)->required()->check(CLI::NonNegativeNumber);
  en->add_flag("--orbits", o.orbits, "One representative per variable relabelling class");
  en->add_flag("--summary", o.summary, "Append {\"summary\": {count, orbit_sizes}}");
  en->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));

  auto* gr = app.add_subcommand("graph", "Export a division graph");
  gr->add_option("file", o.file)->required();
  gr->add_option("--kind", o.graph_kind)
      ->check(CLI::IsMember({"ufnarovsky", "generalized", "redundant"}));
  gr->add_option("--format", o.format)->check(CLI::IsMember({"dot", "json"}));

  auto* cl = app.add_subcommand("closure", "Compliant (ideal) or revenant (escalier) closure");
  cl->add_option("file", o.file)->required();
  cl->add_option("--mode", o.mode)->required()->check(CLI::IsMember({"ideal", "escalier"}));
  cl->add_option("seeds", o.seeds)->required();
  cl->add_option("--certify", o.certify, "Oracle margin")->check(CLI::NonNegativeNumber);

  auto* bu = app.add_subcommand("build", "Assign multiplicative sets term by term");
  bu->add_option("n", o.n)->required()->check(CLI::Range(1, 16));
  bu->add_option("D", o.degree)->required()->check(CLI::NonNegativeNumber);
  bu->add_option("--script", o.script, "Replay choices from a file, one 'term: vars' per line");

  auto* si = app.add_subcommand("sigma", "Compare the sigma-profile with the expected one");
  si->add_option("file", o.file)->required();

  auto* va = app.add_subcommand("vandermonde", "Check the binomial identity on a grid");
  va->add_option("n", o.n)->required()->check(CLI::Range(1, 64));
  va->add_option("D", o.degree)->required()->check(CLI::NonNegativeNumber);
  va->add_option("dmax", o.dmax)->required()->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (val->parsed()) return cmd_validate(o, in, out);
    if (en->parsed()) return cmd_enumerate(o, out);
    if (gr->parsed()) return cmd_graph(o, in, out);
    if (cl->parsed()) return cmd_closure(o, in, out);
    if (bu->parsed()) return cmd_build(o, in, out, err, env);
    if (si->parsed()) return cmd_sigma(o, in, out);
    if (va->parsed()) return cmd_vandermonde(o, out);
  } catch (const InvalidDivisionError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 2;
  }
  return 2;
}

}  // namespace reldiv
