#include "quandle/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "quandle/cocycle.hpp"
#include "quandle/errors.hpp"
#include "quandle/homology.hpp"
#include "quandle/report.hpp"
#include "quandle/verify.hpp"

namespace quandle {

namespace {

struct Flags {
  std::int64_t n = 0;
  std::int64_t t = 0;
  std::string method = "formula";
  std::string table_path;
  std::string word;
  bool trace = false;
  std::int64_t n_max = 8;
  std::uint64_t seed = VerifyOptions{}.seed;
  std::size_t words = VerifyOptions{}.random_words;
};

Json linear_context(const Flags& f) { return Json{{"n", f.n}, {"t", f.t}}; }

int cmd_axioms(const Flags& f, Report& report) {
  report.context = Json{{"table", f.table_path}};
  const Table table = read_table_file(f.table_path);
  report.result["n"] = table.size();
  const auto verdict = validate(table);
  if (const auto* violation = std::get_if<AxiomViolation>(&verdict)) {
    report.result["valid"] = false;
    report.result["violation"] = to_json(*violation);
    report.fail("InvalidQuandle", violation->describe());
    return kExitDomain;
  }
  report.result["valid"] = true;
  report.result["orbits"] = to_json(orbits(std::get<FiniteQuandle>(verdict)));
  return kExitOk;
}

int cmd_orbits(const Flags& f, Report& report) {
  report.context = linear_context(f);
  const LinearAlexanderParams p(f.n, f.t);
  const FiniteQuandle q = build_alexander(p);
  report.result["m"] = orbit_count_linear(p);
  report.result["connected"] = is_connected(q);
  report.result["orbits"] = to_json(orbits(q));
  return kExitOk;
}

int cmd_h2(const Flags& f, Report& report) {
  report.context = linear_context(f);
  report.context["method"] = f.method;
  const LinearAlexanderParams p(f.n, f.t);
  AbelianInvariants g;
  if (f.method == "formula") {
    g = h2_closed_form(p);
  } else if (f.method == "eisermann") {
    g = h2_eisermann(p);
  } else {
    g = h2_brute_force(build_alexander(p));
  }
  report.result = to_json(g);
  return kExitOk;
}

int cmd_normal_form(const Flags& f, Report& report) {
  report.context = linear_context(f);
  const LinearAlexanderParams p(f.n, f.t);
  const Word w = parse_word(f.word);
  check_word(p, w);
  const PackedElement packed = word_eval(p, w);
  report.result["input"] = format_word(w);
  report.result["packed"] = to_json(packed);
  report.result["canonical"] = format_word(canonical_word(p, packed));
  if (f.trace) {
    const RewriteResult rw = rewrite_trace(p, w);
    Json steps = Json::array();
    for (const auto& step : rw.trace) steps.push_back(to_json(step));
    report.result["trace"] = steps;
  }
  return kExitOk;
}

int cmd_phi_table(const Flags& f, Report& report) {
  report.context = linear_context(f);
  const LinearAlexanderParams p(f.n, f.t);
  Json rows = Json::array();
  for (std::int64_t a = 0; a < p.n(); ++a) {
    Json row = Json::array();
    for (std::int64_t b = 0; b < p.n(); ++b) row.push_back(to_json(phi0(p, a, b)));
    rows.push_back(row);
  }
  report.result["m"] = p.orbit_count();
  report.result["phi0"] = rows;
  return kExitOk;
}

int cmd_verify(const Flags& f, Report& report) {
  report.context = Json{{"n_max", f.n_max}, {"seed", f.seed}, {"words", f.words}};
  const auto cases = run_verification({f.n_max, f.seed, f.words});
  Json list = Json::array();
  std::size_t checks = 0, failures = 0;
  for (const auto& c : cases) {
    Json failed = Json::array();
    for (const auto& suite : c.suites)
      if (suite.failures > 0) failed.push_back(Json{{"suite", suite.name}, {"failures", suite.failures},
                                                    {"first", suite.first_failure}});
    list.push_back(Json{{"n", c.n}, {"t", c.t}, {"checks", c.checks()}, {"failures", c.failures()},
                        {"failed", failed}});
    checks += c.checks();
    failures += c.failures();
  }
  report.result["cases"] = list;
  report.result["summary"] = Json{{"cases", cases.size()}, {"checks", checks}, {"failures", failures}};
  if (failures > 0) {
    report.status = "failed";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Structure groups and second homology of linear Alexander quandles", "quandle"};
  app.require_subcommand(1);
  Flags f;
  std::function<int(const Flags&, Report&)> handler;

  auto linear = [&](CLI::App* sub) {
    sub->add_option("--n", f.n, "modulus n of Z/n")->required();
    sub->add_option("--t", f.t, "multiplier t, a unit mod n")->required();
  };

  auto* axioms = app.add_subcommand("axioms", "validate a quandle table file");
  axioms->add_option("--table", f.table_path, "table file")->required();
  axioms->callback([&] { handler = cmd_axioms; });

  auto* orbit_cmd = app.add_subcommand("orbits", "orbit partition of Al(Z/n, t)");
  linear(orbit_cmd);
  orbit_cmd->callback([&] { handler = cmd_orbits; });

  auto* h2 = app.add_subcommand("h2", "second quandle homology of Al(Z/n, t)");
  linear(h2);
  h2->add_option("--method", f.method, "formula | eisermann | chain")
      ->check(CLI::IsMember({"formula", "eisermann", "chain"}));
  h2->callback([&] { handler = cmd_h2; });

  auto* nf = app.add_subcommand("normal-form", "normal form of a structure-group word");
  linear(nf);
  nf->add_option("--word", f.word, "word such as \"e1 e0^-2 e3\"")->required();
  nf->add_flag("--trace", f.trace, "include the rewriting steps");
  nf->callback([&] { handler = cmd_normal_form; });

  auto* phi_cmd = app.add_subcommand("phi-table", "table of phi0(a, b)");
  linear(phi_cmd);
  phi_cmd->callback([&] { handler = cmd_phi_table; });

  auto* verify = app.add_subcommand("verify", "invariant and oracle sweep over all n <= n-max");
  verify->add_option("--n-max", f.n_max, "largest modulus")->required()->check(CLI::Range(2, 64));
  verify->add_option("--seed", f.seed, "seed for random words");
  verify->add_option("--words", f.words, "random words per case");
  verify->callback([&] { handler = cmd_verify; });

  Report report;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const auto subs = app.get_subcommands();
    report.command = subs.empty() ? "" : subs.front()->get_name();
    report.fail("ParseError", e.what());
    out << report.dump() << '\n';
    return kExitUsage;
  }

  report.command = app.get_subcommands().front()->get_name();
  int code = kExitOk;
  try {
    code = handler(f, report);
  } catch (const ParseError& e) {
    report.fail("ParseError", e.what());
    code = kExitUsage;
  } catch (const DomainError& e) {
    report.fail(e.kind(), e.what());
    code = kExitDomain;
  }
  out << report.dump() << '\n';
  return code;
}

}  // namespace quandle
