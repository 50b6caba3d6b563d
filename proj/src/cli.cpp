#include "dlcat/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dlcat/expr.hpp"

namespace dlc::cli {

namespace {

std::string ms(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

std::string paint(std::string_view text, const char* code, bool color) {
  if (!color) return std::string(text);
  return std::string("\033[") + code + "m" + std::string(text) + "\033[0m";
}

std::string status_word(LawStatus s, bool color) {
  switch (s) {
    case LawStatus::pass:
      return paint("PASS", "32", color);
    case LawStatus::fail:
      return paint("FAIL", "31", color);
    case LawStatus::skipped:
      return paint("SKIP", "33", color);
  }
  return "?";
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

nlohmann::ordered_json to_json(const SuiteRun& run) {
  nlohmann::ordered_json j;
  j["model"] = run.binding.model;
  j["semiring"] = run.binding.semiring;
  j["params"] = run.binding.params;
  j["params"]["cases"] = run.cases;
  j["seed"] = run.seed;
  j["laws"] = nlohmann::ordered_json::array();
  for (const auto& r : run.reports) {
    nlohmann::ordered_json law;
    law["id"] = r.id;
    law["citation"] = r.citation;
    law["status"] = std::string(to_string(r.status));
    law["cases"] = r.cases;
    if (r.counterexample)
      law["counterexample"] = {{"input", r.counterexample->input},
                               {"lhs", r.counterexample->lhs},
                               {"rhs", r.counterexample->rhs}};
    if (r.status == LawStatus::skipped) law["reason"] = r.skip_reason;
    law["ms"] = r.elapsed_ms;
    j["laws"].push_back(std::move(law));
  }
  j["all_pass"] = laws::all_pass(run.reports);
  j["total_ms"] = run.total_ms;
  return j;
}

std::string to_text(const SuiteRun& run, bool color) {
  std::ostringstream os;
  os << "model " << run.binding.model << ", semiring " << run.binding.semiring << ", seed " << run.seed << ", cases "
     << run.cases << "\n";
  os << "params";
  for (const auto& item : run.binding.params.items()) {
    const auto& v = item.value();
    os << " " << item.key() << "=" << (v.is_string() ? v.template get<std::string>() : v.dump());
  }
  os << "\n\n";
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& r : run.reports) {
    const auto& info = laws::law_info(*laws::parse_law_id(r.id));
    os << pad(r.id, 5) << status_word(r.status, color) << "  " << pad(info.name, 40);
    switch (r.status) {
      case LawStatus::pass:
        ++passed;
        os << r.cases << " cases, " << ms(r.elapsed_ms) << " ms\n";
        break;
      case LawStatus::fail:
        ++failed;
        os << r.cases << " cases, " << ms(r.elapsed_ms) << " ms\n";
        os << "       " << r.citation << "\n";
        if (r.counterexample) {
          os << "       input: " << r.counterexample->input << "\n";
          os << "       lhs:   " << r.counterexample->lhs << "\n";
          os << "       rhs:   " << r.counterexample->rhs << "\n";
        }
        break;
      case LawStatus::skipped:
        ++skipped;
        os << r.skip_reason << "\n";
        break;
    }
  }
  os << "\n"
     << (failed ? paint("FAILED", "31", color) : paint("PASSED", "32", color)) << ": " << passed << " passed, "
     << failed << " failed, " << skipped << " skipped in " << ms(run.total_ms) << " ms\n";
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
  CLI::App app{"Check differential-category laws against concrete models, and evaluate polynomial expressions."};
  app.name("dctool");
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "Run the law suite against one model");
  std::string model;
  laws::PolyConfig pc;
  laws::RelConfig rc;
  laws::SmoothConfig sc;
  std::string semiring = "nonneg-rational";
  std::optional<std::size_t> cases;
  std::uint64_t seed = 42;
  std::string format = "text";
  std::string output;
  std::optional<double> tol;
  check->add_option("model", model, "poly, rel or smooth")->required()->check(CLI::IsMember({"poly", "rel", "smooth"}));
  auto* o_semiring = check->add_option("--semiring", semiring, "Coefficient semiring (exact models)")
                         ->check(CLI::IsMember(laws::semiring_names()))
                         ->capture_default_str();
  auto* o_vars = check->add_option("--vars", pc.vars, "poly: maximum number of variables")->capture_default_str();
  auto* o_degree = check->add_option("--max-degree", pc.max_degree, "poly: maximum total degree")->capture_default_str();
  auto* o_sabotage =
      check->add_flag("--sabotage", pc.sabotage_constants, "poly: bind a d that keeps constant terms (must fail)");
  auto* o_base = check->add_option("--base-size", rc.base_size, "rel: size of the base set")->capture_default_str();
  auto* o_trunc = check->add_option("--truncation", rc.truncation, "rel: maximum bag size D")->capture_default_str();
  auto* o_margin = check->add_option("--margin", rc.margin, "rel: safe-band margin (>= 2)")->capture_default_str();
  auto* o_dim = check->add_option("--dim", sc.dim, "smooth: maximum input dimension")->capture_default_str();
  auto* o_order = check->add_option("--order", sc.order, "smooth: Gauss-Legendre order")->capture_default_str();
  auto* o_tol = check->add_option("--tol", tol, "smooth: tolerance for the fundamental theorem");
  check->add_option("--cases", cases, "Cases per law (default depends on the model)");
  check->add_option("--seed", seed, "Random seed")->capture_default_str();
  check->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  check->add_option("--output", output, "Write the report to a file instead of stdout");

  // poly
  auto* poly = app.add_subcommand("poly", "Evaluate a polynomial expression");
  std::string expr_src;
  std::string expr_semiring = "nonneg-rational";
  std::string coord;
  poly->add_option("--expr", expr_src, "Expression, e.g. \"d(x^2*y)\"")->required();
  poly->add_option("--semiring", expr_semiring, "Coefficient semiring")
      ->check(CLI::IsMember(laws::semiring_names()))
      ->capture_default_str();
  poly->add_option("--coord", coord, "Print one coordinate of a bundle (variable name or 0-based index)");

  // list-laws
  auto* list = app.add_subcommand("list-laws", "Print the law table");

  std::vector<const char*> argv{"dctool"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  if (*list) {
    for (const auto& info : laws::law_table()) out << pad(info.code, 5) << info.citation << "\n";
    return ok;
  }

  if (*poly) {
    try {
      const expr::Value v = expr::evaluate(expr_src, expr_semiring);
      if (coord.empty()) {
        out << v.render() << "\n";
        return ok;
      }
      if (!v.bundle) {
        err << "error: --coord needs an expression whose value is a bundle, such as d(p)\n";
        return usage;
      }
      std::size_t idx = v.vars.size();
      for (std::size_t i = 0; i < v.vars.size(); ++i)
        if (v.vars[i] == coord) idx = i;
      if (idx == v.vars.size() && !coord.empty() && coord.find_first_not_of("0123456789") == std::string::npos)
        idx = std::stoul(coord);
      if (idx >= v.components.size()) {
        err << "error: no coordinate '" << coord << "'\n";
        return usage;
      }
      out << v.components[idx] << "\n";
      return ok;
    } catch (const expr::ParseError& e) {
      err << "error: " << e.what() << "\n  " << expr_src << "\n  " << std::string(e.position(), ' ') << "^\n";
      return usage;
    } catch (const expr::EvalError& e) {
      err << "error: " << e.what() << "\n";
      return law_failure;
    }
  }

  // check: reject flags that belong to another model.
  const std::vector<std::pair<CLI::Option*, std::string>> owners = {
      {o_vars, "poly"},   {o_degree, "poly"}, {o_sabotage, "poly"}, {o_base, "rel"},     {o_trunc, "rel"},
      {o_margin, "rel"},  {o_dim, "smooth"},  {o_order, "smooth"},  {o_tol, "smooth"},
  };
  for (const auto& [opt, owner] : owners)
    if (opt->count() && owner != model) {
      err << "error: " << opt->get_name() << " applies to 'check " << owner << "', not 'check " << model << "'\n";
      return usage;
    }
  if (model == "smooth" && o_semiring->count()) {
    err << "error: --semiring does not apply to 'check smooth' (it works over the reals)\n";
    return usage;
  }

  SuiteRun run;
  try {
    if (model == "poly") {
      pc.semiring = semiring;
      run.binding = laws::make_poly_binding(pc);
    } else if (model == "rel") {
      rc.semiring = semiring;
      run.binding = laws::make_rel_binding(rc);
    } else {
      sc.tol = tol;
      run.binding = laws::make_smooth_binding(sc);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  run.cases = cases.value_or(run.binding.default_cases);
  run.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  run.reports = laws::run_suite(run.binding, run.cases, run.seed);
  run.total_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const std::string report = format == "json" ? to_json(run).dump(2) + "\n" : to_text(run, color && output.empty());
  if (output.empty()) {
    out << report;
  } else {
    std::ofstream file(output);
    if (!file) {
      err << "error: cannot write " << output << "\n";
      return usage;
    }
    file << report;
  }
  return laws::all_pass(run.reports) ? ok : law_failure;
}

}  // namespace dlc::cli
