#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "wald/bound.hpp"
#include "wald/error.hpp"
#include "wald/monomial.hpp"
#include "wald/reference_checks.hpp"
#include "wald/serialize.hpp"
#include "wald/shape.hpp"

namespace wald::cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

std::string exponents_str(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) out += (i ? " " : "") + std::to_string(m[i]);
  return out;
}

Json require_input(const RunSpec& spec) {
  if (spec.input.empty()) throw InputError("this command needs --input");
  return parse_json_text(load_input(spec.input));
}

Configuration configuration_from(const Json& j, const RunSpec& spec) {
  Configuration config = j.contains("components") ? parse_configuration(j)
                                                  : Configuration(parse_shape(j).n(), {{parse_shape(j), 1}}, 0);
  if (spec.derivative_order) config = config.with_derivative_order(*spec.derivative_order);
  return config;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_ahp(const RunSpec& spec, std::ostream& out) {
  const Configuration config = configuration_from(require_input(spec), spec);
  const Poly ahp = ahp_configuration(config);
  switch (spec.format) {
    case Format::kJson:
      print_json(out, Json{{"ahp", to_json(ahp)}, {"validity_threshold", to_json(config.validity_threshold())}});
      break;
    case Format::kCsv:
      out << "degree,coefficient\n";
      for (std::size_t k = 0; k < ahp.coefficients().size(); ++k) out << k << "," << ahp.coefficients()[k] << "\n";
      break;
    case Format::kText:
      out << "aHP(t) = " << to_string(ahp) << "\n";
      out << "valid for t >= " << config.validity_threshold() << "\n";
      break;
  }
  return kExitOk;
}

int cmd_lambda(const RunSpec& spec, std::ostream& out) {
  const Configuration config = configuration_from(require_input(spec), spec);
  const Poly lambda = lambda_poly(config);
  const Poly lambda_c = derivative(lambda, config.derivative_order());
  switch (spec.format) {
    case Format::kJson:
      print_json(out, Json{{"lambda", to_json(lambda)}, {"c", config.derivative_order()}, {"lambda_c", to_json(lambda_c)}});
      break;
    case Format::kCsv: {
      out << "degree,lambda,lambda_c\n";
      for (int k = 0; k <= lambda.degree(); ++k) {
        out << k << "," << lambda.coefficient(static_cast<std::size_t>(k)) << ","
            << lambda_c.coefficient(static_cast<std::size_t>(k)) << "\n";
      }
      break;
    }
    case Format::kText:
      out << "Lambda(t) = " << to_string(lambda) << "\n";
      if (config.derivative_order() > 0) {
        out << "Lambda^(" << config.derivative_order() << ")(t) = " << to_string(lambda_c) << "\n";
      }
      break;
  }
  return kExitOk;
}

int cmd_bound(const RunSpec& spec, std::ostream& out) {
  const Configuration config = configuration_from(require_input(spec), spec);
  const BoundReport report = waldschmidt_bound(config, spec.eps);
  switch (spec.format) {
    case Format::kJson:
      print_json(out, to_json(report));
      break;
    case Format::kCsv:
      out << "c,root_lo,root_hi,root_decimal,validity_threshold\n";
      out << report.derivative_order << ",";
      if (report.root) {
        out << report.root->lo << "," << report.root->hi << "," << to_decimal(report.root->midpoint(), 6);
      } else {
        out << ",,";
      }
      out << "," << report.validity_threshold << "\n";
      break;
    case Format::kText:
      out << "Lambda(t) = " << to_string(report.lambda) << "\n";
      out << "derivative order c = " << report.derivative_order << "\n";
      out << "Lambda^(" << report.derivative_order << ")(t) = " << to_string(report.lambda_c) << "\n";
      if (report.root) {
        out << "largest real root in [" << report.root->lo << ", " << report.root->hi << "]\n";
        out << "upper bound: " << to_decimal(report.root->midpoint(), 6) << "\n";
      } else {
        out << "no real root: no bound at this derivative order\n";
      }
      out << "aHP valid for t >= " << report.validity_threshold << "\n";
      for (const auto& note : report.notes) out << "note: " << note << "\n";
      break;
  }
  return kExitOk;
}

int cmd_star_verify(const RunSpec& spec, std::ostream& out) {
  const StarFormulaReport report = verify_star_formula(spec.n_max, spec.s_max);
  switch (spec.format) {
    case Format::kJson:
      print_json(out, to_json(report));
      break;
    case Format::kCsv:
      out << "n,c,s,equal,integrated,closed_form\n";
      for (const auto& r : report.rows) {
        out << r.n << "," << r.c << "," << r.s << "," << (r.equal ? "true" : "false") << ","
            << csv_field(to_string(r.integrated)) << "," << csv_field(to_string(r.closed_form)) << "\n";
      }
      break;
    case Format::kText:
      for (const auto& r : report.rows) {
        out << "n=" << r.n << " c=" << r.c << " s=" << r.s << "  " << (r.equal ? "equal" : "DIFFERENT") << "\n";
        if (!r.equal) {
          out << "    integrated:  " << to_string(r.integrated) << "\n";
          out << "    closed form: " << to_string(r.closed_form) << "\n";
        }
      }
      out << report.rows.size() << " triples, " << report.mismatches() << " differ\n";
      break;
  }
  return kExitOk;
}

int cmd_monomial(const RunSpec& spec, std::ostream& out) {
  const Json j = require_input(spec);
  MonomialIdeal ideal = MonomialIdeal::zero(1);
  if (j.contains("primes")) {
    if (!j.contains("n") || !j["n"].is_number_unsigned()) throw InputError("at $.n: expected a nonnegative integer");
    if (j.contains("m") && !j["m"].is_number_unsigned()) throw InputError("at $.m: expected a positive integer");
    const auto n = j["n"].get<unsigned>();
    const unsigned m = j.contains("m") ? j["m"].get<unsigned>() : 1;
    ideal = symbolic_power(n, parse_primes(j["primes"], "$.primes"), m);
  } else {
    ideal = parse_ideal(j);
  }

  Json result{{"ideal", to_json(ideal)}};
  result["alpha"] = ideal.is_zero() ? Json(nullptr) : Json(alpha(ideal));
  std::vector<std::string> notes;
  std::optional<DeltaSet> ds;
  std::optional<Poly> hp;
  std::optional<HfHpVerdict> verdict;
  try {
    ds = delta_set(ideal);
    hp = hp_via_delta(ideal);
    verdict = verify_hf_leq_hp(ideal, spec.t_max);
  } catch (const DomainError& e) {
    notes.emplace_back(e.what());
  }
  if (ds) notes.push_back("delta set found by degree search with an n+2 empty-degree stopping window");

  switch (spec.format) {
    case Format::kJson: {
      result["delta"] = ds ? to_json(*ds) : Json(nullptr);
      result["hp"] = hp ? to_json(*hp) : Json(nullptr);
      if (verdict) {
        Json rows = Json::array();
        for (const auto& r : verdict->rows) {
          rows.push_back(Json{{"t", r.t}, {"hf", r.hf.get_str()}, {"hp", r.hp.str()}, {"hf_principal", r.hf_principal.get_str()}});
        }
        result["verify"] = Json{{"bounded", verdict->bounded},
                                {"delta_identity", verdict->delta_identity},
                                {"first_t", verdict->first_t},
                                {"identity_from", verdict->identity_from},
                                {"rows", rows}};
      } else {
        result["verify"] = nullptr;
      }
      result["notes"] = notes;
      print_json(out, result);
      break;
    }
    case Format::kCsv:
      out << "generator,degree\n";
      for (const auto& g : ideal.generators()) out << exponents_str(g) << "," << g.degree() << "\n";
      break;
    case Format::kText: {
      out << "generators (n=" << ideal.n() << "):";
      for (const auto& g : ideal.generators()) out << " " << g.str();
      out << "\n";
      if (!ideal.is_zero()) out << "alpha = " << alpha(ideal) << "\n";
      if (ds) {
        out << "gcd = " << ds->gcd.str() << "\n";
        out << "delta (" << ds->delta.size() << "):";
        for (const auto& m : ds->delta) out << " " << m.str();
        out << "\n";
        out << "HP(t) = " << to_string(*hp) << "\n";
        out << "HF <= HP on [" << verdict->first_t << ", " << spec.t_max << "]: " << (verdict->bounded ? "yes" : "NO") << "\n";
        out << "HF_K = HF_J + #delta from t=" << verdict->identity_from << ": "
            << (verdict->delta_identity ? "yes" : "NO") << "\n";
      }
      for (const auto& note : notes) out << "note: " << note << "\n";
      break;
    }
  }
  return kExitOk;
}

int cmd_samples(const RunSpec& spec, std::ostream& out) {
  const Json j = require_input(spec);
  if (!j.is_object() || !j.contains("n") || !j.contains("primes")) throw InputError("samples input needs \"n\" and \"primes\"");
  if (!j["n"].is_number_unsigned()) throw InputError("at $.n: expected a nonnegative integer");
  const auto samples = waldschmidt_samples(j["n"].get<unsigned>(), parse_primes(j["primes"], "$.primes"), spec.m_max);
  Rat best = samples.front().ratio;
  for (const auto& s : samples) best = s.ratio < best ? s.ratio : best;
  switch (spec.format) {
    case Format::kJson:
      print_json(out, Json{{"samples", to_json(samples)}, {"min_ratio", best.str()}});
      break;
    case Format::kCsv:
      out << "m,alpha,ratio\n";
      for (const auto& s : samples) out << s.m << "," << s.alpha << "," << s.ratio << "\n";
      break;
    case Format::kText:
      for (const auto& s : samples) out << "m=" << s.m << "  alpha=" << s.alpha << "  alpha/m=" << s.ratio << "\n";
      out << "min alpha/m = " << best << " (upper bound for the Waldschmidt constant)\n";
      break;
  }
  return kExitOk;
}

int cmd_examples(const RunSpec& spec, std::ostream& out) {
  const auto rows = run_reference_checks(spec.eps);
  std::size_t passed = 0;
  for (const auto& r : rows) passed += r.pass ? 1 : 0;
  switch (spec.format) {
    case Format::kJson: {
      Json arr = Json::array();
      for (const auto& r : rows) {
        arr.push_back(Json{{"id", r.id}, {"expected", r.expected}, {"computed", r.computed}, {"status", r.pass ? "PASS" : "FAIL"}});
      }
      print_json(out, Json{{"rows", arr}, {"passed", passed}, {"total", rows.size()}, {"star_grid", to_json(reference_star_grid())}});
      break;
    }
    case Format::kCsv:
      out << "id,expected,computed,status\n";
      for (const auto& r : rows) {
        out << csv_field(r.id) << "," << csv_field(r.expected) << "," << csv_field(r.computed) << ","
            << (r.pass ? "PASS" : "FAIL") << "\n";
      }
      break;
    case Format::kText:
      out << std::left << std::setw(22) << "id" << std::setw(46) << "expected" << "status  computed\n";
      for (const auto& r : rows) {
        out << std::left << std::setw(22) << r.id << std::setw(46) << r.expected << (r.pass ? "PASS    " : "FAIL    ")
            << r.computed << "\n";
      }
      out << passed << "/" << rows.size() << " rows pass\n";
      break;
  }
  return passed == rows.size() ? kExitOk : kExitComputation;
}

}  // namespace

std::string load_input(const std::string& input) {
  const auto first = input.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (input[first] == '{' || input[first] == '[')) return input;
  if (input == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(input);
  if (!in) throw InputError("cannot open input file '" + input + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

int run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    if (spec.eps.sign() <= 0) throw InputError("eps must be positive");
    switch (spec.command) {
      case Command::kAhp: return cmd_ahp(spec, out);
      case Command::kLambda: return cmd_lambda(spec, out);
      case Command::kBound: return cmd_bound(spec, out);
      case Command::kStarVerify: return cmd_star_verify(spec, out);
      case Command::kMonomial: return cmd_monomial(spec, out);
      case Command::kSamples: return cmd_samples(spec, out);
      case Command::kExamples: return cmd_examples(spec, out);
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitComputation;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified upper bounds for Waldschmidt constants from asymptotic Hilbert polynomials"};
  app.require_subcommand(1);

  RunSpec spec;
  std::string eps_text;
  std::string format_text = "text";
  unsigned c_override = 0;

  const std::vector<std::pair<const char*, Command>> commands{
      {"ahp", Command::kAhp},           {"lambda", Command::kLambda},     {"bound", Command::kBound},
      {"star-verify", Command::kStarVerify}, {"monomial", Command::kMonomial}, {"samples", Command::kSamples},
      {"examples", Command::kExamples}};
  const std::vector<std::pair<const char*, const char*>> descriptions{
      {"ahp", "asymptotic Hilbert polynomial of a shape or configuration"},
      {"lambda", "Lambda(t) = t^n/n! - aHP(t) and its derivative of order c"},
      {"bound", "certified upper bound: largest real root of Lambda^(c)"},
      {"star-verify", "compare the closed star formula against exact integration"},
      {"monomial", "monomial ideal: alpha, delta set, HP and the HF <= HP check"},
      {"samples", "alpha(I^(m))/m for a coordinate subspace arrangement"},
      {"examples", "recompute every published value and report PASS/FAIL"}};

  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    auto* sub = app.add_subcommand(commands[i].first, descriptions[i].second);
    sub->fallthrough();
    subs.push_back(sub);
  }

  app.add_option("--input", spec.input, "JSON file, '-' for stdin, or inline JSON");
  app.add_option("--eps", eps_text, "root interval width, p/q or decimal (default $WALD_EPS or 1e-8)");
  app.add_option("--format", format_text, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--m-max", spec.m_max, "largest m for samples")->check(CLI::PositiveNumber);
  auto* c_opt = app.add_option("--c", c_override,
                               "derivative order override. The order is never inferred: use the dimension of the "
                               "components for disjoint flats, 0 for points and for curves such as crosses");
  app.add_option("--n-max", spec.n_max, "star-verify: largest n")->check(CLI::Range(2U, 12U));
  app.add_option("--s-max", spec.s_max, "star-verify: largest s")->check(CLI::Range(1U, 40U));
  app.add_option("--t-max", spec.t_max, "monomial: largest degree for the HF <= HP check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i]->parsed()) spec.command = commands[i].second;
  }
  spec.format = format_text == "json" ? Format::kJson : (format_text == "csv" ? Format::kCsv : Format::kText);
  if (c_opt->count() > 0) spec.derivative_order = c_override;

  try {
    if (eps_text.empty()) {
      if (const char* env = std::getenv("WALD_EPS"); env != nullptr && *env != '\0') eps_text = env;
    }
    if (!eps_text.empty()) spec.eps = Rat::parse(eps_text);
  } catch (const InputError& e) {
    err << "input error: --eps: " << e.what() << "\n";
    return kExitInput;
  }
  return run(spec, out, err);
}

}  // namespace wald::cli
