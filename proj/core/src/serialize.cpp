#include "wald/serialize.hpp"

#include "wald/error.hpp"

namespace wald {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError("at " + path + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

unsigned parse_unsigned(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected a nonnegative integer");
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v > 1'000'000'000ULL) fail(path, "integer out of range");
    return static_cast<unsigned>(v);
  }
  const auto v = j.get<std::int64_t>();
  if (v < 0 || v > 1'000'000'000LL) fail(path, "expected a nonnegative integer");
  return static_cast<unsigned>(v);
}

std::string at(const std::string& path, const char* key) { return path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

}  // namespace

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // Translate the byte offset into line:column.
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                     e.what());
  }
}

Json to_json(const Rat& r) { return r.str(); }

Json to_json(const Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.str());
  return arr;
}

Json to_json(const RootInterval& r) {
  return Json{{"lo", r.lo.str()}, {"hi", r.hi.str()}, {"width_bound", r.width_bound.str()}};
}

Json to_json(const SimplexShape& s) {
  Json intercepts = Json::array();
  for (const auto& a : s.intercepts()) intercepts.push_back(a.str());
  return Json{{"n", s.n()}, {"c", s.c()}, {"intercepts", intercepts}};
}

Json to_json(const Configuration& c) {
  Json comps = Json::array();
  for (const auto& comp : c.components()) comps.push_back(Json{{"shape", to_json(comp.shape)}, {"count", comp.count}});
  return Json{{"n", c.n()}, {"derivative_order", c.derivative_order()}, {"components", comps}};
}

Json to_json(const Monomial& m) { return Json(m.exponents()); }

Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(to_json(g));
  return Json{{"n", ideal.n()}, {"generators", gens}};
}

Json to_json(const BoundReport& report) {
  Json j;
  j["lambda"] = to_json(report.lambda);
  j["c"] = report.derivative_order;
  j["lambda_c"] = to_json(report.lambda_c);
  if (report.root) {
    j["root"] = to_json(*report.root);
    j["root_decimal"] = to_decimal(report.root->midpoint(), 6);
  } else {
    j["root"] = nullptr;
    j["root_decimal"] = nullptr;
  }
  j["validity_threshold"] = report.validity_threshold.str();
  j["notes"] = report.notes;
  return j;
}

Json to_json(const std::vector<WaldschmidtSample>& samples) {
  Json arr = Json::array();
  for (const auto& s : samples) arr.push_back(Json{{"m", s.m}, {"alpha", s.alpha}, {"ratio", s.ratio.str()}});
  return arr;
}

Json to_json(const StarFormulaReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back(Json{{"n", r.n},
                        {"c", r.c},
                        {"s", r.s},
                        {"equal", r.equal},
                        {"integrated", to_json(r.integrated)},
                        {"closed_form", to_json(r.closed_form)}});
  }
  return Json{{"rows", rows}, {"mismatches", report.mismatches()}};
}

Json to_json(const DeltaSet& ds) {
  Json delta = Json::array();
  for (const auto& m : ds.delta) delta.push_back(to_json(m));
  return Json{{"gcd", to_json(ds.gcd)},
              {"delta", delta},
              {"size", ds.delta.size()},
              {"searched_through_degree", ds.searched_through}};
}

Rat parse_rat(const Json& j, const std::string& path) {
  try {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<std::int64_t>()));
  } catch (const InputError& e) {
    fail(path, e.what());
  }
  fail(path, "expected a rational as a \"p/q\" string or an integer");
}

Poly parse_poly(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of coefficients");
  std::vector<Rat> coeffs;
  for (std::size_t i = 0; i < j.size(); ++i) coeffs.push_back(parse_rat(j[i], at(path, i)));
  // Trailing zeros would not survive a round trip unnoticed.
  if (!coeffs.empty() && coeffs.back().is_zero()) fail(path, "trailing zero coefficient");
  return Poly(std::move(coeffs));
}

RootInterval parse_root_interval(const Json& j, const std::string& path) {
  RootInterval r;
  r.lo = parse_rat(field(j, "lo", path), at(path, "lo"));
  r.hi = parse_rat(field(j, "hi", path), at(path, "hi"));
  r.width_bound = j.contains("width_bound") ? parse_rat(j["width_bound"], at(path, "width_bound")) : r.hi - r.lo;
  if (r.hi < r.lo) fail(path, "root interval has hi < lo");
  return r;
}

SimplexShape parse_shape(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a shape object");
  try {
    if (j.contains("star")) {
      const Json& st = j["star"];
      const std::string sp = at(path, "star");
      return star_shape(parse_unsigned(field(st, "n", sp), at(sp, "n")), parse_unsigned(field(st, "c", sp), at(sp, "c")),
                        parse_unsigned(field(st, "s", sp), at(sp, "s")));
    }
    const unsigned n = parse_unsigned(field(j, "n", path), at(path, "n"));
    const Json& ij = field(j, "intercepts", path);
    if (!ij.is_array()) fail(at(path, "intercepts"), "expected an array");
    std::vector<Rat> a;
    for (std::size_t i = 0; i < ij.size(); ++i) a.push_back(parse_rat(ij[i], at(at(path, "intercepts"), i)));
    if (j.contains("c") && parse_unsigned(j["c"], at(path, "c")) != a.size()) {
      fail(at(path, "c"), "c does not match the number of intercepts");
    }
    return SimplexShape(n, std::move(a));
  } catch (const InputError& e) {
    const std::string msg = e.what();
    if (msg.rfind("at ", 0) == 0) throw;
    fail(path, msg);
  }
}

Configuration parse_configuration(const Json& j, const std::string& path) {
  const unsigned n = parse_unsigned(field(j, "n", path), at(path, "n"));
  const unsigned c = j.contains("derivative_order") ? parse_unsigned(j["derivative_order"], at(path, "derivative_order")) : 0;
  const Json& cj = field(j, "components", path);
  if (!cj.is_array()) fail(at(path, "components"), "expected an array");
  std::vector<Component> comps;
  for (std::size_t i = 0; i < cj.size(); ++i) {
    const std::string cp = at(at(path, "components"), i);
    const Json& item = cj[i];
    if (!item.is_object()) fail(cp, "expected a component object");
    const unsigned count = item.contains("count") ? parse_unsigned(item["count"], at(cp, "count")) : 1;
    if (item.contains("star")) {
      comps.push_back({parse_shape(Json{{"star", item["star"]}}, cp), count});
    } else {
      comps.push_back({parse_shape(field(item, "shape", cp), at(cp, "shape")), count});
    }
  }
  try {
    return Configuration(n, std::move(comps), c);
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

Monomial parse_monomial(const Json& j, std::size_t arity, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an exponent array");
  if (j.size() != arity) fail(path, "expected " + std::to_string(arity) + " exponents");
  std::vector<unsigned> e;
  for (std::size_t i = 0; i < j.size(); ++i) e.push_back(parse_unsigned(j[i], at(path, i)));
  return Monomial(std::move(e));
}

MonomialIdeal parse_ideal(const Json& j, const std::string& path) {
  const unsigned n = parse_unsigned(field(j, "n", path), at(path, "n"));
  const Json& gj = field(j, "generators", path);
  if (!gj.is_array()) fail(at(path, "generators"), "expected an array");
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < gj.size(); ++i) gens.push_back(parse_monomial(gj[i], n + 1, at(at(path, "generators"), i)));
  return minimalize(n + 1, gens);
}

std::vector<VariableSet> parse_primes(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of variable-index lists");
  std::vector<VariableSet> primes;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string pp = at(path, i);
    if (!j[i].is_array()) fail(pp, "expected a variable-index list");
    VariableSet vars;
    for (std::size_t k = 0; k < j[i].size(); ++k) vars.push_back(parse_unsigned(j[i][k], at(pp, k)));
    primes.push_back(std::move(vars));
  }
  return primes;
}

BoundReport parse_bound_report(const Json& j, const std::string& path) {
  BoundReport r;
  r.lambda = parse_poly(field(j, "lambda", path), at(path, "lambda"));
  r.derivative_order = parse_unsigned(field(j, "c", path), at(path, "c"));
  r.lambda_c = parse_poly(field(j, "lambda_c", path), at(path, "lambda_c"));
  const Json& root = field(j, "root", path);
  if (!root.is_null()) r.root = parse_root_interval(root, at(path, "root"));
  r.validity_threshold = parse_rat(field(j, "validity_threshold", path), at(path, "validity_threshold"));
  if (j.contains("notes")) {
    const Json& nj = j["notes"];
    if (!nj.is_array()) fail(at(path, "notes"), "expected an array of strings");
    for (std::size_t i = 0; i < nj.size(); ++i) {
      if (!nj[i].is_string()) fail(at(at(path, "notes"), i), "expected a string");
      r.notes.push_back(nj[i].get<std::string>());
    }
  }
  return r;
}

std::vector<WaldschmidtSample> parse_samples(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of samples");
  std::vector<WaldschmidtSample> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string sp = at(path, i);
    WaldschmidtSample s;
    s.m = parse_unsigned(field(j[i], "m", sp), at(sp, "m"));
    s.alpha = parse_unsigned(field(j[i], "alpha", sp), at(sp, "alpha"));
    if (s.m == 0) fail(at(sp, "m"), "m must be >= 1");
    s.ratio = j[i].contains("ratio") ? parse_rat(j[i]["ratio"], at(sp, "ratio"))
                                     : Rat(static_cast<long>(s.alpha), static_cast<long>(s.m));
    out.push_back(s);
  }
  return out;
}

}  // namespace wald
