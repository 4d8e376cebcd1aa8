#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "wald/bound.hpp"
#include "wald/monomial.hpp"
#include "wald/poly.hpp"
#include "wald/rat.hpp"
#include "wald/roots.hpp"
#include "wald/shape.hpp"

// JSON wire formats. Rationals travel as "p/q" strings, polynomials as arrays
// of those in ascending degree, monomials as exponent arrays. Every parse_*
// throws InputError naming the offending JSON path.

namespace wald {

using Json = nlohmann::json;

/// Parses JSON text; syntax errors become InputError with line and column.
Json parse_json_text(std::string_view text);

Json to_json(const Rat& r);
Json to_json(const Poly& p);
Json to_json(const RootInterval& r);
Json to_json(const SimplexShape& s);
Json to_json(const Configuration& c);
Json to_json(const Monomial& m);
Json to_json(const MonomialIdeal& ideal);
Json to_json(const BoundReport& report);
Json to_json(const std::vector<WaldschmidtSample>& samples);
Json to_json(const StarFormulaReport& report);
Json to_json(const DeltaSet& ds);

Rat parse_rat(const Json& j, const std::string& path = "$");
Poly parse_poly(const Json& j, const std::string& path = "$");
RootInterval parse_root_interval(const Json& j, const std::string& path = "$");
/// Accepts {"n","c","intercepts"} or the shorthand {"star":{"n","c","s"}}.
SimplexShape parse_shape(const Json& j, const std::string& path = "$");
Configuration parse_configuration(const Json& j, const std::string& path = "$");
Monomial parse_monomial(const Json& j, std::size_t arity, const std::string& path = "$");
MonomialIdeal parse_ideal(const Json& j, const std::string& path = "$");
std::vector<VariableSet> parse_primes(const Json& j, const std::string& path = "$");
BoundReport parse_bound_report(const Json& j, const std::string& path = "$");
std::vector<WaldschmidtSample> parse_samples(const Json& j, const std::string& path = "$");

}  // namespace wald
