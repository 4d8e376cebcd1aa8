#pragma once

#include <random>
#include <string>
#include <vector>

#include "wald/monomial.hpp"
#include "wald/rat.hpp"
#include "wald/shape.hpp"

namespace wald {

/// One reproduced numeric claim: what is expected, what was computed.
struct CheckRow {
  std::string id;
  std::string expected;
  std::string computed;
  bool pass = false;
};

/// Recomputes every published value (crosses, star configurations, points,
/// the Δ-set identity, the star-formula grid) and compares it with the
/// published figure at its stated tolerance. Deterministic.
std::vector<CheckRow> run_reference_checks(const Rat& eps);

/// Random ideal (n <= 4, at most n + 3 generators before minimalization)
/// satisfying the delta-set precondition.
MonomialIdeal random_delta_ideal(std::mt19937_64& rng);

/// Full star-formula grid used by the "star_formula" row, for archiving.
StarFormulaReport reference_star_grid();

}  // namespace wald
