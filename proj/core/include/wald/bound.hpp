#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wald/monomial.hpp"
#include "wald/poly.hpp"
#include "wald/roots.hpp"
#include "wald/shape.hpp"

namespace wald {

/// Λ(t) = t^n / n! - aHP(t).
Poly lambda_poly(const Configuration& config);

/// Result of bounding the Waldschmidt constant from above by the largest real
/// root of the c-th derivative of Λ.
struct BoundReport {
  Poly lambda;
  unsigned derivative_order = 0;
  Poly lambda_c;
  /// Absent when Λ^(c) has no real root; no bound is claimed then.
  std::optional<RootInterval> root;
  /// aHP is polynomial in t only from this point on.
  Rat validity_threshold;
  std::vector<std::string> notes;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

BoundReport waldschmidt_bound(const Configuration& config, const Rat& eps = default_eps());

enum class TighterBound { kRoot, kSamples, kEqual, kUndecided, kSamplesOnly };

struct SampleVerdict {
  /// min alpha_m / m over the samples.
  Rat sample_bound;
  unsigned sample_m = 0;
  TighterBound tighter = TighterBound::kUndecided;
  /// Set when a known Waldschmidt constant was supplied: root.hi >= known - eps.
  std::optional<bool> consistent_with_known;
};

/// Compares the certified root against alpha(I^(m))/m samples. Each sample
/// ratio is itself an upper bound, since the constant is their infimum.
SampleVerdict check_bound_against_samples(const BoundReport& report, std::span<const WaldschmidtSample> samples,
                                          const std::optional<Rat>& known = std::nullopt,
                                          const Rat& eps = default_eps());

const char* to_string(TighterBound t);

}  // namespace wald
