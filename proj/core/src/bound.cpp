#include "wald/bound.hpp"

#include "wald/error.hpp"

namespace wald {

Poly lambda_poly(const Configuration& config) {
  const unsigned n = config.n();
  return Poly::monomial(Rat(factorial(n)).reciprocal(), n) - ahp_configuration(config);
}

BoundReport waldschmidt_bound(const Configuration& config, const Rat& eps) {
  const unsigned c = config.derivative_order();
  BoundReport report;
  report.lambda = lambda_poly(config);
  report.derivative_order = c;
  report.lambda_c = derivative(report.lambda, c);
  report.validity_threshold = config.validity_threshold();
  report.root = largest_real_root(report.lambda_c, eps);

  if (!report.root) {
    report.notes.push_back("derivative of order " + std::to_string(c) +
                           " has no real root; no bound at this derivative order");
    if (c + 1 < config.n()) {
      const auto next = largest_real_root(derivative(report.lambda, c + 1), eps);
      if (next) {
        report.notes.push_back("retry with c=" + std::to_string(c + 1) + ": largest root of derivative " +
                               std::to_string(c + 1) + " is " + to_decimal(next->midpoint(), 6) + " in [" +
                               next->lo.str() + ", " + next->hi.str() + "]");
      } else {
        report.notes.push_back("retry with c=" + std::to_string(c + 1) + " also gives no real root");
      }
    }
  } else if (report.root->hi < Rat(1)) {
    report.notes.push_back("warning: bound below 1; the Waldschmidt constant of a nonempty subscheme is at least 1, "
                           "check the configuration");
  }
  return report;
}

SampleVerdict check_bound_against_samples(const BoundReport& report, std::span<const WaldschmidtSample> samples,
                                          const std::optional<Rat>& known, const Rat& eps) {
  if (samples.empty()) throw InputError("need at least one sample");
  SampleVerdict v;
  bool first = true;
  for (const auto& s : samples) {
    if (s.m < 1) throw InputError("sample m must be >= 1");
    const Rat r(static_cast<long>(s.alpha), static_cast<long>(s.m));
    if (first || r < v.sample_bound) {
      v.sample_bound = r;
      v.sample_m = s.m;
      first = false;
    }
  }

  if (!report.root) {
    v.tighter = TighterBound::kSamplesOnly;
  } else if (report.root->is_exact() && report.root->lo == v.sample_bound) {
    v.tighter = TighterBound::kEqual;
  } else if (report.root->hi < v.sample_bound) {
    v.tighter = TighterBound::kRoot;
  } else if (v.sample_bound < report.root->lo) {
    v.tighter = TighterBound::kSamples;
  } else {
    v.tighter = TighterBound::kUndecided;
  }

  if (known && report.root) v.consistent_with_known = report.root->hi >= *known - eps;
  return v;
}

const char* to_string(TighterBound t) {
  switch (t) {
    case TighterBound::kRoot: return "root";
    case TighterBound::kSamples: return "samples";
    case TighterBound::kEqual: return "equal";
    case TighterBound::kUndecided: return "undecided";
    case TighterBound::kSamplesOnly: return "samples-only";
  }
  return "undecided";
}

}  // namespace wald
