#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wald/poly.hpp"
#include "wald/rat.hpp"

namespace wald {

/// Default refinement width for root intervals (1e-8).
Rat default_eps();

/// A closed interval [lo, hi] holding exactly one real root of the polynomial
/// it was computed for, with hi - lo <= width_bound.
struct RootInterval {
  Rat lo;
  Rat hi;
  Rat width_bound;

  Rat midpoint() const { return (lo + hi) / Rat(2); }
  bool is_exact() const { return lo == hi; }
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

/// Sturm chain of the square-free part of a nonzero polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const Poly& p);

  /// Number of sign variations of the chain at x, zeros skipped.
  std::size_t variations(const Rat& x) const;
  /// Distinct real roots in the half-open interval (lo, hi].
  std::size_t count(const Rat& lo, const Rat& hi) const;

  const Poly& square_free() const { return chain_.front(); }
  const std::vector<Poly>& chain() const { return chain_; }

 private:
  std::vector<Poly> chain_;
};

/// 1 + max |a_i / a_lead|; every complex root lies strictly inside it.
Rat cauchy_bound(const Poly& p);

/// Distinct real roots of p in (lo, hi]. Throws DomainError for p = 0
/// ("indeterminate root count") and InputError unless lo < hi.
std::size_t sturm_count(const Poly& p, const Rat& lo, const Rat& hi);

/// Certified interval of width <= eps around the largest real root of p, or
/// nullopt when p has no real root. Throws DomainError for constant p.
std::optional<RootInterval> largest_real_root(const Poly& p, const Rat& eps = default_eps());

}  // namespace wald
