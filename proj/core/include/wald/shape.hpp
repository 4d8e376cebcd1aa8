#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wald/poly.hpp"
#include "wald/rat.hpp"

namespace wald {

/// Limiting shape of the form  Δ(a_1..a_c) × R^{n-c}_{>=0}  inside R^n, where
/// Δ(a) = { x >= 0 : x_1/a_1 + ... + x_c/a_c <= 1 } is the coordinate simplex
/// with axis intercepts a_i.
class SimplexShape {
 public:
  /// Throws InputError unless 1 <= c <= n and every intercept is positive.
  SimplexShape(unsigned n, std::vector<Rat> intercepts);

  unsigned n() const { return n_; }
  unsigned c() const { return static_cast<unsigned>(intercepts_.size()); }
  const std::vector<Rat>& intercepts() const { return intercepts_; }
  Rat max_intercept() const;

  friend bool operator==(const SimplexShape&, const SimplexShape&) = default;

 private:
  unsigned n_;
  std::vector<Rat> intercepts_;
};

/// Asymptotic Hilbert polynomial vol(shape ∩ {x_1 + ... + x_n <= t}), exact for
/// t >= max intercept.
Poly ahp_simplex(const SimplexShape& shape);

/// Shape of the star configuration cut out by c of s general hyperplanes in
/// P^n: intercepts a_i = (s - i + 1) / (c - i + 1).
SimplexShape star_shape(unsigned n, unsigned c, unsigned s);

/// Complete homogeneous symmetric polynomial h_k evaluated at `values`.
Rat complete_homogeneous(std::span<const Rat> values, unsigned k);

/// Conjectured closed form for the star configuration's asymptotic Hilbert
/// polynomial:
///   a_1...a_c (n-c)!/n! * sum_j binom(n,j) (-1)^{n-c-j} h_{n-c-j}(a) t^j.
Poly star_closed_formula(unsigned n, unsigned c, unsigned s);

struct StarFormulaRow {
  unsigned n = 0;
  unsigned c = 0;
  unsigned s = 0;
  Poly integrated;
  Poly closed_form;
  bool equal = false;
};

struct StarFormulaReport {
  /// Sorted by (n, c, s).
  std::vector<StarFormulaRow> rows;

  std::size_t mismatches() const;
};

/// Compares the closed form against the integrator for 2 <= n <= n_max,
/// 1 <= c <= n, c <= s <= s_max. The integrator is authoritative.
StarFormulaReport verify_star_formula(unsigned n_max, unsigned s_max);

struct Component {
  SimplexShape shape;
  unsigned count = 1;

  friend bool operator==(const Component&, const Component&) = default;
};

/// Formal disjoint union of shapes with multiplicities, plus the derivative
/// order used by the bound.
class Configuration {
 public:
  /// Throws InputError when shapes disagree on n, a count is zero or
  /// derivative_order >= n.
  Configuration(unsigned n, std::vector<Component> components, unsigned derivative_order = 0);

  unsigned n() const { return n_; }
  const std::vector<Component>& components() const { return components_; }
  unsigned derivative_order() const { return derivative_order_; }

  /// Largest intercept over all components; 0 when empty.
  Rat validity_threshold() const;

  Configuration with_derivative_order(unsigned c) const;
  /// Concatenation of components; derivative order taken from *this.
  Configuration merged(const Configuration& other) const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  unsigned n_;
  std::vector<Component> components_;
  unsigned derivative_order_;
};

/// Sum over components of count * ahp_simplex(shape).
Poly ahp_configuration(const Configuration& config);

}  // namespace wald
