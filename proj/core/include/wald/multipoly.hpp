#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "wald/poly.hpp"
#include "wald/rat.hpp"

namespace wald {

/// Sparse multivariate polynomial over the rationals in a fixed number of
/// variables. Zero coefficients are never stored.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;

  explicit MultiPoly(std::size_t arity) : arity_(arity) {}

  static MultiPoly constant(std::size_t arity, const Rat& c);
  static MultiPoly variable(std::size_t arity, std::size_t index);

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rat>& terms() const { return terms_; }
  /// Highest exponent of `var` over all terms.
  unsigned degree_in(std::size_t var) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rat& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rat& c) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly pow(unsigned e) const;

  /// Antiderivative in `var` with zero constant of integration.
  MultiPoly antiderivative(std::size_t var) const;
  /// Replaces `var` by `value`, which must not itself involve `var`.
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
  /// Definite integral in `var` from 0 to `upper`.
  MultiPoly integrate(std::size_t var, const MultiPoly& upper) const;

  /// Collapses to a univariate Poly in `var`; every other exponent must be 0.
  Poly to_univariate(std::size_t var) const;

 private:
  void add_term(const Exponents& e, const Rat& c);

  std::size_t arity_;
  std::map<Exponents, Rat> terms_;
};

}  // namespace wald
