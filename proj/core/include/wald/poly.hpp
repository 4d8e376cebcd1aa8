#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wald/rat.hpp"

namespace wald {

/// Dense univariate polynomial over the rationals. Coefficients are stored in
/// ascending degree with no trailing zeros; the empty vector is the zero
/// polynomial.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coefficients);

  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, std::size_t degree);
  /// The indeterminate t.
  static Poly identity();

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coefficients() const { return coeffs_; }
  Rat coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }
  /// Leading coefficient; zero for the zero polynomial.
  Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();

  std::vector<Rat> coeffs_;
};

/// k-th formal derivative.
Poly derivative(const Poly& p, unsigned k = 1);

/// Horner evaluation.
Rat evaluate(const Poly& p, const Rat& x);

/// Euclidean division; throws DomainError when `divisor` is zero.
std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

Poly make_monic(const Poly& p);

/// p / gcd(p, p'), made monic. Same distinct roots as p, all simple.
Poly square_free_part(const Poly& p);

/// Human-readable form in descending degree, e.g. "1/6 t^3 - 5 t + 5".
std::string to_string(const Poly& p, std::string_view var = "t");

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

}  // namespace wald
