#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wald {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rat {
 public:
  Rat() = default;
  Rat(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long long v);  // NOLINT(google-explicit-constructor)
  Rat(unsigned v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(unsigned long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(const Integer& num, const Integer& den);
  Rat(long num, long den) : Rat(Integer(num), Integer(den)) {}

  /// Parses "p", "p/q" or a finite decimal such as "-0.25" or "1e-8".
  static Rat parse(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rat abs() const;
  Rat reciprocal() const;
  double to_double() const { return q_.get_d(); }
  /// "p" for integers, otherwise "p/q".
  std::string str() const;

  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const;

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  explicit Rat(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;
};

/// Rounds to `digits` decimal places, ties to even, e.g. "4.884474".
std::string to_decimal(const Rat& value, int digits);

Rat pow(const Rat& base, unsigned exponent);
Integer factorial(unsigned n);
Integer binomial(long top, unsigned k);

}  // namespace wald
