#include "wald/rat.hpp"

#include <cctype>
#include <string>

#include "wald/error.hpp"

namespace wald {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) throw InputError("not a rational number: '" + std::string(whole) + "'");
  std::string buf(s.front() == '+' ? s.substr(1) : s);
  return Integer(buf, 10);
}

Integer pow10(unsigned k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

}  // namespace

Rat::Rat(long long v) : q_(Integer(std::to_string(v), 10)) {}

Rat::Rat(const Integer& num, const Integer& den) : q_(num, den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InputError("empty rational literal");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(text.substr(0, slash), whole);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw InputError("not a rational number: '" + std::string(whole) + "'");
    const Integer den = parse_integer(den_text, whole);
    if (den == 0) throw InputError("zero denominator in '" + std::string(whole) + "'");
    return Rat(num, den);
  }

  // Decimal with optional exponent.
  long exponent = 0;
  std::string_view mantissa = text;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    const Integer ex = parse_integer(text.substr(e + 1), whole);
    if (!ex.fits_slong_p() || ex > 4096 || ex < -4096) throw InputError("exponent out of range in '" + std::string(whole) + "'");
    exponent = ex.get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long frac_len = 0;
  if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    const std::string_view ip = mantissa.substr(0, dot);
    const std::string_view fp = mantissa.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty())) {
      throw InputError("not a rational number: '" + std::string(whole) + "'");
    }
    digits = std::string(ip) + std::string(fp);
    frac_len = static_cast<long>(fp.size());
  } else {
    if (!all_digits(mantissa)) throw InputError("not a rational number: '" + std::string(whole) + "'");
    digits = std::string(mantissa);
  }
  Integer num(digits, 10);
  if (negative) num = -num;
  const long shift = exponent - frac_len;
  if (shift >= 0) return Rat(Integer(num * pow10(static_cast<unsigned>(shift))));
  return Rat(num, pow10(static_cast<unsigned>(-shift)));
}

Rat Rat::abs() const { return sign() < 0 ? -*this : *this; }

Rat Rat::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  return Rat(den(), num());
}

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat& Rat::operator+=(const Rat& o) {
  q_ += o.q_;
  return *this;
}
Rat& Rat::operator-=(const Rat& o) {
  q_ -= o.q_;
  return *this;
}
Rat& Rat::operator*=(const Rat& o) {
  q_ *= o.q_;
  return *this;
}
Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}
Rat Rat::operator-() const { return Rat(mpq_class(-q_)); }

std::string to_decimal(const Rat& value, int digits) {
  if (digits < 0) digits = 0;
  const Integer scale = pow10(static_cast<unsigned>(digits));
  const Integer scaled_num = value.num() * scale;
  const Integer den = value.den();
  // floor division, then round half to even
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled_num.get_mpz_t(), den.get_mpz_t());
  const int half = cmp(Integer(2 * r), den);
  if (half > 0 || (half == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

  const bool negative = q < 0;
  std::string mag = Integer(negative ? Integer(-q) : q).get_str();
  if (digits > 0) {
    if (mag.size() <= static_cast<std::size_t>(digits)) mag.insert(0, static_cast<std::size_t>(digits) + 1 - mag.size(), '0');
    mag.insert(mag.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + mag : mag;
}

Rat pow(const Rat& base, unsigned exponent) {
  Rat result(1);
  Rat b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(long top, unsigned k) {
  // Generalized binomial top (top-1) ... (top-k+1) / k!, valid for negative top.
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), Integer(top).get_mpz_t(), k);
  return r;
}

}  // namespace wald
