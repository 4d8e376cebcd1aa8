#include "wald/poly.hpp"

#include <algorithm>

#include "wald/error.hpp"

namespace wald {

Poly::Poly(std::vector<Rat> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly({c}); }

Poly Poly::monomial(const Rat& c, std::size_t degree) {
  std::vector<Rat> coeffs(degree + 1);
  coeffs[degree] = c;
  return Poly(std::move(coeffs));
}

Poly Poly::identity() { return monomial(Rat(1), 1); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& a : r.coeffs_) a = -a;
  return r;
}

Poly derivative(const Poly& p, unsigned k) {
  if (k == 0) return p;
  const auto& c = p.coefficients();
  if (c.size() <= k) return {};
  std::vector<Rat> out(c.size() - k);
  for (std::size_t i = k; i < c.size(); ++i) {
    // i * (i-1) * ... * (i-k+1)
    Integer falling = 1;
    for (std::size_t j = 0; j < k; ++j) falling *= static_cast<unsigned long>(i - j);
    out[i - k] = c[i] * Rat(falling);
  }
  return Poly(std::move(out));
}

Rat evaluate(const Poly& p, const Rat& x) {
  Rat acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  if (dividend.degree() < divisor.degree()) return {Poly{}, dividend};

  std::vector<Rat> rem = dividend.coefficients();
  const auto& d = divisor.coefficients();
  const std::size_t dd = d.size() - 1;
  std::vector<Rat> quot(rem.size() - dd);
  const Rat lead_inv = d.back().reciprocal();
  for (std::size_t k = rem.size(); k-- > dd;) {
    const Rat q = rem[k] * lead_inv;
    quot[k - dd] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * d[j];
  }
  rem.resize(dd);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * p.leading().reciprocal();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

Poly square_free_part(const Poly& p) {
  if (p.degree() <= 0) return make_monic(p);
  const Poly g = gcd(p, derivative(p));
  return make_monic(divmod(p, g).first);
}

std::string to_string(const Poly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    const Rat mag = c[k].abs();
    if (out.empty()) {
      if (c[k].sign() < 0) out += "-";
    } else {
      out += c[k].sign() < 0 ? " - " : " + ";
    }
    const bool unit = mag == Rat(1);
    if (k == 0) {
      out += mag.str();
      continue;
    }
    if (!unit) out += mag.str() + " ";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace wald
