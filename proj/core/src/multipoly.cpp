#include "wald/multipoly.hpp"

#include <algorithm>

#include "wald/error.hpp"

namespace wald {

MultiPoly MultiPoly::constant(std::size_t arity, const Rat& c) {
  MultiPoly p(arity);
  p.add_term(Exponents(arity, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw InputError("variable index out of range");
  MultiPoly p(arity);
  Exponents e(arity, 0);
  e[index] = 1;
  p.add_term(e, Rat(1));
  return p;
}

void MultiPoly::add_term(const Exponents& e, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.arity_ != arity_) throw InputError("MultiPoly arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.arity_ != arity_) throw InputError("MultiPoly arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.arity_ != b.arity_) throw InputError("MultiPoly arity mismatch");
  MultiPoly out(a.arity_);
  MultiPoly::Exponents e(a.arity_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(arity_, Rat(1));
  MultiPoly base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::antiderivative(std::size_t var) const {
  MultiPoly out(arity_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[var] += 1;
    out.add_term(f, c / Rat(static_cast<unsigned long>(f[var])));
  }
  return out;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
  if (value.arity_ != arity_) throw InputError("MultiPoly arity mismatch");
  if (value.degree_in(var) != 0) throw InputError("substituted value involves the eliminated variable");
  std::vector<MultiPoly> powers{constant(arity_, Rat(1))};
  MultiPoly out(arity_);
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[var]) powers.push_back(powers.back() * value);
    Exponents rest = e;
    rest[var] = 0;
    MultiPoly mono(arity_);
    mono.add_term(rest, c);
    out += mono * powers[e[var]];
  }
  return out;
}

MultiPoly MultiPoly::integrate(std::size_t var, const MultiPoly& upper) const {
  const MultiPoly anti = antiderivative(var);
  // Every term of the antiderivative carries var^k with k >= 1, so the lower
  // limit 0 contributes nothing.
  return anti.substitute(var, upper);
}

Poly MultiPoly::to_univariate(std::size_t var) const {
  std::vector<Rat> coeffs(degree_in(var) + 1);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != var && e[i] != 0) throw DomainError("MultiPoly still depends on other variables");
    }
    coeffs[e[var]] += c;
  }
  return Poly(std::move(coeffs));
}

}  // namespace wald
