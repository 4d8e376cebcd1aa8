#include "wald/roots.hpp"

#include "wald/error.hpp"

namespace wald {

namespace {

// Rational with the smallest denominator in [lo, hi], lo <= hi, via continued
// fractions.
Rat simplest_between(const Rat& lo, const Rat& hi) {
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rat(0);
  if (hi.sign() < 0) return -simplest_between(-hi, -lo);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.num().get_mpz_t(), lo.den().get_mpz_t());
  if (Rat(fl) == lo) return lo;
  if (Rat(Integer(fl + 1)) <= hi) return Rat(Integer(fl + 1));
  // Both lie in (fl, fl + 1): recurse on the reciprocals of the fractional parts.
  const Rat inner = simplest_between((hi - Rat(fl)).reciprocal(), (lo - Rat(fl)).reciprocal());
  return Rat(fl) + inner.reciprocal();
}

}  // namespace

Rat default_eps() { return Rat(1, 100000000); }

SturmSequence::SturmSequence(const Poly& p) {
  if (p.is_zero()) throw DomainError("indeterminate root count: zero polynomial");
  chain_.push_back(square_free_part(p));
  if (chain_.front().degree() == 0) return;
  chain_.push_back(make_monic(derivative(chain_.front())));
  for (;;) {
    const Poly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    // Scale by a positive constant only; the sign pattern must survive.
    chain_.push_back(-(r * r.leading().abs().reciprocal()));
  }
}

std::size_t SturmSequence::variations(const Rat& x) const {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = evaluate(q, x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t SturmSequence::count(const Rat& lo, const Rat& hi) const {
  const std::size_t vlo = variations(lo);
  const std::size_t vhi = variations(hi);
  return vlo >= vhi ? vlo - vhi : 0;
}

Rat cauchy_bound(const Poly& p) {
  if (p.degree() <= 0) return Rat(1);
  const auto& c = p.coefficients();
  const Rat lead = c.back().abs();
  Rat best;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    const Rat r = c[i].abs() / lead;
    if (r > best) best = r;
  }
  return Rat(1) + best;
}

std::size_t sturm_count(const Poly& p, const Rat& lo, const Rat& hi) {
  if (p.is_zero()) throw DomainError("indeterminate root count: zero polynomial");
  if (!(lo < hi)) throw InputError("sturm_count requires lo < hi");
  return SturmSequence(p).count(lo, hi);
}

std::optional<RootInterval> largest_real_root(const Poly& p, const Rat& eps) {
  if (p.degree() <= 0) throw DomainError("largest_real_root needs a nonconstant polynomial");
  if (eps.sign() <= 0) throw InputError("eps must be positive");

  const SturmSequence sturm(p);
  const Poly& q = sturm.square_free();
  const Rat bound = cauchy_bound(q);
  Rat lo = -bound;
  Rat hi = bound;
  if (sturm.count(lo, hi) == 0) return std::nullopt;

  // Invariant: the largest root lies in (lo, hi] and no root exceeds hi.
  for (;;) {
    if (hi - lo <= eps && sturm.count(lo, hi) == 1 && !evaluate(q, lo).is_zero()) {
      // Snap to an exact rational root when the simplest candidate is one.
      const Rat simple = simplest_between(lo, hi);
      if (evaluate(q, simple).is_zero()) return RootInterval{simple, simple, eps};
      return RootInterval{lo, hi, eps};
    }
    const Rat mid = (lo + hi) / Rat(2);
    const std::size_t above = sturm.count(mid, hi);
    if (above == 0) {
      if (evaluate(q, mid).is_zero()) return RootInterval{mid, mid, eps};
      hi = mid;
    } else {
      lo = mid;
    }
  }
}

}  // namespace wald
