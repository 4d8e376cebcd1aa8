#include "wald/monomial.hpp"

#include <algorithm>
#include <functional>

#include "wald/error.hpp"

namespace wald {

namespace {

constexpr std::size_t kInclusionExclusionCutoff = 20;

void require_same_arity(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.arity() != b.arity()) {
    throw InputError("monomial arity mismatch: " + std::to_string(a.arity()) + " vs " + std::to_string(b.arity()));
  }
}

// Number of degree-t monomials in n+1 variables.
Integer monomial_count(std::size_t n, long t) {
  if (t < 0) return 0;
  return binomial(t + static_cast<long>(n), static_cast<unsigned>(n));
}

void enumerate_degree(std::size_t arity, unsigned d, std::vector<unsigned>& cur, std::size_t pos,
                      std::vector<Monomial>& out) {
  if (pos + 1 == arity) {
    cur[pos] = d;
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = d + 1; e-- > 0;) {
    cur[pos] = e;
    enumerate_degree(arity, d - e, cur, pos + 1, out);
  }
}

// binom(t + n - shift, n) as a polynomial in t.
Poly shifted_binomial(std::size_t n, unsigned shift) {
  Poly p = Poly::constant(Rat(1));
  for (std::size_t i = 1; i <= n; ++i) {
    p *= Poly({Rat(static_cast<long>(i) - static_cast<long>(shift)), Rat(1)});
  }
  return p * Rat(factorial(static_cast<unsigned>(n))).reciprocal();
}

}  // namespace

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (unsigned e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<unsigned> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw DomainError("monomial does not divide");
  std::vector<unsigned> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= divisor.exps_[i];
  return Monomial(std::move(e));
}

std::string Monomial::str() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<unsigned> e(a.exponents());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<unsigned> e(a.exponents());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], b[i]);
  return Monomial(std::move(e));
}

bool output_order(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = a.arity(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal minimalize(std::size_t arity, std::span<const Monomial> gens) {
  std::vector<Monomial> sorted(gens.begin(), gens.end());
  for (const auto& g : sorted) {
    if (g.arity() != arity) throw InputError("mixed monomial arities in generating set");
  }
  std::sort(sorted.begin(), sorted.end(), output_order);
  std::vector<Monomial> kept;
  for (const auto& g : sorted) {
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(g);
  }
  return MonomialIdeal(arity, std::move(kept));
}

MonomialIdeal minimalize(std::span<const Monomial> gens) {
  if (gens.empty()) throw InputError("cannot minimalize an empty generating set");
  return minimalize(gens.front().arity(), gens);
}

MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_arity(a, b);
  std::vector<Monomial> lcms;
  lcms.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) lcms.push_back(lcm(g, h));
  }
  return minimalize(a.arity(), lcms);
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_arity(a, b);
  std::vector<Monomial> prods;
  prods.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) prods.push_back(g * h);
  }
  return minimalize(a.arity(), prods);
}

MonomialIdeal ideal_power(const MonomialIdeal& ideal, unsigned m) {
  if (m == 0) throw InputError("ideal_power needs m >= 1");
  MonomialIdeal result = ideal;
  for (unsigned k = 1; k < m; ++k) result = ideal_product(result, ideal);
  return result;
}

MonomialIdeal prime_ideal(std::size_t n, const VariableSet& variables) {
  if (variables.empty()) throw InputError("a prime needs at least one variable");
  std::vector<Monomial> gens;
  for (unsigned v : variables) {
    if (v > n) throw InputError("variable index " + std::to_string(v) + " out of range for n=" + std::to_string(n));
    std::vector<unsigned> e(n + 1, 0);
    e[v] = 1;
    gens.emplace_back(std::move(e));
  }
  return minimalize(n + 1, gens);
}

MonomialIdeal symbolic_power(std::size_t n, std::span<const VariableSet> primes, unsigned m) {
  if (primes.empty()) throw InputError("empty prime list");
  if (m == 0) throw InputError("symbolic_power needs m >= 1");
  std::vector<MonomialIdeal> ps;
  for (const auto& vars : primes) ps.push_back(prime_ideal(n, vars));
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = 0; j < ps.size(); ++j) {
      if (i == j) continue;
      const auto& gi = ps[i].generators();
      const bool contained = std::all_of(gi.begin(), gi.end(), [&](const Monomial& g) { return ps[j].contains(g); });
      if (contained) throw InputError("component primes must be pairwise incomparable");
    }
  }
  MonomialIdeal result = ideal_power(ps.front(), m);
  for (std::size_t i = 1; i < ps.size(); ++i) result = ideal_intersect(result, ideal_power(ps[i], m));
  return result;
}

unsigned alpha(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw DomainError("alpha undefined for the zero ideal");
  return ideal.generators().front().degree();
}

std::vector<Monomial> monomials_of_degree(std::size_t arity, unsigned d) {
  std::vector<Monomial> out;
  if (arity == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> cur(arity, 0);
  enumerate_degree(arity, d, cur, 0, out);
  std::sort(out.begin(), out.end(), output_order);
  return out;
}

Integer hf_by_enumeration(const MonomialIdeal& ideal, unsigned t) {
  Integer count = 0;
  for (const auto& mono : monomials_of_degree(ideal.arity(), t)) {
    if (!ideal.contains(mono)) ++count;
  }
  return count;
}

Integer hf_by_inclusion_exclusion(const MonomialIdeal& ideal, unsigned t) {
  const std::size_t n = ideal.n();
  const auto& gens = ideal.generators();
  Integer total = 0;
  // Subsets whose lcm exceeds degree t contribute nothing, nor do their supersets.
  std::function<void(std::size_t, const Monomial&, bool)> visit = [&](std::size_t next, const Monomial& l, bool odd) {
    const Integer term = monomial_count(n, static_cast<long>(t) - static_cast<long>(l.degree()));
    if (odd) total -= term; else total += term;
    for (std::size_t i = next; i < gens.size(); ++i) {
      const Monomial m = lcm(l, gens[i]);
      if (m.degree() > t) continue;
      visit(i + 1, m, !odd);
    }
  };
  visit(0, Monomial::one(ideal.arity()), false);
  return total;
}

Integer hf_quotient(const MonomialIdeal& ideal, unsigned t) {
  if (ideal.generators().size() <= kInclusionExclusionCutoff) return hf_by_inclusion_exclusion(ideal, t);
  return hf_by_enumeration(ideal, t);
}

unsigned DeltaSet::identity_from() const {
  unsigned top = 0;
  if (delta.empty()) return 0;
  for (const auto& m : delta) top = std::max(top, m.degree());
  return top + 1;
}

void check_delta_precondition(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.n();
  if (ideal.is_zero()) throw DomainError("delta set may be infinite: zero ideal");
  const auto& gens = ideal.generators();
  for (const auto& g : gens) {
    if (g[n] != 0) throw DomainError("delta set may be infinite: generator " + g.str() + " involves x" + std::to_string(n));
  }
  // Δ is in bijection with the standard monomials of K : gcd in x_0..x_{n-1};
  // it is finite iff that colon ideal is 1 or holds a pure power of each x_j.
  Monomial g0 = gens.front();
  for (const auto& g : gens) g0 = gcd(g0, g);
  std::vector<bool> has_pure_power(n, false);
  for (const auto& g : gens) {
    const Monomial q = g / g0;
    std::size_t support = 0, var = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (q[v] != 0) {
        ++support;
        var = v;
      }
    }
    if (support == 0) return;  // principal: Δ is empty
    if (support == 1) has_pure_power[var] = true;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!has_pure_power[v]) {
      throw DomainError("delta set may be infinite: no generator is gcd times a pure power of x" + std::to_string(v));
    }
  }
}

DeltaSet delta_set(const MonomialIdeal& ideal) {
  check_delta_precondition(ideal);
  const std::size_t n = ideal.n();
  const auto& gens = ideal.generators();

  DeltaSet result;
  result.gcd = gens.front();
  for (const auto& g : gens) result.gcd = gcd(result.gcd, g);

  // Once some degree >= deg(gcd) carries no Δ element, no higher degree does,
  // so the n+2 empty-degree window is a conservative stopping rule.
  const unsigned base = result.gcd.degree();
  unsigned empty_run = 0;
  unsigned d = base;
  for (;; ++d) {
    bool found = false;
    for (const auto& nu : monomials_of_degree(n, d - base)) {
      std::vector<unsigned> e = nu.exponents();
      e.push_back(0);
      const Monomial mu = result.gcd * Monomial(std::move(e));
      if (!ideal.contains(mu)) {
        result.delta.push_back(mu);
        found = true;
      }
    }
    empty_run = found ? 0 : empty_run + 1;
    if (empty_run >= n + 2) break;
  }
  result.searched_through = d;
  std::sort(result.delta.begin(), result.delta.end(), output_order);
  return result;
}

Poly hp_via_delta(const MonomialIdeal& ideal) {
  const DeltaSet ds = delta_set(ideal);
  const std::size_t n = ideal.n();
  return shifted_binomial(n, 0) - shifted_binomial(n, ds.gcd.degree()) +
         Poly::constant(Rat(static_cast<unsigned long>(ds.delta.size())));
}

HfHpVerdict verify_hf_leq_hp(const MonomialIdeal& ideal, unsigned t_max) {
  const DeltaSet ds = delta_set(ideal);
  const Poly hp = hp_via_delta(ideal);
  const MonomialIdeal principal = minimalize(ideal.arity(), std::vector<Monomial>{ds.gcd});

  HfHpVerdict v;
  const unsigned a = alpha(ideal);
  v.first_t = a == 0 ? 0 : a - 1;
  v.identity_from = ds.identity_from();
  v.delta_size = ds.delta.size();
  const Integer delta_count = static_cast<unsigned long>(ds.delta.size());
  for (unsigned t = v.first_t; t <= t_max; ++t) {
    HfHpRow row;
    row.t = t;
    row.hf = hf_quotient(ideal, t);
    row.hp = evaluate(hp, Rat(t));
    row.hf_principal = hf_quotient(principal, t);
    if (Rat(row.hf) > row.hp) v.bounded = false;
    if (t >= v.identity_from && row.hf != row.hf_principal + delta_count) v.delta_identity = false;
    v.rows.push_back(std::move(row));
  }
  return v;
}

std::vector<WaldschmidtSample> waldschmidt_samples(std::size_t n, std::span<const VariableSet> primes, unsigned m_max) {
  if (m_max < 1) throw InputError("m_max must be >= 1");
  std::vector<WaldschmidtSample> out;
  for (unsigned m = 1; m <= m_max; ++m) {
    const unsigned a = alpha(symbolic_power(n, primes, m));
    out.push_back({m, a, Rat(static_cast<long>(a), static_cast<long>(m))});
  }
  return out;
}

}  // namespace wald
