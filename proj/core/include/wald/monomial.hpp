#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wald/poly.hpp"
#include "wald/rat.hpp"

namespace wald {

/// Monomial x_0^{e_0} ... x_n^{e_n} stored by its exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {}
  static Monomial one(std::size_t arity) { return Monomial(std::vector<unsigned>(arity, 0)); }

  std::size_t arity() const { return exps_.size(); }
  const std::vector<unsigned>& exponents() const { return exps_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned degree() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; `divisor` must divide *this.
  Monomial operator/(const Monomial& divisor) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// "x0^2*x1", "1" for the unit monomial.
  std::string str() const;

 private:
  std::vector<unsigned> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// Output order: by degree, then by decreasing degree-reverse-lexicographic
/// order (x_0 > x_1 > ... > x_n).
bool output_order(const Monomial& a, const Monomial& b);

/// Monomial ideal in K[x_0..x_n] with a minimal generating set kept in
/// output_order. No generators means the zero ideal.
class MonomialIdeal {
 public:
  static MonomialIdeal zero(std::size_t arity) { return MonomialIdeal(arity, {}); }

  std::size_t arity() const { return arity_; }
  /// Projective dimension n = arity - 1.
  std::size_t n() const { return arity_ - 1; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend MonomialIdeal minimalize(std::span<const Monomial> gens);
  friend MonomialIdeal minimalize(std::size_t arity, std::span<const Monomial> gens);

 private:
  MonomialIdeal(std::size_t arity, std::vector<Monomial> gens) : arity_(arity), gens_(std::move(gens)) {}

  std::size_t arity_ = 0;
  std::vector<Monomial> gens_;
};

/// Drops every generator divisible by another one. Throws InputError on an
/// empty set or mixed arities.
MonomialIdeal minimalize(std::span<const Monomial> gens);
/// Same, with an explicit arity so that the empty set yields the zero ideal.
MonomialIdeal minimalize(std::size_t arity, std::span<const Monomial> gens);

MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_power(const MonomialIdeal& ideal, unsigned m);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);

/// A coordinate prime (x_i : i in variables).
using VariableSet = std::vector<unsigned>;

/// The prime generated by the listed variables in K[x_0..x_n].
MonomialIdeal prime_ideal(std::size_t n, const VariableSet& variables);

/// m-th symbolic power of the coordinate subspace arrangement whose component
/// primes are `primes`: the intersection of their m-th powers.
MonomialIdeal symbolic_power(std::size_t n, std::span<const VariableSet> primes, unsigned m);

/// Initial degree; throws DomainError on the zero ideal.
unsigned alpha(const MonomialIdeal& ideal);

/// dim (K[x_0..x_n]/I)_t. Inclusion-exclusion over the lcm lattice for at most
/// 20 generators, direct enumeration otherwise.
Integer hf_quotient(const MonomialIdeal& ideal, unsigned t);
Integer hf_by_inclusion_exclusion(const MonomialIdeal& ideal, unsigned t);
Integer hf_by_enumeration(const MonomialIdeal& ideal, unsigned t);

/// All monomials of total degree d in `arity` variables, in output_order.
std::vector<Monomial> monomials_of_degree(std::size_t arity, unsigned d);

struct DeltaSet {
  /// gcd of the generators.
  Monomial gcd;
  /// Monomials in x_0..x_{n-1} lying in (gcd) but not in K, in output_order.
  std::vector<Monomial> delta;
  /// Degree after which the search observed n+2 empty degrees in a row.
  unsigned searched_through = 0;
  /// 1 + max degree in delta, or 0 when delta is empty.
  unsigned identity_from() const;
};

/// Throws DomainError("delta set may be infinite") unless no generator
/// involves x_n and, writing g for the gcd of the generators, every x_j with
/// j < n has some generator of the form g * x_j^a (or K = (g) is principal).
/// This is exactly the condition for Δ to be finite.
void check_delta_precondition(const MonomialIdeal& ideal);

DeltaSet delta_set(const MonomialIdeal& ideal);

/// HP_J(t) + #Δ where J = (gcd of generators).
Poly hp_via_delta(const MonomialIdeal& ideal);

struct HfHpRow {
  unsigned t = 0;
  Integer hf;
  Rat hp;
  Integer hf_principal;  ///< HF_J(t), J = (gcd)
};

struct HfHpVerdict {
  /// HF_K(t) <= HP_K(t) on every checked t.
  bool bounded = true;
  /// HF_K(t) = HF_J(t) + #Δ for every checked t >= identity_from.
  bool delta_identity = true;
  unsigned first_t = 0;
  unsigned identity_from = 0;
  std::size_t delta_size = 0;
  std::vector<HfHpRow> rows;

  bool holds() const { return bounded && delta_identity; }
};

/// Checks HF_K <= HP_K on [alpha(K) - 1, t_max] and the Δ identity past the
/// largest Δ degree.
HfHpVerdict verify_hf_leq_hp(const MonomialIdeal& ideal, unsigned t_max);

struct WaldschmidtSample {
  unsigned m = 0;
  unsigned alpha = 0;
  Rat ratio;

  friend bool operator==(const WaldschmidtSample&, const WaldschmidtSample&) = default;
};

/// alpha(I^(m)) / m for m = 1..m_max, sorted by m.
std::vector<WaldschmidtSample> waldschmidt_samples(std::size_t n, std::span<const VariableSet> primes, unsigned m_max);

}  // namespace wald
