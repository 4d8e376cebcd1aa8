#pragma once

// Independent reference computations used only by the tests. None of these
// route through the code paths they are used to check.

#include <cstddef>
#include <random>
#include <vector>

#include "wald/monomial.hpp"
#include "wald/poly.hpp"
#include "wald/rat.hpp"
#include "wald/shape.hpp"

namespace wald::oracle {

/// Sign changes of a double-precision polynomial over a uniform grid in (lo, hi].
std::size_t sign_scan_roots(const std::vector<double>& ascending, double lo, double hi, std::size_t steps);

/// Exact volume of shape ∩ {x_1 + ... + x_n <= T}, n <= 3, by vertex
/// enumeration and a pyramid triangulation from the centroid.
Rat polytope_volume(const SimplexShape& shape, const Rat& T);

/// h_k by summing every degree-k monomial explicitly.
Rat complete_homogeneous_brute(const std::vector<Rat>& values, unsigned k);

/// aHP from Dirichlet moments over the simplex:
///   coefficient of t^j = prod(a) (-1)^{k-j} h_{k-j}(a) / (j! (n-j)!),  k = n - c.
Poly dirichlet_ahp(const SimplexShape& shape);

/// Exact Lagrange interpolation through (x_i, y_i).
Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

/// True iff the monomial lies in P^m for every coordinate prime P.
bool in_all_prime_powers(const Monomial& mono, const std::vector<VariableSet>& primes, unsigned m);

/// Every monomial of degree <= max_degree in `arity` variables.
std::vector<Monomial> monomials_up_to(std::size_t arity, unsigned max_degree);

/// Monomials in x_0..x_{n-1} of degree <= max_degree divisible by the gcd of
/// the generators and not in K.
std::vector<Monomial> delta_brute(const MonomialIdeal& ideal, unsigned max_degree);

/// Random rational in [1/den_max, num_max].
Rat random_positive_rat(std::mt19937_64& rng, long num_max = 20, long den_max = 9);

}  // namespace wald::oracle
