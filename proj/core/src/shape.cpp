#include "wald/shape.hpp"

#include <future>
#include <string>

#include "wald/error.hpp"
#include "wald/multipoly.hpp"

namespace wald {

SimplexShape::SimplexShape(unsigned n, std::vector<Rat> intercepts)
    : n_(n), intercepts_(std::move(intercepts)) {
  if (intercepts_.empty()) throw InputError("shape needs at least one intercept (c >= 1)");
  if (intercepts_.size() > n_) {
    throw InputError("shape codimension c=" + std::to_string(intercepts_.size()) + " exceeds n=" + std::to_string(n_));
  }
  for (const auto& a : intercepts_) {
    if (a.sign() <= 0) throw InputError("shape intercepts must be positive, got " + a.str());
  }
}

Rat SimplexShape::max_intercept() const {
  Rat m = intercepts_.front();
  for (const auto& a : intercepts_) {
    if (a > m) m = a;
  }
  return m;
}

Poly ahp_simplex(const SimplexShape& shape) {
  const std::size_t c = shape.c();
  const unsigned free_dims = shape.n() - shape.c();
  const std::size_t arity = c + 1;  // x_1..x_c, then t
  const std::size_t t_var = c;
  const auto& a = shape.intercepts();

  // Free coordinates: vol{y >= 0 : sum y <= r} = r^k / k!, r = t - x_1 - ... - x_c.
  MultiPoly remaining = MultiPoly::variable(arity, t_var);
  for (std::size_t i = 0; i < c; ++i) remaining -= MultiPoly::variable(arity, i);
  MultiPoly integrand = remaining.pow(free_dims) * Rat(factorial(free_dims)).reciprocal();

  // Simplex coordinates, innermost x_c first: 0 <= x_j <= a_j (1 - sum_{i<j} x_i / a_i).
  for (std::size_t j = c; j-- > 0;) {
    MultiPoly upper = MultiPoly::constant(arity, a[j]);
    for (std::size_t i = 0; i < j; ++i) upper -= MultiPoly::variable(arity, i) * (a[j] / a[i]);
    integrand = integrand.integrate(j, upper);
  }
  return integrand.to_univariate(t_var);
}

SimplexShape star_shape(unsigned n, unsigned c, unsigned s) {
  if (c < 1 || c > n) throw InputError("star configuration needs 1 <= c <= n");
  if (s < c) throw InputError("degenerate star configuration: s < c");
  std::vector<Rat> a;
  a.reserve(c);
  for (unsigned i = 1; i <= c; ++i) a.emplace_back(static_cast<long>(s - i + 1), static_cast<long>(c - i + 1));
  return SimplexShape(n, std::move(a));
}

Rat complete_homogeneous(std::span<const Rat> values, unsigned k) {
  // h[d] holds h_d over the prefix processed so far.
  std::vector<Rat> h(k + 1);
  h[0] = Rat(1);
  for (const auto& v : values) {
    for (unsigned d = 1; d <= k; ++d) h[d] += v * h[d - 1];
  }
  return h[k];
}

Poly star_closed_formula(unsigned n, unsigned c, unsigned s) {
  const SimplexShape shape = star_shape(n, c, s);
  const auto& a = shape.intercepts();
  Rat prefactor(1);
  for (const auto& ai : a) prefactor *= ai;
  prefactor *= Rat(factorial(n - c), factorial(n));

  const unsigned k = n - c;
  std::vector<Rat> coeffs(k + 1);
  for (unsigned j = 0; j <= k; ++j) {
    Rat term = Rat(binomial(n, j)) * complete_homogeneous(a, k - j);
    if ((k - j) % 2 == 1) term = -term;
    coeffs[j] = prefactor * term;
  }
  return Poly(std::move(coeffs));
}

std::size_t StarFormulaReport::mismatches() const {
  std::size_t bad = 0;
  for (const auto& r : rows) bad += r.equal ? 0 : 1;
  return bad;
}

StarFormulaReport verify_star_formula(unsigned n_max, unsigned s_max) {
  if (n_max < 2) throw InputError("verify_star_formula needs n_max >= 2");

  auto rows_for_n = [s_max](unsigned n) {
    std::vector<StarFormulaRow> rows;
    for (unsigned c = 1; c <= n; ++c) {
      for (unsigned s = c; s <= s_max; ++s) {
        StarFormulaRow row;
        row.n = n;
        row.c = c;
        row.s = s;
        row.integrated = ahp_simplex(star_shape(n, c, s));
        row.closed_form = star_closed_formula(n, c, s);
        row.equal = row.integrated == row.closed_form;
        rows.push_back(std::move(row));
      }
    }
    return rows;
  };

  std::vector<std::future<std::vector<StarFormulaRow>>> pending;
  for (unsigned n = 2; n <= n_max; ++n) pending.push_back(std::async(std::launch::async, rows_for_n, n));

  StarFormulaReport report;
  for (auto& f : pending) {
    for (auto& row : f.get()) report.rows.push_back(std::move(row));
  }
  return report;
}

Configuration::Configuration(unsigned n, std::vector<Component> components, unsigned derivative_order)
    : n_(n), components_(std::move(components)), derivative_order_(derivative_order) {
  if (n_ < 1) throw InputError("configuration needs n >= 1");
  if (derivative_order_ >= n_) {
    throw InputError("derivative order " + std::to_string(derivative_order_) + " must be < n=" + std::to_string(n_));
  }
  for (const auto& comp : components_) {
    if (comp.shape.n() != n_) throw InputError("component shape has n=" + std::to_string(comp.shape.n()) + ", configuration has n=" + std::to_string(n_));
    if (comp.count == 0) throw InputError("component count must be positive");
  }
}

Rat Configuration::validity_threshold() const {
  Rat m;
  for (const auto& comp : components_) {
    const Rat a = comp.shape.max_intercept();
    if (a > m) m = a;
  }
  return m;
}

Configuration Configuration::with_derivative_order(unsigned c) const { return Configuration(n_, components_, c); }

Configuration Configuration::merged(const Configuration& other) const {
  std::vector<Component> all = components_;
  all.insert(all.end(), other.components_.begin(), other.components_.end());
  return Configuration(n_, std::move(all), derivative_order_);
}

Poly ahp_configuration(const Configuration& config) {
  Poly total;
  for (const auto& comp : config.components()) total += ahp_simplex(comp.shape) * Rat(comp.count);
  return total;
}

}  // namespace wald
