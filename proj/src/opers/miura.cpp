#include "voa/opers/miura.hpp"

#include <algorithm>

#include "voa/core/errors.hpp"
#include "voa/core/poly.hpp"

namespace voa {

MonicDiffOp miura_compose(const std::vector<Series>& chis) {
  if (chis.empty()) return MonicDiffOp();
  std::vector<Series> acc{-chis.back(), Series(1)};
  for (std::size_t i = chis.size() - 1; i > 0; --i) acc = compose_operators({-chis[i - 1], Series(1)}, acc);
  return MonicDiffOp::from_coefficients(acc);
}

ConnectionMatrix miura_connection(const std::vector<Series>& chis) {
  const std::size_t n = chis.size();
  ConnectionMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = -chis[i];
    if (i > 0) m(i, i - 1) = Series(-1);
  }
  return m;
}

namespace {

bool exact_zero(const Series& s) { return s.is_zero() && s.exact(); }

/// E(chi) = R_n - sum_j q_j R_(n-j) with R_0 = 1, R_(k+1) = R_k' + chi R_k.
/// The operator kills exp(int chi) iff E vanishes.
Series riccati_defect(const std::vector<Series>& q, const Series& chi) {
  const std::size_t n = q.size();
  std::vector<Series> r{Series(1)};
  for (std::size_t k = 0; k < n; ++k) r.push_back(r.back().derivative() + chi * r.back());
  Series e = r[n];
  for (std::size_t j = 1; j <= n; ++j)
    if (!exact_zero(q[j - 1])) e -= q[j - 1] * r[n - j];
  return e;
}

Poly indicial_polynomial(const std::vector<Series>& q) {
  const std::size_t n = q.size();
  auto falling_poly = [](std::size_t k) {
    Poly p(1);
    for (std::size_t i = 0; i < k; ++i) p *= Poly(std::vector<Rational>{Rational(-static_cast<long>(i)), Rational(1)});
    return p;
  };
  Poly p = falling_poly(n);
  for (std::size_t j = 1; j <= n; ++j) {
    const Series& s = q[j - 1];
    if (s.is_zero()) continue;
    const int order = -static_cast<int>(j);
    if (s.valuation() < order)
      throw BranchError("irregular singularity: q_" + std::to_string(j) + " has a pole of order " +
                        std::to_string(-s.valuation()));
    p -= falling_poly(n - j) * s.coeff(order);
  }
  return p;
}

/// Rightmost factor chi with valuation >= exponent, computed up to O(t^target).
Series solve_rightmost(const std::vector<Series>& q, int exponent, const std::optional<Rational>& residue,
                       int target) {
  const int n = static_cast<int>(q.size());
  std::vector<Rational> c;  // c[i] is the coefficient of t^(exponent + i)
  int k = exponent;
  if (exponent == -1) {
    Poly ind = indicial_polynomial(q);
    std::vector<Rational> roots = ind.is_zero() ? std::vector<Rational>{} : rational_roots(ind);
    Rational rho;
    if (residue) {
      if (ind(*residue) != 0)
        throw BranchError("residue " + to_string(*residue) + " is not a root of the indicial polynomial " +
                          ind.to_string("r"));
      rho = *residue;
    } else {
      if (roots.empty()) throw BranchError("indicial polynomial " + ind.to_string("r") + " has no rational root");
      rho = roots.front();
    }
    c.push_back(rho);
    k = 0;
  }
  auto build = [&](int upto) {
    std::vector<Rational> coeffs(c);
    return Series(exponent, coeffs, upto);
  };
  for (; k < target; ++k) {
    const int order = k + 1 - n;
    Rational alpha, beta;
    try {
      c.push_back(0);
      beta = riccati_defect(q, build(k + 1)).coeff(order);
      c.back() = 1;
      alpha = riccati_defect(q, build(k + 1)).coeff(order) - beta;
    } catch (const PrecisionError&) {
      c.pop_back();
      break;
    }
    if (alpha == 0) {
      if (beta != 0)
        throw BranchError("no series solution on this branch: obstruction at t^" + std::to_string(order) +
                          " (a logarithmic term would be needed)");
      c.back() = 0;
    } else {
      c.back() = -beta / alpha;
    }
  }
  const int reached = exponent + static_cast<int>(c.size());
  Series chi = build(reached);
  Series e = riccati_defect(q, chi);
  if (!e.is_zero())
    throw BranchError("no factor with valuation >= " + std::to_string(exponent) + ": defect " + e.to_string());
  return chi;
}

/// Q = P (d - chi); returns P.
std::vector<Series> right_divide(const std::vector<Series>& l, const Series& chi) {
  const std::size_t m = l.size() - 1;
  std::vector<Series> derivs{chi};
  for (std::size_t r = 1; r <= m; ++r) derivs.push_back(derivs.back().derivative());
  std::vector<Series> p(m);
  p[m - 1] = l[m];
  for (std::size_t k = m - 1; k >= 1; --k) {
    Series acc = l[k];
    for (std::size_t i = k; i < m; ++i)
      acc += p[i] * derivs[i - k] * binomial(Rational(static_cast<long>(i)), static_cast<unsigned>(i - k));
    p[k - 1] = acc;
  }
  Series rem = l[0];
  for (std::size_t i = 0; i < m; ++i) rem += p[i] * derivs[i];
  if (!rem.is_zero()) throw BranchError("first-order factor does not divide the operator: remainder " + rem.to_string());
  return p;
}

}  // namespace

std::vector<Series> miura_factor(const MonicDiffOp& op, const MiuraBranch& branch, int window) {
  const std::size_t n = op.order();
  if (branch.exponents.size() != n) throw ShapeError("need one exponent per factor");
  if (!branch.residues.empty() && branch.residues.size() != n) throw ShapeError("need one residue slot per factor");
  for (int e : branch.exponents)
    if (e < -1) throw BranchError("factors with poles of order > 1 are not supported (exponent " + std::to_string(e) + ")");
  const int target = window + 2 * static_cast<int>(n);

  std::vector<Series> chis(n);
  std::vector<Series> coeffs = op.coefficients();
  for (std::size_t i = n; i >= 1; --i) {
    const int e = branch.exponents[i - 1];
    std::optional<Rational> residue = branch.residues.empty() ? std::nullopt : branch.residues[i - 1];
    Series chi;
    if (i == 1) {
      chi = -coeffs[0];
      if (!chi.is_zero() && chi.valuation() < e)
        throw BranchError("chi_1 = " + chi.to_string() + " has valuation below " + std::to_string(e));
      if (residue && e == -1 && chi.coeff(-1) != *residue)
        throw BranchError("chi_1 has residue " + to_string(chi.coeff(-1)) + ", not " + to_string(*residue));
    } else {
      MonicDiffOp part = MonicDiffOp::from_coefficients(coeffs);
      chi = solve_rightmost(part.q(), e, residue, target);
      coeffs = right_divide(coeffs, chi);
    }
    chis[i - 1] = chi;
  }
  for (auto& chi : chis) {
    if (chi.precision() < window)
      throw PrecisionError("operator known only to O(t^" + std::to_string(op.precision()) +
                           "), not enough for factors up to O(t^" + std::to_string(window) + ")");
    chi = chi.truncated(window);
  }
  return chis;
}

}  // namespace voa
