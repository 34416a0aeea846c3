#pragma once

#include <map>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "voa/core/json_io.hpp"
#include "voa/core/log_series.hpp"
#include "voa/kz/kz.hpp"

namespace voa::kz {

using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;
using RealMatrix = std::vector<std::vector<Real>>;
using ComplexMatrix = std::vector<std::vector<Complex>>;

/// d phi/dx = (A/x - B/(1-x)) phi.
struct ReducedKZ {
  QMatrix A, B;
  std::size_t dim() const { return A.rows(); }
  /// Residue at the chosen point and the matrix at the other one.
  const QMatrix& residue(int at) const { return at == 0 ? A : B; }
  const QMatrix& other(int at) const { return at == 0 ? B : A; }
  Json to_json() const;
  static ReducedKZ from_json(const Json& j);
};

/// A = Omega_ij / kappa, B = Omega_kl / kappa.
ReducedKZ reduce(const KZSystem& system, std::pair<std::size_t, std::size_t> at_zero,
                 std::pair<std::size_t, std::size_t> at_one);

/// Generalized eigenspaces of a rational matrix with rational spectrum.
struct Spectrum {
  std::vector<Rational> eigenvalues;  // increasing
  std::vector<QMatrix> projectors;
  std::vector<QMatrix> nilpotents;  // (R - lambda) restricted to the eigenspace
};

/// UnsupportedSpectrumError when the characteristic polynomial does not split over Q.
Spectrum rational_spectrum(const QMatrix& r);

/// phi_w(x) = sum_mu x^mu sum_i x^i P_i(log x), one class mu per eigenvalue
/// class modulo Z (mu its smallest member). For eigenvalue lambda = mu + i the
/// level-i constant term on its generalized eigenspace is pi_lambda(w).
struct KZSolution {
  int at = 0;
  int order = 0;
  QVector seed;
  Spectrum spectrum;
  /// levels[mu][i][j] is the vector coefficient of x^(mu+i) (log x)^j.
  std::map<Rational, std::vector<std::vector<QVector>>> levels;

  unsigned log_power() const;
  /// Coordinate functions as log series in the local variable.
  std::vector<LogSeries> components() const;
  /// Leading datum of eigenvalue lambda read back from the series.
  QVector leading(std::size_t eigen_index) const;
  Json to_json() const;
};

KZSolution solve_regular_singular(const ReducedKZ& red, const QVector& w, int order, int at = 0,
                                  unsigned log_cap = 12);

/// theta phi - R phi + x/(1-x) S phi, computed by formal substitution.
std::vector<LogSeries> kz_residual(const ReducedKZ& red, const std::vector<LogSeries>& phi, int at, int order);

Real evaluate(const LogSeries& s, const Real& x);

/// Columns are the solutions seeded by the standard basis, evaluated at x.
RealMatrix fundamental_matrix(const ReducedKZ& red, int order, int at, const Real& x);

struct AssociatorResult {
  RealMatrix matrix;
  Real error = 0;
  int order = 0;
  Rational point;
  Json to_json(int digits = 20) const;
};

/// phi_B(1 - x)^-1 phi_A(x); the error is the max-entry change against order - 2.
AssociatorResult associator(const ReducedKZ& red, int order, const Rational& point, double tolerance = 1e-6);

/// Connecting matrix of the continuation log x -> log x + 2 pi i around 0.
ComplexMatrix monodromy_at_zero(const ReducedKZ& red, int order);

RealMatrix invert(const RealMatrix& m);
std::string format_real(const Real& x, int digits);

}  // namespace voa::kz
