#pragma once

// Corona pairs (a, I) with a polynomial and I a finite Blaschke product:
// delta = min over the closed disc of |a| + |I|, Bezout solutions a u + I v = 1,
// the inverse of the co-analytic Toeplitz operator on K_I built from u, and
// probes of near-degenerate pairs.

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hardyop/blaschke.hpp"
#include "hardyop/hardy_core.hpp"
#include "hardyop/operator_matrix.hpp"
#include "hardyop/rational.hpp"

namespace hardyop {

struct CoronaTolerances {
  double common_zero = 1e-10;    ///< |a(z_k)| at or below this is a common zero
  double bezout_residual = 1e-9; ///< sup |a u + I v - 1| on the grid
  double inverse_residual = 1e-7;
  double membership = 1e-8;      ///< P_I f = f test for inverse inputs
  double singular = 1e-10;       ///< sigma_min at or below this is singular
};

/// min over the closed disc of |a| + |I|.  Returns exactly 0 when a vanishes at a
/// zero of I; otherwise a 64 x 256 polar scan refined by pattern search to 1e-8 in z.
double corona_delta(const Polynomial& a, const BlaschkeProduct& inner, const CoronaTolerances& tol = {});

/// min over the zeros z_k of I of |a(z_k)|.
double min_at_zeros(const Polynomial& a, const BlaschkeProduct& inner);

struct CoronaCertificate {
  Polynomial a;
  double delta = 0.0;
  RationalFunction u;  ///< U / Q
  Polynomial v;        ///< W / c
  double residual = 0.0;  ///< sup over the grid of |a u + I v - 1|
  double sup_u = 0.0;
  double sup_v = 0.0;
  bool consistent = true;  ///< delta > 0 agrees with min_at_zeros > tol
};

/// Solves a U + P W = Q for P = prod (z - z_k), Q = prod (1 - conj(z_k) z) and
/// returns u = U/Q, v = W/c.  Throws CommonZeroError when a(z_k) = 0 for a zero
/// of I and NumericalError("IllConditioned") when the grid residual exceeds 1e-9.
CoronaCertificate solve_bezout(const Polynomial& a, const BlaschkeProduct& inner,
                               const CircleGrid& grid = CircleGrid{}, const CoronaTolerances& tol = {});

struct InverseApplication {
  BoundaryFunction value;  ///< T_{conj u} f
  double residual = 0.0;   ///< ||T_{conj u} T_{conj a} f - f||_p
  double reverse_residual = 0.0;  ///< ||T_{conj a} T_{conj u} f - f||_p
};

/// Applies the inverse of T_{conj a} on K_I.  f must be fixed by P_I.
InverseApplication apply_corona_inverse(const BlaschkeProduct& inner, const CoronaCertificate& cert,
                                        const BoundaryFunction& f, const HardyParams& params,
                                        const CoronaTolerances& tol = {});

/// Singular data of T_{conj a} restricted to K_I in the orthonormal TM basis.
struct InvertibilityCheck {
  OperatorMatrix matrix;
  Eigen::VectorXd singular_values;  ///< descending
  std::vector<cplx> eigenvalues;    ///< sorted by (modulus, argument)
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  bool invertible = false;          ///< sigma_min > tol.singular
};

InvertibilityCheck coanalytic_invertibility(const Polynomial& a, const BlaschkeProduct& inner,
                                            const CircleGrid& grid = CircleGrid{},
                                            const CoronaTolerances& tol = {});

/// Operator 2-norm of T_{conj u} on K_I; bounds the norm of the inverse 1/sigma_min.
double inverse_operator_norm(const BlaschkeProduct& inner, const CoronaCertificate& cert,
                             const CircleGrid& grid = CircleGrid{});

struct ProbeRow {
  cplx z;
  double corona_value = 0.0;  ///< |I(z)| + |a(z)|
  double f_norm = 0.0;
  double taf_norm = 0.0;
};

struct ProbeReport {
  std::vector<ProbeRow> rows;
  double sigma_min = 0.0;
  double zero_bound = 0.0;     ///< min_k |a(z_k)|, an upper bound for sigma_min at p = 2
  std::optional<double> inverse_bound;  ///< 1 / sup|u| when (a, I) is a corona pair
  double p = 2.0;
};

/// For each probe z: f = P_I(G k) with G the difference quotient of I at z and k the
/// normalized kernel at z; records |I(z)| + |a(z)|, ||f||_p and ||T_{conj a} f||_p.
/// Grids are enlarged as needed to resolve kernels at probes close to the circle.
ProbeReport probe_near_degeneracy(const BlaschkeProduct& inner, const Polynomial& a, const std::vector<cplx>& probes,
                                  const HardyParams& params, const CircleGrid& grid = CircleGrid{});

/// CSV with header z_re,z_im,corona_value,f_norm,Taf_norm,sigma_min,p.
std::string probe_csv(const ProbeReport& report);

}  // namespace hardyop
