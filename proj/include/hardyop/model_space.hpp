#pragma once

// The model space K_I for a finite Blaschke product I: the projection
// P_I f = I P_-(conj(I) f), concrete bases, the splitting H^p = I H^p + K_I,
// annihilator checks and the K_I^p / K_I^q duality Gram matrix.

#include <Eigen/Dense>
#include <string_view>
#include <utility>
#include <vector>

#include "hardyop/blaschke.hpp"
#include "hardyop/hardy_core.hpp"
#include "hardyop/operator_matrix.hpp"
#include "hardyop/rational.hpp"

namespace hardyop {

enum class BasisKind { takenaka_malmquist, cauchy_kernels, monomial };

std::string_view to_string(BasisKind kind);
BasisKind basis_kind_from_string(std::string_view name);

/// Tolerances for model-space checks.
struct ModelTolerances {
  double construction = 1e-9;
  double property = 1e-8;
};

/// Ordered basis of K_I with dimension deg(I).  Keeps both the rational form of
/// each basis function and its boundary samples, plus the Gram matrix under the
/// pairing used to expand elements of K_I in the basis.
class ModelSpaceBasis {
 public:
  ModelSpaceBasis(BlaschkeProduct inner, BasisKind kind, HardyParams params, CircleGrid grid,
                  ModelTolerances tol = {});

  const BlaschkeProduct& inner() const noexcept { return inner_; }
  BasisKind kind() const noexcept { return kind_; }
  const HardyParams& params() const noexcept { return params_; }
  const CircleGrid& grid() const noexcept { return grid_; }
  std::size_t dimension() const noexcept { return functions_.size(); }
  const std::vector<BoundaryFunction>& functions() const noexcept { return functions_; }
  const std::vector<RationalFunction>& rational_functions() const noexcept { return rational_; }
  /// G(j, k) = <e_k, e_j>
  const Eigen::MatrixXcd& gram() const noexcept { return gram_; }

  /// Coordinates x with sum_k x_k e_k = g, from the Gram system.  `residual`
  /// receives the absolute l^2 error ||g - sum x_k e_k||_2.
  Eigen::VectorXcd coordinates(const BoundaryFunction& g, double* residual = nullptr) const;
  BoundaryFunction combine(const Eigen::VectorXcd& x) const;

  BasisDescriptor descriptor() const;

 private:
  BlaschkeProduct inner_;
  BasisKind kind_;
  HardyParams params_;
  CircleGrid grid_;
  std::vector<RationalFunction> rational_;
  std::vector<BoundaryFunction> functions_;
  Eigen::MatrixXcd gram_;
  Eigen::LLT<Eigen::MatrixXcd> gram_factor_;
};

/// Takenaka-Malmquist functions sqrt(1-|z_k|^2)/(1-conj(z_k) z) prod_{j<k} b_{z_j}
/// over the zeros sorted by (modulus, argument).
ModelSpaceBasis takenaka_malmquist_basis(const BlaschkeProduct& inner, const HardyParams& params,
                                         const CircleGrid& grid = CircleGrid{});
/// Raw kernels 1/(1 - conj(z_j) z); simple zeros only.
ModelSpaceBasis cauchy_kernel_basis(const BlaschkeProduct& inner, const HardyParams& params,
                                    const CircleGrid& grid = CircleGrid{});
/// 1, z, ..., z^{n-1}; only for I = c z^n.
ModelSpaceBasis monomial_basis(const BlaschkeProduct& inner, const HardyParams& params,
                               const CircleGrid& grid = CircleGrid{});

/// P_I f = I P_-(conj(I) f) for analytic f.
BoundaryFunction model_projection(const BlaschkeProduct& inner, const BoundaryFunction& f);

/// (f - P_I f, P_I f): the I H^p part and the K_I part of f.
std::pair<BoundaryFunction, BoundaryFunction> decompose(const BlaschkeProduct& inner, const BoundaryFunction& f);

/// |<I h, P_I f>|, zero when P_I f annihilates I H^q.
double annihilator_defect(const BlaschkeProduct& inner, const BoundaryFunction& f, const BoundaryFunction& h);

struct DualityGram {
  OperatorMatrix matrix;  ///< G(j, k) = <e_k^{(p)}, e_j^{(q)}>
  double condition_number;
};

/// Gram matrix of the pairing between the K_I^p and K_I^q Takenaka-Malmquist
/// bases.  Throws NumericalError("Singular") if it is numerically singular.
DualityGram duality_gram(const BlaschkeProduct& inner, const HardyParams& params,
                         const CircleGrid& grid = CircleGrid{});

}  // namespace hardyop
