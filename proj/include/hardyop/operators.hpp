#pragma once

// Toeplitz and Hankel operators on band-limited boundary data, their matrices
// on K_I and on truncated chi-bases, the commutant of the compressed shift and
// symbol recovery for its elements.

#include <vector>

#include "hardyop/blaschke.hpp"
#include "hardyop/hardy_core.hpp"
#include "hardyop/model_space.hpp"
#include "hardyop/operator_matrix.hpp"
#include "hardyop/rational.hpp"

namespace hardyop {

struct OperatorTolerances {
  double expansion = 1e-8;        ///< basis expansion residual in compressed_matrix
  double commutation = 1e-8;      ///< |TS - ST| accepted as commuting
  double recovery = 1e-7;         ///< symbol recovery residual
  double rank_threshold = 1e-8;   ///< relative singular value counted as zero
  double rank_gap = 1e-6;         ///< kept singular values must exceed this (relative)
};

/// T_phi f = P_+(phi f); f analytic.
BoundaryFunction toeplitz_apply(const BoundaryFunction& symbol, const BoundaryFunction& f);
/// H_psi f = P_-(psi f); f analytic.
BoundaryFunction hankel_apply(const BoundaryFunction& symbol, const BoundaryFunction& f);

/// Matrix of P_I T_phi on `basis`: column j holds the coordinates of P_I T_phi e_j.
/// With phi = chi_1 this is the compressed shift; with a co-analytic phi = conj(a)
/// it is the restriction of T_phi to K_I.
OperatorMatrix compressed_matrix(const BlaschkeProduct& inner, const BoundaryFunction& symbol,
                                 const ModelSpaceBasis& basis, const OperatorTolerances& tol = {});

/// Compressed shift S^I f = P_I(z f) on `basis`.
OperatorMatrix compressed_shift(const ModelSpaceBasis& basis, const OperatorTolerances& tol = {});

/// Matrix of H_psi from chi_0..chi_{cols-1} into conj(chi_1)..conj(chi_rows):
/// entry (j-1, k) = <H_psi chi_k, conj(chi_j)>.
OperatorMatrix hankel_matrix(const BoundaryFunction& symbol, std::size_t rows, std::size_t cols);

/// Antidiagonal representatives a_m (m = j + k, 1 <= m <= rows + cols - 1) and the
/// largest deviation between two entries on the same antidiagonal.
struct HankelStructure {
  std::vector<cplx> entries;  ///< entries[m - 1] = a_m
  double defect = 0.0;
};

HankelStructure hankel_structure(const OperatorMatrix& a);

/// psi = sum_m a_m chi_{-m}; its Hankel operator reproduces the antidiagonal data.
BoundaryFunction hankel_symbol(const HankelStructure& structure, const CircleGrid& grid);

/// max |(P_-(z A) - A S)(j, k)| on the window where both sides are defined:
/// the last codomain row and last domain column are excluded.
double intertwine_defect(const OperatorMatrix& a);

/// Matrix over chi-bases of f -> conj(I) T P_I f for an operator T given on `basis`.
OperatorMatrix model_hankel_matrix(const ModelSpaceBasis& basis, const Eigen::MatrixXcd& t, std::size_t rows,
                                   std::size_t cols);

/// max |T S - S T| / max(1, max |T|)
double commutation_residual(const Eigen::MatrixXcd& t, const Eigen::MatrixXcd& shift);

struct CommutantBasis {
  std::vector<OperatorMatrix> elements;
  Eigen::VectorXd singular_values;   ///< of the n^2 x n^2 commutation system, descending
  double threshold = 0.0;            ///< absolute zero threshold used
  double smallest_kept = 0.0;        ///< relative to the largest; 0 when nothing is kept
  double largest_null = 0.0;         ///< relative to the largest singular value
};

/// Basis of {X : X S^I = S^I X} from the nullspace of the commutation system.
/// Throws NumericalError("RankAmbiguity") if a kept singular value sits below the gap.
CommutantBasis commutant_basis(const ModelSpaceBasis& basis, const OperatorTolerances& tol = {});

struct SymbolRecovery {
  Polynomial symbol;  ///< degree < n
  double commutation_residual = 0.0;
  double recovery_residual = 0.0;
};

/// The unique polynomial phi of degree < deg(I) with compressed_matrix(I, phi) = T.
/// Throws PreconditionError if T does not commute with S^I, NumericalError if the
/// recovered symbol does not reproduce T.
SymbolRecovery recover_symbol(const ModelSpaceBasis& basis, const Eigen::MatrixXcd& t,
                              const OperatorTolerances& tol = {});

/// max_{j,k} |<M1 e_k, f_j> - <e_k, M2 f_j>| where M1 compresses T_phi to the K_I^p
/// basis {e_k} and M2 is T_{conj phi} on the K_I^q basis {f_j}.
double adjoint_defect(const BlaschkeProduct& inner, const Polynomial& symbol, const HardyParams& params,
                      const CircleGrid& grid = CircleGrid{});

struct KernelCheck {
  double kernel_residual = 0.0;    ///< max over the TM basis of K_{I_a} of ||T_{conj a} e||_2
  double eigen_residual = 0.0;     ///< max over probe points w of ||T_{conj a} k_w - conj(a(w)) k_w||_2
  double min_off_zero_ratio = 0.0; ///< min over probe points off the zero set of ||T_{conj a} k_w|| / ||k_w||
  std::size_t inner_degree = 0;
};

/// Certifies K_{I_a} is inside ker T_{conj a} for the inner factor I_a of a.
/// Throws PreconditionError when the inner part is trivial (T_{conj a} is then injective).
KernelCheck coanalytic_kernel_check(const Polynomial& a, const CircleGrid& grid = CircleGrid{});

}  // namespace hardyop
