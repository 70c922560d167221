#include "hardyop/operators.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <sstream>

#include "hardyop/error.hpp"

namespace hardyop {

BasisDescriptor BasisDescriptor::chi(int first, std::size_t count) {
  BasisDescriptor d;
  d.space = Space::chi_range;
  d.kind = "chi";
  d.dimension = count;
  d.first_index = first;
  return d;
}

BasisDescriptor BasisDescriptor::conj_chi(int first, std::size_t count) {
  BasisDescriptor d;
  d.space = Space::conj_chi_range;
  d.kind = "conj_chi";
  d.dimension = count;
  d.first_index = first;
  return d;
}

std::string to_string(BasisDescriptor::Space space) {
  switch (space) {
    case BasisDescriptor::Space::model_space:
      return "model_space";
    case BasisDescriptor::Space::chi_range:
      return "chi_range";
    case BasisDescriptor::Space::conj_chi_range:
      return "conj_chi_range";
  }
  return "unknown";
}

OperatorMatrix::OperatorMatrix(Eigen::MatrixXcd entries, BasisDescriptor domain, BasisDescriptor codomain)
    : entries_(std::move(entries)), domain_(std::move(domain)), codomain_(std::move(codomain)) {
  if (static_cast<std::size_t>(entries_.cols()) != domain_.dimension ||
      static_cast<std::size_t>(entries_.rows()) != codomain_.dimension) {
    throw PreconditionError("operator matrix dimensions do not match its bases");
  }
}

namespace {

// Runs body(i) for i in [0, n) across OpenMP threads; the first exception is rethrown.
template <class Body>
void parallel_columns(std::ptrdiff_t n, Body&& body) {
  std::exception_ptr error;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(hardyop_column_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

void require_basis_of(const BlaschkeProduct& inner, const ModelSpaceBasis& basis) {
  if (!basis.inner().same_zeros(inner)) throw PreconditionError("basis does not belong to this inner function");
}

}  // namespace

BoundaryFunction toeplitz_apply(const BoundaryFunction& symbol, const BoundaryFunction& f) {
  if (!f.is_analytic()) throw PreconditionError("Toeplitz operator applied to a non-analytic function");
  return riesz_plus(symbol * f);
}

BoundaryFunction hankel_apply(const BoundaryFunction& symbol, const BoundaryFunction& f) {
  if (!f.is_analytic()) throw PreconditionError("Hankel operator applied to a non-analytic function");
  return riesz_minus(symbol * f);
}

OperatorMatrix compressed_matrix(const BlaschkeProduct& inner, const BoundaryFunction& symbol,
                                 const ModelSpaceBasis& basis, const OperatorTolerances& tol) {
  require_basis_of(inner, basis);
  if (!(symbol.grid() == basis.grid())) throw PreconditionError("symbol and basis live on different grids");
  const auto n = static_cast<Eigen::Index>(basis.dimension());
  double symbol_sup = 0.0;
  for (const auto& v : symbol.samples()) symbol_sup = std::max(symbol_sup, std::abs(v));

  Eigen::MatrixXcd m(n, n);
  parallel_columns(n, [&](std::ptrdiff_t j) {
    const auto& e = basis.functions()[static_cast<std::size_t>(j)];
    const BoundaryFunction image = model_projection(inner, toeplitz_apply(symbol, e));
    double residual = 0.0;
    m.col(j) = basis.coordinates(image, &residual);
    const double scale = std::max(image.l2_norm(), symbol_sup * e.l2_norm());
    if (residual > tol.expansion * std::max(scale, 1e-300)) {
      std::ostringstream os;
      os << "compressed operator image does not expand in the basis (residual " << residual << ")";
      throw NumericalError("IllConditioned", os.str());
    }
  });
  return OperatorMatrix(std::move(m), basis.descriptor(), basis.descriptor());
}

OperatorMatrix compressed_shift(const ModelSpaceBasis& basis, const OperatorTolerances& tol) {
  return compressed_matrix(basis.inner(), BoundaryFunction::chi(basis.grid(), 1), basis, tol);
}

OperatorMatrix hankel_matrix(const BoundaryFunction& symbol, std::size_t rows, std::size_t cols) {
  const auto r = static_cast<Eigen::Index>(rows);
  const auto c = static_cast<Eigen::Index>(cols);
  Eigen::MatrixXcd a(r, c);
  parallel_columns(c, [&](std::ptrdiff_t k) {
    const BoundaryFunction image = hankel_apply(symbol, BoundaryFunction::chi(symbol.grid(), static_cast<int>(k)));
    for (Eigen::Index j = 1; j <= r; ++j) a(j - 1, k) = image.coefficient(-static_cast<long>(j));
  });
  return OperatorMatrix(std::move(a), BasisDescriptor::chi(0, cols), BasisDescriptor::conj_chi(1, rows));
}

HankelStructure hankel_structure(const OperatorMatrix& a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  HankelStructure out;
  if (rows == 0 || cols == 0) return out;
  out.entries.resize(static_cast<std::size_t>(rows + cols - 1));
  // antidiagonal s = r + c holds m = s + 1
  for (Eigen::Index s = 0; s < rows + cols - 1; ++s) {
    const Eigen::Index r_lo = std::max<Eigen::Index>(0, s - (cols - 1));
    const Eigen::Index r_hi = std::min<Eigen::Index>(rows - 1, s);
    out.entries[static_cast<std::size_t>(s)] = a(r_lo, s - r_lo);
    for (Eigen::Index r1 = r_lo; r1 <= r_hi; ++r1)
      for (Eigen::Index r2 = r1 + 1; r2 <= r_hi; ++r2)
        out.defect = std::max(out.defect, std::abs(a(r1, s - r1) - a(r2, s - r2)));
  }
  return out;
}

BoundaryFunction hankel_symbol(const HankelStructure& structure, const CircleGrid& grid) {
  if (structure.entries.size() > grid.band()) throw PreconditionError("Hankel data longer than the grid band");
  std::vector<cplx> coeffs(2 * grid.band() + 1, cplx{0.0, 0.0});
  for (std::size_t m = 1; m <= structure.entries.size(); ++m) coeffs[grid.band() - m] = structure.entries[m - 1];
  return BoundaryFunction::from_coefficients(grid, std::move(coeffs));
}

double intertwine_defect(const OperatorMatrix& a) {
  // (P_-(zA))(j, k) = A(j+1, k) and (AS)(j, k) = A(j, k+1), rows indexed from j = 1
  double d = 0.0;
  for (Eigen::Index r = 0; r + 1 < a.rows(); ++r)
    for (Eigen::Index c = 0; c + 1 < a.cols(); ++c) d = std::max(d, std::abs(a(r + 1, c) - a(r, c + 1)));
  return d;
}

OperatorMatrix model_hankel_matrix(const ModelSpaceBasis& basis, const Eigen::MatrixXcd& t, std::size_t rows,
                                   std::size_t cols) {
  const auto n = static_cast<Eigen::Index>(basis.dimension());
  if (t.rows() != n || t.cols() != n) throw PreconditionError("operator size does not match the basis");
  const BoundaryFunction ib = basis.inner().boundary(basis.grid());
  const auto r = static_cast<Eigen::Index>(rows);
  Eigen::MatrixXcd a(r, static_cast<Eigen::Index>(cols));
  parallel_columns(static_cast<std::ptrdiff_t>(cols), [&](std::ptrdiff_t k) {
    const BoundaryFunction chi_k = BoundaryFunction::chi(basis.grid(), static_cast<int>(k));
    const Eigen::VectorXcd x = basis.coordinates(model_projection(basis.inner(), chi_k));
    const BoundaryFunction image = basis.combine(t * x).times_conj(ib);
    for (Eigen::Index j = 1; j <= r; ++j) a(j - 1, k) = image.coefficient(-static_cast<long>(j));
  });
  return OperatorMatrix(std::move(a), BasisDescriptor::chi(0, cols), BasisDescriptor::conj_chi(1, rows));
}

double commutation_residual(const Eigen::MatrixXcd& t, const Eigen::MatrixXcd& shift) {
  const double scale = std::max(1.0, t.cwiseAbs().maxCoeff());
  return (t * shift - shift * t).cwiseAbs().maxCoeff() / scale;
}

CommutantBasis commutant_basis(const ModelSpaceBasis& basis, const OperatorTolerances& tol) {
  const Eigen::MatrixXcd s = compressed_shift(basis, tol).entries();
  const Eigen::Index n = s.rows();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  // column-major vec: vec(XS) = (S^T kron I) vec X, vec(SX) = (I kron S) vec X
  Eigen::MatrixXcd system = Eigen::MatrixXcd::Zero(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      system.block(i * n, j * n, n, n) += s(j, i) * id;
      system.block(i * n, j * n, n, n) -= id(i, j) * s;
    }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(system, Eigen::ComputeFullV);
  CommutantBasis out;
  out.singular_values = svd.singularValues();
  const double smax = out.singular_values.size() > 0 ? out.singular_values(0) : 0.0;
  out.threshold = tol.rank_threshold * smax;

  const BasisDescriptor desc = basis.descriptor();
  double smallest_kept = smax > 0.0 ? smax : 0.0;
  bool any_kept = false;
  double largest_null = 0.0;
  for (Eigen::Index i = 0; i < out.singular_values.size(); ++i) {
    const double sv = out.singular_values(i);
    if (sv <= out.threshold) {
      largest_null = std::max(largest_null, sv);
      Eigen::VectorXcd v = svd.matrixV().col(i);
      Eigen::MatrixXcd x = Eigen::Map<Eigen::MatrixXcd>(v.data(), n, n);
      out.elements.emplace_back(std::move(x), desc, desc);
    } else {
      any_kept = true;
      smallest_kept = std::min(smallest_kept, sv);
    }
  }
  out.smallest_kept = any_kept && smax > 0.0 ? smallest_kept / smax : 0.0;
  out.largest_null = smax > 0.0 ? largest_null / smax : 0.0;
  if (any_kept && out.smallest_kept < tol.rank_gap) {
    std::ostringstream os;
    os << "commutant rank is ambiguous: smallest kept singular value " << out.smallest_kept
       << " (relative) is below the required gap " << tol.rank_gap;
    throw NumericalError("RankAmbiguity", os.str());
  }
  return out;
}

SymbolRecovery recover_symbol(const ModelSpaceBasis& basis, const Eigen::MatrixXcd& t, const OperatorTolerances& tol) {
  const Eigen::MatrixXcd s = compressed_shift(basis, tol).entries();
  const Eigen::Index n = s.rows();
  if (t.rows() != n || t.cols() != n) throw PreconditionError("operator size does not match the basis");
  SymbolRecovery out;
  out.commutation_residual = commutation_residual(t, s);
  if (out.commutation_residual > tol.commutation) {
    std::ostringstream os;
    os << "operator does not commute with the compressed shift (residual " << out.commutation_residual << ")";
    throw PreconditionError(os.str());
  }

  // compressed_matrix is linear in the symbol: T = sum_m c_m C(z^m), m < n
  Eigen::MatrixXcd system(n * n, n);
  for (Eigen::Index m = 0; m < n; ++m) {
    const Eigen::MatrixXcd cm =
        compressed_matrix(basis.inner(), BoundaryFunction::chi(basis.grid(), static_cast<int>(m)), basis, tol).entries();
    system.col(m) = Eigen::Map<const Eigen::VectorXcd>(cm.data(), n * n);
  }
  const Eigen::VectorXcd rhs = Eigen::Map<const Eigen::VectorXcd>(t.data(), n * n);
  const Eigen::VectorXcd c = system.colPivHouseholderQr().solve(rhs);
  const double scale = std::max(1.0, t.cwiseAbs().maxCoeff());
  out.recovery_residual = (system * c - rhs).cwiseAbs().maxCoeff() / scale;
  if (out.recovery_residual > tol.recovery) {
    std::ostringstream os;
    os << "recovered symbol does not reproduce the operator (residual " << out.recovery_residual << ")";
    throw NumericalError("IllConditioned", os.str());
  }
  out.symbol = Polynomial(std::vector<cplx>(c.data(), c.data() + n));
  return out;
}

double adjoint_defect(const BlaschkeProduct& inner, const Polynomial& symbol, const HardyParams& params,
                      const CircleGrid& grid) {
  const auto bp = takenaka_malmquist_basis(inner, params, grid);
  const auto bq = takenaka_malmquist_basis(inner, params.conjugate(), grid);
  const BoundaryFunction phi = symbol.boundary(grid);
  const Eigen::MatrixXcd m1 = compressed_matrix(inner, phi, bp).entries();
  const Eigen::MatrixXcd m2 = compressed_matrix(inner, phi.conj(), bq).entries();
  const auto n = static_cast<Eigen::Index>(bp.dimension());
  double defect = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const BoundaryFunction left = bp.combine(m1.col(k));
    for (Eigen::Index j = 0; j < n; ++j) {
      const BoundaryFunction right = bq.combine(m2.col(j));
      const cplx lhs = pairing(left, bq.functions()[static_cast<std::size_t>(j)]);
      const cplx rhs = pairing(bp.functions()[static_cast<std::size_t>(k)], right);
      defect = std::max(defect, std::abs(lhs - rhs));
    }
  }
  return defect;
}

KernelCheck coanalytic_kernel_check(const Polynomial& a, const CircleGrid& grid) {
  auto [inner, outer] = inner_outer_split(a);
  if (inner.degree() == 0) {
    throw PreconditionError("symbol has trivial inner part; its co-analytic Toeplitz operator is injective");
  }
  const HardyParams h2(2.0);
  const auto basis = takenaka_malmquist_basis(inner, h2, grid);
  const BoundaryFunction abar = a.boundary(grid).conj();

  KernelCheck out;
  out.inner_degree = inner.degree();
  for (const auto& e : basis.functions()) out.kernel_residual = std::max(out.kernel_residual, hp_norm(toeplitz_apply(abar, e), h2));

  // probe points: the origin and two rings
  std::vector<cplx> probes{0.0};
  for (int j = 0; j < 8; ++j) {
    const double t = 2.0 * std::numbers::pi * j / 8.0 + 0.1;
    probes.push_back(std::polar(0.5, t));
    probes.push_back(std::polar(0.8, t));
  }
  out.min_off_zero_ratio = std::numeric_limits<double>::infinity();
  for (const auto& w : probes) {
    const BoundaryFunction kw = RationalFunction(Polynomial::constant(1.0), Polynomial({1.0, -std::conj(w)})).boundary(grid);
    const BoundaryFunction image = toeplitz_apply(abar, kw);
    out.eigen_residual = std::max(out.eigen_residual, hp_norm(image - kw * std::conj(a(w)), h2));
    bool near_zero = false;
    for (const auto& z : inner.zeros()) near_zero = near_zero || std::abs(z - w) < 1e-6;
    if (!near_zero) out.min_off_zero_ratio = std::min(out.min_off_zero_ratio, hp_norm(image, h2) / hp_norm(kw, h2));
  }
  return out;
}

}  // namespace hardyop
