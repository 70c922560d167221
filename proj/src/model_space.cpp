#include "hardyop/model_space.hpp"

#include <cmath>
#include <sstream>

#include "hardyop/error.hpp"

namespace hardyop {

std::string_view to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::takenaka_malmquist:
      return "takenaka_malmquist";
    case BasisKind::cauchy_kernels:
      return "cauchy_kernels";
    case BasisKind::monomial:
      return "monomial_when_I_is_z_pow_n";
  }
  return "unknown";
}

BasisKind basis_kind_from_string(std::string_view name) {
  if (name == "takenaka_malmquist") return BasisKind::takenaka_malmquist;
  if (name == "cauchy_kernels") return BasisKind::cauchy_kernels;
  if (name == "monomial_when_I_is_z_pow_n" || name == "monomial") return BasisKind::monomial;
  throw PreconditionError("unknown basis kind '" + std::string(name) + "'");
}

namespace {

std::vector<RationalFunction> build_rational(const BlaschkeProduct& inner, BasisKind kind) {
  const auto zeros = inner.ordered_zeros();
  std::vector<RationalFunction> out;
  out.reserve(zeros.size());
  switch (kind) {
    case BasisKind::takenaka_malmquist: {
      Polynomial num_prefix = Polynomial::constant(1.0);
      Polynomial den_prefix = Polynomial::constant(1.0);
      for (const auto& a : zeros) {
        const Polynomial den = den_prefix * Polynomial({1.0, -std::conj(a)});
        out.emplace_back(num_prefix * std::sqrt(1.0 - std::norm(a)), den);
        num_prefix = num_prefix * Polynomial({-a, 1.0});
        den_prefix = den;
      }
      break;
    }
    case BasisKind::cauchy_kernels: {
      for (std::size_t i = 0; i < zeros.size(); ++i)
        for (std::size_t j = i + 1; j < zeros.size(); ++j)
          if (std::abs(zeros[i] - zeros[j]) <= 1e-8)
            throw PreconditionError("Cauchy kernel basis needs simple zeros");
      for (const auto& a : zeros) out.emplace_back(Polynomial::constant(1.0), Polynomial({1.0, -std::conj(a)}));
      break;
    }
    case BasisKind::monomial: {
      for (const auto& a : zeros)
        if (std::abs(a) > 1e-12) throw PreconditionError("monomial basis needs I = c z^n");
      for (std::size_t k = 0; k < zeros.size(); ++k) out.emplace_back(Polynomial::monomial(static_cast<int>(k)));
      break;
    }
  }
  return out;
}

}  // namespace

ModelSpaceBasis::ModelSpaceBasis(BlaschkeProduct inner, BasisKind kind, HardyParams params, CircleGrid grid,
                                 ModelTolerances tol)
    : inner_(std::move(inner)), kind_(kind), params_(params), grid_(grid) {
  if (inner_.degree() == 0) throw PreconditionError("model space of a constant inner function is trivial");
  rational_ = build_rational(inner_, kind_);
  functions_.reserve(rational_.size());
  for (const auto& r : rational_) functions_.push_back(r.boundary(grid_));

  const auto n = static_cast<Eigen::Index>(functions_.size());
  gram_.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k)
      gram_(j, k) = pairing(functions_[static_cast<std::size_t>(k)], functions_[static_cast<std::size_t>(j)]);
  gram_factor_.compute(gram_);
  if (gram_factor_.info() != Eigen::Success) {
    throw NumericalError("IllConditioned", "model-space basis Gram matrix is not positive definite");
  }

  for (const auto& e : functions_) {
    const double defect = (model_projection(inner_, e) - e).l2_norm();
    if (defect > tol.construction * std::max(1.0, e.l2_norm())) {
      std::ostringstream os;
      os << "basis function is not fixed by P_I (defect " << defect << "); grid too coarse for the zeros?";
      throw NumericalError("IllConditioned", os.str());
    }
  }
  if (kind_ == BasisKind::takenaka_malmquist) {
    const double off = (gram_ - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
    if (off > tol.construction) throw NumericalError("IllConditioned", "Takenaka-Malmquist Gram is not the identity");
  }
}

Eigen::VectorXcd ModelSpaceBasis::coordinates(const BoundaryFunction& g, double* residual) const {
  const auto n = static_cast<Eigen::Index>(functions_.size());
  Eigen::VectorXcd rhs(n);
  for (Eigen::Index j = 0; j < n; ++j) rhs(j) = pairing(g, functions_[static_cast<std::size_t>(j)]);
  Eigen::VectorXcd x = gram_factor_.solve(rhs);
  if (residual != nullptr) {
    *residual = (g - combine(x)).l2_norm();
  }
  return x;
}

BoundaryFunction ModelSpaceBasis::combine(const Eigen::VectorXcd& x) const {
  // combine on coefficients directly; every basis function shares the grid
  std::vector<cplx> coeffs(2 * grid_.band() + 1, cplx{0.0, 0.0});
  for (std::size_t k = 0; k < functions_.size(); ++k) {
    const auto c = functions_[k].coefficients();
    const cplx w = x(static_cast<Eigen::Index>(k));
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += w * c[i];
  }
  return BoundaryFunction::from_coefficients(grid_, std::move(coeffs));
}

BasisDescriptor ModelSpaceBasis::descriptor() const {
  BasisDescriptor d;
  d.space = BasisDescriptor::Space::model_space;
  d.kind = std::string(to_string(kind_));
  d.dimension = functions_.size();
  d.zeros = inner_.ordered_zeros();
  d.p = params_.p();
  return d;
}

ModelSpaceBasis takenaka_malmquist_basis(const BlaschkeProduct& inner, const HardyParams& params,
                                         const CircleGrid& grid) {
  return ModelSpaceBasis(inner, BasisKind::takenaka_malmquist, params, grid);
}

ModelSpaceBasis cauchy_kernel_basis(const BlaschkeProduct& inner, const HardyParams& params, const CircleGrid& grid) {
  return ModelSpaceBasis(inner, BasisKind::cauchy_kernels, params, grid);
}

ModelSpaceBasis monomial_basis(const BlaschkeProduct& inner, const HardyParams& params, const CircleGrid& grid) {
  return ModelSpaceBasis(inner, BasisKind::monomial, params, grid);
}

BoundaryFunction model_projection(const BlaschkeProduct& inner, const BoundaryFunction& f) {
  if (!f.is_analytic()) throw PreconditionError("model projection: argument is not analytic");
  const BoundaryFunction ib = inner.boundary(f.grid());
  return riesz_minus(f.times_conj(ib)) * ib;
}

std::pair<BoundaryFunction, BoundaryFunction> decompose(const BlaschkeProduct& inner, const BoundaryFunction& f) {
  BoundaryFunction h = model_projection(inner, f);
  BoundaryFunction g = f - h;
  return {std::move(g), std::move(h)};
}

double annihilator_defect(const BlaschkeProduct& inner, const BoundaryFunction& f, const BoundaryFunction& h) {
  if (!h.is_analytic()) throw PreconditionError("annihilator defect: test function is not analytic");
  const BoundaryFunction ih = inner.boundary(f.grid()) * h;
  return std::abs(pairing(ih, model_projection(inner, f)));
}

DualityGram duality_gram(const BlaschkeProduct& inner, const HardyParams& params, const CircleGrid& grid) {
  const auto bp = takenaka_malmquist_basis(inner, params, grid);
  const auto bq = takenaka_malmquist_basis(inner, params.conjugate(), grid);
  const auto n = static_cast<Eigen::Index>(bp.dimension());
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k)
      g(j, k) = pairing(bp.functions()[static_cast<std::size_t>(k)], bq.functions()[static_cast<std::size_t>(j)]);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(g);
  const auto& s = svd.singularValues();
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  if (!(smin > 1e-12 * smax)) throw NumericalError("Singular", "duality Gram matrix is numerically singular");
  return DualityGram{OperatorMatrix(std::move(g), bp.descriptor(), bq.descriptor()), smax / smin};
}

}  // namespace hardyop
