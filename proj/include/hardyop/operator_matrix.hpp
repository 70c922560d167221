#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace hardyop {

/// Describes the basis on one side of an OperatorMatrix.
struct BasisDescriptor {
  enum class Space {
    model_space,     ///< a basis of K_I; `zeros` and `kind` identify it
    chi_range,       ///< chi_first .. chi_{first+dimension-1}
    conj_chi_range,  ///< conj(chi_first) .. conj(chi_{first+dimension-1})
  };

  Space space = Space::model_space;
  std::string kind;
  std::size_t dimension = 0;
  std::vector<std::complex<double>> zeros;
  int first_index = 0;
  double p = 2.0;

  static BasisDescriptor chi(int first, std::size_t count);
  static BasisDescriptor conj_chi(int first, std::size_t count);

  bool operator==(const BasisDescriptor&) const = default;
};

std::string to_string(BasisDescriptor::Space space);

/// Dense complex matrix whose columns are coordinates (in `codomain`) of the
/// images of the `domain` basis vectors.
class OperatorMatrix {
 public:
  OperatorMatrix(Eigen::MatrixXcd entries, BasisDescriptor domain, BasisDescriptor codomain);

  const Eigen::MatrixXcd& entries() const noexcept { return entries_; }
  Eigen::Index rows() const noexcept { return entries_.rows(); }
  Eigen::Index cols() const noexcept { return entries_.cols(); }
  const BasisDescriptor& domain() const noexcept { return domain_; }
  const BasisDescriptor& codomain() const noexcept { return codomain_; }
  std::complex<double> operator()(Eigen::Index r, Eigen::Index c) const { return entries_(r, c); }

 private:
  Eigen::MatrixXcd entries_;
  BasisDescriptor domain_;
  BasisDescriptor codomain_;
};

}  // namespace hardyop
