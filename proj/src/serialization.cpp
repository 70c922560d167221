#include "hardyop/serialization.hpp"

#include "hardyop/error.hpp"

namespace hardyop {

namespace {

Json complex_list(std::span<const cplx> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

std::vector<cplx> complex_vector(const Json& j) {
  if (!j.is_array()) throw PreconditionError("expected an array of [re, im] pairs");
  std::vector<cplx> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

}  // namespace

Json to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

cplx complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw PreconditionError("complex number must be a number or an [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const Polynomial& p) { return complex_list(p.coefficients()); }

Polynomial polynomial_from_json(const Json& j) { return Polynomial(complex_vector(j)); }

Json to_json(const BoundaryFunction& f) {
  Json out;
  out["grid_m"] = f.grid().points();
  out["band_n"] = f.grid().band();
  out["coeffs"] = complex_list(f.coefficients());
  return out;
}

BoundaryFunction boundary_function_from_json(const Json& j) {
  const CircleGrid grid(j.at("grid_m").get<std::size_t>(), j.at("band_n").get<std::size_t>());
  return BoundaryFunction::from_coefficients(grid, complex_vector(j.at("coeffs")));
}

Json to_json(const BlaschkeProduct& b) {
  Json out;
  out["zeros"] = complex_list(b.zeros());
  out["constant"] = to_json(b.constant());
  return out;
}

BlaschkeProduct blaschke_from_json(const Json& j) {
  const cplx c = j.contains("constant") ? complex_from_json(j.at("constant")) : cplx{1.0, 0.0};
  return BlaschkeProduct(complex_vector(j.at("zeros")), c);
}

Json to_json(const BasisDescriptor& d) {
  Json out;
  out["space"] = to_string(d.space);
  out["kind"] = d.kind;
  out["dimension"] = d.dimension;
  if (d.space == BasisDescriptor::Space::model_space) {
    out["zeros"] = complex_list(d.zeros);
    out["p"] = d.p;
  } else {
    out["first_index"] = d.first_index;
  }
  return out;
}

BasisDescriptor basis_descriptor_from_json(const Json& j) {
  BasisDescriptor d;
  const auto space = j.at("space").get<std::string>();
  if (space == "model_space") {
    d.space = BasisDescriptor::Space::model_space;
    d.zeros = complex_vector(j.at("zeros"));
    d.p = j.at("p").get<double>();
  } else if (space == "chi_range" || space == "conj_chi_range") {
    d.space = space == "chi_range" ? BasisDescriptor::Space::chi_range : BasisDescriptor::Space::conj_chi_range;
    d.first_index = j.at("first_index").get<int>();
  } else {
    throw PreconditionError("unknown basis space '" + space + "'");
  }
  d.kind = j.at("kind").get<std::string>();
  d.dimension = j.at("dimension").get<std::size_t>();
  return d;
}

Json to_json(const OperatorMatrix& m) {
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back(to_json(m(r, c)));
  out["entries"] = std::move(entries);
  out["domain"] = to_json(m.domain());
  out["codomain"] = to_json(m.codomain());
  return out;
}

OperatorMatrix operator_matrix_from_json(const Json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto values = complex_vector(j.at("entries"));
  if (static_cast<Eigen::Index>(values.size()) != rows * cols) throw PreconditionError("matrix entry count mismatch");
  Eigen::MatrixXcd e(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) e(r, c) = values[static_cast<std::size_t>(r * cols + c)];
  return OperatorMatrix(std::move(e), basis_descriptor_from_json(j.at("domain")),
                        basis_descriptor_from_json(j.at("codomain")));
}

Json to_json(const ModelSpaceBasis& basis) {
  Json out;
  out["inner"] = to_json(basis.inner());
  out["kind"] = std::string(to_string(basis.kind()));
  out["p"] = basis.params().p();
  Json functions = Json::array();
  for (const auto& f : basis.functions()) functions.push_back(to_json(f));
  out["functions"] = std::move(functions);
  return out;
}

}  // namespace hardyop
