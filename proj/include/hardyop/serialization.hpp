#pragma once

// JSON forms of the value types.  Complex numbers are [re, im] pairs; boundary
// functions carry their grid and the coefficients c_{-N}..c_{N} in order.

#include <json.hpp>

#include "hardyop/blaschke.hpp"
#include "hardyop/hardy_core.hpp"
#include "hardyop/model_space.hpp"
#include "hardyop/operator_matrix.hpp"
#include "hardyop/rational.hpp"

namespace hardyop {

using Json = nlohmann::ordered_json;

Json to_json(cplx z);
cplx complex_from_json(const Json& j);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const BoundaryFunction& f);
BoundaryFunction boundary_function_from_json(const Json& j);

Json to_json(const BlaschkeProduct& b);
BlaschkeProduct blaschke_from_json(const Json& j);

Json to_json(const BasisDescriptor& d);
BasisDescriptor basis_descriptor_from_json(const Json& j);

Json to_json(const OperatorMatrix& m);
OperatorMatrix operator_matrix_from_json(const Json& j);

/// {"inner": ..., "kind": ..., "p": ..., "functions": [boundary functions]}
Json to_json(const ModelSpaceBasis& basis);

}  // namespace hardyop
