#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "isospec/heisenberg.hpp"
#include "isospec/polynomial.hpp"
#include "isospec/representations.hpp"
#include "isospec/spectral.hpp"

namespace isospec {

using Json = nlohmann::ordered_json;

// Fractions always travel as strings ("p/q" or "p").
Json to_json(const Scalar& value);
Scalar scalar_from_json(const Json& j);

// [{"m": .., "n": .., "coeff": "p/q"}, ...] in ascending (m, n).
Json to_json(const AlgebraElement& e);
AlgebraElement algebra_element_from_json(const Json& j);

// {"basis": "monomial" | {"quasi": "p/q"}, "coeffs": [...]}
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

// {"delta": "p/q", "terms": [{"shift": k, "coeffs": [...]}, ...]} with shifts
// ascending.
Json to_json(const ShiftOperator& s);
ShiftOperator shift_operator_from_json(const Json& j);

Json to_json(const Stencil& s);
Json to_json(const OperatorMatrix& m);
Json to_json(const SpectralReport& r);
Json to_json(const IsospectralityCertificate& c);
Json to_json(const FamilyMember& m);

// Header row then one row per polynomial: label column followed by the
// coefficients of degrees 0..max degree.
std::string polynomial_table_csv(const std::vector<std::string>& labels,
                                 const std::vector<Polynomial>& rows);

}  // namespace isospec
