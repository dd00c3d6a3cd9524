#include "isospec/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "isospec/errors.hpp"

namespace isospec {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

Json coeffs_json(const std::vector<Scalar>& coeffs) {
  Json arr = Json::array();
  for (const auto& c : coeffs) arr.push_back(to_string(c));
  return arr;
}

std::vector<Scalar> coeffs_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("coefficient list must be an array");
  std::vector<Scalar> out;
  for (const auto& c : j) out.push_back(scalar_from_json(c));
  return out;
}

Json basis_json(const BasisTag& b) {
  if (b.is_monomial()) return "monomial";
  return Json{{"quasi", to_string(b.step().value())}};
}

BasisTag basis_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "monomial") return BasisTag::monomial();
  if (j.is_object() && j.contains("quasi")) {
    return BasisTag::quasi(GridStep(scalar_from_json(j.at("quasi"))));
  }
  throw ParseError("basis must be \"monomial\" or {\"quasi\": \"p/q\"}");
}

}  // namespace

Json to_json(const Scalar& value) { return to_string(value); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw ParseError("rational values must be \"p/q\" strings");
}

Json to_json(const AlgebraElement& e) {
  Json arr = Json::array();
  for (const auto& [w, c] : e.terms()) {
    arr.push_back(Json{{"m", w.b_degree}, {"n", w.a_degree}, {"coeff", to_string(c)}});
  }
  return arr;
}

namespace {

int degree_field(const Json& t, const char* key) {
  const Json& v = field(t, key);
  if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 1000000) {
    throw ParseError(std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<int>();
}

}  // namespace

AlgebraElement algebra_element_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("algebra element must be an array of terms");
  AlgebraElement e;
  for (const auto& t : j) {
    e += AlgebraElement::word(degree_field(t, "m"), degree_field(t, "n"),
                              scalar_from_json(field(t, "coeff")));
  }
  return e;
}

Json to_json(const Polynomial& p) {
  return Json{{"basis", basis_json(p.basis())}, {"coeffs", coeffs_json(p.coeffs())}};
}

Polynomial polynomial_from_json(const Json& j) {
  return Polynomial(coeffs_from_json(field(j, "coeffs")), basis_from_json(field(j, "basis")));
}

Json to_json(const ShiftOperator& s) {
  Json terms = Json::array();
  for (const auto& [k, p] : s.terms()) {
    terms.push_back(Json{{"shift", k}, {"coeffs", coeffs_json(p.coeffs())}});
  }
  return Json{{"delta", to_string(s.step().value())}, {"terms", terms}};
}

ShiftOperator shift_operator_from_json(const Json& j) {
  ShiftOperator s(GridStep(scalar_from_json(field(j, "delta"))));
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("terms must be an array");
  for (const auto& t : terms) {
    s += ShiftOperator::term(s.step(), field(t, "shift").get<int>(),
                             Polynomial(coeffs_from_json(field(t, "coeffs"))));
  }
  return s;
}

Json to_json(const Stencil& s) {
  Json coeffs = Json::array();
  for (const auto& p : s.coeffs) coeffs.push_back(coeffs_json(p.coeffs()));
  return Json{{"points", s.points}, {"count", s.points.size()}, {"coeffs", coeffs}};
}

Json to_json(const OperatorMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.entries) rows.push_back(coeffs_json(row));
  Json j{{"basis", basis_json(m.basis)},
         {"degree_bound", m.degree_bound},
         {"orientation", "entry (i,j) is the coefficient of basis element i in the image of basis element j"},
         {"rows", rows},
         {"overflow", m.overflow}};
  if (m.overflow) j["overflow_degree"] = m.overflow_degree;
  return j;
}

Json to_json(const SpectralReport& r) {
  Json j{{"matrix", to_json(r.matrix)},
         {"char_poly", coeffs_json(r.char_poly.coeffs())},
         {"triangular", r.triangular},
         {"diagonal", coeffs_json(r.matrix.diagonal())}};
  if (r.eigenpairs) {
    Json pairs = Json::array();
    for (const auto& [lambda, phi] : *r.eigenpairs) {
      pairs.push_back(Json{{"eigenvalue", to_string(lambda)},
                           {"eigenfunction", to_json(phi)},
                           {"monomial", coeffs_json(convert_basis(phi, BasisTag::monomial()).coeffs())}});
    }
    j["eigenpairs"] = pairs;
  }
  j["notes"] = r.notes;
  if (r.warning) j["warning"] = *r.warning;
  return j;
}

Json to_json(const IsospectralityCertificate& c) {
  return Json{{"delta", to_string(c.step.value())},
              {"degree_bound", c.degree_bound},
              {"continuum_char_poly", coeffs_json(c.continuum_char_poly.coeffs())},
              {"lattice_char_poly", coeffs_json(c.lattice_char_poly.coeffs())},
              {"verdict", c.verdict},
              {"notes", c.notes}};
}

Json to_json(const FamilyMember& m) {
  return Json{{"k", m.k},
              {"eigenvalue", to_string(m.eigenvalue)},
              {"continuum", coeffs_json(m.continuum.coeffs())},
              {"quasi", coeffs_json(m.discrete.coeffs())},
              {"monomial", coeffs_json(m.expanded.coeffs())},
              {"verified", m.verified}};
}

std::string polynomial_table_csv(const std::vector<std::string>& labels,
                                 const std::vector<Polynomial>& rows) {
  int width = 0;
  for (const auto& p : rows) width = std::max(width, p.degree() + 1);
  std::ostringstream out;
  out << "label";
  for (int k = 0; k < width; ++k) out << ",c" << k;
  out << "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << (r < labels.size() ? labels[r] : std::to_string(r));
    for (int k = 0; k < width; ++k) out << "," << to_string(rows[r].coefficient(k));
    out << "\n";
  }
  return out.str();
}

}  // namespace isospec
