#include "isospec/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "isospec/errors.hpp"

namespace isospec {

GridStep::GridStep(Scalar value) : value_(std::move(value)) {
  value_.canonicalize();
  if (value_ == 0) throw DomainError("grid step delta must be nonzero");
}

const GridStep& BasisTag::step() const {
  if (!step_) throw DomainError("monomial basis has no grid step");
  return *step_;
}

std::string BasisTag::describe() const {
  return step_ ? "quasi-monomial(delta=" + to_string(step_->value()) + ")" : "monomial";
}

Polynomial::Polynomial(std::vector<Scalar> coeffs, BasisTag basis)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::constant(const Scalar& c, BasisTag basis) {
  return Polynomial({c}, std::move(basis));
}

Polynomial Polynomial::basis_element(int n, BasisTag basis) {
  std::vector<Scalar> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs.back() = 1;
  return Polynomial(std::move(coeffs), std::move(basis));
}

Scalar Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Scalar& Polynomial::leading() const {
  if (is_zero()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Polynomial Polynomial::retagged(const BasisTag& basis) const {
  Polynomial p = *this;
  p.basis_ = basis;
  return p;
}

Scalar Polynomial::evaluate(const Scalar& x) const {
  require_monomial("evaluate");
  Scalar acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Horner in (x + c).
Polynomial Polynomial::shifted(const Scalar& c) const {
  require_monomial("shift");
  std::vector<Scalar> acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc.insert(acc.begin(), Scalar(0));
    for (std::size_t i = 0; i + 1 < acc.size(); ++i) acc[i] += c * acc[i + 1];
    acc[0] += *it;
  }
  return Polynomial(std::move(acc));
}

Polynomial Polynomial::derivative() const {
  require_monomial("differentiate");
  std::vector<Scalar> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * static_cast<long>(k));
  return Polynomial(std::move(d));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) basis_ = other.basis_;
  require_same_basis(other);
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) basis_ = other.basis_;
  require_same_basis(other);
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  for (auto& coeff : coeffs_) coeff *= c;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  p.require_monomial("multiply");
  q.require_monomial("multiply");
  if (p.is_zero() || q.is_zero()) return Polynomial();
  std::vector<Scalar> r(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) r[i + j] += p.coeffs_[i] * q.coeffs_[j];
  }
  return Polynomial(std::move(r));
}

std::string Polynomial::to_string(std::string_view variable) const {
  if (is_zero()) return "0";
  const std::string x(variable);
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Scalar magnitude = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << isospec::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) {
      if (magnitude.get_den() == 1) {
        out << isospec::to_string(magnitude);
      } else {
        out << "(" << isospec::to_string(magnitude) << ")";
      }
    }
    out << x;
    if (basis_.is_quasi()) {
      out << "^(" << k << ")";
    } else if (k > 1) {
      out << "^" << k;
    }
  }
  return out.str();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Polynomial::require_monomial(const char* what) const {
  if (!basis_.is_monomial()) {
    throw DomainError(std::string("cannot ") + what + " a polynomial in the " +
                      basis_.describe() + " basis");
  }
}

void Polynomial::require_same_basis(const Polynomial& other) const {
  if (!(basis_ == other.basis_)) {
    throw DomainError("basis mismatch: " + basis_.describe() + " vs " + other.basis_.describe());
  }
}

}  // namespace isospec
