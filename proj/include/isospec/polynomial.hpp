#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isospec/scalar.hpp"

namespace isospec {

// Lattice spacing delta. Never zero: the continuum is a separate
// representation, not a limit.
class GridStep {
 public:
  explicit GridStep(Scalar value);

  const Scalar& value() const { return value_; }

  friend bool operator==(const GridStep&, const GridStep&) = default;

 private:
  Scalar value_;
};

// Which graded basis a coefficient vector refers to: monomials x^k or
// quasi-monomials x^(k) = x(x - delta)...(x - (k-1) delta).
class BasisTag {
 public:
  static BasisTag monomial() { return BasisTag(); }
  static BasisTag quasi(const GridStep& step) { return BasisTag(step); }

  bool is_monomial() const { return !step_.has_value(); }
  bool is_quasi() const { return step_.has_value(); }
  // Throws DomainError for the monomial basis.
  const GridStep& step() const;
  std::string describe() const;

  friend bool operator==(const BasisTag&, const BasisTag&) = default;

 private:
  BasisTag() = default;
  explicit BasisTag(const GridStep& step) : step_(step) {}

  std::optional<GridStep> step_;
};

// Dense coefficient vector indexed by degree. The highest stored coefficient
// is nonzero; the zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() : basis_(BasisTag::monomial()) {}
  explicit Polynomial(std::vector<Scalar> coeffs, BasisTag basis = BasisTag::monomial());

  static Polynomial constant(const Scalar& c, BasisTag basis = BasisTag::monomial());
  // The basis element of degree n (x^n, or x^(n) in a quasi basis).
  static Polynomial basis_element(int n, BasisTag basis = BasisTag::monomial());

  const BasisTag& basis() const { return basis_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  // Zero past the degree.
  Scalar coefficient(int k) const;
  const Scalar& leading() const;

  // Same coefficients, different basis. Not a change of basis.
  Polynomial retagged(const BasisTag& basis) const;

  // The following require the monomial basis.
  Scalar evaluate(const Scalar& x) const;
  Polynomial shifted(const Scalar& c) const;  // p(x + c)
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(Polynomial p, const Scalar& c) { return p *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial p) { return p *= c; }
  // Monomial basis only.
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Human-readable form in the polynomial's own basis, e.g. "4x^(2) - 2".
  std::string to_string(std::string_view variable = "x") const;

 private:
  void trim();
  void require_monomial(const char* what) const;
  void require_same_basis(const Polynomial& other) const;

  BasisTag basis_;
  std::vector<Scalar> coeffs_;
};

}  // namespace isospec
