#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "isospec/heisenberg.hpp"
#include "isospec/polynomial.hpp"

namespace isospec {

// Finite sum  sum_k p_k(x) S_k  where S_k f(x) = f(x + k delta) and the p_k
// are monomial-basis polynomials. Zero coefficients are not stored.
class ShiftOperator {
 public:
  using Terms = std::map<int, Polynomial>;

  explicit ShiftOperator(GridStep step) : step_(std::move(step)) {}
  ShiftOperator(GridStep step, const Terms& terms);

  static ShiftOperator identity(const GridStep& step);
  static ShiftOperator term(const GridStep& step, int shift, const Polynomial& coeff);

  const GridStep& step() const { return step_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Polynomial coefficient(int shift) const;

  // max k - min k; 0 for the zero operator.
  int width() const;
  std::size_t point_count() const { return terms_.size(); }

  ShiftOperator& operator+=(const ShiftOperator& other);
  ShiftOperator& operator-=(const ShiftOperator& other);
  ShiftOperator& operator*=(const Scalar& c);

  friend ShiftOperator operator+(ShiftOperator s, const ShiftOperator& t) { return s += t; }
  friend ShiftOperator operator-(ShiftOperator s, const ShiftOperator& t) { return s -= t; }
  friend ShiftOperator operator*(ShiftOperator s, const Scalar& c) { return s *= c; }
  friend ShiftOperator operator*(const Scalar& c, ShiftOperator s) { return s *= c; }
  friend ShiftOperator operator*(const ShiftOperator& s, const ShiftOperator& t);
  friend bool operator==(const ShiftOperator&, const ShiftOperator&) = default;

 private:
  void accumulate(int shift, const Polynomial& coeff);
  void require_same_step(const ShiftOperator& other) const;

  GridStep step_;
  Terms terms_;
};

// x^(n) expanded in monomials, by x^(k+1) = (x - k delta) x^(k).
Polynomial quasi_monomial(int n, const GridStep& step);

// Re-expresses p in the target basis. Throws DomainError when both bases are
// quasi-monomial with different steps.
Polynomial convert_basis(const Polynomial& p, const BasisTag& target);

// a = d/dx, b = x.
Polynomial apply_continuum(const AlgebraElement& e, const Polynomial& p);

// a = (S_1 - S_0)/delta, b = x S_{-1}.
ShiftOperator realize_lattice(const AlgebraElement& e, const GridStep& step);

// Skew product: S_k p(x) = p(x + k delta) S_k. Throws DomainError on a step
// mismatch.
ShiftOperator shift_compose(const ShiftOperator& s, const ShiftOperator& t);

// sum_k p_k(x) p(x + k delta); p is read in the monomial basis (a quasi-basis
// input is converted first) and the result is monomial.
Polynomial apply_lattice(const ShiftOperator& s, const Polynomial& p);

// b^n |0> with the vacuum f = 1, by n applications of the lattice b.
Polynomial fock_vector(int n, const GridStep& step);

}  // namespace isospec
