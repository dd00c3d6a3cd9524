#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isospec/heisenberg.hpp"
#include "isospec/operators.hpp"
#include "isospec/polynomial.hpp"
#include "isospec/representations.hpp"

namespace isospec {

// Restriction of an operator to polynomials of degree <= d in a graded basis.
// Column j holds the expansion of the image of basis element j, so entry
// (i, j) is the coefficient of basis element i. A degree non-increasing
// operator gives an upper triangular matrix.
struct OperatorMatrix {
  BasisTag basis = BasisTag::monomial();
  int degree_bound = 0;
  std::vector<std::vector<Scalar>> entries;  // row-major, (d+1) x (d+1)
  // Set when some image left the space; entries then hold the truncation.
  bool overflow = false;
  int overflow_degree = -1;

  std::size_t size() const { return entries.size(); }
  const Scalar& at(std::size_t row, std::size_t col) const { return entries[row][col]; }
  bool is_upper_triangular() const;
  std::vector<Scalar> diagonal() const;

  friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;
};

// Maps monomial-basis polynomials to monomial-basis polynomials.
using PolynomialMap = std::function<Polynomial(const Polynomial&)>;

PolynomialMap continuum_action(const AlgebraElement& e);
PolynomialMap lattice_action(const ShiftOperator& s);

enum class Closure { kReport, kRequire };

// With Closure::kRequire an image of degree > d throws DomainError naming the
// offending degree; with kReport the overflow flag is set instead.
OperatorMatrix matrix_on_basis(const PolynomialMap& action, const BasisTag& basis, int d,
                               Closure closure = Closure::kRequire);

// Monic det(lambda I - M), monomial basis in lambda (Faddeev-LeVerrier; every
// division is by an integer so the recurrence stays exact).
Polynomial char_poly(const OperatorMatrix& m);

struct Eigenpair {
  Scalar eigenvalue;
  Polynomial eigenfunction;  // in the matrix basis, leading coefficient 1
};

// Back-substitution on an upper triangular matrix with pairwise distinct
// diagonal. Throws DomainError when the matrix is not triangular or two
// diagonal entries coincide.
std::vector<Eigenpair> eigenpairs_triangular(const OperatorMatrix& m);

struct SpectralReport {
  OperatorMatrix matrix;
  Polynomial char_poly;
  std::optional<std::vector<Eigenpair>> eigenpairs;
  bool triangular = false;
  std::vector<std::string> notes;
  std::optional<std::string> warning;
};

SpectralReport spectral_report(const OperatorMatrix& m);

struct IsospectralityCertificate {
  Polynomial continuum_char_poly;
  Polynomial lattice_char_poly;
  bool verdict = false;
  GridStep step;
  int degree_bound = 0;
  std::vector<std::string> notes;
};

// Continuum matrix in monomials against lattice matrix in quasi-monomials of
// the same step; verdict is exact equality of the characteristic polynomials.
IsospectralityCertificate isospectral_check(const AlgebraElement& e, const GridStep& step, int d);

// Same coefficients, read against x^(k) instead of x^k.
Polynomial substitute_quasi(const Polynomial& p, const GridStep& step);

struct Stencil {
  std::vector<int> points;
  std::vector<Polynomial> coeffs;
};

Stencil stencil_extract(const ShiftOperator& s);

// {j delta : j = -10..10}.
std::vector<Scalar> default_grid(const GridStep& step);

// (s phi)(x) = lambda phi(x) at every grid point and as a polynomial identity.
bool verify_pointwise(const ShiftOperator& s, const Polynomial& phi, const Scalar& lambda,
                      std::span<const Scalar> grid);
bool verify_pointwise(const ShiftOperator& s, const Polynomial& phi, const Scalar& lambda);

struct FamilyMember {
  int k = 0;
  Scalar eigenvalue;
  Polynomial continuum;  // textbook normalization, monomial basis
  Polynomial discrete;   // same coefficients on x^(k)
  Polynomial expanded;   // discrete member re-expressed in monomials
  bool verified = false;
};

// Discrete counterparts of a classical family on the lattice of the given
// step, degrees 0..k_max.
std::vector<FamilyMember> discrete_family(ClassicalFamily family, const GridStep& step, int k_max,
                                          const Scalar& alpha = 0, const Scalar& beta = 0);

struct SubspaceReport {
  bool closed = false;
  int offending_degree = -1;  // first basis degree whose image leaves the space
  OperatorMatrix block;
  Polynomial char_poly;
};

// Whether polynomials of degree <= n are mapped into themselves.
SubspaceReport invariant_subspace_check(const AlgebraElement& e, int n);
SubspaceReport invariant_subspace_check(const ShiftOperator& s, int n);

}  // namespace isospec
