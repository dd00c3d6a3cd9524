#include "isospec/spectral.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "isospec/errors.hpp"

namespace isospec {

bool OperatorMatrix::is_upper_triangular() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (entries[i][j] != 0) return false;
    }
  }
  return true;
}

std::vector<Scalar> OperatorMatrix::diagonal() const {
  std::vector<Scalar> d;
  for (std::size_t i = 0; i < entries.size(); ++i) d.push_back(entries[i][i]);
  return d;
}

PolynomialMap continuum_action(const AlgebraElement& e) {
  return [e](const Polynomial& p) { return apply_continuum(e, p); };
}

PolynomialMap lattice_action(const ShiftOperator& s) {
  return [s](const Polynomial& p) { return apply_lattice(s, p); };
}

OperatorMatrix matrix_on_basis(const PolynomialMap& action, const BasisTag& basis, int d,
                               Closure closure) {
  if (d < 0) throw DomainError("degree bound must be non-negative");
  OperatorMatrix m;
  m.basis = basis;
  m.degree_bound = d;
  const auto size = static_cast<std::size_t>(d) + 1;
  m.entries.assign(size, std::vector<Scalar>(size));
  for (int j = 0; j <= d; ++j) {
    const Polynomial input = convert_basis(Polynomial::basis_element(j, basis), BasisTag::monomial());
    const Polynomial image = convert_basis(action(input), basis);
    if (image.degree() > d) {
      if (closure == Closure::kRequire) {
        throw DomainError("operator does not preserve degree <= " + std::to_string(d) +
                          ": basis element of degree " + std::to_string(j) +
                          " maps to degree " + std::to_string(image.degree()));
      }
      if (!m.overflow) m.overflow_degree = j;
      m.overflow = true;
    }
    for (int i = 0; i <= std::min(d, image.degree()); ++i) {
      m.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = image.coefficient(i);
    }
  }
  return m;
}

Polynomial char_poly(const OperatorMatrix& m) {
  const std::size_t n = m.size();
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
  std::vector<std::vector<Scalar>> acc(n, std::vector<Scalar>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<Scalar>> next(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Scalar s = 0;
        for (std::size_t l = 0; l < n; ++l) s += m.entries[i][l] * acc[l][j];
        next[i][j] = s;
      }
      next[i][i] += c[n - k + 1];
    }
    acc = std::move(next);
    Scalar trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace += m.entries[i][l] * acc[l][i];
    }
    c[n - k] = -trace / static_cast<long>(k);
  }
  return Polynomial(std::move(c));
}

namespace {

std::optional<std::string> degeneracy(const OperatorMatrix& m) {
  const auto diag = m.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[i] == diag[j]) {
        return "degenerate spectrum: diagonal entries " + std::to_string(i) + " and " +
               std::to_string(j) + " both equal " + to_string(diag[i]);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Eigenpair> eigenpairs_triangular(const OperatorMatrix& m) {
  if (!m.is_upper_triangular()) throw DomainError("matrix is not upper triangular");
  if (auto why = degeneracy(m)) throw DomainError(*why);
  std::vector<Eigenpair> pairs;
  for (std::size_t k = 0; k < m.size(); ++k) {
    const Scalar& lambda = m.at(k, k);
    std::vector<Scalar> v(k + 1);
    v[k] = 1;
    for (std::size_t i = k; i-- > 0;) {
      Scalar s = 0;
      for (std::size_t j = i + 1; j <= k; ++j) s += m.at(i, j) * v[j];
      v[i] = -s / (m.at(i, i) - lambda);
    }
    pairs.push_back({lambda, Polynomial(std::move(v), m.basis)});
  }
  return pairs;
}

SpectralReport spectral_report(const OperatorMatrix& m) {
  SpectralReport r;
  r.matrix = m;
  r.char_poly = char_poly(m);
  r.triangular = m.is_upper_triangular();
  if (m.overflow) {
    r.warning = "image of the degree " + std::to_string(m.overflow_degree) +
                " basis element leaves the space; matrix is a truncation";
  } else if (!r.triangular) {
    r.warning = "matrix is not triangular; eigenpairs omitted";
  } else if (auto why = degeneracy(m)) {
    r.warning = *why + "; eigenpairs omitted";
  } else {
    r.eigenpairs = eigenpairs_triangular(m);
  }
  if (r.triangular) r.notes.push_back("eigenvalues are the diagonal entries in degree order");
  return r;
}

namespace {

bool is_hermite(const AlgebraElement& e) {
  return e == build_E2(preset_classical(ClassicalFamily::kHermite));
}

}  // namespace

IsospectralityCertificate isospectral_check(const AlgebraElement& e, const GridStep& step, int d) {
  const OperatorMatrix continuum = matrix_on_basis(continuum_action(e), BasisTag::monomial(), d);
  const OperatorMatrix lattice =
      matrix_on_basis(lattice_action(realize_lattice(e, step)), BasisTag::quasi(step), d);
  IsospectralityCertificate cert{char_poly(continuum), char_poly(lattice), false, step, d, {}};
  cert.verdict = cert.continuum_char_poly == cert.lattice_char_poly;
  if (is_hermite(e)) {
    cert.notes.push_back(
        "h = d^2/dx^2 - 2x d/dx has eigenvalue -2k at degree k; the +2k convention belongs to -h. "
        "Signs are reported as computed.");
  }
  return cert;
}

Polynomial substitute_quasi(const Polynomial& p, const GridStep& step) {
  if (!p.basis().is_monomial()) throw DomainError("substitute_quasi expects a monomial-basis input");
  return p.retagged(BasisTag::quasi(step));
}

Stencil stencil_extract(const ShiftOperator& s) {
  Stencil st;
  for (const auto& [k, p] : s.terms()) {
    st.points.push_back(k);
    st.coeffs.push_back(p);
  }
  return st;
}

std::vector<Scalar> default_grid(const GridStep& step) {
  std::vector<Scalar> grid;
  for (int j = -10; j <= 10; ++j) grid.push_back(step.value() * j);
  return grid;
}

bool verify_pointwise(const ShiftOperator& s, const Polynomial& phi, const Scalar& lambda,
                      std::span<const Scalar> grid) {
  const Polynomial f = convert_basis(phi, BasisTag::monomial());
  const Polynomial residual = apply_lattice(s, f) - f * lambda;
  for (const Scalar& x : grid) {
    if (residual.evaluate(x) != 0) return false;
  }
  return residual.is_zero();
}

bool verify_pointwise(const ShiftOperator& s, const Polynomial& phi, const Scalar& lambda) {
  const auto grid = default_grid(s.step());
  return verify_pointwise(s, phi, lambda, grid);
}

std::vector<FamilyMember> discrete_family(ClassicalFamily family, const GridStep& step, int k_max,
                                          const Scalar& alpha, const Scalar& beta) {
  if (k_max < 0) throw DomainError("k_max must be non-negative");
  const AlgebraElement e = build_E2(preset_classical(family, alpha, beta));
  const OperatorMatrix continuum = matrix_on_basis(continuum_action(e), BasisTag::monomial(), k_max);
  const ShiftOperator lattice = realize_lattice(e, step);
  std::vector<FamilyMember> members;
  for (auto& [lambda, phi] : eigenpairs_triangular(continuum)) {
    FamilyMember m;
    m.k = phi.degree();
    m.eigenvalue = lambda;
    m.continuum = phi * classical_leading_coefficient(family, m.k, alpha, beta);
    m.discrete = substitute_quasi(m.continuum, step);
    m.expanded = convert_basis(m.discrete, BasisTag::monomial());
    m.verified = verify_pointwise(lattice, m.discrete, lambda);
    members.push_back(std::move(m));
  }
  return members;
}

namespace {

SubspaceReport subspace_report(const PolynomialMap& action, int n) {
  if (n < 0) throw DomainError("subspace dimension index must be non-negative");
  SubspaceReport r;
  r.block = matrix_on_basis(action, BasisTag::monomial(), n, Closure::kReport);
  r.closed = !r.block.overflow;
  r.offending_degree = r.block.overflow_degree;
  if (r.closed) r.char_poly = char_poly(r.block);
  return r;
}

}  // namespace

SubspaceReport invariant_subspace_check(const AlgebraElement& e, int n) {
  return subspace_report(continuum_action(e), n);
}

SubspaceReport invariant_subspace_check(const ShiftOperator& s, int n) {
  return subspace_report(lattice_action(s), n);
}

}  // namespace isospec
