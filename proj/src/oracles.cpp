#include "isospec/oracles.hpp"

#include <string>

#include "isospec/errors.hpp"

namespace isospec::oracles {
namespace {

const Polynomial kX({Scalar(0), Scalar(1)});

Polynomial linear(const Scalar& slope, const Scalar& intercept) {
  return Polynomial({intercept, slope});
}

Polynomial pow(const Polynomial& p, int n) {
  Polynomial r = Polynomial::constant(1);
  for (int i = 0; i < n; ++i) r = r * p;
  return r;
}

// (-x)_j = (-x)(-x+1)...(-x+j-1)
Polynomial falling_neg_x(int j) {
  Polynomial r = Polynomial::constant(1);
  for (int i = 0; i < j; ++i) r = r * linear(-1, i);
  return r;
}

Scalar nonzero(const Scalar& v, const char* what) {
  if (v == 0) throw DomainError(std::string("inadmissible parameters: ") + what + " vanishes");
  return v;
}

Polynomial hermite(int n) {
  Polynomial r;
  for (int m = 0; 2 * m <= n; ++m) {
    Scalar c = Scalar(factorial(n)) / (Scalar(factorial(m)) * Scalar(factorial(n - 2 * m)));
    if (m % 2 == 1) c = -c;
    r += pow(linear(2, 0), n - 2 * m) * c;
  }
  return r;
}

Polynomial laguerre(int n, const Scalar& alpha) {
  Polynomial r;
  for (int i = 0; i <= n; ++i) {
    Scalar c = binomial(Scalar(n + alpha), static_cast<unsigned long>(n - i)) / Scalar(factorial(i));
    if (i % 2 == 1) c = -c;
    r += pow(kX, i) * c;
  }
  return r;
}

Polynomial legendre(int n) {
  Polynomial r;
  for (int k = 0; 2 * k <= n; ++k) {
    Scalar c = Scalar(binomial(n, k) * binomial(2 * n - 2 * k, n)) / power(Scalar(2), n);
    if (k % 2 == 1) c = -c;
    r += pow(kX, n - 2 * k) * c;
  }
  return r;
}

Polynomial jacobi(int n, const Scalar& alpha, const Scalar& beta) {
  const Polynomial minus = linear(Scalar(1, 2), Scalar(-1, 2));
  const Polynomial plus = linear(Scalar(1, 2), Scalar(1, 2));
  Polynomial r;
  for (int s = 0; s <= n; ++s) {
    const Scalar c = binomial(Scalar(n + alpha), static_cast<unsigned long>(n - s)) *
                     binomial(Scalar(n + beta), static_cast<unsigned long>(s));
    r += pow(minus, s) * pow(plus, n - s) * c;
  }
  return r;
}

// Q_k(x; a, b, M) = 3F2(-k, k+a+b+1, -x; a+1, -M; 1)
Polynomial hahn(int k, const Scalar& a, const Scalar& b, int M) {
  if (k > M) {
    throw DomainError("hahn degree " + std::to_string(k) + " exceeds N-1 = " + std::to_string(M));
  }
  Polynomial r;
  for (int j = 0; j <= k; ++j) {
    const Scalar num = pochhammer(Scalar(-k), j) * pochhammer(Scalar(k + a + b + 1), j);
    const Scalar den = nonzero(pochhammer(Scalar(a + 1), j), "(beta+1)_j") *
                       nonzero(pochhammer(Scalar(-M), j), "(-N+1)_j") * Scalar(factorial(j));
    r += falling_neg_x(j) * Scalar(num / den);
  }
  return r;
}

// M_k(x; g, c) = 2F1(-k, -x; g; 1 - 1/c)
Polynomial meixner(int k, const Scalar& g, const Scalar& c) {
  const Scalar z = 1 - 1 / nonzero(c, "mu");
  Polynomial r;
  for (int j = 0; j <= k; ++j) {
    const Scalar term = pochhammer(Scalar(-k), j) * power(z, j) /
                        (nonzero(pochhammer(g, j), "(gamma)_j") * Scalar(factorial(j)));
    r += falling_neg_x(j) * term;
  }
  return r;
}

// C_k(x; a) = 2F0(-k, -x; ; -1/a)
Polynomial charlier(int k, const Scalar& a) {
  const Scalar z = -1 / nonzero(a, "mu");
  Polynomial r;
  for (int j = 0; j <= k; ++j) {
    r += falling_neg_x(j) * Scalar(pochhammer(Scalar(-k), j) * power(z, j) / Scalar(factorial(j)));
  }
  return r;
}

Polynomial native(const FamilySpec& f, int k) {
  if (k < 0) throw DomainError("degree must be non-negative");
  switch (f.family) {
    case Family::kHermite: return hermite(k);
    case Family::kLaguerre: return laguerre(k, f.alpha);
    case Family::kLegendre: return legendre(k);
    case Family::kJacobi: return jacobi(k, f.alpha, f.beta);
    case Family::kHahn: return hahn(k, f.beta, f.alpha, f.N - 1);
    case Family::kMeixner: return meixner(k, f.gamma, f.mu);
    case Family::kCharlier: return charlier(k, f.mu);
  }
  throw DomainError("unknown family");
}

// p(sign x + shift)
Polynomial substitute(const Polynomial& p, const AffineMap& map) {
  std::vector<Scalar> c = p.coeffs();
  if (map.sign < 0) {
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  }
  return Polynomial(std::move(c)).shifted(map.shift * map.sign);
}

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
  if (name == "hermite") return Family::kHermite;
  if (name == "laguerre") return Family::kLaguerre;
  if (name == "legendre") return Family::kLegendre;
  if (name == "jacobi") return Family::kJacobi;
  if (name == "hahn") return Family::kHahn;
  if (name == "meixner") return Family::kMeixner;
  if (name == "charlier") return Family::kCharlier;
  return std::nullopt;
}

Polynomial reference_polynomial(const FamilySpec& spec, int k) {
  return substitute(native(spec, k), spec.variable);
}

Polynomial recurrence_residual(const FamilySpec& f, int k) {
  if (k < 1) throw DomainError("recurrence needs k >= 1");
  const Polynomial prev = native(f, k - 1);
  const Polynomial cur = native(f, k);
  switch (f.family) {
    case Family::kHermite:
      return native(f, k + 1) - kX * cur * Scalar(2) + prev * Scalar(2 * k);
    case Family::kLaguerre:
      return native(f, k + 1) * Scalar(k + 1) - linear(-1, 2 * k + f.alpha + 1) * cur +
             prev * Scalar(k + f.alpha);
    case Family::kLegendre:
      return native(f, k + 1) * Scalar(k + 1) - kX * cur * Scalar(2 * k + 1) + prev * Scalar(k);
    case Family::kJacobi: {
      const int n = k + 1;
      const Scalar s = f.alpha + f.beta;
      const Polynomial middle =
          linear((2 * n + s) * (2 * n + s - 2), f.alpha * f.alpha - f.beta * f.beta) *
          Scalar(2 * n + s - 1);
      return native(f, n) * Scalar(2 * n * (n + s) * (2 * n + s - 2)) - middle * cur +
             prev * Scalar(2 * (n + f.alpha - 1) * (n + f.beta - 1) * (2 * n + s));
    }
    case Family::kHahn: {
      const Scalar a = f.beta, b = f.alpha;
      const int M = f.N - 1;
      // At k = M the recurrence only holds on the lattice points.
      if (k >= M) throw DomainError("hahn recurrence needs k < N-1 = " + std::to_string(M));
      const Scalar A = (k + a + b + 1) * (k + a + 1) * (M - k) /
                       ((2 * k + a + b + 1) * (2 * k + a + b + 2));
      const Scalar C = k * (k + a + b + M + 1) * (k + b) / ((2 * k + a + b) * (2 * k + a + b + 1));
      return kX * cur * Scalar(-1) - (native(f, k + 1) * A - cur * Scalar(A + C) + prev * C);
    }
    case Family::kMeixner: {
      const Scalar& c = f.mu;
      const Scalar& b = f.gamma;
      return kX * cur * Scalar(c - 1) -
             (native(f, k + 1) * Scalar(c * (k + b)) - cur * Scalar(k + (k + b) * c) + prev * Scalar(k));
    }
    case Family::kCharlier:
      return kX * cur * Scalar(-1) -
             (native(f, k + 1) * f.mu - cur * Scalar(k + f.mu) + prev * Scalar(k));
  }
  throw DomainError("unknown family");
}

bool projective_equal(const Polynomial& p, const Polynomial& q) {
  if (!(p.basis() == q.basis()) && !p.is_zero() && !q.is_zero()) {
    throw DomainError("projective comparison across different bases");
  }
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  if (p.degree() != q.degree()) return false;
  return p == q * Scalar(p.leading() / q.leading());
}

}  // namespace isospec::oracles
