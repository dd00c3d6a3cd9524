#include "doctest.h"

#include "isospec/errors.hpp"
#include "isospec/oracles.hpp"
#include "test_support.hpp"

using namespace isospec;
using namespace isospec::oracles;
using namespace testing_support;

namespace {

FamilySpec spec_of(Family f) {
  FamilySpec s;
  s.family = f;
  return s;
}

// Exact integral of p over [-1, 1].
Scalar integrate_symmetric(const Polynomial& p) {
  Scalar acc = 0;
  for (int k = 0; k <= p.degree(); k += 2) acc += p.coefficient(k) * Scalar(2, k + 1);
  return acc;
}

Scalar generalized_binomial(const Scalar& top, int k) {
  Scalar r = 1;
  for (int i = 0; i < k; ++i) r = r * (top - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("textbook low-degree members") {
  CHECK(reference_polynomial(spec_of(Family::kHermite), 3) == poly({0, -12, 0, 8}));
  CHECK(reference_polynomial(spec_of(Family::kLaguerre), 2) == poly({1, -2, q(1, 2)}));
  CHECK(reference_polynomial(spec_of(Family::kLegendre), 3) == poly({0, q(-3, 2), 0, q(5, 2)}));

  FamilySpec jac = spec_of(Family::kJacobi);
  jac.alpha = 1;
  jac.beta = 2;
  // P_1^(a,b)(x) = (a - b)/2 + (a + b + 2) x / 2
  CHECK(reference_polynomial(jac, 1) == poly({q(-1, 2), q(5, 2)}));
  jac.alpha = 0;
  jac.beta = 0;
  CHECK(reference_polynomial(jac, 3) == reference_polynomial(spec_of(Family::kLegendre), 3));

  FamilySpec ch = spec_of(Family::kCharlier);
  ch.mu = 1;
  CHECK(reference_polynomial(ch, 1) == poly({1, -1}));
  ch.mu = 3;
  CHECK(reference_polynomial(ch, 1) == poly({1, q(-1, 3)}));

  FamilySpec mx = spec_of(Family::kMeixner);
  mx.mu = q(1, 2);
  mx.gamma = 2;
  // 1 + x (1 - 1/mu) / gamma
  CHECK(reference_polynomial(mx, 1) == poly({1, q(-1, 2)}));

  FamilySpec hh = spec_of(Family::kHahn);
  hh.alpha = 1;
  hh.beta = 2;
  hh.N = 5;
  // 1 - (a + b + 2) x / ((a + 1) M) with a = beta, b = alpha, M = N - 1
  CHECK(reference_polynomial(hh, 1) == poly({1, q(-5, 12)}));

  for (Family f : {Family::kHermite, Family::kLaguerre, Family::kLegendre, Family::kCharlier}) {
    CHECK(reference_polynomial(spec_of(f), 0) == poly({1}));
  }
}

TEST_CASE("three-term recurrences hold") {
  FamilySpec specs[] = {spec_of(Family::kHermite), spec_of(Family::kLaguerre), spec_of(Family::kLegendre),
                        spec_of(Family::kJacobi),  spec_of(Family::kHahn),     spec_of(Family::kMeixner),
                        spec_of(Family::kCharlier)};
  specs[1].alpha = q(3, 2);
  specs[3].alpha = q(1, 3);
  specs[3].beta = 2;
  specs[4].alpha = 1;
  specs[4].beta = 2;
  specs[4].N = 10;
  specs[5].gamma = q(5, 2);
  specs[5].mu = q(1, 3);
  specs[6].mu = q(7, 4);
  for (const auto& s : specs) {
    const int top = s.family == Family::kHahn ? s.N - 2 : 8;
    for (int k = 1; k <= top; ++k) {
      CAPTURE(k);
      CHECK(recurrence_residual(s, k).is_zero());
    }
  }
  CHECK_THROWS_AS(recurrence_residual(specs[0], 0), DomainError);
  CHECK_THROWS_AS(recurrence_residual(specs[4], 9), DomainError);
}

TEST_CASE("Legendre and Jacobi orthogonality by exact integration") {
  const FamilySpec leg = spec_of(Family::kLegendre);
  for (int m = 0; m <= 7; ++m) {
    for (int n = 0; n <= 7; ++n) {
      const Scalar ip = integrate_symmetric(reference_polynomial(leg, m) * reference_polynomial(leg, n));
      if (m == n) {
        CHECK(ip == Scalar(2, 2 * n + 1));
      } else {
        CHECK(ip == 0);
      }
    }
  }
  // Gegenbauer-type weight (1 - x^2) for alpha = beta = 1.
  FamilySpec jac = spec_of(Family::kJacobi);
  jac.alpha = 1;
  jac.beta = 1;
  const Polynomial w = poly({1, 0, -1});
  for (int m = 0; m <= 6; ++m) {
    for (int n = m + 1; n <= 6; ++n) {
      CHECK(integrate_symmetric(w * reference_polynomial(jac, m) * reference_polynomial(jac, n)) == 0);
    }
  }
}

TEST_CASE("Hahn orthogonality on the finite lattice") {
  FamilySpec s = spec_of(Family::kHahn);
  s.alpha = q(1, 2);
  s.beta = 2;
  s.N = 7;
  const int M = s.N - 1;
  // Weight for Q_n(x; a, b, M) with a = beta, b = alpha.
  const Scalar a = s.beta, b = s.alpha;
  for (int m = 0; m <= M; ++m) {
    for (int n = m + 1; n <= M; ++n) {
      const Polynomial pm = reference_polynomial(s, m), pn = reference_polynomial(s, n);
      Scalar acc = 0;
      for (int x = 0; x <= M; ++x) {
        acc += generalized_binomial(a + x, x) * generalized_binomial(b + M - x, M - x) * pm.evaluate(x) *
               pn.evaluate(x);
      }
      CHECK(acc == 0);
    }
  }
  CHECK_THROWS_AS(reference_polynomial(s, s.N), DomainError);
}

TEST_CASE("Hermite orthogonality via Gaussian moments") {
  // Moments of exp(-x^2) up to sqrt(pi): (2j - 1)!! / 2^j.
  auto moment = [](int k) {
    if (k % 2 == 1) return Scalar(0);
    Scalar r = 1;
    for (int i = 1; i < k; i += 2) r *= Scalar(i, 2);
    return r;
  };
  const FamilySpec h = spec_of(Family::kHermite);
  for (int m = 0; m <= 6; ++m) {
    for (int n = m + 1; n <= 6; ++n) {
      const Polynomial prod = reference_polynomial(h, m) * reference_polynomial(h, n);
      Scalar acc = 0;
      for (int k = 0; k <= prod.degree(); ++k) acc += prod.coefficient(k) * moment(k);
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("Charlier duality") {
  // C_n(x; mu) = C_x(n; mu) for non-negative integers.
  FamilySpec s = spec_of(Family::kCharlier);
  s.mu = q(5, 3);
  for (int n = 0; n <= 6; ++n) {
    for (int x = 0; x <= 6; ++x) {
      CHECK(reference_polynomial(s, n).evaluate(x) == reference_polynomial(s, x).evaluate(n));
    }
  }
}

TEST_CASE("affine change of variable") {
  FamilySpec s = spec_of(Family::kHermite);
  s.variable = AffineMap{-1, 2};
  // H_1(-x + 2) = -2x + 4
  CHECK(reference_polynomial(s, 1) == poly({4, -2}));
  const Polynomial h3 = reference_polynomial(spec_of(Family::kHermite), 3);
  const Polynomial mapped = reference_polynomial(s, 3);
  for (int x = -3; x <= 3; ++x) CHECK(mapped.evaluate(x) == h3.evaluate(Scalar(-x + 2)));
}

TEST_CASE("projective_equal") {
  CHECK(projective_equal(poly({1, 2}), poly({q(-1, 2), -1})));
  CHECK_FALSE(projective_equal(poly({1, 2}), poly({1, 3})));
  CHECK_FALSE(projective_equal(poly({1, 2}), poly({1, 2, 1})));
  CHECK(projective_equal(Polynomial(), Polynomial()));
  CHECK_FALSE(projective_equal(Polynomial(), poly({1})));
  CHECK_THROWS_AS(projective_equal(poly({1, 1}), Polynomial({1, 1}, BasisTag::quasi(GridStep(1)))), DomainError);
}

TEST_CASE("inadmissible parameters") {
  FamilySpec s = spec_of(Family::kCharlier);
  s.mu = 0;
  CHECK_THROWS_AS(reference_polynomial(s, 1), DomainError);
  FamilySpec m = spec_of(Family::kMeixner);
  m.gamma = 0;
  CHECK_THROWS_AS(reference_polynomial(m, 1), DomainError);
  CHECK_THROWS_AS(reference_polynomial(spec_of(Family::kHermite), -1), DomainError);
  CHECK(parse_family("meixner") == Family::kMeixner);
  CHECK_FALSE(parse_family("krawtchouk").has_value());
}
