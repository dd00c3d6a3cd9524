#pragma once

#include <optional>
#include <string_view>

#include "isospec/polynomial.hpp"

namespace isospec::oracles {

enum class Family { kHermite, kLaguerre, kLegendre, kJacobi, kHahn, kMeixner, kCharlier };

std::optional<Family> parse_family(std::string_view name);

// Change of variable x -> sign * x + shift applied to the reference member
// before comparison.
struct AffineMap {
  int sign = 1;
  Scalar shift = 0;
};

// Conventions: Hahn h_k^(alpha,beta)(x, N) on x = 0..N-1, i.e. the 3F2 form
// Q_k(x; beta, alpha, N-1); Meixner 2F1(-k, -x; gamma; 1 - 1/mu); Charlier
// 2F0(-k, -x; ; -1/mu); Hermite, Laguerre, Legendre, Jacobi in their textbook
// normalizations.
struct FamilySpec {
  Family family = Family::kHermite;
  Scalar alpha = 0, beta = 0;
  Scalar gamma = 1, mu = 1;
  int N = 1;
  AffineMap variable;
};

// Member of degree k by explicit hypergeometric-type sum (no recurrence).
// Throws DomainError for k outside the family's range or inadmissible
// parameters.
Polynomial reference_polynomial(const FamilySpec& spec, int k);

// Residual of the family's three-term recurrence in the degree at k >= 1;
// zero iff the recurrence holds. Hahn needs k < N-1.
Polynomial recurrence_residual(const FamilySpec& spec, int k);

// p = c q for some nonzero rational c. Both zero counts as equal; zero against
// nonzero does not.
bool projective_equal(const Polynomial& p, const Polynomial& q);

}  // namespace isospec::oracles
