#pragma once

#include <optional>
#include <string_view>

#include "isospec/heisenberg.hpp"
#include "isospec/representations.hpp"

namespace isospec {

// E2 = -Q2 d^2/dx^2 + Q1 d/dx + Q0 with Q2 = a0 x^2 + a1 x + a2,
// Q1 = b0 x + b1, Q0 = c0.
struct E2Params {
  Scalar a0, a1, a2, b0, b1, c0;
};

AlgebraElement build_E2(const E2Params& p);

enum class ClassicalFamily { kHermite, kLaguerre, kLegendre, kJacobi };

std::optional<ClassicalFamily> parse_classical_family(std::string_view name);
std::string_view name_of(ClassicalFamily family);

// E2 parameters whose polynomial eigenfunctions are the named family. alpha is
// used by laguerre and jacobi, beta by jacobi; both must exceed -1.
E2Params preset_classical(ClassicalFamily family, const Scalar& alpha = 0,
                          const Scalar& beta = 0);

// Leading coefficient of the textbook normalization of the degree-k member
// (2^k for Hermite, (-1)^k/k! for Laguerre, ...).
Scalar classical_leading_coefficient(ClassicalFamily family, int k,
                                     const Scalar& alpha = 0, const Scalar& beta = 0);

// Three-point family
//   A1 J0 J0 (J- + 1/delta) + A2 J0 J- + A3 J0 + A4 J- + A5
// with J0 = b a and J- = a realized on the lattice of step delta.
struct ThreePointParams {
  Scalar A1, A2, A3, A4, A5;
  GridStep step;
};

AlgebraElement three_point_element(const ThreePointParams& p);
ShiftOperator build_three_point(const ThreePointParams& p);

enum class DiscreteFamily { kHahn, kHahnContinued, kMeixner, kCharlier };

std::optional<DiscreteFamily> parse_discrete_family(std::string_view name);
std::string_view name_of(DiscreteFamily family);

struct DiscreteParams {
  Scalar alpha = 0, beta = 0;  // hahn
  Scalar mu = 1, nu = 0;       // hahn_continued (mu, nu); meixner, charlier (mu)
  Scalar gamma = 1;            // meixner
  int N = 1;                   // hahn, hahn_continued
};

// kPrinted is the original assignment taken as stated (delta = -1 for both Hahn
// variants, A2 = -mu for Meixner). kVerified is the assignment whose
// eigenvectors reproduce the reference families: delta = +1 for Hahn and
// A2 = +mu for Meixner. Charlier is the same under both.
enum class PresetConvention { kPrinted, kVerified };

std::optional<PresetConvention> parse_convention(std::string_view name);

ThreePointParams preset_discrete(DiscreteFamily family, const DiscreteParams& params,
                                 PresetConvention convention = PresetConvention::kPrinted);

// Quadratic form in the spin-n generators:
//   sum_{i<=j} c_ij J_i J_j + c_+ J+ + c_0 J0 + c_- J- + c
// over the ordering (+, 0, -).
struct QesQuadraticForm {
  int n = 0;
  Scalar pp, p0, pm, zz, zm, mm;
  Scalar p, z, m, c;
};

AlgebraElement build_T2_qes(const QesQuadraticForm& q);

// A+ (J+ + delta J0 J0) + A1 J0 J0 (J- + 1/delta) + A2 J0 J- + A3 J0 + A4 J- + A5
// with spin-n generators.
AlgebraElement t_tilde_element(const Scalar& a_plus, const ThreePointParams& p, int n);
ShiftOperator build_T_tilde_qes(const Scalar& a_plus, const ThreePointParams& p, int n);

}  // namespace isospec
