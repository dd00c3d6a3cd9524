#include "isospec/operators.hpp"

#include <string>

#include "isospec/errors.hpp"

namespace isospec {

AlgebraElement build_E2(const E2Params& p) {
  using W = AlgebraElement;
  return W::word(2, 2, -p.a0) + W::word(1, 2, -p.a1) + W::word(0, 2, -p.a2) +
         W::word(1, 1, p.b0) + W::word(0, 1, p.b1) + W::constant(p.c0);
}

std::optional<ClassicalFamily> parse_classical_family(std::string_view name) {
  if (name == "hermite") return ClassicalFamily::kHermite;
  if (name == "laguerre") return ClassicalFamily::kLaguerre;
  if (name == "legendre") return ClassicalFamily::kLegendre;
  if (name == "jacobi") return ClassicalFamily::kJacobi;
  return std::nullopt;
}

std::string_view name_of(ClassicalFamily family) {
  switch (family) {
    case ClassicalFamily::kHermite: return "hermite";
    case ClassicalFamily::kLaguerre: return "laguerre";
    case ClassicalFamily::kLegendre: return "legendre";
    case ClassicalFamily::kJacobi: return "jacobi";
  }
  return "";
}

namespace {

void require_above_minus_one(const Scalar& v, const char* name) {
  if (v <= -1) {
    throw DomainError(std::string(name) + " must exceed -1, got " + to_string(v));
  }
}

}  // namespace

// Signs follow E2 = -Q2 d^2 + Q1 d + Q0:
//   hermite   y'' - 2x y'                         = -2k y
//   laguerre  -x y'' + (x - alpha - 1) y'         = k y
//   legendre  (1 - x^2) y'' - 2x y'               = -k(k+1) y
//   jacobi    (1 - x^2) y'' + (beta - alpha - (alpha+beta+2) x) y'
//                                                 = -k(k+alpha+beta+1) y
E2Params preset_classical(ClassicalFamily family, const Scalar& alpha, const Scalar& beta) {
  switch (family) {
    case ClassicalFamily::kHermite:
      return E2Params{0, 0, -1, -2, 0, 0};
    case ClassicalFamily::kLaguerre:
      require_above_minus_one(alpha, "laguerre alpha");
      return E2Params{0, 1, 0, 1, Scalar(-alpha - 1), 0};
    case ClassicalFamily::kLegendre:
      return E2Params{1, 0, -1, -2, 0, 0};
    case ClassicalFamily::kJacobi:
      require_above_minus_one(alpha, "jacobi alpha");
      require_above_minus_one(beta, "jacobi beta");
      return E2Params{1, 0, -1, Scalar(-(alpha + beta + 2)), Scalar(beta - alpha), 0};
  }
  throw DomainError("unknown classical family");
}

Scalar classical_leading_coefficient(ClassicalFamily family, int k, const Scalar& alpha,
                                     const Scalar& beta) {
  const auto uk = static_cast<unsigned long>(k);
  switch (family) {
    case ClassicalFamily::kHermite:
      return power(Scalar(2), uk);
    case ClassicalFamily::kLaguerre:
      return Scalar(k % 2 == 0 ? 1 : -1) / Scalar(factorial(uk));
    case ClassicalFamily::kLegendre:
      return Scalar(factorial(2 * uk)) /
             (power(Scalar(2), uk) * Scalar(factorial(uk)) * Scalar(factorial(uk)));
    case ClassicalFamily::kJacobi:
      return pochhammer(alpha + beta + k + 1, uk) / (power(Scalar(2), uk) * Scalar(factorial(uk)));
  }
  return 0;
}

AlgebraElement three_point_element(const ThreePointParams& p) {
  const AlgebraElement j0 = sl2_generator(Sl2Kind::kZero, 0);
  const AlgebraElement jm = sl2_generator(Sl2Kind::kMinus, 0);
  const AlgebraElement closing = jm + AlgebraElement::constant(1 / p.step.value());
  return p.A1 * (j0 * j0 * closing) + p.A2 * (j0 * jm) + p.A3 * j0 + p.A4 * jm +
         AlgebraElement::constant(p.A5);
}

ShiftOperator build_three_point(const ThreePointParams& p) {
  return realize_lattice(three_point_element(p), p.step);
}

std::optional<DiscreteFamily> parse_discrete_family(std::string_view name) {
  if (name == "hahn") return DiscreteFamily::kHahn;
  if (name == "hahn_continued" || name == "hahn-continued") return DiscreteFamily::kHahnContinued;
  if (name == "meixner") return DiscreteFamily::kMeixner;
  if (name == "charlier") return DiscreteFamily::kCharlier;
  return std::nullopt;
}

std::string_view name_of(DiscreteFamily family) {
  switch (family) {
    case DiscreteFamily::kHahn: return "hahn";
    case DiscreteFamily::kHahnContinued: return "hahn_continued";
    case DiscreteFamily::kMeixner: return "meixner";
    case DiscreteFamily::kCharlier: return "charlier";
  }
  return "";
}

std::optional<PresetConvention> parse_convention(std::string_view name) {
  if (name == "printed") return PresetConvention::kPrinted;
  if (name == "verified") return PresetConvention::kVerified;
  return std::nullopt;
}

ThreePointParams preset_discrete(DiscreteFamily family, const DiscreteParams& params,
                                 PresetConvention convention) {
  const bool printed = convention == PresetConvention::kPrinted;
  const Scalar N(params.N);
  switch (family) {
    case DiscreteFamily::kHahn:
      if (params.N < 1) throw DomainError("hahn N must be a positive integer");
      return ThreePointParams{-1, Scalar(N - params.beta - 2), Scalar(-params.alpha - params.beta - 1),
                              Scalar((params.beta + 1) * (N - 1)), 0, GridStep(printed ? -1 : 1)};
    case DiscreteFamily::kHahnContinued:
      if (params.N < 1) throw DomainError("hahn_continued N must be a positive integer");
      return ThreePointParams{1, Scalar(2 - 2 * N - params.nu),
                              Scalar(1 - 2 * N - params.mu - params.nu),
                              Scalar((N + params.nu - 1) * (N - 1)), 0, GridStep(printed ? -1 : 1)};
    case DiscreteFamily::kMeixner:
      return ThreePointParams{0, printed ? Scalar(-params.mu) : params.mu, Scalar(params.mu - 1),
                              Scalar(params.gamma * params.mu), 0, GridStep(1)};
    case DiscreteFamily::kCharlier:
      return ThreePointParams{0, 0, -1, params.mu, 0, GridStep(1)};
  }
  throw DomainError("unknown discrete family");
}

AlgebraElement build_T2_qes(const QesQuadraticForm& q) {
  const AlgebraElement jp = sl2_generator(Sl2Kind::kPlus, q.n);
  const AlgebraElement j0 = sl2_generator(Sl2Kind::kZero, q.n);
  const AlgebraElement jm = sl2_generator(Sl2Kind::kMinus, q.n);
  return q.pp * (jp * jp) + q.p0 * (jp * j0) + q.pm * (jp * jm) + q.zz * (j0 * j0) +
         q.zm * (j0 * jm) + q.mm * (jm * jm) + q.p * jp + q.z * j0 + q.m * jm +
         AlgebraElement::constant(q.c);
}

AlgebraElement t_tilde_element(const Scalar& a_plus, const ThreePointParams& p, int n) {
  const AlgebraElement jp = sl2_generator(Sl2Kind::kPlus, n);
  const AlgebraElement j0 = sl2_generator(Sl2Kind::kZero, n);
  const AlgebraElement jm = sl2_generator(Sl2Kind::kMinus, n);
  const Scalar& delta = p.step.value();
  const AlgebraElement j0j0 = j0 * j0;
  return a_plus * (jp + delta * j0j0) +
         p.A1 * (j0j0 * (jm + AlgebraElement::constant(1 / delta))) + p.A2 * (j0 * jm) +
         p.A3 * j0 + p.A4 * jm + AlgebraElement::constant(p.A5);
}

ShiftOperator build_T_tilde_qes(const Scalar& a_plus, const ThreePointParams& p, int n) {
  return realize_lattice(t_tilde_element(a_plus, p, n), p.step);
}

}  // namespace isospec
