// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. All comparisons are exact rational equalities; the only
// tolerances are the wall-clock limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "isospec/cli.hpp"
#include "isospec/oracles.hpp"
#include "isospec/serialize.hpp"
#include "isospec/spectral.hpp"
#include "isospec/verify.hpp"

using namespace isospec;

namespace {

const std::vector<Scalar> kSteps{Scalar(1), Scalar(-1), Scalar(1, 2), Scalar(3, 7)};

struct Verdict {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail = what;
    passed = passed && ok;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0 means no time limit
  std::function<Verdict()> body;
};

Polynomial poly(std::initializer_list<Scalar> c) { return Polynomial(std::vector<Scalar>(c)); }

ShiftOperator lattice(const AlgebraElement& e, const Scalar& d) { return realize_lattice(e, GridStep(d)); }

Verdict heisenberg_commutator() {
  Verdict v;
  for (const Scalar& d : kSteps) {
    const ShiftOperator a = lattice(AlgebraElement::a(), d), b = lattice(AlgebraElement::b(), d);
    v.require(a * b - b * a == ShiftOperator::identity(GridStep(d)), "[a,b] != 1 at delta = " + to_string(d));
  }
  v.detail = v.passed ? "[a,b] = identity for delta in {1, -1, 1/2, 3/7}" : v.detail;
  return v;
}

Verdict difference_identity() {
  Verdict v;
  for (const Scalar& d : kSteps) {
    const GridStep s(d);
    const ShiftOperator d_plus = lattice(AlgebraElement::a(), d);
    const ShiftOperator d_minus =
        (ShiftOperator::identity(s) - ShiftOperator::term(s, -1, poly({1}))) * Scalar(1 / d);
    v.require(d_plus - d_minus == d * (d_minus * d_plus), "D+ - D- != delta D- D+ at delta = " + to_string(d));
  }
  v.detail = v.passed ? "D+ - D- = delta D- D+ for all four steps" : v.detail;
  return v;
}

Verdict ladder_actions() {
  Verdict v;
  int checked = 0;
  for (const Scalar& d : kSteps) {
    const GridStep s(d);
    const ShiftOperator a = lattice(AlgebraElement::a(), d), b = lattice(AlgebraElement::b(), d);
    for (int n = 0; n <= 20; ++n) {
      const Polynomial qn = quasi_monomial(n, s);
      const Polynomial lowered = n == 0 ? Polynomial() : Scalar(n) * quasi_monomial(n - 1, s);
      v.require(apply_lattice(a, qn) == lowered, "a x^(n) != n x^(n-1) at n = " + std::to_string(n));
      v.require(apply_lattice(b, qn) == quasi_monomial(n + 1, s), "b x^(n) != x^(n+1) at n = " + std::to_string(n));
      checked += 2;
    }
  }
  if (v.passed) v.detail = std::to_string(checked) + " ladder identities, n <= 20";
  return v;
}

Verdict five_term_form() {
  Verdict v;
  RationalSampler rng(101);
  for (int t = 0; t < 20; ++t) {
    const E2Params p = rng.e2_params();
    const GridStep s(kSteps[static_cast<std::size_t>(t) % kSteps.size()]);
    v.require(realize_lattice(build_E2(p), s) == e2_closed_form(p, s), "draw " + std::to_string(t) + " differs");
  }
  if (v.passed) v.detail = "20 random draws equal the closed five-shift form";
  return v;
}

Verdict stencil_widths() {
  Verdict v;
  RationalSampler rng(103);
  for (int t = 0; t < 20; ++t) {
    const GridStep s(kSteps[static_cast<std::size_t>(t) % kSteps.size()]);
    const Stencil e2 = stencil_extract(realize_lattice(build_E2(rng.e2_params()), s));
    v.require(e2.points == std::vector<int>{-2, -1, 0, 1, 2}, "E2 draw " + std::to_string(t) + " is not 5-point");

    const int n = rng.next_int(1, 6);
    const Stencil t2 = stencil_extract(realize_lattice(build_T2_qes(rng.qes_form(n)), s));
    v.require(t2.points == std::vector<int>{-4, -3, -2, -1, 0, 1, 2}, "T2 draw " + std::to_string(t) + " is not 7-point");

    const ThreePointParams tp{rng.next_nonzero(), rng.next_nonzero(), rng.next_nonzero(),
                              rng.next_nonzero(), rng.next_nonzero(), s};
    const Stencil three = stencil_extract(build_three_point(tp));
    v.require(three.points == std::vector<int>{-1, 0, 1}, "three-point draw " + std::to_string(t) + " is not 3-point");
  }
  if (v.passed) v.detail = "E2: 5 points, T2: 7 points, three-point family: 3 points (20 draws each)";
  return v;
}

Verdict isospectrality() {
  Verdict v;
  RationalSampler rng(107);
  for (int t = 0; t < 50; ++t) {
    const E2Params p = rng.e2_params();
    const GridStep s(kSteps[static_cast<std::size_t>(t) % kSteps.size()]);
    const auto cert = isospectral_check(build_E2(p), s, 12);
    v.require(cert.verdict && cert.continuum_char_poly == cert.lattice_char_poly,
              "instance " + std::to_string(t) + " has different characteristic polynomials");
  }
  if (v.passed) v.detail = "50/50 certificates true at d = 12";
  return v;
}

Verdict discrete_hermite() {
  Verdict v;
  const AlgebraElement hermite = build_E2(preset_classical(ClassicalFamily::kHermite));
  for (const Scalar& d : kSteps) {
    // (1/d^2) f(x+2d) - (2/d^2) f(x+d) + (1/d^2 - 2x/d) f(x) + (2x/d) f(x-d)
    const GridStep s(d);
    ShiftOperator expected(s);
    expected += ShiftOperator::term(s, 2, poly({Scalar(1 / (d * d))}));
    expected += ShiftOperator::term(s, 1, poly({Scalar(-2 / (d * d))}));
    expected += ShiftOperator::term(s, 0, poly({Scalar(1 / (d * d)), Scalar(-2 / d)}));
    expected += ShiftOperator::term(s, -1, poly({0, Scalar(2 / d)}));
    v.require(realize_lattice(hermite, s) == expected, "stencil differs at delta = " + to_string(d));
  }

  const GridStep one(1);
  const ShiftOperator op = realize_lattice(hermite, one);
  const OperatorMatrix m = matrix_on_basis(lattice_action(op), BasisTag::quasi(one), 10);
  const auto diagonal = m.diagonal();
  const oracles::FamilySpec spec{oracles::Family::kHermite};
  for (int k = 0; k <= 10; ++k) {
    const Scalar& lambda = diagonal[static_cast<std::size_t>(k)];
    const Polynomial phi = convert_basis(substitute_quasi(oracles::reference_polynomial(spec, k), one), BasisTag::monomial());
    v.require(apply_lattice(op, phi) == lambda * phi, "eigen-equation fails at k = " + std::to_string(k));
    v.require(abs(lambda) == 2 * k, "|lambda_" + std::to_string(k) + "| != 2k");
  }
  if (v.passed) {
    v.detail = "stencil exact for 4 steps; k <= 10 eigen-equations hold; lambda_k = " + to_string(diagonal[1]) +
               "k as computed (magnitude 2k; sign is negative under E2 = -Q2 d^2 + Q1 d)";
  }
  return v;
}

Verdict presets() {
  Verdict v;
  int matched = 0;
  auto compare = [&](const ThreePointParams& params, oracles::FamilySpec spec, int k_max, const std::string& label) {
    const ShiftOperator s = build_three_point(params);
    const OperatorMatrix m = matrix_on_basis(lattice_action(s), BasisTag::quasi(s.step()), k_max);
    const auto pairs = eigenpairs_triangular(m);
    for (int k = 0; k <= k_max; ++k) {
      const Polynomial ef = convert_basis(pairs[static_cast<std::size_t>(k)].eigenfunction, BasisTag::monomial());
      const bool ok = oracles::projective_equal(ef, oracles::reference_polynomial(spec, k));
      v.require(ok, label + " k = " + std::to_string(k));
      matched += ok ? 1 : 0;
    }
  };
  for (int alpha = 0; alpha <= 2; ++alpha) {
    for (int beta = 0; beta <= 2; ++beta) {
      for (int N = 4; N <= 6; ++N) {
        DiscreteParams p;
        p.alpha = alpha;
        p.beta = beta;
        p.N = N;
        oracles::FamilySpec spec{oracles::Family::kHahn, Scalar(alpha), Scalar(beta)};
        spec.N = N;
        compare(preset_discrete(DiscreteFamily::kHahn, p, PresetConvention::kVerified), spec, std::min(8, N - 1),
                "hahn(" + std::to_string(alpha) + "," + std::to_string(beta) + "," + std::to_string(N) + ")");
      }
    }
  }
  for (const Scalar& mu : {Scalar(1, 2), Scalar(2)}) {
    DiscreteParams p;
    p.gamma = 1;
    p.mu = mu;
    oracles::FamilySpec spec{oracles::Family::kMeixner};
    spec.gamma = 1;
    spec.mu = mu;
    compare(preset_discrete(DiscreteFamily::kMeixner, p, PresetConvention::kVerified), spec, 8,
            "meixner(mu=" + to_string(mu) + ")");
  }
  for (const Scalar& mu : {Scalar(1), Scalar(3)}) {
    DiscreteParams p;
    p.mu = mu;
    oracles::FamilySpec spec{oracles::Family::kCharlier};
    spec.mu = mu;
    compare(preset_discrete(DiscreteFamily::kCharlier, p, PresetConvention::kVerified), spec, 8,
            "charlier(mu=" + to_string(mu) + ")");
  }
  if (v.passed) {
    v.detail = std::to_string(matched) +
               " eigenfunctions match (verified convention: delta = +1 for Hahn, A2 = +mu for Meixner)";
  } else {
    v.detail = "mismatch at " + v.detail;
  }
  return v;
}

Verdict qes_blocks() {
  Verdict v;
  RationalSampler rng(109);
  int blocks = 0;
  for (int n = 1; n <= 6; ++n) {
    for (int t = 0; t < 10; ++t) {
      const GridStep s(kSteps[static_cast<std::size_t>(t) % kSteps.size()]);
      const AlgebraElement t2 = build_T2_qes(rng.qes_form(n));
      const ThreePointParams tp{rng.next(), rng.next(), rng.next(), rng.next(), rng.next(), s};
      const AlgebraElement tt = t_tilde_element(rng.next_nonzero(), tp, n);
      for (const AlgebraElement* e : {&t2, &tt}) {
        const SubspaceReport cont = invariant_subspace_check(*e, n);
        const SubspaceReport latt = invariant_subspace_check(realize_lattice(*e, s), n);
        const std::string where = "n = " + std::to_string(n) + ", draw " + std::to_string(t);
        v.require(cont.closed && latt.closed, "subspace not preserved at " + where);
        v.require(cont.char_poly == latt.char_poly, "block spectra differ at " + where);
        ++blocks;
      }
    }
  }
  if (v.passed) v.detail = std::to_string(blocks) + " T2 / T-tilde blocks closed with equal characteristic polynomials";
  return v;
}

Verdict determinism() {
  Verdict v;
  const std::string first = to_json(run_suite(Suite::kAll, 7)).dump(2);
  const std::string second = to_json(run_suite(Suite::kAll, 7)).dump(2);
  v.require(first == second, "library summaries differ");

  std::ostringstream out1, out2, err;
  const std::vector<std::string> args{"isospec", "verify", "--suite", "all", "--seed", "7"};
  const int c1 = cli::run(args, out1, err);
  const int c2 = cli::run(args, out2, err);
  v.require(c1 == cli::kSuccess && c2 == cli::kSuccess, "verify --suite all reported failures");
  v.require(out1.str() == out2.str(), "CLI outputs differ");
  if (v.passed) v.detail = "two runs byte-identical (" + std::to_string(out1.str().size()) + " bytes)";
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "lattice Heisenberg commutator", 1.0, heisenberg_commutator},
      {2, "D+ - D- = delta D- D+", 0, difference_identity},
      {3, "ladder actions on quasi-monomials", 0, ladder_actions},
      {4, "lattice E2 five-shift closed form", 5.0, five_term_form},
      {5, "stencil widths", 0, stencil_widths},
      {6, "continuum/lattice isospectrality", 30.0, isospectrality},
      {7, "discrete Hermite", 0, discrete_hermite},
      {8, "Hahn, Meixner, Charlier presets", 10.0, presets},
      {9, "QES invariant subspaces", 0, qes_blocks},
      {10, "verify determinism", 0, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v.passed = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      v.passed = false;
      v.detail += " [time limit " + std::to_string(c.limit_seconds) + " s exceeded]";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    std::printf("[%s] criterion %d: %s: %s (%s%s)\n", v.passed ? "PASS" : "FAIL", c.id, c.title.c_str(),
                v.detail.c_str(), timing,
                c.limit_seconds > 0 ? (", limit " + std::to_string(static_cast<int>(c.limit_seconds)) + " s").c_str()
                                    : "");
    if (!v.passed) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
