#include "isospec/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "isospec/errors.hpp"
#include "isospec/oracles.hpp"
#include "isospec/spectral.hpp"

namespace isospec {

Scalar RationalSampler::next(int max_numerator, int max_denominator) {
  std::uniform_int_distribution<int> num(-max_numerator, max_numerator);
  std::uniform_int_distribution<int> den(1, max_denominator);
  const int p = num(engine_);
  const int q = den(engine_);
  Scalar r(p, q);
  r.canonicalize();
  return r;
}

Scalar RationalSampler::next_nonzero(int max_numerator, int max_denominator) {
  Scalar r;
  do {
    r = next(max_numerator, max_denominator);
  } while (r == 0);
  return r;
}

int RationalSampler::next_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

E2Params RationalSampler::e2_params() {
  E2Params p;
  p.a0 = next_nonzero();
  p.a1 = next_nonzero();
  p.a2 = next_nonzero();
  p.b0 = next_nonzero();
  p.b1 = next_nonzero();
  p.c0 = next();
  return p;
}

QesQuadraticForm RationalSampler::qes_form(int n) {
  QesQuadraticForm q;
  q.n = n;
  for (Scalar* c : {&q.pp, &q.p0, &q.pm, &q.zz, &q.zm, &q.mm, &q.p, &q.z, &q.m, &q.c}) {
    *c = next_nonzero();
  }
  return q;
}

AlgebraElement RationalSampler::algebra_element(int max_terms, int max_degree) {
  AlgebraElement e;
  const int terms = next_int(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    e += AlgebraElement::word(next_int(0, max_degree), next_int(0, max_degree), next_nonzero());
  }
  return e;
}

Polynomial RationalSampler::polynomial(int degree) {
  std::vector<Scalar> c;
  for (int k = 0; k < degree; ++k) c.push_back(next());
  c.push_back(next_nonzero());
  return Polynomial(std::move(c));
}

bool SuiteSummary::all_passed() const { return failed_count() == 0; }

std::size_t SuiteSummary::failed_count() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::kHeisenberg, Suite::kE2, Suite::kStencils, Suite::kIsospectral,
                  Suite::kHermite, Suite::kPresets, Suite::kQes, Suite::kAll}) {
    if (name_of(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view name_of(Suite suite) {
  switch (suite) {
    case Suite::kHeisenberg: return "heisenberg";
    case Suite::kE2: return "e2";
    case Suite::kStencils: return "stencils";
    case Suite::kIsospectral: return "isospectral";
    case Suite::kHermite: return "hermite";
    case Suite::kPresets: return "presets";
    case Suite::kQes: return "qes";
    case Suite::kAll: return "all";
  }
  return "";
}

ShiftOperator e2_closed_form(const E2Params& p, const GridStep& step) {
  const Scalar& d = step.value();
  const Scalar ta0 = p.a0 / (d * d), ta1 = p.a1 / (d * d), ta2 = p.a2 / (d * d);
  const Scalar tb0 = p.b0 / d, tb1 = p.b1 / d;
  // x(x - delta)
  const Polynomial xx({Scalar(0), Scalar(-d), Scalar(1)});
  const Polynomial x({Scalar(0), Scalar(1)});
  const Polynomial one = Polynomial::constant(1);
  ShiftOperator s(step);
  s += ShiftOperator::term(step, 2, one * Scalar(-ta2));
  s += ShiftOperator::term(step, 1, x * Scalar(-ta1) + one * Scalar(2 * ta2 + tb1));
  s += ShiftOperator::term(step, 0,
                           xx * Scalar(-ta0) + x * Scalar(2 * ta1 + tb0) -
                               one * Scalar(ta2 + tb1) + one * p.c0);
  s += ShiftOperator::term(step, -1, xx * Scalar(2 * ta0) - x * Scalar(ta1 + tb0));
  s += ShiftOperator::term(step, -2, xx * Scalar(-ta0));
  return s;
}

namespace {

const std::vector<Scalar>& step_set() {
  static const std::vector<Scalar> steps{Scalar(1), Scalar(-1), Scalar(1, 2), Scalar(3, 7)};
  return steps;
}

class Collector {
 public:
  explicit Collector(SuiteSummary& summary) : summary_(summary) {}

  void check(std::string name, bool passed, std::string detail = "") {
    summary_.checks.push_back({std::move(name), passed, std::move(detail)});
  }

  // Domain errors inside a check count as failures with the message attached.
  void guarded(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    try {
      auto [ok, detail] = body();
      check(name, ok, std::move(detail));
    } catch (const std::exception& e) {
      check(name, false, std::string("exception: ") + e.what());
    }
  }

 private:
  SuiteSummary& summary_;
};

std::string step_label(const Scalar& d) { return "delta=" + to_string(d); }

void run_heisenberg(Collector& out, RationalSampler& rng, int trials) {
  const AlgebraElement a = AlgebraElement::a();
  const AlgebraElement b = AlgebraElement::b();
  out.check("algebra.commutator_ab", commutator(a, b) == AlgebraElement::constant(1), "[a,b] = 1");

  for (int n = 0; n <= 6; ++n) {
    const auto jp = sl2_generator(Sl2Kind::kPlus, n);
    const auto j0 = sl2_generator(Sl2Kind::kZero, n);
    const auto jm = sl2_generator(Sl2Kind::kMinus, n);
    const bool ok = commutator(j0, jm) == -jm && commutator(j0, jp) == jp &&
                    commutator(jp, jm) == Scalar(-2) * j0;
    out.check("algebra.sl2_relations[n=" + std::to_string(n) + "]", ok);
  }

  for (const Scalar& d : step_set()) {
    const GridStep step(d);
    const ShiftOperator la = realize_lattice(a, step);
    const ShiftOperator lb = realize_lattice(b, step);
    out.check("lattice.commutator[" + step_label(d) + "]",
              shift_compose(la, lb) - shift_compose(lb, la) == ShiftOperator::identity(step));

    const ShiftOperator one = ShiftOperator::identity(step);
    const ShiftOperator back = ShiftOperator::term(step, -1, Polynomial::constant(1));
    const ShiftOperator d_plus = la;
    const ShiftOperator d_minus = (one - back) * Scalar(1 / d);
    out.check("lattice.dplus_minus_dminus[" + step_label(d) + "]",
              d_plus - d_minus == shift_compose(d_minus, d_plus) * d);

    bool ladder = true;
    for (int n = 0; n <= 20 && ladder; ++n) {
      const Polynomial qn = quasi_monomial(n, step);
      const Polynomial lowered = n == 0 ? Polynomial() : quasi_monomial(n - 1, step) * Scalar(n);
      ladder = apply_lattice(la, qn) == lowered && apply_lattice(lb, qn) == quasi_monomial(n + 1, step);
    }
    out.check("lattice.ladder[" + step_label(d) + "]", ladder, "n <= 20");

    bool fock = true;
    for (int n = 0; n <= 20 && fock; ++n) fock = fock_vector(n, step) == quasi_monomial(n, step);
    out.check("lattice.fock_vector[" + step_label(d) + "]", fock, "n <= 20");
  }

  for (int t = 0; t < trials; ++t) {
    const AlgebraElement u = rng.algebra_element();
    const AlgebraElement v = rng.algebra_element();
    const AlgebraElement uv = mul(u, v);
    bool continuum = true;
    for (int k = 0; k <= 20 && continuum; ++k) {
      const Polynomial xk = Polynomial::basis_element(k);
      continuum = apply_continuum(uv, xk) == apply_continuum(u, apply_continuum(v, xk));
    }
    const GridStep step(step_set()[static_cast<std::size_t>(t) % step_set().size()]);
    const ShiftOperator su = realize_lattice(u, step), sv = realize_lattice(v, step);
    const ShiftOperator suv = realize_lattice(uv, step);
    bool lattice = suv == shift_compose(su, sv);
    for (int deg = 0; deg <= 12 && lattice; deg += 4) {
      const Polynomial p = rng.polynomial(deg);
      lattice = apply_lattice(suv, p) == apply_lattice(su, apply_lattice(sv, p));
    }
    out.check("homomorphism.trial[" + std::to_string(t) + "]", continuum && lattice,
              step_label(step.value()));
  }
}

void run_e2(Collector& out, RationalSampler& rng) {
  for (int t = 0; t < 20; ++t) {
    const E2Params p = rng.e2_params();
    const GridStep step(step_set()[static_cast<std::size_t>(t) % step_set().size()]);
    out.check("e2.closed_form.trial[" + std::to_string(t) + "]",
              realize_lattice(build_E2(p), step) == e2_closed_form(p, step), step_label(step.value()));
  }
}

std::string points_label(const Stencil& s) {
  std::string out = "points={";
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    out += (i ? "," : "") + std::to_string(s.points[i]);
  }
  return out + "}";
}

void run_stencils(Collector& out, RationalSampler& rng) {
  const std::vector<int> five{-2, -1, 0, 1, 2};
  const std::vector<int> seven{-4, -3, -2, -1, 0, 1, 2};
  const std::vector<int> three{-1, 0, 1};
  for (int t = 0; t < 20; ++t) {
    const GridStep step(step_set()[static_cast<std::size_t>(t) % step_set().size()]);
    const auto se = stencil_extract(realize_lattice(build_E2(rng.e2_params()), step));
    out.check("stencil.e2.trial[" + std::to_string(t) + "]", se.points == five, points_label(se));
    const auto st = stencil_extract(realize_lattice(build_T2_qes(rng.qes_form(rng.next_int(0, 6))), step));
    out.check("stencil.t2.trial[" + std::to_string(t) + "]", st.points == seven, points_label(st));
    const ThreePointParams tp{rng.next_nonzero(), rng.next_nonzero(), rng.next_nonzero(),
                              rng.next_nonzero(), rng.next(), step};
    const auto s3 = stencil_extract(build_three_point(tp));
    out.check("stencil.three_point.trial[" + std::to_string(t) + "]", s3.points == three,
              points_label(s3));
  }
}

void run_isospectral(Collector& out, RationalSampler& rng, int trials) {
  for (int t = 0; t < trials; ++t) {
    const GridStep step(step_set()[static_cast<std::size_t>(t) % step_set().size()]);
    const E2Params p = rng.e2_params();
    const AlgebraElement e = build_E2(p);
    const std::string name = "isospectral.trial[" + std::to_string(t) + "]";
    out.guarded(name, [&] {
      const auto cert = isospectral_check(e, step, 12);
      return std::pair{cert.verdict, step_label(step.value()) + " d=12"};
    });
    out.guarded(name + ".eigenfunctions", [&] {
      const OperatorMatrix m = matrix_on_basis(continuum_action(e), BasisTag::monomial(), 12);
      std::set<Scalar> distinct;
      for (const auto& v : m.diagonal()) distinct.insert(v);
      if (distinct.size() != m.size()) return std::pair{true, std::string("degenerate, skipped")};
      const ShiftOperator lattice = realize_lattice(e, step);
      for (const auto& [lambda, phi] : eigenpairs_triangular(m)) {
        if (!verify_pointwise(lattice, substitute_quasi(phi, step), lambda)) {
          return std::pair{false, "degree " + std::to_string(phi.degree())};
        }
      }
      return std::pair{true, std::string("13 eigenpairs")};
    });
  }
}

void run_hermite(Collector& out) {
  const AlgebraElement h = build_E2(preset_classical(ClassicalFamily::kHermite));
  for (const Scalar& d : step_set()) {
    const GridStep step(d);
    const Polynomial x({Scalar(0), Scalar(1)});
    ShiftOperator expected(step);
    expected += ShiftOperator::term(step, 2, Polynomial::constant(1 / (d * d)));
    expected += ShiftOperator::term(step, 1, Polynomial::constant(-2 / (d * d)));
    expected += ShiftOperator::term(step, 0, (x * Scalar(2) - Polynomial::constant(1 / d)) * Scalar(-1 / d));
    expected += ShiftOperator::term(step, -1, x * Scalar(2 / d));
    out.check("hermite.stencil[" + step_label(d) + "]", realize_lattice(h, step) == expected);

    out.guarded("hermite.family[" + step_label(d) + "]", [&] {
      for (const auto& m : discrete_family(ClassicalFamily::kHermite, step, 10)) {
        if (!m.verified) return std::pair{false, "k=" + std::to_string(m.k) + " not verified"};
        if (abs(m.eigenvalue) != 2 * m.k) {
          return std::pair{false, "k=" + std::to_string(m.k) + " eigenvalue " + to_string(m.eigenvalue)};
        }
        const Polynomial reference = oracles::reference_polynomial({}, m.k);
        if (!(m.continuum == reference)) return std::pair{false, "k=" + std::to_string(m.k) + " != H_k"};
      }
      return std::pair{true, std::string("k <= 10, eigenvalue -2k (magnitude 2k)")};
    });
  }
}

// Eigenvectors of the lattice operator's matrix on monomials against the
// reference family, degree by degree.
std::pair<bool, std::string> compare_three_point(const ThreePointParams& params,
                                                 const oracles::FamilySpec& spec, int k_max) {
  const OperatorMatrix m =
      matrix_on_basis(lattice_action(build_three_point(params)), BasisTag::monomial(), k_max);
  for (const auto& [lambda, phi] : eigenpairs_triangular(m)) {
    const Scalar expected = params.A1 * phi.degree() * phi.degree() / params.step.value() +
                            params.A3 * phi.degree() + params.A5;
    if (lambda != expected) return {false, "eigenvalue mismatch at k=" + std::to_string(phi.degree())};
    if (!oracles::projective_equal(phi, oracles::reference_polynomial(spec, phi.degree()))) {
      return {false, "eigenvector mismatch at k=" + std::to_string(phi.degree())};
    }
  }
  return {true, "k <= " + std::to_string(k_max)};
}

void run_presets(Collector& out) {
  for (int alpha = 0; alpha <= 2; ++alpha) {
    for (int beta = 0; beta <= 2; ++beta) {
      for (int N = 4; N <= 6; ++N) {
        DiscreteParams dp;
        dp.alpha = alpha;
        dp.beta = beta;
        dp.N = N;
        oracles::FamilySpec spec{oracles::Family::kHahn, alpha, beta, 1, 1, N, {}};
        out.guarded("presets.hahn[alpha=" + std::to_string(alpha) + ",beta=" + std::to_string(beta) +
                        ",N=" + std::to_string(N) + "]",
                    [&] {
                      return compare_three_point(
                          preset_discrete(DiscreteFamily::kHahn, dp, PresetConvention::kVerified),
                          spec, std::min(8, N - 1));
                    });
      }
    }
  }
  for (const Scalar& mu : {Scalar(1, 2), Scalar(2)}) {
    DiscreteParams dp;
    dp.gamma = 1;
    dp.mu = mu;
    oracles::FamilySpec spec{oracles::Family::kMeixner, 0, 0, 1, mu, 1, {}};
    out.guarded("presets.meixner[gamma=1,mu=" + to_string(mu) + "]", [&] {
      return compare_three_point(
          preset_discrete(DiscreteFamily::kMeixner, dp, PresetConvention::kVerified), spec, 8);
    });
  }
  for (const Scalar& mu : {Scalar(1), Scalar(3)}) {
    DiscreteParams dp;
    dp.mu = mu;
    oracles::FamilySpec spec{oracles::Family::kCharlier, 0, 0, 1, mu, 1, {}};
    out.guarded("presets.charlier[mu=" + to_string(mu) + "]", [&] {
      return compare_three_point(
          preset_discrete(DiscreteFamily::kCharlier, dp, PresetConvention::kVerified), spec, 8);
    });
  }

  struct Classical {
    ClassicalFamily family;
    oracles::Family oracle;
    Scalar alpha, beta;
  };
  const std::vector<Classical> classical{
      {ClassicalFamily::kHermite, oracles::Family::kHermite, 0, 0},
      {ClassicalFamily::kLaguerre, oracles::Family::kLaguerre, 0, 0},
      {ClassicalFamily::kLaguerre, oracles::Family::kLaguerre, Scalar(3, 2), 0},
      {ClassicalFamily::kLegendre, oracles::Family::kLegendre, 0, 0},
      {ClassicalFamily::kJacobi, oracles::Family::kJacobi, Scalar(1, 2), Scalar(-1, 3)},
      {ClassicalFamily::kJacobi, oracles::Family::kJacobi, 2, 1},
  };
  for (const auto& c : classical) {
    const std::string name = "presets.classical." + std::string(name_of(c.family)) + "[alpha=" +
                             to_string(c.alpha) + ",beta=" + to_string(c.beta) + "]";
    out.guarded(name, [&] {
      oracles::FamilySpec spec{c.oracle, c.alpha, c.beta, 1, 1, 1, {}};
      for (const auto& m : discrete_family(c.family, GridStep(Scalar(1, 3)), 8, c.alpha, c.beta)) {
        if (!(m.continuum == oracles::reference_polynomial(spec, m.k))) {
          return std::pair{false, "k=" + std::to_string(m.k) + " normalization or shape mismatch"};
        }
        if (!m.verified) return std::pair{false, "k=" + std::to_string(m.k) + " lattice check failed"};
      }
      return std::pair{true, std::string("k <= 8, delta=1/3")};
    });
  }
}

std::pair<bool, std::string> qes_blocks(const AlgebraElement& e, const GridStep& step, int n) {
  const SubspaceReport continuum = invariant_subspace_check(e, n);
  const SubspaceReport lattice = invariant_subspace_check(realize_lattice(e, step), n);
  if (!continuum.closed) return {false, "continuum leaves degree <= n"};
  if (!lattice.closed) return {false, "lattice leaves degree <= n"};
  return {continuum.char_poly == lattice.char_poly, step_label(step.value())};
}

void run_qes(Collector& out, RationalSampler& rng) {
  for (int n = 1; n <= 6; ++n) {
    for (int t = 0; t < 10; ++t) {
      const GridStep step(step_set()[static_cast<std::size_t>(t) % step_set().size()]);
      const std::string tag = "[n=" + std::to_string(n) + ",trial=" + std::to_string(t) + "]";
      const AlgebraElement t2 = build_T2_qes(rng.qes_form(n));
      out.guarded("qes.t2" + tag, [&] { return qes_blocks(t2, step, n); });
      const ThreePointParams tp{rng.next(), rng.next(), rng.next(), rng.next(), rng.next(), step};
      const AlgebraElement tt = t_tilde_element(rng.next_nonzero(), tp, n);
      out.guarded("qes.t_tilde" + tag, [&] { return qes_blocks(tt, step, n); });
    }
  }
}

std::uint64_t sub_seed(std::uint64_t seed, Suite suite) {
  return seed * 1000003ULL + static_cast<std::uint64_t>(suite);
}

void run_one(Suite suite, std::uint64_t seed, int trials, SuiteSummary& summary) {
  Collector out(summary);
  RationalSampler rng(sub_seed(seed, suite));
  switch (suite) {
    case Suite::kHeisenberg: run_heisenberg(out, rng, trials); break;
    case Suite::kE2: run_e2(out, rng); break;
    case Suite::kStencils: run_stencils(out, rng); break;
    case Suite::kIsospectral: run_isospectral(out, rng, trials); break;
    case Suite::kHermite: run_hermite(out); break;
    case Suite::kPresets: run_presets(out); break;
    case Suite::kQes: run_qes(out, rng); break;
    case Suite::kAll: break;
  }
}

}  // namespace

SuiteSummary run_suite(Suite suite, std::uint64_t seed, int trials) {
  SuiteSummary summary;
  summary.suite = name_of(suite);
  summary.seed = seed;
  summary.trials = trials;
  if (suite == Suite::kAll) {
    for (Suite s : {Suite::kHeisenberg, Suite::kE2, Suite::kStencils, Suite::kIsospectral,
                    Suite::kHermite, Suite::kPresets, Suite::kQes}) {
      SuiteSummary part;
      run_one(s, seed, trials, part);
      for (auto& c : part.checks) {
        c.name = std::string(name_of(s)) + "/" + c.name;
        summary.checks.push_back(std::move(c));
      }
    }
  } else {
    run_one(suite, seed, trials, summary);
  }
  return summary;
}

Json to_json(const SuiteSummary& s) {
  Json checks = Json::array();
  for (const auto& c : s.checks) {
    checks.push_back(Json{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
  }
  return Json{{"suite", s.suite},
              {"seed", s.seed},
              {"trials", s.trials},
              {"passed", s.checks.size() - s.failed_count()},
              {"failed", s.failed_count()},
              {"checks", checks}};
}

}  // namespace isospec
