#include "isospec/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "isospec/errors.hpp"
#include "isospec/operators.hpp"
#include "isospec/serialize.hpp"
#include "isospec/spectral.hpp"
#include "isospec/verify.hpp"

namespace isospec::cli {
namespace {

struct OperatorOptions {
  std::string op;
  std::string params;
  std::string preset;
  std::string convention = "printed";
  std::string delta = "1";
  std::string alpha = "0", beta = "0", gamma = "1", mu = "1", nu = "0", a_plus = "1";
  int N = 1;
  int spin = 0;
  CLI::Option* delta_option = nullptr;
};

struct OutputOptions {
  std::string format = "json";
  std::string path;
};

struct SelectedOperator {
  std::string label;
  AlgebraElement element;
  GridStep step;
  bool hermite = false;
};

void add_operator_options(CLI::App* cmd, OperatorOptions& o) {
  cmd->add_option("--op", o.op,
                  "hermite | laguerre | legendre | jacobi | e2 | three-point | t2 | t-tilde")
      ->required();
  cmd->add_option("--params", o.params, "comma-separated fractions (e2: a0,a1,a2,b0,b1,c0; "
                                        "three-point/t-tilde: A1,A2,A3,A4,A5; t2: ten coefficients)");
  cmd->add_option("--preset", o.preset, "three-point preset: hahn | hahn_continued | meixner | charlier");
  cmd->add_option("--convention", o.convention, "preset convention: printed | verified");
  o.delta_option = cmd->add_option("--delta", o.delta, "grid step as a fraction");
  cmd->add_option("--alpha", o.alpha, "laguerre/jacobi/hahn alpha");
  cmd->add_option("--beta", o.beta, "jacobi/hahn beta");
  cmd->add_option("--gamma", o.gamma, "meixner gamma");
  cmd->add_option("--mu", o.mu, "meixner/charlier mu, hahn_continued mu");
  cmd->add_option("--nu", o.nu, "hahn_continued nu");
  cmd->add_option("--N", o.N, "Hahn lattice size");
  cmd->add_option("--n", o.spin, "sl2 spin for t2 / t-tilde");
  cmd->add_option("--aplus", o.a_plus, "A+ coefficient for t-tilde");
}

void add_output_options(CLI::App* cmd, OutputOptions& o, const std::string& default_format) {
  o.format = default_format;
  cmd->add_option("--format", o.format, "json | csv | text");
  cmd->add_option("--out", o.path, "write to this file instead of stdout");
}

std::vector<Scalar> parse_list(const std::string& text, std::size_t expected, const char* what) {
  std::vector<Scalar> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) values.push_back(parse_scalar(item));
  if (values.size() != expected) {
    throw ParseError(std::string(what) + " expects " + std::to_string(expected) +
                     " comma-separated values, got " + std::to_string(values.size()));
  }
  return values;
}

ThreePointParams three_point_params(const OperatorOptions& o) {
  if (!o.preset.empty()) {
    const auto family = parse_discrete_family(o.preset);
    if (!family) throw ParseError("unknown three-point preset '" + o.preset + "'");
    const auto convention = parse_convention(o.convention);
    if (!convention) throw ParseError("unknown convention '" + o.convention + "'");
    DiscreteParams dp;
    dp.alpha = parse_scalar(o.alpha);
    dp.beta = parse_scalar(o.beta);
    dp.gamma = parse_scalar(o.gamma);
    dp.mu = parse_scalar(o.mu);
    dp.nu = parse_scalar(o.nu);
    dp.N = o.N;
    ThreePointParams p = preset_discrete(*family, dp, *convention);
    if (o.delta_option->count() > 0 && !(GridStep(parse_scalar(o.delta)) == p.step)) {
      throw ParseError("preset '" + o.preset + "' fixes delta=" + to_string(p.step.value()) +
                       "; --delta " + o.delta + " conflicts");
    }
    return p;
  }
  if (o.params.empty()) throw ParseError("three-point operators need --preset or --params");
  const auto v = parse_list(o.params, 5, "--params");
  return ThreePointParams{v[0], v[1], v[2], v[3], v[4], GridStep(parse_scalar(o.delta))};
}

SelectedOperator select_operator(const OperatorOptions& o) {
  if (auto family = parse_classical_family(o.op)) {
    const AlgebraElement e =
        build_E2(preset_classical(*family, parse_scalar(o.alpha), parse_scalar(o.beta)));
    return {o.op, e, GridStep(parse_scalar(o.delta)), *family == ClassicalFamily::kHermite};
  }
  if (o.op == "e2") {
    const auto v = parse_list(o.params, 6, "--params");
    const E2Params p{v[0], v[1], v[2], v[3], v[4], v[5]};
    const AlgebraElement e = build_E2(p);
    const bool hermite = e == build_E2(preset_classical(ClassicalFamily::kHermite));
    return {"e2", e, GridStep(parse_scalar(o.delta)), hermite};
  }
  if (o.op == "three-point") {
    const ThreePointParams p = three_point_params(o);
    return {o.preset.empty() ? "three-point" : "three-point/" + o.preset, three_point_element(p),
            p.step, false};
  }
  if (o.op == "t2") {
    if (o.spin < 0) throw ParseError("--n must be non-negative");
    const auto v = parse_list(o.params, 10, "--params");
    QesQuadraticForm q{o.spin, v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9]};
    return {"t2", build_T2_qes(q), GridStep(parse_scalar(o.delta)), false};
  }
  if (o.op == "t-tilde") {
    if (o.spin < 0) throw ParseError("--n must be non-negative");
    const ThreePointParams p = three_point_params(o);
    return {"t-tilde", t_tilde_element(parse_scalar(o.a_plus), p, o.spin), p.step, false};
  }
  throw ParseError("unknown operator '" + o.op + "'");
}

void emit(const OutputOptions& o, const std::string& text, std::ostream& out) {
  if (o.path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.path, std::ios::binary);
  if (!file) throw ParseError("cannot open output file '" + o.path + "'");
  file << text;
}

void require_format(const OutputOptions& o) {
  if (o.format != "json" && o.format != "csv" && o.format != "text") {
    throw ParseError("unknown format '" + o.format + "'");
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string stencil_text(const Stencil& st) {
  std::ostringstream s;
  s << "points: " << st.points.size() << "\n";
  for (std::size_t i = 0; i < st.points.size(); ++i) {
    s << "  shift " << st.points[i] << ": " << st.coeffs[i].to_string() << "\n";
  }
  return s.str();
}

std::string stencil_csv(const Stencil& st) {
  std::vector<std::string> labels;
  for (int k : st.points) labels.push_back("shift=" + std::to_string(k));
  return polynomial_table_csv(labels, st.coeffs);
}

std::string discretize(const OperatorOptions& oo, const OutputOptions& out) {
  const SelectedOperator sel = select_operator(oo);
  const ShiftOperator s = realize_lattice(sel.element, sel.step);
  const Stencil st = stencil_extract(s);
  if (out.format == "text") return stencil_text(st);
  if (out.format == "csv") return stencil_csv(st);
  Json j = to_json(s);
  j["operator"] = sel.label;
  j["stencil"] = Json{{"points", st.points}, {"count", st.points.size()}, {"width", s.width()}};
  return dump(j);
}

std::string stencil(const OperatorOptions& oo, const OutputOptions& out) {
  const SelectedOperator sel = select_operator(oo);
  const ShiftOperator s = realize_lattice(sel.element, sel.step);
  const Stencil st = stencil_extract(s);
  if (out.format == "text") return stencil_text(st);
  if (out.format == "csv") return stencil_csv(st);
  Json j = to_json(st);
  j["operator"] = sel.label;
  j["delta"] = to_string(sel.step.value());
  j["width"] = s.width();
  return dump(j);
}

constexpr const char* kHermiteSignNote =
    "h = d^2/dx^2 - 2x d/dx has eigenvalue -2k at degree k (magnitude 2k); the +2k convention "
    "belongs to -h. Signs are reported as computed.";

std::string spectrum(const OperatorOptions& oo, const OutputOptions& out, int degree,
                     const std::string& repr) {
  if (degree < 0) throw ParseError("--degree must be non-negative");
  const SelectedOperator sel = select_operator(oo);
  OperatorMatrix m;
  if (repr == "continuum") {
    m = matrix_on_basis(continuum_action(sel.element), BasisTag::monomial(), degree);
  } else if (repr == "lattice") {
    m = matrix_on_basis(lattice_action(realize_lattice(sel.element, sel.step)),
                        BasisTag::quasi(sel.step), degree);
  } else {
    throw ParseError("unknown representation '" + repr + "'");
  }
  SpectralReport r = spectral_report(m);
  if (sel.hermite) r.notes.push_back(kHermiteSignNote);
  if (out.format == "json") {
    Json j{{"operator", sel.label}, {"representation", repr}, {"delta", to_string(sel.step.value())}};
    j.update(to_json(r));
    return dump(j);
  }
  if (out.format == "csv") {
    std::vector<std::string> labels;
    std::vector<Polynomial> rows;
    if (r.eigenpairs) {
      for (const auto& [lambda, phi] : *r.eigenpairs) {
        labels.push_back(to_string(lambda));
        rows.push_back(phi);
      }
    }
    return polynomial_table_csv(labels, rows);
  }
  std::ostringstream s;
  s << "operator: " << sel.label << " (" << repr << ", basis " << m.basis.describe() << ")\n";
  s << "char poly: " << r.char_poly.to_string("L") << "\n";
  s << "triangular: " << (r.triangular ? "yes" : "no") << "\n";
  if (r.eigenpairs) {
    for (const auto& [lambda, phi] : *r.eigenpairs) {
      s << "  " << to_string(lambda) << ": " << phi.to_string() << "\n";
    }
  }
  if (r.warning) s << "warning: " << *r.warning << "\n";
  for (const auto& n : r.notes) s << "note: " << n << "\n";
  return s.str();
}

std::string family(const std::string& name, const std::string& delta, int k_max,
                   const std::string& alpha, const std::string& beta, const OutputOptions& out) {
  std::string_view base = name;
  if (base.starts_with("discrete-")) base.remove_prefix(9);
  const auto fam = parse_classical_family(base);
  if (!fam) throw ParseError("unknown family '" + name + "'");
  if (k_max < 0) throw ParseError("--kmax must be non-negative");
  const GridStep step(parse_scalar(delta));
  const auto members = discrete_family(*fam, step, k_max, parse_scalar(alpha), parse_scalar(beta));
  if (out.format == "csv") {
    std::ostringstream s;
    s << "k,eigenvalue,verified";
    for (int i = 0; i <= k_max; ++i) s << ",q" << i;
    for (int i = 0; i <= k_max; ++i) s << ",m" << i;
    s << "\n";
    for (const auto& m : members) {
      s << m.k << "," << to_string(m.eigenvalue) << "," << (m.verified ? "true" : "false");
      for (int i = 0; i <= k_max; ++i) s << "," << to_string(m.discrete.coefficient(i));
      for (int i = 0; i <= k_max; ++i) s << "," << to_string(m.expanded.coefficient(i));
      s << "\n";
    }
    return s.str();
  }
  if (out.format == "text") {
    std::ostringstream s;
    for (const auto& m : members) {
      s << "k=" << m.k << " eigenvalue " << to_string(m.eigenvalue) << " "
        << (m.verified ? "verified" : "NOT VERIFIED") << "\n  " << m.discrete.to_string() << "\n  = "
        << m.expanded.to_string() << "\n";
    }
    return s.str();
  }
  Json rows = Json::array();
  for (const auto& m : members) rows.push_back(to_json(m));
  Json j{{"family", "discrete-" + std::string(base)}, {"delta", to_string(step.value())},
         {"kmax", k_max}, {"members", rows}};
  if (*fam == ClassicalFamily::kHermite) j["notes"] = Json::array({kHermiteSignNote});
  return dump(j);
}

std::uint64_t resolve_seed(CLI::Option* flag, std::uint64_t flag_value) {
  if (flag->count() > 0) return flag_value;
  if (const char* env = std::getenv("ISOSPEC_SEED")) {
    try {
      std::size_t used = 0;
      const std::string text(env);
      const auto v = std::stoull(text, &used);
      if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("ISOSPEC_SEED is not an unsigned integer: '") + env + "'");
  }
  return kDefaultSeed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lie-algebraic discretization of solvable differential operators", "isospec"};
  app.require_subcommand(1);

  OperatorOptions disc_op, spec_op, sten_op;
  OutputOptions disc_out, spec_out, sten_out, fam_out, ver_out;

  auto* disc = app.add_subcommand("discretize", "lattice shift operator of an operator");
  add_operator_options(disc, disc_op);
  add_output_options(disc, disc_out, "json");

  auto* spec = app.add_subcommand("spectrum", "matrix, characteristic polynomial and eigenpairs");
  add_operator_options(spec, spec_op);
  add_output_options(spec, spec_out, "json");
  int degree = 4;
  std::string repr = "lattice";
  spec->add_option("--degree", degree, "degree bound d");
  spec->add_option("--repr", repr, "continuum | lattice");

  auto* sten = app.add_subcommand("stencil", "shifts and coefficient polynomials");
  add_operator_options(sten, sten_op);
  add_output_options(sten, sten_out, "json");

  auto* fam = app.add_subcommand("family", "discrete classical polynomials");
  std::string fam_name, fam_delta = "1", fam_alpha = "0", fam_beta = "0";
  int k_max = 5;
  fam->add_option("--name", fam_name, "discrete-hermite | discrete-laguerre | discrete-legendre | "
                                      "discrete-jacobi")
      ->required();
  fam->add_option("--delta", fam_delta);
  fam->add_option("--kmax", k_max);
  fam->add_option("--alpha", fam_alpha, "laguerre/jacobi alpha");
  fam->add_option("--beta", fam_beta, "jacobi beta");
  add_output_options(fam, fam_out, "csv");

  auto* ver = app.add_subcommand("verify", "run invariant suites");
  std::string suite_name = "all";
  int trials = kDefaultTrials;
  std::uint64_t seed_value = kDefaultSeed;
  ver->add_option("--suite", suite_name,
                  "heisenberg | e2 | stencils | isospectral | hermite | presets | qes | all");
  ver->add_option("--trials", trials, "random trials for randomized suites");
  auto* seed_flag = ver->add_option("--seed", seed_value, "RNG seed (overrides ISOSPEC_SEED)");
  add_output_options(ver, ver_out, "json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*disc) {
      require_format(disc_out);
      emit(disc_out, discretize(disc_op, disc_out), out);
    } else if (*spec) {
      require_format(spec_out);
      emit(spec_out, spectrum(spec_op, spec_out, degree, repr), out);
    } else if (*sten) {
      require_format(sten_out);
      emit(sten_out, stencil(sten_op, sten_out), out);
    } else if (*fam) {
      require_format(fam_out);
      emit(fam_out, family(fam_name, fam_delta, k_max, fam_alpha, fam_beta, fam_out), out);
    } else if (*ver) {
      const auto suite = parse_suite(suite_name);
      if (!suite) throw ParseError("unknown suite '" + suite_name + "'");
      if (trials < 0) throw ParseError("--trials must be non-negative");
      const SuiteSummary summary = run_suite(*suite, resolve_seed(seed_flag, seed_value), trials);
      emit(ver_out, dump(to_json(summary)), out);
      if (!summary.all_passed()) {
        err << summary.failed_count() << " check(s) failed\n";
        return kVerificationFailure;
      }
    }
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomainError;
  }
  return kSuccess;
}

}  // namespace isospec::cli
