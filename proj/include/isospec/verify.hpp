#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "isospec/operators.hpp"
#include "isospec/serialize.hpp"

namespace isospec {

// Small random rationals for randomized identity checks. Draws depend only on
// the seed.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

  // p/q with |p| <= max_numerator, 1 <= q <= max_denominator.
  Scalar next(int max_numerator = 9, int max_denominator = 9);
  Scalar next_nonzero(int max_numerator = 9, int max_denominator = 9);
  int next_int(int lo, int hi);

  E2Params e2_params();
  QesQuadraticForm qes_form(int n);
  AlgebraElement algebra_element(int max_terms = 3, int max_degree = 3);
  Polynomial polynomial(int degree);

 private:
  std::mt19937_64 engine_;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteSummary {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::size_t failed_count() const;
};

enum class Suite { kHeisenberg, kE2, kStencils, kIsospectral, kHermite, kPresets, kQes, kAll };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view name_of(Suite suite);

inline constexpr std::uint64_t kDefaultSeed = 7;
inline constexpr int kDefaultTrials = 50;

// Runs the named invariant suite. Output is a function of (suite, seed,
// trials) only.
SuiteSummary run_suite(Suite suite, std::uint64_t seed = kDefaultSeed,
                       int trials = kDefaultTrials);

Json to_json(const SuiteSummary& s);

// Closed five-shift form of the lattice E2 written out coefficient by
// coefficient (tilde a = a/delta^2, tilde b = b/delta); independent of
// realize_lattice.
ShiftOperator e2_closed_form(const E2Params& p, const GridStep& step);

}  // namespace isospec
