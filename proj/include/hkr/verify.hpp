#pragma once

// Invariant suites run by `hkr verify`. Sampling checks are driven by a
// seeded generator so that runs are reproducible.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hkr/hitchin_dims.hpp"

namespace hkr {

struct VerifyOptions {
  std::uint64_t seed = 0;
  int regularity_samples = 100;
  int invariance_samples = 20;
  int fiber_samples = 25;
  int injectivity_pairs = 100;
  int jacobi_samples = 20;
};

struct CheckResult {
  std::string form;
  std::string check;
  bool ok = true;
  bool applicable = true;
  std::string detail;  // first counterexample, or a short summary
};

// Small random rationals p/q with |p| <= 9, 1 <= q <= 4.
Rational random_rational(std::mt19937_64& rng);
std::vector<Scalar> random_gamma(std::mt19937_64& rng, std::size_t n);

// Exact H-elements acting on the defining representation: Cayley transforms
// of compact elements of h, and exponentials of nilpotents in h^C.
Mat cayley(const Mat& a);
Mat exp_nilpotent(const Mat& n);
std::vector<CVec> nilpotent_directions_in_h(const FormAnalysis& fa);

std::vector<CheckResult> verify_form(const FormAnalysis& fa, const VerifyOptions& opt);
// Builds the analysis first; a construction error becomes a failed check.
std::vector<CheckResult> verify_form(const FormId& id, const VerifyOptions& opt);

}  // namespace hkr
