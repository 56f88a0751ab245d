#pragma once

// Riemann-Roch bookkeeping for the Hitchin base and the expected dimension
// of the moduli space, driven by the integer invariants of a form.

#include <optional>
#include <string>
#include <vector>

#include "hkr/analysis.hpp"

namespace hkr {

struct CurveContext {
  int genus = 2;
  long d_L = 2;
  bool canonical = true;
  bool trivial = false;

  static CurveContext K(int g) { return {g, 2L * g - 2, true, false}; }
  static CurveContext O(int g) { return {g, 0, false, true}; }
  static CurveContext degree(int g, long d) { return {g, d, false, false}; }
  // Accepts "K", "O" or "deg:<int>".
  static CurveContext parse(const std::string& text, int genus);

  void validate() const;
  std::string label() const;  // "K", "O" or "deg:<d>"
};

struct Cohomology {
  long h0 = 0;
  long h1 = 0;
};

// h^0 and h^1 of L^m. Throws AmbiguousCohomology when the degree m d_L lies
// where the answer depends on the line bundle and not only on its degree.
Cohomology h0_h1_line_power(long m, const CurveContext& ctx);

struct BaseDim {
  long value = 0;
  long direct = 0;      // sum of h^0(L^{m_k}) over the m-located blocks
  Rational closed;      // (d_L/2) dim g-hat + a (d_L/2 - g + 1) + h^1(L) dim z_m
  bool degree_zero = false;  // evaluated by the degree-zero rule instead
};
// Throws RouteDisagreement if the routes differ or the closed form is not integral.
BaseDim hitchin_base_dim(const StructureSummary& s, const CurveContext& ctx);

struct GradedBlock {
  int m = 0;
  bool in_m = false;
  std::vector<int> h_powers, m_powers;
};
struct GradedBundleSpec {
  std::vector<GradedBlock> blocks;
  std::size_t h_count() const;
  std::size_t m_count() const;
};
GradedBundleSpec graded_bundle_spec(const StructureSummary& s);

struct ModuliDim {
  bool applicable = true;  // false for d_L = 0
  long value = 0;
  Rational closed;               // c + h^1(z_m L) + (d_L/2) dim g + (a - b)(d_L/2 - g + 1)
  Rational graded;               // c + h^1(z_m L) + chi(E(m) L) - chi(E(h))
  std::optional<Rational> smooth;  // dim z_h + h^1(z_m L) + (d_L/2) dim g + (dim m - dim h)(...)
};
ModuliDim expected_moduli_dim(const StructureSummary& s, const CurveContext& ctx);

struct OpennessTerms {
  Rational inequality;  // (d_L/2)(dim g-hat - dim g) + b (d_L/2 - g + 1) - dim z_h
  long reduced = 0;     // -d_L (#Delta+ - #Lambda-hat+) - b (g - 1) - dim z_h
  long root_term = 0;   // -d_L (#Delta+ - #Lambda-hat+)
  long b_term = 0;      // -b (g - 1)
  long z_h_term = 0;    // -dim z_h
  bool open = false;
};
// Throws RouteDisagreement if, for a quasi-split form, the two forms of the
// inequality differ, or if openness does not coincide with splitness.
OpennessTerms split_openness_test(const StructureSummary& s, const CurveContext& ctx);

Integer component_count(const Integer& n, int genus);

enum class Sl2Moduli { empty, all_semistable, picard_torsor };
std::string to_string(Sl2Moduli m);
Sl2Moduli sl2_moduli_classify(const Rational& alpha, long d, long d_L);

struct DimensionReport {
  StructureSummary structure;
  CurveContext ctx;
  std::vector<int> exponents;
  BaseDim base;
  ModuliDim moduli;
  std::optional<OpennessTerms> openness;  // only when d_L >= 2g - 2
  bool hkr_open = false;
};
DimensionReport dimension_report(const FormAnalysis& fa, const CurveContext& ctx);

}  // namespace hkr
