#pragma once

// Runs the whole construction for one form and keeps every intermediate
// result, verified, so that reports and checks can share them.

#include <optional>
#include <string>
#include <vector>

#include "hkr/kostant_rallis.hpp"

namespace hkr {

// Integer invariants consumed by the dimension formulas.
struct StructureSummary {
  std::string name;
  std::size_t a = 0;  // dim a, which contains z_m
  std::size_t b = 0;  // dim c_{h^C}(a^C)
  std::size_t c = 0;  // dim c_{h^C}(s^C)
  std::size_t dim_z_m = 0;
  std::size_t dim_z_h = 0;
  std::size_t dim_g = 0;
  std::size_t dim_h = 0;
  std::size_t dim_m = 0;
  std::size_t dim_split = 0;
  std::size_t num_roots = 0;             // #Delta, roots of g^C
  std::size_t num_reduced_restricted = 0;  // #Lambda-hat
  std::vector<std::pair<int, bool>> blocks;  // (m_k, located in m^C)
  bool is_split = false;
  bool is_quasi_split = false;

  // Degrees m_k of the m-located blocks, sorted.
  std::vector<int> m_degrees() const;
};

struct FormAnalysis {
  explicit FormAnalysis(const FormId& id);

  FormId id;
  TableOneEntry table;
  RealForm form;
  RestrictedRootData roots;
  ComplexRootData complex_roots;
  TdsConstruction tds;
  NormalTriple triple;
  SplitSubalgebra split;
  ModuleDecomposition modules;
  QuasiSplitResult quasi;
  SectionBasis section;
  CenterData center;
  std::vector<int> exponents;  // invariant degrees of W(Lambda-hat)

  bool is_split() const { return modules.b == 0; }
  StructureSummary summary() const;

  // Fiber matching by characteristic polynomials needs types A, B, C or BC
  // and pairwise distinct degrees; otherwise returns the reason.
  std::optional<std::string> fiber_match_obstruction() const;

  // sum_j coeffs_j a_j, and whether no restricted root vanishes on it.
  CVec a_element(const std::vector<Rational>& coeffs) const;
  bool is_regular_in_a(const std::vector<Rational>& coeffs) const;
};

// The so*(6) and so*(10) block-trace statement, checked on the computed
// triple and on the matrices displayed for it.
struct BlockTraceCheck {
  std::string what;
  Scalar trace_a, trace_b;
  bool ok() const { return trace_a.is_zero() && trace_b.is_zero(); }
};

struct SoStarReport {
  int n = 0;
  std::vector<BlockTraceCheck> computed;  // x and the y_i of the construction
  std::vector<BlockTraceCheck> displayed;  // the printed y matrices
  // Displayed matrices: membership in so*(2n) and the eigen-relation.
  std::vector<std::string> displayed_notes;
  bool displayed_in_algebra = false;
  bool displayed_eigen = false;
  // so*(6) only: whether the displayed y lies in g_lambda^C up to a scalar,
  // and an eigenvector that agrees with it on the first five rows.
  bool reproduces_displayed = false;
  std::optional<Mat> closest;
  std::vector<std::size_t> differing_rows;

  bool computed_ok() const;
};

SoStarReport so_star_lemma_check(int n);

// The matrices printed for so*(6) (w, y) and so*(10) (h_1, h_2, y_1, y_2).
Mat displayed_so6_w();
Mat displayed_so6_y();
Mat displayed_so10_h(int k);
Mat displayed_so10_y(int k);

}  // namespace hkr
