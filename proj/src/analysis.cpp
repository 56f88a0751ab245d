#include "hkr/analysis.hpp"

#include <algorithm>

namespace hkr {

std::vector<int> StructureSummary::m_degrees() const {
  std::vector<int> out;
  for (const auto& [m, in_m] : blocks)
    if (in_m) out.push_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

FormAnalysis::FormAnalysis(const FormId& fid)
    : id(fid), table(lookup_table1(fid)), form(build(fid)), roots(restricted_roots(form)) {
  const auto& s = form;
  if (static_cast<int>(s.real_rank()) != expected_real_rank(id))
    throw VerificationFailure(s.name() + ": real rank " + std::to_string(s.real_rank()) +
                              ", expected " + std::to_string(expected_real_rank(id)));
  if (roots.type.canonical() != canonical_type_label(table.restricted_type))
    throw MismatchWithTable1(s.name() + ": restricted root system of type " + roots.type.label() +
                             ", expected " + table.restricted_type);
  complex_roots = full_root_classification(s, roots);
  tds = build_tds(s, roots);
  verify_tds(s, roots, tds);
  triple = normal_triple(s, tds);
  verify_normal_triple(s, tds, triple);
  split = maximal_split_subalgebra(s, roots, tds, &table);
  modules = module_decomposition(s, triple);
  quasi = is_quasi_split(s, roots, triple);
  if (quasi.value() != table.quasi_split)
    throw MismatchWithTable1(s.name() + ": quasi-split flag differs from the reference list");
  section = section_basis(s, triple, modules);
  center = hkr::center(s);
  exponents = hkr::exponents(roots.reduced_type);

  // The m-located highest weights are the exponents, plus degree one for z_m.
  std::vector<int> expect = exponents;
  expect.insert(expect.end(), center.z_m.size(), 1);
  std::sort(expect.begin(), expect.end());
  if (summary().m_degrees() != expect)
    throw GradingFailure(s.name() + ": m-located module degrees differ from the exponents");
}

StructureSummary FormAnalysis::summary() const {
  StructureSummary out;
  out.name = form.name();
  out.a = form.real_rank();
  out.b = modules.b;
  out.c = modules.c;
  out.dim_z_m = center.z_m.size();
  out.dim_z_h = center.z_h.size();
  out.dim_g = form.dim();
  out.dim_h = form.dim_h();
  out.dim_m = form.dim_m();
  out.dim_split = split.basis.size();
  out.num_roots = complex_roots.num_roots;
  out.num_reduced_restricted = roots.reduced.size();
  for (const auto& b : modules.blocks) out.blocks.push_back({b.m, b.in_m});
  out.is_split = is_split();
  out.is_quasi_split = quasi.value();
  return out;
}

std::optional<std::string> FormAnalysis::fiber_match_obstruction() const {
  for (const auto& c : roots.reduced_type.components)
    if (c.family == "D" || c.family == "E" || c.family == "F" || c.family == "G")
      return "restricted type " + roots.reduced_type.label() + " is not A, B, C or BC";
  // D_2 = A_1 x A_1 and D_3 = A_3 appear here under their other names.
  if (table.reduced_type.rfind("D", 0) == 0)
    return "reference restricted type " + table.reduced_type;
  auto deg = section.degrees;
  std::sort(deg.begin(), deg.end());
  if (std::adjacent_find(deg.begin(), deg.end()) != deg.end())
    return "repeated invariant degree";
  return std::nullopt;
}

CVec FormAnalysis::a_element(const std::vector<Rational>& coeffs) const {
  CVec d(form.dim());
  for (std::size_t j = 0; j < coeffs.size() && j < form.real_rank(); ++j)
    d = axpy(Scalar(coeffs[j]), form.a_element(j), std::move(d));
  return d;
}

bool FormAnalysis::is_regular_in_a(const std::vector<Rational>& coeffs) const {
  for (const auto& r : roots.roots) {
    Rational v;
    for (std::size_t j = 0; j < r.coords.size() && j < coeffs.size(); ++j) v += r.coords[j] * coeffs[j];
    if (sgn(v) == 0) return false;
  }
  return true;
}

namespace {

Mat from_ints(std::size_t n, std::initializer_list<int> entries) {
  Mat m(n, n);
  std::size_t k = 0;
  for (int v : entries) {
    m(k / n, k % n) = v;
    ++k;
  }
  return m;
}

BlockTraceCheck block_traces(const std::string& what, const Mat& m) {
  const std::size_t h = m.rows() / 2;
  BlockTraceCheck out{what, Scalar(0), Scalar(0)};
  for (std::size_t k = 0; k < h; ++k) {
    out.trace_a += m(k, k);
    out.trace_b += m(h + k, h + k);
  }
  return out;
}

}  // namespace

Mat displayed_so6_w() {
  return from_ints(6, {0, 0, 0, 0, 0, 1,   //
                       0, 0, 0, 0, 0, 0,   //
                       0, 0, 0, -1, 0, 0,  //
                       0, 0, -1, 0, 0, 0,  //
                       0, 0, 0, 0, 0, 0,   //
                       1, 0, 0, 0, 0, 0});
}

Mat displayed_so6_y() {
  return from_ints(6, {0, 1, 0, 0, 0, 0,    //
                       -1, 0, 0, 0, 0, 1,   //
                       0, 0, 0, 0, -1, 0,   //
                       0, 0, 0, 0, 1, 0,    //
                       0, 0, -1, -1, 0, 0,  //
                       1, 0, 0, 0, 0, -1});
}

// The printed 10x10 w has a stray column; h_1 and h_2 follow the so*(6)
// pattern on the index pairs (1,10), (5,6) and (2,9), (4,7).
Mat displayed_so10_h(int k) {
  Mat m(10, 10);
  const std::size_t r = k == 1 ? 0 : 1;
  m(r, 9 - r) = 1;
  m(4 - r, 5 + r) = -1;
  m(5 + r, 4 - r) = -1;
  m(9 - r, r) = 1;
  return m;
}

Mat displayed_so10_y(int k) {
  if (k == 1)
    return from_ints(10, {0,  1,  1,  1,  0,  0,  -1, -1, -1, 0,   //
                          -1, 0,  0,  0,  1,  1,  0,  0,  0,  1,   //
                          -1, 0,  0,  0,  1,  1,  0,  0,  0,  1,   //
                          -1, 0,  0,  0,  1,  1,  0,  0,  0,  1,   //
                          0,  -1, -1, -1, 0,  0,  -1, -1, -1, 0,   //
                          0,  1,  1,  1,  0,  0,  1,  1,  1,  0,   //
                          -1, 0,  0,  0,  -1, -1, 0,  0,  0,  1,   //
                          -1, 0,  0,  0,  -1, -1, 0,  0,  0,  1,   //
                          -1, 0,  0,  0,  -1, -1, 0,  0,  0,  1,   //
                          0,  1,  1,  1,  0,  0,  -1, -1, -1, 0});
  return from_ints(10, {0,  -1, 0,  1,  0,  0,  1,  0,  1,  0,   //
                        1,  0,  1,  0,  1,  -1, 0,  -1, 0,  -1,  //
                        0,  -1, 0,  1,  0,  0,  1,  0,  1,  0,   //
                        -1, 0,  -1, 0,  -1, -1, 0,  -1, 0,  -1,  //
                        0,  -1, 0,  1,  0,  0,  1,  0,  1,  0,   //
                        0,  -1, 0,  -1, 0,  0,  -1, 0,  1,  0,   //
                        1,  0,  1,  0,  1,  1,  0,  1,  0,  1,   //
                        0,  -1, 0,  -1, 0,  0,  -1, 0,  1,  0,   //
                        1,  0,  1,  0,  1,  -1, 0,  -1, 0,  -1,  //
                        0,  -1, 0,  -1, 0,  0,  -1, 0,  1,  0});
}

bool SoStarReport::computed_ok() const {
  return !computed.empty() &&
         std::all_of(computed.begin(), computed.end(), [](const auto& c) { return c.ok(); });
}

SoStarReport so_star_lemma_check(int n) {
  if (n != 3 && n != 5) throw InvalidParams("the block-trace check covers so*(6) and so*(10)");
  SoStarReport rep;
  rep.n = n;
  FormAnalysis fa(FormId::so_star(n));
  const RealForm& s = fa.form;
  rep.computed.push_back(block_traces("x", s.to_matrix(fa.triple.x)));
  for (std::size_t i = 0; i < fa.tds.y.size(); ++i)
    rep.computed.push_back(block_traces("y_" + std::to_string(i + 1), s.to_matrix(fa.tds.y[i])));

  // The displayed Cartan elements must be the catalog's a-basis.
  std::vector<Mat> hs = n == 3 ? std::vector<Mat>{displayed_so6_w()}
                               : std::vector<Mat>{displayed_so10_h(1), displayed_so10_h(2)};
  for (std::size_t j = 0; j < hs.size(); ++j)
    if (s.coords(hs[j]) != s.a_element(j))
      throw VerificationFailure(s.name() + ": displayed Cartan element " + std::to_string(j + 1) +
                                " is not the chosen a-basis vector");

  std::vector<Mat> ys = n == 3 ? std::vector<Mat>{displayed_so6_y()}
                               : std::vector<Mat>{displayed_so10_y(1), displayed_so10_y(2)};
  rep.displayed_in_algebra = true;
  rep.displayed_eigen = true;
  for (std::size_t k = 0; k < ys.size(); ++k) {
    const std::string name = n == 3 ? "y" : "y_" + std::to_string(k + 1);
    rep.displayed.push_back(block_traces(name, ys[k]));
    if (!s.try_coords(ys[k])) {
      rep.displayed_in_algebra = false;
      rep.displayed_notes.push_back(name + " is not in so*(" + std::to_string(2 * n) + ")");
    }
    for (std::size_t j = 0; j < hs.size(); ++j) {
      Mat br = bracket(hs[j], ys[k]);
      // Eigenvector: [h, y] is a multiple of y.
      Span<Scalar> sp(ys[k].rows() * ys[k].cols());
      sp.add(flatten(ys[k]));
      if (!sp.contains(flatten(br))) {
        rep.displayed_eigen = false;
        rep.displayed_notes.push_back("[h_" + std::to_string(j + 1) + ", " + name +
                                      "] is not a multiple of " + name);
      }
    }
  }

  if (n == 3) {
    // g_lambda with lambda(w) = 1.
    long idx = fa.roots.find(QVec{Rational(1)});
    if (idx < 0) throw VerificationFailure(s.name() + ": no restricted root with value 1 on w");
    const auto& space = fa.roots.roots[static_cast<std::size_t>(idx)].space;
    const Mat& y = ys[0];
    const std::size_t dim = 36;
    Span<Scalar> sp(dim);
    for (const auto& v : space) sp.add(flatten(s.to_matrix(v)));
    rep.reproduces_displayed = sp.contains(flatten(y));
    // Agreement on the first five rows.
    Matrix<Scalar> sys(30, space.size());
    CVec rhs(30);
    for (std::size_t j = 0; j < space.size(); ++j) {
      Mat m = s.to_matrix(space[j]);
      for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 6; ++c) sys(r * 6 + c, j) = m(r, c);
    }
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 6; ++c) rhs[r * 6 + c] = y(r, c);
    if (auto sol = solve(sys, rhs)) {
      CVec v(s.dim());
      for (std::size_t j = 0; j < space.size(); ++j)
        v = axpy((*sol)[j], to_cvec(space[j]), std::move(v));
      Mat m = s.to_matrix(v);
      for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c)
          if (m(r, c) != y(r, c)) {
            rep.differing_rows.push_back(r + 1);
            break;
          }
      rep.closest = std::move(m);
    }
  }
  return rep;
}

}  // namespace hkr
