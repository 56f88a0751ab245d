#include "hkr/hitchin_dims.hpp"

#include <regex>

namespace hkr {

CurveContext CurveContext::parse(const std::string& text, int genus) {
  if (text == "K") return K(genus);
  if (text == "O") return O(genus);
  static const std::regex deg(R"(^deg:(-?\d+)$)");
  std::smatch m;
  if (!std::regex_match(text, m, deg))
    throw ParseError("line bundle must be K, O or deg:<int>, got '" + text + "'");
  return degree(genus, std::stol(m[1]));
}

void CurveContext::validate() const {
  if (genus < 2) throw InvalidParams("genus must be at least 2");
  if (canonical && trivial) throw InvalidParams("L cannot be both canonical and trivial");
  if (canonical && d_L != 2L * genus - 2) throw InvalidParams("deg K must be 2g - 2");
  if (trivial && d_L != 0) throw InvalidParams("the trivial bundle has degree 0");
}

std::string CurveContext::label() const {
  if (canonical) return "K";
  if (trivial) return "O";
  return "deg:" + std::to_string(d_L);
}

Cohomology h0_h1_line_power(long m, const CurveContext& ctx) {
  ctx.validate();
  const long g = ctx.genus;
  if (m == 0 || ctx.trivial) return {1, g};
  if (ctx.canonical) {
    if (m == 1) return {g, 1};
    if (m >= 2) return {(2 * m - 1) * (g - 1), 0};
    return {0, (1 - 2 * m) * (g - 1)};
  }
  const long deg = m * ctx.d_L;
  if (deg > 2 * g - 2) return {deg - g + 1, 0};
  if (deg < 0) return {0, g - 1 - deg};
  // A degree 2g - 2 bundle other than K has no sections of its dual twist.
  if (m == 1 && deg == 2 * g - 2) return {g - 1, 0};
  throw AmbiguousCohomology("h^1(L^" + std::to_string(m) + ") for a bundle of degree " +
                            std::to_string(deg) + " on a genus " + std::to_string(g) +
                            " curve depends on more than the degree");
}

namespace {

long as_integer(const Rational& q, const std::string& what) {
  if (q.get_den() != 1)
    throw RouteDisagreement(what + " is not an integer: " + q.get_str());
  return q.get_num().get_si();
}

Rational half_degree(const CurveContext& ctx) { return frac(ctx.d_L, 2); }

long h1_of_L(const StructureSummary& s, const CurveContext& ctx) {
  return s.dim_z_m ? h0_h1_line_power(1, ctx).h1 : 0;
}

long chi(long k, const CurveContext& ctx) { return k * ctx.d_L + 1 - ctx.genus; }

}  // namespace

BaseDim hitchin_base_dim(const StructureSummary& s, const CurveContext& ctx) {
  ctx.validate();
  BaseDim out;
  if (ctx.d_L == 0) {
    // Trivial L: the base is a^C/W itself. A nontrivial degree-zero L has no sections.
    out.degree_zero = true;
    out.value = out.direct = ctx.trivial ? static_cast<long>(s.a) : 0;
    out.closed = out.value;
    return out;
  }
  for (int m : s.m_degrees()) out.direct += h0_h1_line_power(m, ctx).h0;
  const Rational half = half_degree(ctx);
  out.closed = half * static_cast<long>(s.dim_split) +
               Rational(static_cast<long>(s.a)) * (half - ctx.genus + 1) +
               Rational(h1_of_L(s, ctx) * static_cast<long>(s.dim_z_m));
  out.value = as_integer(out.closed, s.name + ": closed-form base dimension");
  if (out.value != out.direct)
    throw RouteDisagreement(s.name + ": base dimension " + std::to_string(out.direct) +
                            " by Riemann-Roch, " + std::to_string(out.value) + " by the closed form");
  return out;
}

std::size_t GradedBundleSpec::h_count() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.h_powers.size();
  return n;
}

std::size_t GradedBundleSpec::m_count() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.m_powers.size();
  return n;
}

GradedBundleSpec graded_bundle_spec(const StructureSummary& s) {
  GradedBundleSpec spec;
  for (const auto& [m, in_m] : s.blocks) {
    GradedBlock b{m, in_m, {}, {}};
    std::vector<int> odd, even;  // m powers m-1, ..., 1-m and m-1 powers m-2, ..., 2-m
    for (int p = m - 1; p >= 1 - m; p -= 2) odd.push_back(p);
    for (int p = m - 2; p >= 2 - m; p -= 2) even.push_back(p);
    b.m_powers = in_m ? odd : even;
    b.h_powers = in_m ? even : odd;
    spec.blocks.push_back(std::move(b));
  }
  if (spec.h_count() != s.dim_h || spec.m_count() != s.dim_m)
    throw GradingFailure(s.name + ": graded pieces do not add up to dim h^C and dim m^C");
  return spec;
}

ModuliDim expected_moduli_dim(const StructureSummary& s, const CurveContext& ctx) {
  ctx.validate();
  ModuliDim out;
  if (ctx.d_L == 0) {
    out.applicable = false;
    return out;
  }
  const Rational half = half_degree(ctx);
  const long h1z = h1_of_L(s, ctx) * static_cast<long>(s.dim_z_m);
  const long a = static_cast<long>(s.a), b = static_cast<long>(s.b);
  out.closed = Rational(static_cast<long>(s.c) + h1z) + half * static_cast<long>(s.dim_g) +
               Rational(a - b) * (half - ctx.genus + 1);
  long graded = static_cast<long>(s.c) + h1z;
  for (const auto& blk : graded_bundle_spec(s).blocks) {
    for (int p : blk.m_powers) graded += chi(p + 1, ctx);
    for (int p : blk.h_powers) graded -= chi(p, ctx);
  }
  out.graded = graded;
  out.value = as_integer(out.closed, s.name + ": expected dimension");
  if (out.closed != out.graded)
    throw RouteDisagreement(s.name + ": expected dimension " + out.closed.get_str() +
                            " by the closed form, " + out.graded.get_str() + " by the graded sum");
  if (s.is_quasi_split) {
    out.smooth = Rational(static_cast<long>(s.dim_z_h) + h1z) + half * static_cast<long>(s.dim_g) +
                 Rational(static_cast<long>(s.dim_m) - static_cast<long>(s.dim_h)) *
                     (half - ctx.genus + 1);
    if (*out.smooth != out.closed)
      throw RouteDisagreement(s.name + ": expected dimension " + out.closed.get_str() +
                              " differs from the smooth-point count " + out.smooth->get_str());
  }
  return out;
}

OpennessTerms split_openness_test(const StructureSummary& s, const CurveContext& ctx) {
  ctx.validate();
  OpennessTerms t;
  const Rational half = half_degree(ctx);
  t.inequality = half * (static_cast<long>(s.dim_split) - static_cast<long>(s.dim_g)) +
                 Rational(static_cast<long>(s.b)) * (half - ctx.genus + 1) -
                 static_cast<long>(s.dim_z_h);
  const long pos_roots = static_cast<long>(s.num_roots / 2);
  const long pos_reduced = static_cast<long>(s.num_reduced_restricted / 2);
  t.root_term = -ctx.d_L * (pos_roots - pos_reduced);
  t.b_term = -static_cast<long>(s.b) * (ctx.genus - 1);
  t.z_h_term = -static_cast<long>(s.dim_z_h);
  t.reduced = t.root_term + t.b_term + t.z_h_term;
  t.open = t.reduced >= 0;
  if (s.is_quasi_split && t.inequality != t.reduced)
    throw RouteDisagreement(s.name + ": openness inequality " + t.inequality.get_str() +
                            " differs from its reduced form " + std::to_string(t.reduced));
  const bool all_zero = t.root_term == 0 && t.b_term == 0 && t.z_h_term == 0;
  if (t.open != all_zero || t.open != s.is_split)
    throw RouteDisagreement(s.name + ": openness does not coincide with splitness");
  return t;
}

Integer component_count(const Integer& n, int genus) {
  if (sgn(n) <= 0) throw InvalidParams("N must be positive");
  if (genus < 0) throw InvalidParams("genus must be nonnegative");
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, 2UL * static_cast<unsigned long>(genus));
  return n * p;
}

std::string to_string(Sl2Moduli m) {
  switch (m) {
    case Sl2Moduli::empty: return "empty";
    case Sl2Moduli::all_semistable: return "all_semistable";
    case Sl2Moduli::picard_torsor: return "picard_torsor";
  }
  return "?";
}

Sl2Moduli sl2_moduli_classify(const Rational& alpha, long d, long d_L) {
  if (Rational(d) > abs(frac(d_L, 2)) || Rational(d) < alpha) return Sl2Moduli::empty;
  if (Rational(d) == alpha) return Sl2Moduli::picard_torsor;
  return Sl2Moduli::all_semistable;
}

DimensionReport dimension_report(const FormAnalysis& fa, const CurveContext& ctx) {
  DimensionReport r;
  r.structure = fa.summary();
  r.ctx = ctx;
  r.exponents = fa.exponents;
  r.base = hitchin_base_dim(r.structure, ctx);
  r.moduli = expected_moduli_dim(r.structure, ctx);
  if (ctx.d_L >= 2L * ctx.genus - 2 && ctx.d_L > 0) {
    r.openness = split_openness_test(r.structure, ctx);
    r.hkr_open = r.openness->open;
    if (r.structure.is_quasi_split &&
        Rational(r.base.value - r.moduli.value) != r.openness->inequality)
      throw RouteDisagreement(r.structure.name +
                              ": base minus moduli dimension differs from the openness inequality");
  }
  return r;
}

}  // namespace hkr
