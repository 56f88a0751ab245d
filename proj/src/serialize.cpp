#include "hkr/serialize.hpp"

namespace hkr {

Json to_json(const Scalar& s) { return s.str(); }

Json to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const QVec& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(q.get_str());
  return out;
}

Mat matrix_from_json(const Json& j) {
  const std::size_t n = j.size();
  Mat m(n, n ? j[0].size() : 0);
  for (std::size_t r = 0; r < n; ++r) {
    if (j[r].size() != m.cols()) throw ParseError("ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = Scalar::parse(j[r][c].get<std::string>());
  }
  return m;
}

namespace {

Json header(const FormAnalysis& fa) {
  return Json{{"schema", kSchemaVersion}, {"form", fa.id.str()}, {"label", fa.id.label()}};
}

Json ints(const std::vector<int>& v) { return Json(v); }

}  // namespace

Json describe_json(const FormAnalysis& fa) {
  Json j = header(fa);
  const auto& rd = fa.roots;
  j["dim"] = fa.form.dim();
  j["dim_h"] = fa.form.dim_h();
  j["dim_m"] = fa.form.dim_m();
  j["real_rank"] = fa.form.real_rank();
  Json roots = Json::array();
  for (const auto& r : rd.roots) roots.push_back({{"coords", to_json(r.coords)}, {"mult", r.multiplicity}});
  Json simple = Json::array();
  for (auto k : rd.simple) simple.push_back(to_json(rd.roots[k].coords));
  Json cartan = Json::array();
  Matrix<Rational> cm = rd.cartan_matrix();
  for (std::size_t r = 0; r < cm.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < cm.cols(); ++c) row.push_back(cm(r, c).get_num().get_si());
    cartan.push_back(std::move(row));
  }
  j["restricted"] = {{"type", rd.type.label()},
                     {"rank", rd.real_rank},
                     {"roots", roots},
                     {"simple", simple},
                     {"cartan_matrix", cartan},
                     {"reduced_type", rd.reduced_type.label()},
                     {"weyl_order", rd.weyl_order},
                     {"exponents", ints(fa.exponents)}};
  const auto& cr = fa.complex_roots;
  j["complex_roots"] = {{"cartan_dim", cr.dim_d},
                        {"total", cr.num_roots},
                        {"imaginary", cr.num_imaginary},
                        {"real", cr.num_real},
                        {"complex", cr.num_complex}};
  j["split_sub"] = fa.table.split_sub;
  j["split_dim"] = fa.split.basis.size();
  j["split_type"] = fa.split.type.label();
  j["is_split"] = fa.is_split();
  j["quasi_split"] = fa.quasi.value();
  j["center"] = {{"z_h", fa.center.z_h.size()}, {"z_m", fa.center.z_m.size()}};
  return j;
}

Json hkr_json(const FormAnalysis& fa) {
  const auto& s = fa.form;
  Json j = header(fa);
  j["e"] = to_json(s.to_matrix(fa.triple.e));
  j["f"] = to_json(s.to_matrix(fa.triple.f));
  j["x"] = to_json(s.to_matrix(fa.triple.x));
  j["w"] = to_json(s.to_matrix(fa.tds.w));
  j["e_c"] = to_json(s.to_matrix(fa.tds.e_c));
  j["f_c"] = to_json(s.to_matrix(fa.tds.f_c));
  Json tds = Json::array();
  for (std::size_t i = 0; i < fa.tds.y.size(); ++i)
    tds.push_back({{"b", fa.tds.b[i].get_str()},
                   {"c", fa.tds.c[i].get_str()},
                   {"d", fa.tds.d[i].str()},
                   {"y", to_json(s.to_matrix(fa.tds.y[i]))}});
  j["simple_root_data"] = tds;
  Json eb = Json::array();
  for (const auto& e : fa.section.e_basis) eb.push_back(to_json(s.to_matrix(e)));
  j["e_basis"] = eb;
  j["degrees"] = ints(fa.section.degrees);
  Json blocks = Json::array();
  for (const auto& b : fa.modules.blocks) blocks.push_back({{"m", b.m}, {"in", b.in_m ? "m" : "h"}});
  j["modules"] = {{"blocks", blocks}, {"a", fa.modules.a}, {"b", fa.modules.b}, {"c", fa.modules.c}};
  j["relations_verified"] = true;
  j["table1_match"] = fa.table.split_sub;
  return j;
}

Json section_json(const FormAnalysis& fa, const std::vector<Scalar>& gamma) {
  const auto& s = fa.form;
  CVec x = section_point(fa.section, gamma);
  Json j = header(fa);
  Json g = Json::array();
  for (const auto& v : gamma) g.push_back(v.str());
  j["gamma"] = g;
  j["degrees"] = ints(fa.section.degrees);
  j["point"] = to_json(s.to_matrix(x));
  const std::size_t cdim = centralizer_dim_in_m(s, x);
  j["centralizer_dim"] = cdim;
  j["regular"] = cdim == s.real_rank();
  Json cp = Json::array();
  for (const auto& c : defining_charpoly(s, x)) cp.push_back(c.str());
  j["charpoly"] = cp;
  return j;
}

Json dims_json(const DimensionReport& r) {
  const auto& s = r.structure;
  Json j{{"schema", kSchemaVersion}, {"form", s.name}};
  j["genus"] = r.ctx.genus;
  j["L"] = r.ctx.label();
  j["d_L"] = r.ctx.d_L;
  j["a"] = s.a;
  j["b"] = s.b;
  j["c"] = s.c;
  j["dim_z_m"] = s.dim_z_m;
  j["dim_z_h"] = s.dim_z_h;
  j["dim_g_C"] = s.dim_g;
  j["dim_h_C"] = s.dim_h;
  j["dim_m_C"] = s.dim_m;
  j["dim_split_C"] = s.dim_split;
  j["num_roots"] = s.num_roots;
  j["num_reduced_restricted"] = s.num_reduced_restricted;
  j["exponents"] = ints(r.exponents);
  j["base_dim"] = r.base.value;
  j["base_dim_routes"] = {{"riemann_roch", r.base.direct}, {"closed_form", r.base.closed.get_str()}};
  if (r.moduli.applicable) {
    j["expected_moduli_dim"] = r.moduli.value;
    Json routes{{"closed_form", r.moduli.closed.get_str()}, {"graded", r.moduli.graded.get_str()}};
    if (r.moduli.smooth) routes["smooth_point"] = r.moduli.smooth->get_str();
    j["expected_moduli_dim_routes"] = routes;
  } else {
    j["expected_moduli_dim"] = nullptr;
  }
  j["is_split"] = s.is_split;
  j["is_quasi_split"] = s.is_quasi_split;
  j["hkr_open"] = r.hkr_open;
  if (r.openness) {
    const auto& t = *r.openness;
    j["openness"] = {{"inequality", t.inequality.get_str()},
                     {"reduced", t.reduced},
                     {"root_term", t.root_term},
                     {"b_term", t.b_term},
                     {"z_h_term", t.z_h_term}};
  }
  return j;
}

Json table1_json(const TableOneEntry& e) {
  return {{"class", e.cartan_class},
          {"form", e.form},
          {"split_sub", e.split_sub},
          {"restricted_type", e.restricted_type},
          {"reduced_type", e.reduced_type},
          {"split_dim", e.split_dim},
          {"quasi_split", e.quasi_split}};
}

Json lemma73_json(const SoStarReport& r) {
  auto traces = [](const std::vector<BlockTraceCheck>& v) {
    Json out = Json::array();
    for (const auto& c : v)
      out.push_back({{"element", c.what},
                     {"trace_A", c.trace_a.str()},
                     {"trace_B", c.trace_b.str()},
                     {"ok", c.ok()}});
    return out;
  };
  Json j{{"schema", kSchemaVersion}, {"form", "so*(" + std::to_string(2 * r.n) + ")"}};
  j["computed"] = traces(r.computed);
  j["computed_ok"] = r.computed_ok();
  j["displayed"] = traces(r.displayed);
  j["displayed_in_algebra"] = r.displayed_in_algebra;
  j["displayed_eigen"] = r.displayed_eigen;
  j["displayed_notes"] = r.displayed_notes;
  if (r.n == 3) {
    j["reproduces_displayed"] = r.reproduces_displayed;
    if (r.closest) {
      j["closest"] = to_json(*r.closest);
      j["differing_rows"] = r.differing_rows;
    }
  }
  return j;
}

}  // namespace hkr
