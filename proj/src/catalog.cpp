#include "hkr/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <regex>

namespace hkr {

namespace {

struct FamilyName {
  Family family;
  const char* key;
  bool two_params;
};

constexpr FamilyName kFamilies[] = {
    {Family::sl_R, "sl_r", false},    {Family::su_pq, "su", true},
    {Family::sp2n_R, "sp_r", false},  {Family::so_pq, "so", true},
    {Family::su_star, "su_star", false}, {Family::sp_pq, "sp", true},
    {Family::so_star, "so_star", false}, {Family::sl_C_as_real, "sl_c", false},
};

const FamilyName& family_name(Family f) {
  for (const auto& fn : kFamilies)
    if (fn.family == f) return fn;
  throw InvalidParams("unknown family");
}

int parse_int(const std::string& s, std::string_view text) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad integer in form '" + std::string(text) + "'");
  }
}

}  // namespace

FormId FormId::parse(std::string_view text) {
  std::string t(text);
  std::smatch m;
  static const std::regex cli(R"(^([a-z_]+):(.*)$)");
  static const std::regex label(R"(^(sl|su|sp|so)(\*?)\((\d+)(?:,(\d+|R|C))?\)$)");
  FormId id;
  if (std::regex_match(t, m, cli)) {
    const FamilyName* fn = nullptr;
    for (const auto& f : kFamilies)
      if (m[1] == f.key) fn = &f;
    if (!fn) throw ParseError("unknown form family '" + m[1].str() + "'");
    id.family = fn->family;
    std::map<std::string, int> kv;
    std::string rest = m[2];
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      std::size_t comma = rest.find(',', pos);
      std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      std::size_t eq = item.find('=');
      if (eq == std::string::npos) throw ParseError("expected key=value in '" + t + "'");
      kv[item.substr(0, eq)] = parse_int(item.substr(eq + 1), text);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (fn->two_params) {
      if (kv.size() != 2 || !kv.count("p") || !kv.count("q"))
        throw ParseError("form '" + t + "' needs p=..,q=..");
      id.p = kv["p"];
      id.q = kv["q"];
    } else {
      if (kv.size() != 1 || !kv.count("n")) throw ParseError("form '" + t + "' needs n=..");
      id.p = kv["n"];
    }
  } else if (std::regex_match(t, m, label)) {
    std::string base = m[1], star = m[2], second = m[4];
    int a = parse_int(m[3], text);
    if (star == "*") {
      if (!second.empty() || a % 2) throw ParseError("bad form label '" + t + "'");
      id = base == "su" ? FormId::su_star(a / 2) : base == "so" ? FormId::so_star(a / 2)
                                                               : throw ParseError("bad form label '" + t + "'");
    } else if (second == "R") {
      if (base == "sl")
        id = FormId::sl_r(a);
      else if (base == "sp" && a % 2 == 0)
        id = FormId::sp_r(a / 2);
      else
        throw ParseError("bad form label '" + t + "'");
    } else if (second == "C") {
      if (base != "sl") throw ParseError("bad form label '" + t + "'");
      id = FormId::sl_c(a);
    } else if (!second.empty() && base != "sl") {
      int b = parse_int(second, text);
      id = base == "su" ? FormId::su(a, b) : base == "so" ? FormId::so(a, b) : FormId::sp(a, b);
    } else {
      throw ParseError("bad form label '" + t + "'");
    }
  } else {
    throw ParseError("unrecognized form '" + t + "'");
  }
  id.validate();
  return id;
}

std::string FormId::str() const {
  const auto& fn = family_name(family);
  if (fn.two_params)
    return std::string(fn.key) + ":p=" + std::to_string(p) + ",q=" + std::to_string(q);
  return std::string(fn.key) + ":n=" + std::to_string(p);
}

std::string FormId::label() const {
  auto s = [](int v) { return std::to_string(v); };
  switch (family) {
    case Family::sl_R: return "sl(" + s(p) + ",R)";
    case Family::su_pq: return "su(" + s(p) + "," + s(q) + ")";
    case Family::sp2n_R: return "sp(" + s(2 * p) + ",R)";
    case Family::so_pq: return "so(" + s(p) + "," + s(q) + ")";
    case Family::su_star: return "su*(" + s(2 * p) + ")";
    case Family::sp_pq: return "sp(" + s(p) + "," + s(q) + ")";
    case Family::so_star: return "so*(" + s(2 * p) + ")";
    case Family::sl_C_as_real: return "sl(" + s(p) + ",C)";
  }
  return "?";
}

std::size_t FormId::matrix_size() const {
  switch (family) {
    case Family::sl_R: return p;
    case Family::su_pq:
    case Family::so_pq: return p + q;
    case Family::sp_pq: return 2 * (p + q);
    default: return 2 * p;
  }
}

void FormId::validate() const {
  auto bad = [&](const std::string& why) { throw InvalidParams(str() + ": " + why); };
  switch (family) {
    case Family::sl_R:
    case Family::su_star:
    case Family::sl_C_as_real:
      if (p < 2) bad("n must be at least 2");
      break;
    case Family::sp2n_R:
      if (p < 1) bad("n must be at least 1");
      break;
    case Family::so_star:
      if (p < 2) bad("n must be at least 2");
      break;
    case Family::su_pq:
    case Family::sp_pq:
      if (p < 1 || q < 1) bad("p and q must be at least 1");
      break;
    case Family::so_pq:
      if (p < 1 || q < 1 || p + q < 3) bad("need p, q >= 1 and p + q >= 3");
      break;
  }
}

std::size_t max_matrix_size() {
  if (const char* env = std::getenv("HKR_MAX_DIM")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 12;
}

namespace {

using Constraint = std::function<Mat(const Mat&)>;

Mat unit(std::size_t n, std::size_t r, std::size_t c, Scalar v = Scalar(1)) {
  Mat m(n, n);
  m(r, c) = v;
  return m;
}

Mat entry_conj(const Mat& x) {
  Mat m(x.rows(), x.cols());
  for (std::size_t k = 0; k < x.data().size(); ++k) m.data()[k] = x.data()[k].conj();
  return m;
}

Mat diag_pm(std::size_t plus, std::size_t minus) {
  Mat m(plus + minus, plus + minus);
  for (std::size_t k = 0; k < plus + minus; ++k) m(k, k) = k < plus ? 1 : -1;
  return m;
}

// Real basis of {X : all constraints vanish, X* = sign * X}, found as a kernel
// over Q in the 2n^2 real coordinates of X.
std::vector<Mat> real_kernel(std::size_t n, bool real_entries, const std::vector<Constraint>& cons,
                             int star_sign) {
  std::vector<Constraint> all = cons;
  all.push_back([star_sign](const Mat& x) {
    Mat s = conj_transpose(x);
    return star_sign > 0 ? x - s : x + s;
  });
  const std::size_t nn = n * n;
  const std::size_t params = real_entries ? nn : 2 * nn;
  auto param_matrix = [&](std::size_t p) {
    return p < nn ? unit(n, p / n, p % n) : unit(n, (p - nn) / n, (p - nn) % n, Scalar::i());
  };
  std::vector<std::vector<Scalar>> images(params);
  std::size_t rows = 0;
  for (std::size_t p = 0; p < params; ++p) {
    Mat x = param_matrix(p);
    for (const auto& c : all) {
      Mat y = c(x);
      images[p].insert(images[p].end(), y.data().begin(), y.data().end());
    }
    rows = images[p].size();
  }
  Matrix<Rational> m(2 * rows, params);
  for (std::size_t p = 0; p < params; ++p)
    for (std::size_t r = 0; r < rows; ++r) {
      const Scalar& v = images[p][r];
      if (v.is_zero()) continue;
      Scalar re = (v + v.conj()) * Scalar(Rational(1, 2));
      Scalar im = (v - v.conj()) * Scalar(Rational(0), Rational(-1, 2));
      m(2 * r, p) = re.to_rational();
      m(2 * r + 1, p) = im.to_rational();
    }
  std::vector<Mat> out;
  for (const auto& k : kernel(m)) {
    Mat x(n, n);
    for (std::size_t p = 0; p < params; ++p)
      if (sgn(k[p]) != 0) x += param_matrix(p) * Scalar(k[p]);
    out.push_back(std::move(x));
  }
  return out;
}

// Traceless as a matrix-valued constraint (tr X placed at (0,0)).
Mat trace_constraint(const Mat& x) {
  Mat m(x.rows(), x.cols());
  m(0, 0) = trace(x);
  return m;
}

Constraint preserves_form_transpose(const Mat& j) {
  return [j](const Mat& x) { return x.transpose() * j + j * x; };
}
Constraint preserves_form_star(const Mat& j) {
  return [j](const Mat& x) { return conj_transpose(x) * j + j * x; };
}
Constraint quaternionic(std::size_t half) {
  Mat j(2 * half, 2 * half);
  for (std::size_t k = 0; k < half; ++k) {
    j(k, half + k) = -1;
    j(half + k, k) = 1;
  }
  return [j](const Mat& x) { return x * j - j * entry_conj(x); };
}
Constraint real_entries() {
  return [](const Mat& x) { return x - entry_conj(x); };
}

}  // namespace

RealForm build(const FormId& id) {
  id.validate();
  const std::size_t n = id.matrix_size();
  if (n > max_matrix_size())
    throw SizeBound(id.str() + " needs " + std::to_string(n) + "x" + std::to_string(n) +
                    " matrices; bound is " + std::to_string(max_matrix_size()));
  std::vector<Constraint> cons;
  std::vector<Mat> a;
  bool real = false;
  const std::size_t p = id.p, q = id.q;
  auto hyperbolic_a = [&](std::size_t pp, std::size_t qq, std::size_t copies) {
    const std::size_t half = pp + qq;
    for (std::size_t j = 0; j < std::min(pp, qq); ++j) {
      Mat x(n, n);
      for (std::size_t c = 0; c < copies; ++c) {
        x(c * half + j, c * half + pp + j) = 1;
        x(c * half + pp + j, c * half + j) = 1;
      }
      a.push_back(std::move(x));
    }
  };
  auto diagonal_a = [&](std::size_t size, std::size_t copies) {
    for (std::size_t j = 0; j + 1 < size; ++j) {
      Mat x(n, n);
      for (std::size_t c = 0; c < copies; ++c) {
        x(c * size + j, c * size + j) = 1;
        x(c * size + j + 1, c * size + j + 1) = -1;
      }
      a.push_back(std::move(x));
    }
  };
  switch (id.family) {
    case Family::sl_R:
      real = true;
      cons = {trace_constraint};
      diagonal_a(n, 1);
      break;
    case Family::su_pq:
      cons = {preserves_form_star(diag_pm(p, q)), trace_constraint};
      hyperbolic_a(p, q, 1);
      break;
    case Family::so_pq:
      real = true;
      cons = {preserves_form_transpose(diag_pm(p, q))};
      hyperbolic_a(p, q, 1);
      break;
    case Family::sp2n_R: {
      real = true;
      Mat om(n, n);
      for (std::size_t k = 0; k < n; ++k) om(k, n - 1 - k) = k < p ? 1 : -1;
      cons = {preserves_form_transpose(om)};
      for (std::size_t j = 0; j < p; ++j) {
        Mat x(n, n);
        x(j, j) = 1;
        x(n - 1 - j, n - 1 - j) = -1;
        a.push_back(std::move(x));
      }
      break;
    }
    case Family::su_star:
      cons = {quaternionic(p), trace_constraint};
      diagonal_a(p, 2);
      break;
    case Family::sp_pq: {
      Mat k(n, n);
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t j = 0; j < p + q; ++j) k(c * (p + q) + j, c * (p + q) + j) = j < p ? 1 : -1;
      cons = {quaternionic(p + q), preserves_form_star(k)};
      hyperbolic_a(p, q, 2);
      break;
    }
    case Family::so_star: {
      Mat j(n, n);
      for (std::size_t k = 0; k < p; ++k) {
        j(k, p + k) = 1;
        j(p + k, k) = 1;
      }
      cons = {preserves_form_star(diag_pm(p, p)), preserves_form_transpose(j)};
      for (std::size_t r = 0; r < p / 2; ++r) {
        Mat x(n, n);
        x(r, n - 1 - r) = 1;
        x(p - 1 - r, p + r) = -1;
        x(p + r, p - 1 - r) = -1;
        x(n - 1 - r, r) = 1;
        a.push_back(std::move(x));
      }
      break;
    }
    case Family::sl_C_as_real: {
      const std::size_t m = p;
      cons = {[m](const Mat& x) {
                Mat y(x.rows(), x.cols());
                for (std::size_t r = 0; r < 2 * m; ++r)
                  for (std::size_t c = 0; c < 2 * m; ++c)
                    if ((r < m) != (c < m)) y(r, c) = x(r, c);
                for (std::size_t r = 0; r < m; ++r)
                  for (std::size_t c = 0; c < m; ++c) y(m + r, m + c) = x(m + r, m + c) - x(r, c).conj();
                Scalar tr;
                for (std::size_t r = 0; r < m; ++r) tr += x(r, r);
                y(0, 0) = tr;
                return y;
              }};
      diagonal_a(m, 2);
      break;
    }
  }
  if (real) cons.push_back(real_entries());
  auto h = real_kernel(n, real, cons, -1);
  auto m = real_kernel(n, real, cons, +1);
  return RealForm(id.label(), n, std::move(h), std::move(m), a);
}

namespace {

std::string typ(const char* fam, int r) { return std::string(fam) + "_" + std::to_string(r); }
std::string so_label(int p, int q) { return "so(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
std::string sp_label(int n) { return "sp(" + std::to_string(2 * n) + ",R)"; }
std::string sl_label(int n) { return "sl(" + std::to_string(n) + ",R)"; }

}  // namespace

TableOneEntry lookup_table1(const FormId& id) {
  id.validate();
  TableOneEntry e;
  e.form = id.label();
  const int lo = std::min(id.p, id.q), hi = std::max(id.p, id.q);
  auto split_sl = [&](int n) {
    e.split_sub = sl_label(n);
    e.split_dim = n * n - 1;
    e.restricted_type = e.reduced_type = typ("A", n - 1);
  };
  auto split_so_odd = [&](int r) {  // so(r, r+1), type B_r
    e.split_sub = so_label(r, r + 1);
    e.split_dim = r * (2 * r + 1);
    e.reduced_type = typ("B", r);
  };
  auto split_sp = [&](int r) {  // sp(2r,R), type C_r
    e.split_sub = sp_label(r);
    e.split_dim = r * (2 * r + 1);
    e.restricted_type = e.reduced_type = typ("C", r);
  };
  switch (id.family) {
    case Family::sl_R:
      e.cartan_class = "AI";
      split_sl(id.p);
      e.quasi_split = true;
      break;
    case Family::su_star:
      e.cartan_class = "AII";
      split_sl(id.p);
      e.quasi_split = false;
      break;
    case Family::su_pq:
      e.cartan_class = "AIII";
      if (lo == hi) {
        split_sp(lo);
      } else {
        split_so_odd(lo);
        e.restricted_type = typ("BC", lo);
      }
      e.quasi_split = hi - lo <= 1;
      break;
    case Family::sp2n_R:
      e.cartan_class = "CI";
      split_sp(id.p);
      e.quasi_split = true;
      break;
    case Family::sp_pq:
      e.cartan_class = "CII";
      if (lo == hi) {
        split_sp(lo);
      } else {
        split_so_odd(lo);
        e.restricted_type = typ("BC", lo);
      }
      e.quasi_split = false;
      break;
    case Family::so_pq:
      if (lo == hi) {
        e.cartan_class = "DI";
        e.split_sub = so_label(lo, lo);
        e.split_dim = lo * (2 * lo - 1);
        e.restricted_type = e.reduced_type = typ("D", lo);
      } else {
        e.cartan_class = (id.p + id.q) % 2 ? "BI" : "BDI";
        split_so_odd(lo);
        e.restricted_type = e.reduced_type;
      }
      e.quasi_split = hi - lo <= 2;
      break;
    case Family::so_star: {
      e.cartan_class = "DIII";
      const int half = id.p / 2;
      if (id.p % 2) {
        split_so_odd(half);
        e.restricted_type = typ("BC", half);
      } else {
        split_sp(half);
      }
      e.quasi_split = false;
      break;
    }
    case Family::sl_C_as_real:
      e.cartan_class = "complex";
      split_sl(id.p);
      e.quasi_split = true;
      break;
  }
  return e;
}

const std::vector<TableOneEntry>& exceptional_entries() {
  static const std::vector<TableOneEntry> rows = {
      {"EI", "e6(6)", "e6(6)", "E_6", "E_6", 78, true},
      {"EII", "e6(2)", "f4(4)", "F_4", "F_4", 52, true},
      {"EIII", "e6(-14)", "so(3,2)", "BC_2", "B_2", 10, false},
      {"EIV", "e6(-26)", "sl(3,R)", "A_2", "A_2", 8, false},
      {"EV", "e7(7)", "e7(7)", "E_7", "E_7", 133, true},
      {"EVI", "e7(-5)", "f4(4)", "F_4", "F_4", 52, false},
      {"EVII", "e7(-25)", "sp(6,R)", "C_3", "C_3", 21, false},
      {"EVIII", "e8(8)", "e8(8)", "E_8", "E_8", 248, true},
      {"EIX", "e8(-24)", "f4(4)", "F_4", "F_4", 52, false},
      {"FI", "f4(4)", "f4(4)", "F_4", "F_4", 52, true},
      {"FII", "f4(-20)", "sl(2,R)", "BC_1", "A_1", 3, false},
      {"G", "g2(2)", "g2(2)", "G_2", "G_2", 14, true},
  };
  return rows;
}

TableOneEntry lookup_table1(std::string_view label) {
  for (const auto& e : exceptional_entries())
    if (e.form == label) return e;
  try {
    return lookup_table1(FormId::parse(label));
  } catch (const ParseError&) {
    throw NotInTable("'" + std::string(label) + "' is not a row of the table");
  }
}

const std::vector<TableOneRow>& table1_rows() {
  static const std::vector<TableOneRow> rows = [] {
    std::vector<TableOneRow> r = {
        {"AI", "sl(n,R)", "sl(n,R)"},
        {"AII", "su*(2n)", "sl(n,R)"},
        {"AIII", "su(p,q), p<q", "so(p,p+1)"},
        {"AIII", "su(p,p)", "sp(2p,R)"},
        {"BI", "so(2p,2q+1), p<q", "so(2p,2p+1)"},
        {"CI", "sp(2n,R)", "sp(2n,R)"},
        {"CII", "sp(p,q), p<q", "so(p,p+1)"},
        {"CII", "sp(p,p)", "sp(2p,R)"},
        {"BDI", "so(p,q), p<q", "so(p,p+1)"},
        {"DI", "so(p,p)", "so(p,p)"},
        {"DIII", "so*(4p+2)", "so(p,p+1)"},
        {"DIII", "so*(4p)", "sp(2p,R)"},
    };
    for (const auto& e : exceptional_entries()) r.push_back({e.cartan_class, e.form, e.split_sub});
    return r;
  }();
  return rows;
}

int expected_real_rank(const FormId& id) {
  switch (id.family) {
    case Family::su_pq:
    case Family::so_pq:
    case Family::sp_pq: return std::min(id.p, id.q);
    case Family::sl_R:
    case Family::su_star:
    case Family::sl_C_as_real: return id.p - 1;
    case Family::sp2n_R: return id.p;
    case Family::so_star: return id.p / 2;
  }
  return 0;
}

std::vector<FormId> default_forms() {
  std::vector<FormId> f = {
      FormId::sl_r(2),    FormId::sl_r(3),    FormId::sl_r(4),    FormId::su(1, 1),
      FormId::su(1, 2),   FormId::su(1, 3),   FormId::su(2, 2),   FormId::su(2, 3),
      FormId::su(3, 3),   FormId::sp_r(1),    FormId::sp_r(2),    FormId::sp_r(3),
      FormId::so(1, 2),   FormId::so(1, 3),   FormId::so(2, 2),   FormId::so(2, 3),
      FormId::so(2, 4),   FormId::so(3, 3),   FormId::su_star(2), FormId::su_star(3),
      FormId::sp(1, 1),   FormId::sp(1, 2),   FormId::so_star(3), FormId::so_star(4),
      FormId::so_star(5), FormId::sl_c(2),    FormId::sl_c(3),
  };
  std::sort(f.begin(), f.end(), [](const FormId& a, const FormId& b) { return a.str() < b.str(); });
  return f;
}

}  // namespace hkr
