#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hkr/lie.hpp"

namespace hkr {

enum class Family { sl_R, su_pq, sp2n_R, so_pq, su_star, sp_pq, so_star, sl_C_as_real };

// One-parameter families keep their parameter in p.
struct FormId {
  Family family = Family::sl_R;
  int p = 0;
  int q = 0;

  static FormId parse(std::string_view text);
  static FormId sl_r(int n) { return {Family::sl_R, n, 0}; }
  static FormId su(int p, int q) { return {Family::su_pq, p, q}; }
  static FormId sp_r(int n) { return {Family::sp2n_R, n, 0}; }
  static FormId so(int p, int q) { return {Family::so_pq, p, q}; }
  static FormId su_star(int n) { return {Family::su_star, n, 0}; }
  static FormId sp(int p, int q) { return {Family::sp_pq, p, q}; }
  static FormId so_star(int n) { return {Family::so_star, n, 0}; }
  static FormId sl_c(int n) { return {Family::sl_C_as_real, n, 0}; }

  std::string str() const;    // CLI syntax, e.g. "su:p=1,q=2"
  std::string label() const;  // e.g. "su(1,2)"
  std::size_t matrix_size() const;
  void validate() const;

  friend bool operator==(const FormId& a, const FormId& b) {
    return a.family == b.family && a.p == b.p && a.q == b.q;
  }
};

// Matrix-size bound, default 12, overridden by HKR_MAX_DIM.
std::size_t max_matrix_size();

RealForm build(const FormId& id);

struct TableOneEntry {
  std::string cartan_class;     // AI, AIII, EIV, ...
  std::string form;             // e.g. "su(1,2)" or "e6(-26)"
  std::string split_sub;        // e.g. "so(1,2)"
  std::string restricted_type;  // type of the restricted root system, may be BC
  std::string reduced_type;     // type of the reduced system
  int split_dim = 0;
  bool quasi_split = false;
};

TableOneEntry lookup_table1(const FormId& id);
// Exceptional rows by label, e.g. "e6(-26)"; classical labels are parsed as forms.
TableOneEntry lookup_table1(std::string_view label);

struct TableOneRow {
  std::string cartan_class, form, split_sub;
};
const std::vector<TableOneRow>& table1_rows();
const std::vector<TableOneEntry>& exceptional_entries();

int expected_real_rank(const FormId& id);

// Forms exercised by `verify --all`, sorted by name.
std::vector<FormId> default_forms();

}  // namespace hkr
