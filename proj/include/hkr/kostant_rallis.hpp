#pragma once

#include <string>
#include <vector>

#include "hkr/catalog.hpp"
#include "hkr/rootsys.hpp"

namespace hkr {

struct TdsConstruction {
  std::vector<QVec> y, z, w_list, h_dual;  // real coordinates in g
  std::vector<Rational> b, c;
  std::vector<Rational> lambda_h;  // lambda_i(h_i)
  std::vector<Scalar> d;
  QVec w;
  CVec e_c, f_c;
};

TdsConstruction build_tds(const RealForm& s, const RestrictedRootData& roots);
// Throws ConstructionFailure naming the first violated relation.
void verify_tds(const RealForm& s, const RestrictedRootData& roots, const TdsConstruction& tds);

struct NormalTriple {
  CVec e, f, x;
};

NormalTriple normal_triple(const RealForm& s, const TdsConstruction& tds);
// Throws RelationFailure.
void verify_normal_triple(const RealForm& s, const TdsConstruction& tds, const NormalTriple& t);
bool satisfies_triple_relations(const RealForm& s, const NormalTriple& t);

struct SplitSubalgebra {
  std::vector<QVec> basis;
  std::vector<std::pair<std::size_t, int>> root_multiplicities;  // (index into Lambda, dim)
  std::size_t zero_dim = 0;  // dim of the a-weight-zero part
  std::size_t center_dim = 0;
  CartanType type;
};

// Generated by the y_i, z_i, w_i and c_m(a). With ref given, a mismatch in
// dimension or type throws MismatchWithTable1.
SplitSubalgebra maximal_split_subalgebra(const RealForm& s, const RestrictedRootData& roots,
                                         const TdsConstruction& tds,
                                         const TableOneEntry* ref = nullptr);

struct ModuleBlock {
  int m = 0;         // block dimension is 2m - 1
  CVec highest;      // in ker ad(e), ad(x)-eigenvalue m - 1
  bool in_m = false;  // located in m^C (otherwise h^C)
};

struct ModuleDecomposition {
  std::vector<ModuleBlock> blocks;  // sorted by (location, m)
  std::size_t a = 0;  // real rank
  std::size_t b = 0;  // dim c_{h^C}(a^C)
  std::size_t c = 0;  // dim c_{h^C}(s^C)
};

ModuleDecomposition module_decomposition(const RealForm& s, const NormalTriple& t);

struct QuasiSplitResult {
  bool abelian_centralizer;  // route 1: c_g(a) abelian
  bool tds_centralizer;      // route 2: c_{g^C}(s^C) = z(g^C)
  bool value() const { return abelian_centralizer; }
};
// Throws RouteDisagreement when the two routes differ.
QuasiSplitResult is_quasi_split(const RealForm& s, const RestrictedRootData& roots,
                                const NormalTriple& t);

struct SectionBasis {
  std::vector<CVec> e_basis;  // e_1 = e, graded by ad(x)-eigenvalue m_i - 1
  std::vector<int> degrees;   // m_1 <= ... <= m_a
  std::vector<CVec> z_m_basis;  // degree-one directions from the center, listed apart
  CVec f;
};

SectionBasis section_basis(const RealForm& s, const NormalTriple& t, const ModuleDecomposition& md);
CVec section_point(const SectionBasis& basis, const std::vector<Scalar>& gamma);
bool is_regular(const RealForm& s, const CVec& x);
std::size_t centralizer_dim_in_m(const RealForm& s, const CVec& x);

// Characteristic polynomial of an element in the defining representation.
CVec defining_charpoly(const RealForm& s, const CVec& x);

// Unique gamma whose section point has the characteristic polynomial of d,
// an element of a^C with lambda(d) != 0 for all restricted roots.
std::vector<Scalar> section_fiber_match(const RealForm& s, const SectionBasis& basis,
                                        const CVec& d);

// Real basis of the center of g, split into the h and m parts.
struct CenterData {
  std::vector<QVec> z_h, z_m;
};
CenterData center(const RealForm& s);

}  // namespace hkr
