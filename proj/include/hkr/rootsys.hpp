#pragma once

#include <string>
#include <vector>

#include "hkr/lie.hpp"

namespace hkr {

struct RestrictedRoot {
  QVec coords;             // lambda(a_1), ..., lambda(a_r)
  int multiplicity = 0;
  std::vector<QVec> space;  // real basis of g_lambda (coordinates in g)
};

struct CartanComponent {
  std::string family;  // A, B, C, D, E, F, G or BC
  int rank = 0;
  std::vector<std::size_t> simple;  // positions in the ordered simple system
};

struct CartanType {
  std::vector<CartanComponent> components;

  std::string label() const;  // e.g. "BC_1", "A_1xA_1", "0" for the empty system
  // Label up to the low-rank isomorphisms B_1 = C_1 = A_1, B_2 = C_2,
  // D_2 = A_1xA_1, D_3 = A_3, with sorted components.
  std::string canonical() const;
  int rank() const;
};
std::string canonical_type_label(const std::string& label);

struct RestrictedRootData {
  std::vector<RestrictedRoot> roots;  // positives first, each block lexicographically decreasing
  std::vector<std::size_t> positive;
  std::vector<std::size_t> simple;    // ordered simple system
  std::vector<std::size_t> reduced;   // Lambda-hat: lambda with lambda/2 not a root
  std::vector<QVec> zero_space;       // real basis of c_g(a)
  Matrix<Rational> dual_gram;         // inverse Gram matrix of B on a, the form on a*
  std::vector<QVec> rep_weights;      // distinct weights of a on the defining representation
  std::size_t real_rank = 0;
  CartanType type;
  CartanType reduced_type;
  std::size_t weyl_order = 1;

  Rational ip(const QVec& x, const QVec& y) const;
  // Index of the root with these coordinates, or -1.
  long find(const QVec& coords) const;
  bool is_reduced(std::size_t k) const;
  Matrix<Rational> cartan_matrix() const;
};

// Simultaneous eigenspace decomposition of g under ad(a); also fills the
// simple system, types and Weyl group order.
RestrictedRootData restricted_roots(const RealForm& s);

// Positive roots are lexicographically positive; simple ones are the
// positives that are not a sum of two positives.
std::vector<std::size_t> simple_system(const std::vector<QVec>& roots);

// Cartan matrix A_ij = 2<a_i,a_j>/<a_j,a_j> of the given simple roots.
Matrix<Rational> cartan_matrix(const std::vector<QVec>& simple, const Matrix<Rational>& dual_gram);

// Dynkin type of a (reduced) simple system. long_root_is_double_weight
// resolves the rank-two B/C ambiguity for the defining representation.
CartanType classify_cartan(const Matrix<Rational>& cartan,
                           const std::vector<bool>& long_root_is_double_weight = {});
CartanType classify_type(const RestrictedRootData& data, bool reduced);

std::vector<int> exponents(const CartanType& type);

struct WeylGroup {
  std::vector<Matrix<Rational>> generators;  // simple reflections acting on a*
  std::vector<Matrix<Rational>> elements;
  std::size_t order() const { return elements.size(); }
};
WeylGroup weyl_group(const RestrictedRootData& data);
WeylGroup weyl_group(const std::vector<QVec>& simple, const Matrix<Rational>& dual_gram);

// Standard Cartan matrices, used for recognition.
Matrix<Rational> standard_cartan(const std::string& family, int rank);

struct RootClassCount {
  std::size_t restricted_index;  // index into RestrictedRootData::roots
  int real = 0;
  int complex = 0;
};

struct ComplexRootData {
  std::vector<QVec> t_basis;  // real coords of t, maximal abelian in c_h(a)
  std::size_t dim_d = 0;      // dim t + dim a
  std::size_t num_roots = 0;
  std::size_t num_imaginary = 0;
  std::size_t num_real = 0;
  std::size_t num_complex = 0;
  std::vector<RootClassCount> per_restricted;
};
ComplexRootData full_root_classification(const RealForm& s, const RestrictedRootData& data);

// Kernel of the given list of real elements' adjoint maps, restricted to
// the coordinate range [c0,c1).
std::vector<QVec> common_centralizer(const RealForm& s, const std::vector<QVec>& elems,
                                     std::size_t c0, std::size_t c1);

}  // namespace hkr
