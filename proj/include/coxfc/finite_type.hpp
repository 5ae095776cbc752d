#pragma once

#include <string>
#include <vector>

#include "coxfc/coxeter_matrix.hpp"

namespace coxfc {

enum class Family { A, B, D, E, F, H, I2, NotFinite };

// Classification verdict for a connected diagram.  The paper's B_n and C_n
// share one diagram and are reported as "B"; I2(3) and I2(4) normalize to
// A2 and B2, while I2(6) keeps its dihedral name.
class FiniteType {
 public:
  static FiniteType A(std::size_t n) { return {Family::A, n, 0}; }
  static FiniteType B(std::size_t n) { return {Family::B, n, 0}; }
  static FiniteType D(std::size_t n) { return {Family::D, n, 0}; }
  static FiniteType E(std::size_t n) { return {Family::E, n, 0}; }
  static FiniteType F4() { return {Family::F, 4, 0}; }
  static FiniteType H(std::size_t n) { return {Family::H, n, 0}; }
  static FiniteType I2(unsigned m) {
    if (m == 3) return A(2);
    if (m == 4) return B(2);
    return {Family::I2, 2, m};
  }
  static FiniteType not_finite() { return {Family::NotFinite, 0, 0}; }

  Family family() const { return family_; }
  std::size_t rank() const { return rank_; }
  unsigned i2_label() const { return i2_label_; }
  bool is_finite() const { return family_ != Family::NotFinite; }

  std::string name() const;

  friend bool operator==(const FiniteType& a, const FiniteType& b) {
    return a.family_ == b.family_ && a.rank_ == b.rank_ &&
           a.i2_label_ == b.i2_label_;
  }
  friend bool operator!=(const FiniteType& a, const FiniteType& b) {
    return !(a == b);
  }

 private:
  FiniteType(Family f, std::size_t r, unsigned m)
      : family_(f), rank_(r), i2_label_(m) {}
  Family family_;
  std::size_t rank_;
  unsigned i2_label_;
};

// Classifies a connected subset by diagram pattern matching (degree
// sequence, label positions, branch arms), so arbitrary finite labels work
// without number-field support.  Throws NotConnectedError if the subset is
// not connected in the Coxeter graph.
FiniteType classify_connected(const CoxeterMatrix& m, const NodeSet& subset);

// A subset is spherical when every connected component classifies finite.
bool is_spherical(const CoxeterMatrix& m, const NodeSet& subset);

// The components of `subset` whose classification is finite, in component
// order.
std::vector<NodeSet> spherical_components(const CoxeterMatrix& m,
                                          const NodeSet& subset);

// (-1)-type: the longest element of W_I is central, i.e. acts as -identity
// on V_I.  Holds exactly when every component has type in
// {A1, B_n, D_2k, E7, E8, F4, H3, H4, I2(even m)}.
bool is_minus_one_type(const CoxeterMatrix& m, const NodeSet& subset);

// All spherical subsets of the node set (the family is closed under taking
// subsets, so a pruned depth-first walk enumerates it).
std::vector<NodeSet> all_spherical_subsets(const CoxeterMatrix& m);

// The maximal spherical subsets; every maximal finite subgroup of W is
// conjugate to W_J for exactly one such J.
std::vector<NodeSet> maximal_spherical_subsets(const CoxeterMatrix& m);

}  // namespace coxfc
