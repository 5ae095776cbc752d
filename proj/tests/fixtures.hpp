#pragma once

#include <random>
#include <string>
#include <vector>

#include "coxfc/coxeter_matrix.hpp"

// Shared graph fixtures.  G5, G6 and G7 are the small configurations that
// exercise cases C, D and B of the classification:
//
//   G5: b -4- a -3- c, a -3- d, c -inf- d      (focus (a,b))
//   G6: a,b both -3- c and -3- d, c -inf- d    (half-focus {a,b})
//   G7: a2 -3- a -3- c, a2 -inf- c, b -4- c    (C3-neighbour b)
namespace fixtures {

using coxfc::CoxeterMatrix;
using coxfc::Label;
using coxfc::Node;

inline Label L(unsigned m) { return Label::finite(m); }
inline Label Linf() { return Label::infinity(); }

inline std::vector<std::string> letters(std::size_t n) {
  static const std::vector<std::string> kNames = {"a", "b", "c", "d",
                                                  "e", "f", "g", "h"};
  return {kNames.begin(), kNames.begin() + n};
}

// Chain with the given consecutive labels; rank = labels.size() + 1.
inline CoxeterMatrix path(const std::vector<unsigned>& labels) {
  std::vector<CoxeterMatrix::EdgeSpec> edges;
  for (std::size_t i = 0; i < labels.size(); ++i)
    edges.push_back({i, i + 1, L(labels[i])});
  return CoxeterMatrix::from_edges(letters(labels.size() + 1), edges);
}

inline CoxeterMatrix dihedral(unsigned m) {
  return CoxeterMatrix::from_edges(letters(2), {{0, 1, L(m)}});
}

inline CoxeterMatrix dihedral_infinite() {
  return CoxeterMatrix::from_edges(letters(2), {{0, 1, Linf()}});
}

inline CoxeterMatrix single_node() {
  return CoxeterMatrix::from_edges({"a"}, {});
}

// A1 x I2(3): nodes a, b, c with m_bc = 3.
inline CoxeterMatrix a1_x_i23() {
  return CoxeterMatrix::from_edges(letters(3), {{1, 2, L(3)}});
}

// Affine A2: triangle of 3s.
inline CoxeterMatrix affine_a2() {
  return CoxeterMatrix::from_edges(letters(3),
                                   {{0, 1, L(3)}, {1, 2, L(3)}, {0, 2, L(3)}});
}

// Affine A3: 4-cycle of 3s (a-b-c-d-a).
inline CoxeterMatrix affine_a3() {
  return CoxeterMatrix::from_edges(
      letters(4), {{0, 1, L(3)}, {1, 2, L(3)}, {2, 3, L(3)}, {0, 3, L(3)}});
}

// Affine C2: a -4- b -4- c.
inline CoxeterMatrix affine_c2() { return path({4, 4}); }

// Affine G2: a -6- b -3- c.
inline CoxeterMatrix affine_g2() { return path({6, 3}); }

// Nodes in the order {b, a, c, d}.
inline CoxeterMatrix g5() {
  return CoxeterMatrix::from_edges(
      {"b", "a", "c", "d"},
      {{0, 1, L(4)}, {1, 2, L(3)}, {1, 3, L(3)}, {2, 3, Linf()}});
}

// Nodes {a, b, c, d}: m_ab = 2 implicit.
inline CoxeterMatrix g6() {
  return CoxeterMatrix::from_edges(
      {"a", "b", "c", "d"},
      {{0, 2, L(3)}, {1, 2, L(3)}, {0, 3, L(3)}, {1, 3, L(3)}, {2, 3, Linf()}});
}

// Nodes in the order {a2, a, c, b}.
inline CoxeterMatrix g7() {
  return CoxeterMatrix::from_edges(
      {"a2", "a", "c", "b"},
      {{0, 1, L(3)}, {1, 2, L(3)}, {0, 2, Linf()}, {2, 3, L(4)}});
}

// b -4- a -3- c with m_bc = 2: the focus probe where only clause (5) fails.
inline CoxeterMatrix b3_reversed() {
  return CoxeterMatrix::from_edges({"b", "a", "c"}, {{0, 1, L(4)}, {1, 2, L(3)}});
}

inline CoxeterMatrix type_A(std::size_t n) {
  return path(std::vector<unsigned>(n - 1, 3));
}

// 4-labelled edge at the far end: x1 -3- ... -3- x_{n-1} -4- x_n.
inline CoxeterMatrix type_B(std::size_t n) {
  std::vector<unsigned> labels(n - 1, 3);
  labels.back() = 4;
  return path(labels);
}

// Chain x1..x_{n-2} plus both x_{n-1} and x_n attached to x_{n-2}.
inline CoxeterMatrix type_D(std::size_t n) {
  std::vector<CoxeterMatrix::EdgeSpec> edges;
  for (std::size_t i = 0; i + 3 < n; ++i) edges.push_back({i, i + 1, L(3)});
  edges.push_back({n - 3, n - 2, L(3)});
  edges.push_back({n - 3, n - 1, L(3)});
  return CoxeterMatrix::from_edges(letters(n), edges);
}

inline CoxeterMatrix type_H(std::size_t n) {
  std::vector<unsigned> labels(n - 1, 3);
  labels.front() = 5;
  return path(labels);
}

inline CoxeterMatrix type_F4() { return path({3, 4, 3}); }

// Uniform random matrix over the engine-supported labels.
inline CoxeterMatrix random_matrix(std::mt19937& rng, std::size_t rank,
                                   bool allow_infinite = true) {
  static const unsigned kLabels[] = {2, 3, 4, 5, 6};
  std::vector<CoxeterMatrix::EdgeSpec> edges;
  std::uniform_int_distribution<int> pick(0, allow_infinite ? 5 : 4);
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = i + 1; j < rank; ++j) {
      int k = pick(rng);
      Label l = (k == 5) ? Linf() : L(kLabels[k]);
      if (!l.is_infinite() && l.value() == 2) continue;
      edges.push_back({i, j, l});
    }
  }
  return CoxeterMatrix::from_edges(letters(rank), edges);
}

}  // namespace fixtures
