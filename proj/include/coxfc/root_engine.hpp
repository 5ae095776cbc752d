#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coxfc/coxeter_matrix.hpp"
#include "coxfc/field_element.hpp"

namespace coxfc {

// CLI-overridable defaults for the exact enumeration.
inline constexpr unsigned kDefaultMaxLength = 12;
inline constexpr std::size_t kDefaultElementCap = 200000;

// Gram matrix of the bilinear form B(a,b) = -cos(pi/m_ab) over the exact
// field; defined for labels {1,2,3,4,5,6} and infinity.
class BilinearForm {
 public:
  explicit BilinearForm(const CoxeterMatrix& m);  // UnsupportedLabelError

  std::size_t rank() const { return n_; }
  const FieldElement& entry(Node a, Node b) const { return g_[a * n_ + b]; }

 private:
  std::size_t n_;
  std::vector<FieldElement> g_;
};

BilinearForm build_form(const CoxeterMatrix& m);

// Coordinate vector over the simple-root basis.
class Root {
 public:
  Root() = default;
  explicit Root(std::vector<FieldElement> coords) : c_(std::move(coords)) {}
  static Root simple(std::size_t rank, Node a);

  std::size_t rank() const { return c_.size(); }
  const FieldElement& coord(Node i) const { return c_[i]; }
  FieldElement& coord(Node i) { return c_[i]; }

  // Support: the set of simple roots with nonzero coefficient.
  NodeSet support() const;

  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend Root operator-(const Root& a, const Root& b);
  Root scaled(const FieldElement& s) const;

  friend bool operator==(const Root& a, const Root& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }

  std::string str() const;

 private:
  std::vector<FieldElement> c_;
};

std::size_t hash_value(const Root& r);

// An element of W in its reflection representation.  Both the matrix and
// its inverse are carried along (every constructor can produce the pair at
// no extra asymptotic cost), which keeps descent computations free of any
// field division.  Columns are images of the simple roots.
class GroupElement {
 public:
  static GroupElement identity(std::size_t n);
  GroupElement(std::vector<FieldElement> fwd, std::vector<FieldElement> inv,
               std::size_t n)
      : n_(n), fwd_(std::move(fwd)), inv_(std::move(inv)) {}

  std::size_t rank() const { return n_; }
  const FieldElement& entry(Node i, Node j) const { return fwd_[i + n_ * j]; }
  const std::vector<FieldElement>& matrix() const { return fwd_; }
  const std::vector<FieldElement>& inverse_matrix() const { return inv_; }

  Root image_of_simple(Node j) const;          // column j
  Root inverse_image_of_simple(Node j) const;  // column j of the inverse

  GroupElement inverse() const { return GroupElement(inv_, fwd_, n_); }
  bool is_identity() const;
  bool is_minus_identity() const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.fwd_ == b.fwd_;  // the inverse is determined by the matrix
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) {
    return !(a == b);
  }

 private:
  std::size_t n_;
  std::vector<FieldElement> fwd_, inv_;
};

std::size_t hash_value(const GroupElement& g);

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const { return hash_value(g); }
};

// Deterministic total order on elements (entry-wise), used for canonical
// output only.
bool canonical_less(const GroupElement& a, const GroupElement& b);

// The result of a breadth-first enumeration by word length: every element
// appears once, at its true length, in deterministic discovery order.
class Enumeration {
 public:
  struct Item {
    GroupElement g;
    unsigned length;
    std::size_t parent;  // index of g * r_gen^-1 (itself for the identity)
    Node gen;
  };

  const std::vector<Item>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool saturated() const { return saturated_; }

  std::optional<std::size_t> find(const GroupElement& g) const;
  bool contains(const GroupElement& g) const { return find(g).has_value(); }

  // Reduced word for items()[i], read off the parent chain.
  std::vector<Node> word(std::size_t i) const;

 private:
  friend class RootEngine;
  std::size_t insert(GroupElement g, unsigned length, std::size_t parent,
                     Node gen);
  std::vector<Item> items_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash_;
  bool saturated_ = false;
};

// Outcome of the brute-force finite-continuation search.  `elements` is the
// intersection of all conjugates w W_J w^-1 (J maximal spherical) found to
// contain r_a with l(w) bounded by the search length: an over-approximation
// of FC(r_a) that is exact once the length budget suffices.
struct OracleFcOutcome {
  std::vector<GroupElement> elements;  // canonically ordered
  bool complete = true;                // false when the element cap was hit
};

// Exact Tits reflection representation over Q(sqrt2,sqrt3,sqrt5): roots,
// lengths, longest elements, v[a,I], depth-bounded enumeration, and the
// brute-force finite-continuation oracle.
class RootEngine {
 public:
  explicit RootEngine(CoxeterMatrix m);  // UnsupportedLabelError

  const CoxeterMatrix& matrix() const { return matrix_; }
  const BilinearForm& form() const { return form_; }
  std::size_t rank() const { return matrix_.rank(); }

  Root simple_root(Node a) const;
  GroupElement identity() const;
  GroupElement simple_reflection(Node a) const;

  // Reflection along an arbitrary unit root (B(r,r) must equal 1).
  GroupElement reflection_along(const Root& r) const;  // NotUnitRootError

  Root apply(const GroupElement& w, const Root& v) const;
  FieldElement inner(const Root& u, const Root& v) const;

  // A root is positive when all coordinates are >= 0, negative when all are
  // <= 0; images of simple roots always satisfy exactly one.
  bool is_positive(const Root& r) const;
  bool is_negative(const Root& r) const;

  Enumeration enumerate(unsigned max_length = kDefaultMaxLength,
                        std::size_t element_cap = kDefaultElementCap) const;
  Enumeration enumerate_subgroup(const NodeSet& generators, unsigned max_length,
                                 std::size_t element_cap) const;

  // l(w) and N(w) = {b in Phi+ : w b in Phi-}, recovered from a reduced word
  // found by greedy descent.  max_steps guards against non-group inputs.
  std::pair<unsigned, std::vector<Root>> length_and_inversions(
      const GroupElement& w, unsigned max_steps = 1u << 20) const;

  // w_J for spherical J, by greedy length ascent inside W_J.
  GroupElement longest_element(const NodeSet& J) const;  // NotSphericalError

  // v[a,I] = w_L w_{L\{a}} with L the component of I u {a} containing a.
  // Requires a not in I and W_L finite; maps I into I u {a} and fixes I \ L
  // pointwise (checked).
  GroupElement v_element(Node a, const NodeSet& I) const;

  // The unique minimal-length element of the double coset W_I w W_J, by
  // greedy one-sided descents.
  GroupElement min_double_coset_rep(const NodeSet& I, const NodeSet& J,
                                    GroupElement w) const;

  OracleFcOutcome oracle_fc_outcome(
      Node a, unsigned max_length = kDefaultMaxLength,
      std::size_t element_cap = kDefaultElementCap) const;

  // Like oracle_fc_outcome but throws BudgetExceededError instead of
  // reporting an incomplete search.
  std::vector<GroupElement> oracle_fc(
      Node a, unsigned max_length = kDefaultMaxLength,
      std::size_t element_cap = kDefaultElementCap) const;

  // For finite W: whether Q = {w : w a in Phi_J} normalizes W_J, i.e.
  // Q is a subset of {w : w Phi_J = Phi_J}.  Enumerates W exhaustively.
  bool normalizer_condition(Node a, const NodeSet& J) const;

  // Breadth-first orbit of the simple root a under all simple reflections,
  // to the given depth.
  std::vector<Root> root_orbit(Node a, unsigned depth) const;

 private:
  void right_multiply(std::vector<FieldElement>& mat, Node b) const;
  void left_multiply(std::vector<FieldElement>& mat, Node b) const;
  GroupElement right_product(const GroupElement& w, Node b) const;
  bool column_positive(const std::vector<FieldElement>& mat, Node j) const;
  bool column_negative(const std::vector<FieldElement>& mat, Node j) const;
  bool column_supported_in(const std::vector<FieldElement>& mat, Node j,
                           const NodeSet& J) const;
  Enumeration enumerate_impl(const NodeSet& generators, unsigned max_length,
                             std::size_t cap, bool* exceeded) const;

  CoxeterMatrix matrix_;
  BilinearForm form_;
};

}  // namespace coxfc
