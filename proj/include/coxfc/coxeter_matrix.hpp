#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "coxfc/errors.hpp"

namespace coxfc {

// Nodes are indices into the ordered node list of a CoxeterMatrix; the
// matrix keeps the user-facing names.  All set operations run over indices
// so that iteration order is deterministic.
using Node = std::size_t;

// A Coxeter label: an integer >= 1 or the infinity sentinel.  Infinity is a
// distinct state, never a large stand-in integer.
class Label {
 public:
  static Label finite(unsigned m) {
    if (m < 1) throw InputError("finite Coxeter label must be >= 1");
    return Label(m, false);
  }
  static Label infinity() { return Label(0, true); }

  bool is_infinite() const { return inf_; }
  unsigned value() const {
    if (inf_) throw BadArgumentsError("value() on infinite label");
    return m_;
  }

  // Parity in the sense of the odd graph: infinite labels are neither.
  bool is_odd() const { return !inf_ && m_ % 2 == 1; }
  bool is_even() const { return !inf_ && m_ % 2 == 0; }

  friend bool operator==(const Label& a, const Label& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.m_ == b.m_);
  }
  friend bool operator!=(const Label& a, const Label& b) { return !(a == b); }

  std::string str() const { return inf_ ? "inf" : std::to_string(m_); }

 private:
  Label(unsigned m, bool inf) : m_(m), inf_(inf) {}
  unsigned m_;
  bool inf_;
};

// A subset of the nodes of a fixed matrix, kept as a sorted vector.
class NodeSet {
 public:
  NodeSet() = default;
  NodeSet(std::initializer_list<Node> init) : members_(init) { normalize(); }
  explicit NodeSet(std::vector<Node> members) : members_(std::move(members)) {
    normalize();
  }
  static NodeSet full(std::size_t rank) {
    NodeSet s;
    s.members_.resize(rank);
    for (std::size_t i = 0; i < rank; ++i) s.members_[i] = i;
    return s;
  }

  bool contains(Node a) const {
    return std::binary_search(members_.begin(), members_.end(), a);
  }
  void insert(Node a) {
    auto it = std::lower_bound(members_.begin(), members_.end(), a);
    if (it == members_.end() || *it != a) members_.insert(it, a);
  }
  void erase(Node a) {
    auto it = std::lower_bound(members_.begin(), members_.end(), a);
    if (it != members_.end() && *it == a) members_.erase(it);
  }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<Node>& members() const { return members_; }

  bool is_subset_of(const NodeSet& o) const {
    return std::includes(o.members_.begin(), o.members_.end(), members_.begin(),
                         members_.end());
  }
  NodeSet united(const NodeSet& o) const {
    NodeSet r;
    std::set_union(members_.begin(), members_.end(), o.members_.begin(),
                   o.members_.end(), std::back_inserter(r.members_));
    return r;
  }
  NodeSet intersected(const NodeSet& o) const {
    NodeSet r;
    std::set_intersection(members_.begin(), members_.end(), o.members_.begin(),
                          o.members_.end(), std::back_inserter(r.members_));
    return r;
  }
  NodeSet minus(const NodeSet& o) const {
    NodeSet r;
    std::set_difference(members_.begin(), members_.end(), o.members_.begin(),
                        o.members_.end(), std::back_inserter(r.members_));
    return r;
  }
  NodeSet with(Node a) const {
    NodeSet r = *this;
    r.insert(a);
    return r;
  }
  NodeSet without(Node a) const {
    NodeSet r = *this;
    r.erase(a);
    return r;
  }

  friend bool operator==(const NodeSet& a, const NodeSet& b) {
    return a.members_ == b.members_;
  }
  friend bool operator!=(const NodeSet& a, const NodeSet& b) { return !(a == b); }
  friend bool operator<(const NodeSet& a, const NodeSet& b) {
    return a.members_ < b.members_;
  }

 private:
  void normalize() {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }
  std::vector<Node> members_;
};

// Symmetric label matrix over an ordered node list.  Construction does not
// validate beyond basic shape; call validate() to enforce the matrix
// invariants (diagonal 1, symmetry, off-diagonal >= 2, rank >= 1).
class CoxeterMatrix {
 public:
  struct EdgeSpec {
    Node u, v;
    Label m;
  };

  CoxeterMatrix(std::vector<std::string> names, std::vector<Label> entries);

  // Builds a matrix with all off-diagonal labels 2 except the given edges.
  // Rejects self-loops and duplicate edges (in either orientation).
  static CoxeterMatrix from_edges(std::vector<std::string> names,
                                  const std::vector<EdgeSpec>& edges);

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& node_names() const { return names_; }
  const std::string& name_of(Node a) const;
  Node index_of(std::string_view name) const;  // UnknownNodeError

  Label label(Node a, Node b) const;  // UnknownNodeError on bad indices

  // Coxeter-graph adjacency: m >= 3, including infinity.
  bool adjacent(Node a, Node b) const {
    Label l = label(a, b);
    return a != b && (l.is_infinite() || l.value() >= 3);
  }
  // Odd-graph adjacency: finite odd label (>= 3).
  bool odd_adjacent(Node a, Node b) const {
    Label l = label(a, b);
    return a != b && l.is_odd();
  }

  std::string set_str(const NodeSet& s) const;

 private:
  std::vector<std::string> names_;
  std::vector<Label> entries_;  // rank*rank, row-major
  std::unordered_map<std::string, Node> index_;
};

// Checks all CoxeterMatrix invariants; throws InputError naming the first
// violated invariant and the offending pair.
void validate(const CoxeterMatrix& m);

// Connected components of the full Coxeter subgraph on `subset`
// (edges are pairs with label >= 3, including infinity).  Returns a
// partition ordered by smallest member.
std::vector<NodeSet> coxeter_components(const CoxeterMatrix& m,
                                        const NodeSet& subset);

// Odd(a): the connected component of a in the odd graph (edges with finite
// odd labels only).
NodeSet odd_component(const CoxeterMatrix& m, Node a);

// All odd components, ordered by smallest member.
std::vector<NodeSet> odd_components(const CoxeterMatrix& m);

// Even(M): M together with every node joined to M by an even label.  Note
// that label 2 is even, so Even(M) typically reaches far beyond the
// Coxeter-graph neighbourhood of M.  M must be exactly an odd component.
NodeSet even_closure(const CoxeterMatrix& m, const NodeSet& M);

bool is_irreducible(const CoxeterMatrix& m);
bool is_two_spherical(const CoxeterMatrix& m);

}  // namespace coxfc
