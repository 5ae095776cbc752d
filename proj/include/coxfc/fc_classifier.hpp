#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "coxfc/coxeter_matrix.hpp"
#include "coxfc/finite_type.hpp"

namespace coxfc {

// Computation of the finite continuation FC(r_a) — the intersection of all
// maximal finite subgroups containing the simple reflection r_a — by
// inspection of the Coxeter graph.  Writing M for the odd component of a
// and Even(M) for its even closure, exactly one of four situations applies:
//
//   A: the component of Even(M) containing M is spherical.  FC(r_a) is the
//      visible subgroup on the union of the spherical components of
//      Even(M), for every a in M.
//   C: M has a focus (a,b).  FC(r_a) = W on {a,b} plus the spherical
//      components; FC is not visible for the other members of M.
//   D: M has a half-focus {a,b} inside M.  Both a and b get {a,b} plus the
//      spherical components; the rest of M is not visible.
//   B: otherwise.  Let J' be the spherical components of Even(M) together
//      with the C3-neighbours of M.  Members of M not Coxeter-adjacent to a
//      C3-neighbour get J' u {a}; adjacent members are not visible.
//
// The three configurations are mutually exclusive for genuine odd
// components; the classifier nevertheless detects all of them and raises
// CaseConflictError instead of silently choosing.

// C3-neighbour test, clause by clause: b outside M with labels into Even(M)
// all in {2,4}, at least one 4, and each 4-labelled partner c has a witness
// a in M with m_ba=2, m_ca=3, m_cd=inf for the rest of M, and every outside
// node e either has m_ce=inf or m_ae=m_ce=m_be=2.
std::vector<Node> c3_neighbours(const CoxeterMatrix& m, const NodeSet& M);

// C[b..c]: b together with the tree path from the attachment node a to c
// inside M.  The attachment node is the unique member of M adjacent to b.
NodeSet c_chain(const CoxeterMatrix& m, const NodeSet& M, Node b, Node c);

// D[a,b..c]: b together with the tree path from a to c inside M \ {b}.
NodeSet d_chain(const CoxeterMatrix& m, const NodeSet& M, Node a, Node b,
                Node c);

struct Focus {
  Node a;  // member of M
  Node b;  // outside M, joined to a by label 4
};

// Per-clause verdicts; evaluated eagerly so a failing candidate can be
// traced to its first violated clause.  Clauses that need the odd tree are
// reported false when condition (1) already failed.
struct FocusCheck {
  std::array<bool, 5> clause{};
  bool passed() const {
    for (bool c : clause)
      if (!c) return false;
    return true;
  }
};

struct HalfFocusCheck {
  std::array<bool, 6> clause{};
  bool passed() const {
    for (bool c : clause)
      if (!c) return false;
    return true;
  }
};

FocusCheck check_focus(const CoxeterMatrix& m, const NodeSet& M, Node a, Node b);
HalfFocusCheck check_half_focus(const CoxeterMatrix& m, const NodeSet& M, Node a,
                                Node b);

// All foci / half-foci of the component, in node order.  Theorem-level
// reasoning says there is at most one, but every witness is surfaced.
std::vector<Focus> find_foci(const CoxeterMatrix& m, const NodeSet& M);
std::optional<Focus> find_focus(const CoxeterMatrix& m, const NodeSet& M);
std::vector<std::pair<Node, Node>> find_half_foci(const CoxeterMatrix& m,
                                                  const NodeSet& M);
std::optional<std::pair<Node, Node>> find_half_focus(const CoxeterMatrix& m,
                                                     const NodeSet& M);

enum class FcCase { A, B, C, D };

struct FcResult {
  bool visible = false;
  NodeSet J;  // meaningful only when visible
  FcCase case_tag = FcCase::A;
  std::optional<Focus> focus;                      // case C witness
  std::optional<std::pair<Node, Node>> half_focus; // case D witness
  std::vector<Node> c3;                            // case B witness list
};

FcResult finite_continuation(const CoxeterMatrix& m, Node a);

enum class RigidityVerdict { ReflectionsDetermined, NotApplicable };

// Report for the rigidity criterion: when the system is irreducible,
// non-spherical and 2-spherical (all rank-2 visible subgroups finite), the
// finite continuation of every simple reflection is trivial, which forces
// every Coxeter generating set of the abstract group to consist of
// reflections.  The final step from reflections to strong rigidity rests on
// an external classification result and is only reported, not re-verified.
struct RigidityReport {
  bool irreducible = false;
  bool two_spherical = false;
  bool non_spherical = false;
  bool finite_rank = true;
  RigidityVerdict verdict = RigidityVerdict::NotApplicable;
  std::vector<bool> fc_trivial;  // per node: FC(r_a) = <r_a>
};

RigidityReport rigidity_report(const CoxeterMatrix& m);

}  // namespace coxfc
