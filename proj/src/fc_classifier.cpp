#include "coxfc/fc_classifier.hpp"

#include <algorithm>
#include <deque>

namespace coxfc {

namespace {

void require_odd_component(const CoxeterMatrix& m, const NodeSet& M) {
  if (M.empty())
    throw NotAnOddComponentError("empty set is not an odd component");
  for (Node a : M)
    if (a >= m.rank()) throw UnknownNodeError("node index out of range");
  if (odd_component(m, *M.begin()) != M)
    throw NotAnOddComponentError("set " + m.set_str(M) +
                                 " is not a component of the odd graph");
}

// Edges of the odd graph within S.
std::vector<std::pair<Node, Node>> odd_edges(const CoxeterMatrix& m,
                                             const NodeSet& S) {
  std::vector<std::pair<Node, Node>> e;
  const auto& v = S.members();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (m.odd_adjacent(v[i], v[j])) e.emplace_back(v[i], v[j]);
  return e;
}

// Is the odd graph restricted to S a tree?
bool odd_tree(const CoxeterMatrix& m, const NodeSet& S) {
  if (S.empty()) return false;
  auto edges = odd_edges(m, S);
  if (edges.size() + 1 != S.size()) return false;
  // connected?
  NodeSet seen{*S.begin()};
  std::deque<Node> queue{*S.begin()};
  while (!queue.empty()) {
    Node x = queue.front();
    queue.pop_front();
    for (Node y : S) {
      if (!seen.contains(y) && m.odd_adjacent(x, y)) {
        seen.insert(y);
        queue.push_back(y);
      }
    }
  }
  return seen == S;
}

// Unique path between two nodes of a tree (odd edges within S).
std::optional<std::vector<Node>> odd_path(const CoxeterMatrix& m,
                                          const NodeSet& S, Node from, Node to) {
  if (!S.contains(from) || !S.contains(to)) return std::nullopt;
  std::deque<Node> queue{from};
  std::unordered_map<Node, Node> parent{{from, from}};
  while (!queue.empty()) {
    Node x = queue.front();
    queue.pop_front();
    if (x == to) break;
    for (Node y : S) {
      if (!parent.count(y) && m.odd_adjacent(x, y)) {
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  if (!parent.count(to)) return std::nullopt;
  std::vector<Node> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

// The chain {b, a, c_3, ..., c_k} is a system of type C_k: consecutive
// labels (4, 3, ..., 3), everything else 2.
bool is_c_chain(const CoxeterMatrix& m, const std::vector<Node>& chain) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      unsigned expected = (j == i + 1) ? (i == 0 ? 4u : 3u) : 2u;
      Label l = m.label(chain[i], chain[j]);
      if (l.is_infinite() || l.value() != expected) return false;
    }
  }
  return chain.size() >= 2;
}

// {b} u path forms a system of type D_k (A_3 for the shortest case): the
// fork ends b and path[0] are both joined to path[1] by 3 and to each other
// by 2; the rest is a simple chain of 3s.
bool is_d_chain(const CoxeterMatrix& m, Node b, const std::vector<Node>& path) {
  if (path.size() < 2) return false;
  std::vector<Node> all{b};
  all.insert(all.end(), path.begin(), path.end());
  auto expect = [&](Node x, Node y, unsigned v) {
    Label l = m.label(x, y);
    return !l.is_infinite() && l.value() == v;
  };
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      unsigned expected = 2;
      if (i == 0) {
        expected = (j == 2) ? 3 : 2;  // b joined only to path[1]
      } else {
        expected = (j == i + 1) ? 3 : 2;
      }
      if (!expect(all[i], all[j], expected)) return false;
    }
  }
  return true;
}

bool is_spherical_component_of(const CoxeterMatrix& m, const NodeSet& even,
                               const NodeSet& candidate) {
  for (const NodeSet& comp : coxeter_components(m, even)) {
    if (comp == candidate)
      return classify_connected(m, comp).is_finite();
  }
  return false;
}

}  // namespace

std::vector<Node> c3_neighbours(const CoxeterMatrix& m, const NodeSet& M) {
  require_odd_component(m, M);
  NodeSet even = even_closure(m, M);
  std::vector<Node> result;
  for (Node b = 0; b < m.rank(); ++b) {
    if (M.contains(b)) continue;
    bool labels_ok = true;
    bool has_four = false;
    for (Node c : even) {
      if (c == b) continue;
      Label l = m.label(b, c);
      if (l.is_infinite() || (l.value() != 2 && l.value() != 4)) {
        labels_ok = false;
        break;
      }
      if (l.value() == 4) has_four = true;
    }
    if (!labels_ok || !has_four) continue;

    bool all_fours_witnessed = true;
    for (Node c : even) {
      if (c == b) continue;
      if (m.label(b, c) != Label::finite(4)) continue;
      bool witnessed = false;
      for (Node a : M) {
        if (a == c) continue;
        if (m.label(b, a) != Label::finite(2)) continue;
        if (m.label(c, a) != Label::finite(3)) continue;
        bool infs = true;
        for (Node d : M) {
          if (d == a || d == c) continue;
          if (!m.label(c, d).is_infinite()) {
            infs = false;
            break;
          }
        }
        if (!infs) continue;
        bool outside_ok = true;
        for (Node e = 0; e < m.rank() && outside_ok; ++e) {
          if (M.contains(e) || e == b) continue;
          if (m.label(c, e).is_infinite()) continue;
          outside_ok = m.label(a, e) == Label::finite(2) &&
                       m.label(c, e) == Label::finite(2) &&
                       m.label(b, e) == Label::finite(2);
        }
        if (outside_ok) {
          witnessed = true;
          break;
        }
      }
      if (!witnessed) {
        all_fours_witnessed = false;
        break;
      }
    }
    if (all_fours_witnessed) result.push_back(b);
  }
  return result;
}

NodeSet c_chain(const CoxeterMatrix& m, const NodeSet& M, Node b, Node c) {
  require_odd_component(m, M);
  if (b >= m.rank() || c >= m.rank())
    throw UnknownNodeError("node index out of range");
  if (M.contains(b) || !M.contains(c))
    throw BadArgumentsError("c_chain expects b outside M and c inside M");
  if (!odd_tree(m, M))
    throw NotATreeError("odd graph on " + m.set_str(M) + " is not a tree");
  // The attachment node is the unique member of M adjacent to b.
  std::optional<Node> a;
  for (Node x : M) {
    if (m.adjacent(b, x)) {
      if (a) throw NoPathError("b is attached to more than one node of M");
      a = x;
    }
  }
  if (!a) throw NoPathError("b is not attached to M");
  auto path = odd_path(m, M, *a, c);
  if (!path) throw NoPathError("no path inside the component");
  NodeSet result{b};
  for (Node x : *path) result.insert(x);
  return result;
}

NodeSet d_chain(const CoxeterMatrix& m, const NodeSet& M, Node a, Node b,
                Node c) {
  require_odd_component(m, M);
  if (a >= m.rank() || b >= m.rank() || c >= m.rank())
    throw UnknownNodeError("node index out of range");
  if (!M.contains(a) || !M.contains(b) || !M.contains(c) || a == b)
    throw BadArgumentsError("d_chain expects distinct a, b and c inside M");
  NodeSet rest = M.without(b);
  if (!odd_tree(m, rest))
    throw NotATreeError("odd graph on " + m.set_str(rest) + " is not a tree");
  auto path = odd_path(m, rest, a, c);
  if (!path) throw NoPathError("no path from a to c avoiding b");
  NodeSet result{b};
  for (Node x : *path) result.insert(x);
  return result;
}

FocusCheck check_focus(const CoxeterMatrix& m, const NodeSet& M, Node a, Node b) {
  FocusCheck res;
  // (1) every odd edge of M has label 3 and M is a tree.
  bool labels3 = true;
  for (auto [x, y] : odd_edges(m, M))
    if (m.label(x, y) != Label::finite(3)) labels3 = false;
  bool tree = odd_tree(m, M);
  res.clause[0] = labels3 && tree;
  if (!tree) return res;  // chains are undefined without the tree

  // Paths from a, and the chains C[b..c].
  std::unordered_map<Node, std::vector<Node>> chain;
  for (Node c : M) {
    auto path = odd_path(m, M, a, c);
    if (!path) return res;
    std::vector<Node> full{b};
    full.insert(full.end(), path->begin(), path->end());
    chain.emplace(c, std::move(full));
  }
  auto in_chain = [&](Node c, Node target) {
    const auto& v = chain.at(target);
    return std::find(v.begin(), v.end(), c) != v.end();
  };

  // (2) each C[b..c] is a system of type C_k.
  bool c2 = true;
  for (Node c : M)
    if (!is_c_chain(m, chain.at(c))) c2 = false;
  res.clause[1] = c2;

  // (3) members of M u {b} on divergent chains are joined by infinity.
  bool c3ok = true;
  NodeSet mb = M.with(b);
  for (Node c : mb) {
    for (Node d : mb) {
      if (d <= c) continue;
      bool c_in = (d == b) || in_chain(c, d);
      bool d_in = (c == b) || in_chain(d, c);
      if (!c_in && !d_in && !m.label(c, d).is_infinite()) c3ok = false;
    }
  }
  res.clause[2] = c3ok;

  // (4) a finite label from c in M to an outside node e forces label 2 from
  // the whole chain C[b..c] to e.
  bool c4 = true;
  for (Node c : M) {
    for (Node e = 0; e < m.rank(); ++e) {
      if (M.contains(e) || e == b) continue;
      if (m.label(c, e).is_infinite()) continue;
      if (m.label(c, e) != Label::finite(2)) {
        c4 = false;
        continue;
      }
      for (Node d : chain.at(c))
        if (m.label(d, e) != Label::finite(2)) c4 = false;
    }
  }
  res.clause[3] = c4;

  // (5) M u {b} must not be a spherical component of Even(M).
  res.clause[4] = !is_spherical_component_of(m, even_closure(m, M), mb);
  return res;
}

HalfFocusCheck check_half_focus(const CoxeterMatrix& m, const NodeSet& M, Node a,
                                Node b) {
  HalfFocusCheck res;
  // (1) a and b see every other node identically: {2,3} inside M, {2,inf}
  // outside.
  bool c1 = true;
  for (Node c = 0; c < m.rank(); ++c) {
    if (c == a || c == b) continue;
    Label la = m.label(a, c);
    Label lb = m.label(b, c);
    if (la != lb) {
      c1 = false;
      continue;
    }
    if (M.contains(c)) {
      if (la.is_infinite() || (la.value() != 2 && la.value() != 3)) c1 = false;
    } else {
      if (!la.is_infinite() && la.value() != 2) c1 = false;
    }
  }
  res.clause[0] = c1;

  // (2) the odd graph on M \ {b} is a tree with all labels 3.
  NodeSet rest = M.without(b);
  bool labels3 = true;
  for (auto [x, y] : odd_edges(m, rest))
    if (m.label(x, y) != Label::finite(3)) labels3 = false;
  bool tree = odd_tree(m, rest);
  res.clause[1] = labels3 && tree;
  if (!tree) return res;

  std::unordered_map<Node, std::vector<Node>> path_to;  // a -> c inside rest
  for (Node c : M) {
    if (c == a || c == b) continue;
    auto path = odd_path(m, rest, a, c);
    if (!path) return res;
    path_to.emplace(c, std::move(*path));
  }
  auto in_dchain = [&](Node x, Node target) {
    if (x == b) return true;
    const auto& v = path_to.at(target);
    return std::find(v.begin(), v.end(), x) != v.end();
  };

  // (3) each D[a,b..c] is a system of type D_k.
  bool c3ok = true;
  for (const auto& [c, path] : path_to)
    if (!is_d_chain(m, b, path)) c3ok = false;
  res.clause[2] = c3ok;

  // (4) divergent members of M \ {a,b} are joined by infinity.
  bool c4 = true;
  for (const auto& [c, pc] : path_to) {
    for (const auto& [d, pd] : path_to) {
      if (d <= c) continue;
      if (!in_dchain(c, d) && !in_dchain(d, c) && !m.label(c, d).is_infinite())
        c4 = false;
    }
  }
  res.clause[3] = c4;

  // (5) a finite label from c in M \ {a,b} to a node outside M forces label
  // 2 from the whole chain D[a,b..c].
  bool c5 = true;
  for (const auto& [c, pc] : path_to) {
    for (Node e = 0; e < m.rank(); ++e) {
      if (M.contains(e)) continue;
      if (m.label(c, e).is_infinite()) continue;
      if (m.label(c, e) != Label::finite(2)) {
        c5 = false;
        continue;
      }
      if (m.label(b, e) != Label::finite(2)) c5 = false;
      for (Node d : pc)
        if (m.label(d, e) != Label::finite(2)) c5 = false;
    }
  }
  res.clause[4] = c5;

  // (6) M must not be a spherical component of Even(M).
  res.clause[5] = !is_spherical_component_of(m, even_closure(m, M), M);
  return res;
}

std::vector<Focus> find_foci(const CoxeterMatrix& m, const NodeSet& M) {
  require_odd_component(m, M);
  std::vector<Focus> out;
  for (Node a : M) {
    for (Node b = 0; b < m.rank(); ++b) {
      if (M.contains(b)) continue;
      // A focus pair is joined by 4 (C[b..a] must be of type C_2).
      if (m.label(a, b) != Label::finite(4)) continue;
      if (check_focus(m, M, a, b).passed()) out.push_back(Focus{a, b});
    }
  }
  return out;
}

std::optional<Focus> find_focus(const CoxeterMatrix& m, const NodeSet& M) {
  auto foci = find_foci(m, M);
  if (foci.empty()) return std::nullopt;
  return foci.front();
}

std::vector<std::pair<Node, Node>> find_half_foci(const CoxeterMatrix& m,
                                                  const NodeSet& M) {
  require_odd_component(m, M);
  std::vector<std::pair<Node, Node>> out;
  const auto& v = M.members();
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (m.label(v[i], v[j]) != Label::finite(2)) continue;
      if (check_half_focus(m, M, v[i], v[j]).passed())
        out.emplace_back(v[i], v[j]);
    }
  }
  return out;
}

std::optional<std::pair<Node, Node>> find_half_focus(const CoxeterMatrix& m,
                                                     const NodeSet& M) {
  auto hf = find_half_foci(m, M);
  if (hf.empty()) return std::nullopt;
  return hf.front();
}

FcResult finite_continuation(const CoxeterMatrix& m, Node a) {
  if (a >= m.rank()) throw UnknownNodeError("node index out of range");
  NodeSet M = odd_component(m, a);
  NodeSet even = even_closure(m, M);
  auto comps = coxeter_components(m, even);

  NodeSet spherical_union;
  bool m_component_spherical = false;
  for (const NodeSet& comp : comps) {
    bool fin = classify_connected(m, comp).is_finite();
    if (fin) spherical_union = spherical_union.united(comp);
    if (M.is_subset_of(comp) && fin) m_component_spherical = true;
  }

  auto foci = find_foci(m, M);
  auto halves = find_half_foci(m, M);
  int situations = (m_component_spherical ? 1 : 0) + (foci.empty() ? 0 : 1) +
                   (halves.empty() ? 0 : 1);
  if (situations > 1 || foci.size() > 1 || halves.size() > 1)
    throw CaseConflictError(
        "component " + m.set_str(M) +
        " matches more than one classification case; refusing to choose");

  FcResult res;
  auto finish_visible = [&](NodeSet J) {
    res.visible = true;
    res.J = std::move(J);
    if (!res.J.contains(a) || !is_spherical(m, res.J))
      throw Error("internal: visible FC result violates its invariant");
  };

  if (m_component_spherical) {
    res.case_tag = FcCase::A;
    finish_visible(spherical_union);
    return res;
  }

  if (!foci.empty()) {
    const Focus& f = foci.front();
    res.case_tag = FcCase::C;
    res.focus = f;
    if (a == f.a) finish_visible(spherical_union.with(f.a).with(f.b));
    return res;
  }

  if (!halves.empty()) {
    const auto& [ha, hb] = halves.front();
    res.case_tag = FcCase::D;
    res.half_focus = halves.front();
    if (a == ha || a == hb) finish_visible(spherical_union.with(ha).with(hb));
    return res;
  }

  res.case_tag = FcCase::B;
  res.c3 = c3_neighbours(m, M);
  bool adjacent = false;
  for (Node b : res.c3)
    if (m.adjacent(a, b)) adjacent = true;
  if (!adjacent) {
    NodeSet J = spherical_union.with(a);
    for (Node b : res.c3) J.insert(b);
    finish_visible(std::move(J));
  }
  return res;
}

RigidityReport rigidity_report(const CoxeterMatrix& m) {
  RigidityReport rep;
  rep.irreducible = is_irreducible(m);
  rep.two_spherical = is_two_spherical(m);
  rep.non_spherical = !is_spherical(m, NodeSet::full(m.rank()));
  rep.fc_trivial.resize(m.rank());
  for (Node a = 0; a < m.rank(); ++a) {
    FcResult fc = finite_continuation(m, a);
    rep.fc_trivial[a] = fc.visible && fc.J == NodeSet{a};
  }
  if (rep.irreducible && rep.two_spherical && rep.non_spherical) {
    for (Node a = 0; a < m.rank(); ++a)
      if (!rep.fc_trivial[a])
        throw Error("internal: rigidity hypothesis holds but FC(r_" +
                    m.name_of(a) + ") is not trivial");
    rep.verdict = RigidityVerdict::ReflectionsDetermined;
  }
  return rep;
}

}  // namespace coxfc
