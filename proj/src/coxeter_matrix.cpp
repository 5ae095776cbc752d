#include "coxfc/coxeter_matrix.hpp"

#include <deque>
#include <sstream>

namespace coxfc {

CoxeterMatrix::CoxeterMatrix(std::vector<std::string> names,
                             std::vector<Label> entries)
    : names_(std::move(names)), entries_(std::move(entries)) {
  if (entries_.size() != names_.size() * names_.size())
    throw InputError("label matrix size does not match node count");
  for (Node i = 0; i < names_.size(); ++i) index_.emplace(names_[i], i);
}

CoxeterMatrix CoxeterMatrix::from_edges(std::vector<std::string> names,
                                        const std::vector<EdgeSpec>& edges) {
  const std::size_t n = names.size();
  std::vector<Label> entries(n * n, Label::finite(2));
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = Label::finite(1);
  std::vector<bool> listed(n * n, false);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n)
      throw InputError("edge endpoint index out of range");
    if (e.u == e.v)
      throw InputError("self-loop edge on node '" + names[e.u] + "'");
    if (listed[e.u * n + e.v])
      throw InputError("edge {" + names[e.u] + "," + names[e.v] +
                       "} listed twice");
    listed[e.u * n + e.v] = listed[e.v * n + e.u] = true;
    entries[e.u * n + e.v] = e.m;
    entries[e.v * n + e.u] = e.m;
  }
  return CoxeterMatrix(std::move(names), std::move(entries));
}

const std::string& CoxeterMatrix::name_of(Node a) const {
  if (a >= rank()) throw UnknownNodeError("node index out of range");
  return names_[a];
}

Node CoxeterMatrix::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end())
    throw UnknownNodeError("unknown node '" + std::string(name) + "'");
  return it->second;
}

Label CoxeterMatrix::label(Node a, Node b) const {
  if (a >= rank() || b >= rank())
    throw UnknownNodeError("node index out of range");
  return entries_[a * rank() + b];
}

std::string CoxeterMatrix::set_str(const NodeSet& s) const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (Node a : s) {
    if (!first) os << ",";
    os << name_of(a);
    first = false;
  }
  os << "}";
  return os.str();
}

void validate(const CoxeterMatrix& m) {
  const std::size_t n = m.rank();
  if (n < 1) throw InputError("matrix must have rank >= 1");
  std::unordered_map<std::string, Node> seen;
  for (Node a = 0; a < n; ++a) {
    if (!seen.emplace(m.name_of(a), a).second)
      throw InputError("duplicate node name '" + m.name_of(a) + "'");
  }
  for (Node a = 0; a < n; ++a) {
    Label d = m.label(a, a);
    if (d.is_infinite() || d.value() != 1)
      throw InputError("diagonal entry at node '" + m.name_of(a) +
                       "' must be 1");
    for (Node b = a + 1; b < n; ++b) {
      Label ab = m.label(a, b);
      Label ba = m.label(b, a);
      if (ab != ba)
        throw InputError("asymmetric labels at pair {" + m.name_of(a) + "," +
                         m.name_of(b) + "}");
      if (!ab.is_infinite() && ab.value() < 2)
        throw InputError("off-diagonal label at pair {" + m.name_of(a) + "," +
                         m.name_of(b) + "} must be >= 2");
    }
  }
}

namespace {

void check_subset(const CoxeterMatrix& m, const NodeSet& subset) {
  for (Node a : subset)
    if (a >= m.rank()) throw UnknownNodeError("subset node index out of range");
}

template <typename Adjacent>
std::vector<NodeSet> components_by(const NodeSet& subset, Adjacent adj) {
  std::vector<NodeSet> result;
  std::vector<bool> done;
  done.assign(subset.size(), false);
  const auto& mem = subset.members();
  for (std::size_t s = 0; s < mem.size(); ++s) {
    if (done[s]) continue;
    std::vector<Node> comp;
    std::deque<std::size_t> queue{s};
    done[s] = true;
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      comp.push_back(mem[i]);
      for (std::size_t j = 0; j < mem.size(); ++j) {
        if (!done[j] && adj(mem[i], mem[j])) {
          done[j] = true;
          queue.push_back(j);
        }
      }
    }
    result.emplace_back(std::move(comp));
  }
  return result;
}

}  // namespace

std::vector<NodeSet> coxeter_components(const CoxeterMatrix& m,
                                        const NodeSet& subset) {
  check_subset(m, subset);
  return components_by(subset, [&](Node a, Node b) { return m.adjacent(a, b); });
}

NodeSet odd_component(const CoxeterMatrix& m, Node a) {
  if (a >= m.rank()) throw UnknownNodeError("node index out of range");
  auto comps = components_by(NodeSet::full(m.rank()), [&](Node x, Node y) {
    return m.odd_adjacent(x, y);
  });
  for (auto& c : comps)
    if (c.contains(a)) return c;
  throw Error("internal: node not covered by odd components");
}

std::vector<NodeSet> odd_components(const CoxeterMatrix& m) {
  return components_by(NodeSet::full(m.rank()),
                       [&](Node x, Node y) { return m.odd_adjacent(x, y); });
}

NodeSet even_closure(const CoxeterMatrix& m, const NodeSet& M) {
  if (M.empty()) throw NotAnOddComponentError("empty set is not an odd component");
  check_subset(m, M);
  if (odd_component(m, *M.begin()) != M)
    throw NotAnOddComponentError("set " + m.set_str(M) +
                                 " is not a component of the odd graph");
  NodeSet result = M;
  for (Node b = 0; b < m.rank(); ++b) {
    if (M.contains(b)) continue;
    for (Node c : M) {
      if (m.label(c, b).is_even()) {
        result.insert(b);
        break;
      }
    }
  }
  return result;
}

bool is_irreducible(const CoxeterMatrix& m) {
  return coxeter_components(m, NodeSet::full(m.rank())).size() == 1;
}

bool is_two_spherical(const CoxeterMatrix& m) {
  for (Node a = 0; a < m.rank(); ++a)
    for (Node b = a + 1; b < m.rank(); ++b)
      if (m.label(a, b).is_infinite()) return false;
  return true;
}

}  // namespace coxfc
