#include "coxfc/finite_type.hpp"

#include <algorithm>

namespace coxfc {

std::string FiniteType::name() const {
  switch (family_) {
    case Family::A: return "A" + std::to_string(rank_);
    case Family::B: return "B" + std::to_string(rank_);
    case Family::D: return "D" + std::to_string(rank_);
    case Family::E: return "E" + std::to_string(rank_);
    case Family::F: return "F4";
    case Family::H: return "H" + std::to_string(rank_);
    case Family::I2: return "I2(" + std::to_string(i2_label_) + ")";
    case Family::NotFinite: return "NotFinite";
  }
  return "?";
}

namespace {

struct Diagram {
  std::vector<Node> nodes;                     // subset in order
  std::vector<std::vector<std::size_t>> adj;   // local indices
  std::vector<Label> edge_labels;              // parallel to edges
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

Diagram build_diagram(const CoxeterMatrix& m, const NodeSet& subset) {
  Diagram d;
  d.nodes.assign(subset.begin(), subset.end());
  const std::size_t k = d.nodes.size();
  d.adj.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (m.adjacent(d.nodes[i], d.nodes[j])) {
        d.adj[i].push_back(j);
        d.adj[j].push_back(i);
        d.edges.emplace_back(i, j);
        d.edge_labels.push_back(m.label(d.nodes[i], d.nodes[j]));
      }
    }
  }
  return d;
}

bool diagram_connected(const Diagram& d) {
  if (d.nodes.empty()) return false;
  std::vector<bool> seen(d.nodes.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 0;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    ++count;
    for (std::size_t j : d.adj[i]) {
      if (!seen[j]) {
        seen[j] = true;
        stack.push_back(j);
      }
    }
  }
  return count == d.nodes.size();
}

// Classifies a connected tree path diagram given the vertex order along the
// path and the labels between consecutive vertices.
FiniteType classify_path(const std::vector<unsigned>& labels) {
  const std::size_t n = labels.size() + 1;  // rank
  std::size_t big = 0, big_pos = 0;
  unsigned big_label = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != 3) {
      ++big;
      big_pos = i;
      big_label = labels[i];
    }
  }
  if (big == 0) return FiniteType::A(n);
  if (big > 1) return FiniteType::not_finite();
  const bool at_end = big_pos == 0 || big_pos + 1 == labels.size();
  if (big_label == 4) {
    if (at_end) return FiniteType::B(n);
    if (n == 4) return FiniteType::F4();  // labels (3,4,3)
    return FiniteType::not_finite();
  }
  if (big_label == 5 && at_end && (n == 3 || n == 4)) return FiniteType::H(n);
  return FiniteType::not_finite();
}

}  // namespace

FiniteType classify_connected(const CoxeterMatrix& m, const NodeSet& subset) {
  Diagram d = build_diagram(m, subset);
  if (!diagram_connected(d))
    throw NotConnectedError("subset " + m.set_str(subset) +
                            " is not connected in the Coxeter graph");
  const std::size_t n = d.nodes.size();
  if (n == 1) return FiniteType::A(1);

  for (const Label& l : d.edge_labels)
    if (l.is_infinite()) return FiniteType::not_finite();

  if (n == 2) return FiniteType::I2(d.edge_labels[0].value());

  // Rank >= 3: must be a tree with at most one degree-3 branch point.
  if (d.edges.size() != n - 1) return FiniteType::not_finite();  // has a cycle
  std::size_t branch = n;  // local index of the branch vertex, if any
  for (std::size_t i = 0; i < n; ++i) {
    if (d.adj[i].size() >= 4) return FiniteType::not_finite();
    if (d.adj[i].size() == 3) {
      if (branch != n) return FiniteType::not_finite();
      branch = i;
    }
  }

  if (branch != n) {
    // Forked diagrams allow only label 3 everywhere.
    for (const Label& l : d.edge_labels)
      if (l.value() != 3) return FiniteType::not_finite();
    // Arm lengths in vertices, walking away from the branch point.
    std::vector<std::size_t> arms;
    for (std::size_t start : d.adj[branch]) {
      std::size_t len = 1, prev = branch, cur = start;
      while (true) {
        std::size_t next = n;
        for (std::size_t cand : d.adj[cur])
          if (cand != prev) next = cand;
        if (next == n) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return FiniteType::D(n);
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
      return FiniteType::E(n);
    return FiniteType::not_finite();
  }

  // Plain path: order the vertices from one end.
  std::size_t end = n;
  for (std::size_t i = 0; i < n && end == n; ++i)
    if (d.adj[i].size() == 1) end = i;
  std::vector<unsigned> labels;
  std::size_t prev = n, cur = end;
  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::size_t next = n;
    for (std::size_t cand : d.adj[cur])
      if (cand != prev) next = cand;
    labels.push_back(m.label(d.nodes[cur], d.nodes[next]).value());
    prev = cur;
    cur = next;
  }
  return classify_path(labels);
}

bool is_spherical(const CoxeterMatrix& m, const NodeSet& subset) {
  for (const NodeSet& comp : coxeter_components(m, subset))
    if (!classify_connected(m, comp).is_finite()) return false;
  return true;
}

std::vector<NodeSet> spherical_components(const CoxeterMatrix& m,
                                          const NodeSet& subset) {
  std::vector<NodeSet> result;
  for (const NodeSet& comp : coxeter_components(m, subset))
    if (classify_connected(m, comp).is_finite()) result.push_back(comp);
  return result;
}

bool is_minus_one_type(const CoxeterMatrix& m, const NodeSet& subset) {
  for (const NodeSet& comp : coxeter_components(m, subset)) {
    FiniteType t = classify_connected(m, comp);
    bool central = false;
    switch (t.family()) {
      case Family::A: central = t.rank() == 1; break;
      case Family::B: central = true; break;
      case Family::D: central = t.rank() % 2 == 0; break;
      case Family::E: central = t.rank() >= 7; break;
      case Family::F: central = true; break;
      case Family::H: central = true; break;
      case Family::I2: central = t.i2_label() % 2 == 0; break;
      case Family::NotFinite: central = false; break;
    }
    if (!central) return false;
  }
  return true;
}

namespace {

void grow_spherical(const CoxeterMatrix& m, NodeSet& current, Node next,
                    std::vector<NodeSet>& out) {
  for (Node a = next; a < m.rank(); ++a) {
    NodeSet cand = current.with(a);
    if (!is_spherical(m, cand)) continue;
    out.push_back(cand);
    grow_spherical(m, cand, a + 1, out);
  }
}

}  // namespace

std::vector<NodeSet> all_spherical_subsets(const CoxeterMatrix& m) {
  std::vector<NodeSet> out;
  out.push_back(NodeSet{});
  NodeSet empty;
  grow_spherical(m, empty, 0, out);
  return out;
}

std::vector<NodeSet> maximal_spherical_subsets(const CoxeterMatrix& m) {
  std::vector<NodeSet> out;
  for (const NodeSet& s : all_spherical_subsets(m)) {
    if (s.empty() && m.rank() > 0) continue;
    bool maximal = true;
    for (Node a = 0; a < m.rank() && maximal; ++a) {
      if (s.contains(a)) continue;
      if (is_spherical(m, s.with(a))) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

}  // namespace coxfc
