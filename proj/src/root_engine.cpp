#include "coxfc/root_engine.hpp"

#include <limits>
#include <sstream>
#include <unordered_set>

#include "coxfc/finite_type.hpp"

namespace coxfc {

namespace {

FieldElement form_entry(const Label& l) {
  if (l.is_infinite()) return FieldElement(-1);
  switch (l.value()) {
    case 1:
      return FieldElement(1);
    case 2:
      return FieldElement(0);
    case 3:
      return FieldElement(Rational(-1, 2));
    case 4:
      return FieldElement::sqrt_of(2).scaled(Rational(-1, 2));
    case 5: {
      FieldElement e(Rational(-1, 4));
      e += FieldElement::sqrt_of(5).scaled(Rational(-1, 4));
      return e;  // -(1+sqrt5)/4 = -cos(pi/5)
    }
    case 6:
      return FieldElement::sqrt_of(3).scaled(Rational(-1, 2));
    default:
      throw UnsupportedLabelError("label " + l.str() +
                                  " is outside the engine field "
                                  "Q(sqrt2,sqrt3,sqrt5)");
  }
}

std::vector<FieldElement> identity_matrix(std::size_t n) {
  std::vector<FieldElement> m(n * n);
  for (std::size_t i = 0; i < n; ++i) m[i + n * i] = FieldElement(1);
  return m;
}

std::vector<FieldElement> mat_mul(const std::vector<FieldElement>& a,
                                  const std::vector<FieldElement>& b,
                                  std::size_t n) {
  std::vector<FieldElement> c(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const FieldElement& bkj = b[k + n * j];
      if (bkj.is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i) {
        const FieldElement& aik = a[i + n * k];
        if (aik.is_zero()) continue;
        c[i + n * j] += aik * bkj;
      }
    }
  }
  return c;
}

struct MatrixHash {
  std::size_t operator()(const std::vector<FieldElement>& v) const {
    std::size_t h = 0x811c9dc5u;
    for (const FieldElement& x : v) h = hash_combine(h, hash_value(x));
    return h;
  }
};

struct RootHash {
  std::size_t operator()(const Root& r) const { return hash_value(r); }
};

}  // namespace

// ---------------------------------------------------------------- form

BilinearForm::BilinearForm(const CoxeterMatrix& m) : n_(m.rank()) {
  g_.resize(n_ * n_);
  for (Node a = 0; a < n_; ++a)
    for (Node b = 0; b < n_; ++b) g_[a * n_ + b] = form_entry(m.label(a, b));
}

BilinearForm build_form(const CoxeterMatrix& m) { return BilinearForm(m); }

// ---------------------------------------------------------------- roots

Root Root::simple(std::size_t rank, Node a) {
  std::vector<FieldElement> c(rank);
  c[a] = FieldElement(1);
  return Root(std::move(c));
}

NodeSet Root::support() const {
  NodeSet s;
  for (Node i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) s.insert(i);
  return s;
}

Root Root::operator-() const {
  std::vector<FieldElement> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return Root(std::move(c));
}

Root operator+(const Root& a, const Root& b) {
  if (a.rank() != b.rank()) throw BadArgumentsError("root rank mismatch");
  std::vector<FieldElement> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
  return Root(std::move(c));
}

Root operator-(const Root& a, const Root& b) {
  if (a.rank() != b.rank()) throw BadArgumentsError("root rank mismatch");
  std::vector<FieldElement> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
  return Root(std::move(c));
}

Root Root::scaled(const FieldElement& s) const {
  std::vector<FieldElement> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
  return Root(std::move(c));
}

std::string Root::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    os << c_[i].str();
  }
  os << ")";
  return os.str();
}

std::size_t hash_value(const Root& r) {
  std::size_t h = 0x811c9dc5u;
  for (Node i = 0; i < r.rank(); ++i) h = hash_combine(h, hash_value(r.coord(i)));
  return h;
}

// ---------------------------------------------------------------- elements

GroupElement GroupElement::identity(std::size_t n) {
  return GroupElement(identity_matrix(n), identity_matrix(n), n);
}

Root GroupElement::image_of_simple(Node j) const {
  std::vector<FieldElement> c(n_);
  for (std::size_t i = 0; i < n_; ++i) c[i] = fwd_[i + n_ * j];
  return Root(std::move(c));
}

Root GroupElement::inverse_image_of_simple(Node j) const {
  std::vector<FieldElement> c(n_);
  for (std::size_t i = 0; i < n_; ++i) c[i] = inv_[i + n_ * j];
  return Root(std::move(c));
}

bool GroupElement::is_identity() const {
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t i = 0; i < n_; ++i) {
      const FieldElement& e = fwd_[i + n_ * j];
      if (i == j ? e != FieldElement(1) : !e.is_zero()) return false;
    }
  return true;
}

bool GroupElement::is_minus_identity() const {
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t i = 0; i < n_; ++i) {
      const FieldElement& e = fwd_[i + n_ * j];
      if (i == j ? e != FieldElement(-1) : !e.is_zero()) return false;
    }
  return true;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.n_ != b.n_) throw BadArgumentsError("element rank mismatch");
  return GroupElement(mat_mul(a.fwd_, b.fwd_, a.n_), mat_mul(b.inv_, a.inv_, a.n_),
                      a.n_);
}

std::size_t hash_value(const GroupElement& g) {
  std::size_t h = 0x811c9dc5u;
  for (const FieldElement& x : g.matrix()) h = hash_combine(h, hash_value(x));
  return h;
}

bool canonical_less(const GroupElement& a, const GroupElement& b) {
  const auto& ma = a.matrix();
  const auto& mb = b.matrix();
  for (std::size_t i = 0; i < ma.size(); ++i) {
    if (ma[i] != mb[i]) return ma[i] < mb[i];
  }
  return false;
}

// ---------------------------------------------------------------- enumeration

std::optional<std::size_t> Enumeration::find(const GroupElement& g) const {
  auto it = by_hash_.find(hash_value(g));
  if (it == by_hash_.end()) return std::nullopt;
  for (std::size_t i : it->second)
    if (items_[i].g == g) return i;
  return std::nullopt;
}

std::size_t Enumeration::insert(GroupElement g, unsigned length,
                                std::size_t parent, Node gen) {
  std::size_t h = hash_value(g);
  std::size_t idx = items_.size();
  items_.push_back(Item{std::move(g), length, parent, gen});
  by_hash_[h].push_back(idx);
  return idx;
}

std::vector<Node> Enumeration::word(std::size_t i) const {
  if (i >= items_.size()) throw BadArgumentsError("enumeration index out of range");
  std::vector<Node> w;
  while (items_[i].length > 0) {
    w.push_back(items_[i].gen);
    i = items_[i].parent;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

// ---------------------------------------------------------------- engine

RootEngine::RootEngine(CoxeterMatrix m) : matrix_(std::move(m)), form_(matrix_) {
  validate(matrix_);
}

Root RootEngine::simple_root(Node a) const {
  if (a >= rank()) throw UnknownNodeError("node index out of range");
  return Root::simple(rank(), a);
}

GroupElement RootEngine::identity() const { return GroupElement::identity(rank()); }

GroupElement RootEngine::simple_reflection(Node a) const {
  if (a >= rank()) throw UnknownNodeError("node index out of range");
  return reflection_along(simple_root(a));
}

GroupElement RootEngine::reflection_along(const Root& r) const {
  const std::size_t n = rank();
  if (r.rank() != n) throw BadArgumentsError("root rank mismatch");
  if (inner(r, r) != FieldElement(1))
    throw NotUnitRootError("reflection requires a root with B(r,r) = 1");
  std::vector<FieldElement> mat = identity_matrix(n);
  for (Node j = 0; j < n; ++j) {
    FieldElement c = inner(r, simple_root(j));
    if (c.is_zero()) continue;
    c += c;  // 2 B(r, e_j)
    for (Node i = 0; i < n; ++i) {
      if (r.coord(i).is_zero()) continue;
      mat[i + n * j] -= c * r.coord(i);
    }
  }
  return GroupElement(mat, mat, n);  // involution
}

Root RootEngine::apply(const GroupElement& w, const Root& v) const {
  const std::size_t n = rank();
  if (w.rank() != n || v.rank() != n) throw BadArgumentsError("rank mismatch");
  std::vector<FieldElement> out(n);
  for (Node j = 0; j < n; ++j) {
    if (v.coord(j).is_zero()) continue;
    for (Node i = 0; i < n; ++i) {
      const FieldElement& e = w.entry(i, j);
      if (e.is_zero()) continue;
      out[i] += e * v.coord(j);
    }
  }
  return Root(std::move(out));
}

FieldElement RootEngine::inner(const Root& u, const Root& v) const {
  const std::size_t n = rank();
  if (u.rank() != n || v.rank() != n) throw BadArgumentsError("rank mismatch");
  FieldElement s;
  for (Node i = 0; i < n; ++i) {
    if (u.coord(i).is_zero()) continue;
    FieldElement row;
    for (Node j = 0; j < n; ++j) {
      if (v.coord(j).is_zero()) continue;
      const FieldElement& g = form_.entry(i, j);
      if (g.is_zero()) continue;
      row += g * v.coord(j);
    }
    s += u.coord(i) * row;
  }
  return s;
}

bool RootEngine::is_positive(const Root& r) const {
  bool nonzero = false;
  for (Node i = 0; i < r.rank(); ++i) {
    int s = r.coord(i).sign();
    if (s < 0) return false;
    if (s > 0) nonzero = true;
  }
  return nonzero;
}

bool RootEngine::is_negative(const Root& r) const {
  bool nonzero = false;
  for (Node i = 0; i < r.rank(); ++i) {
    int s = r.coord(i).sign();
    if (s > 0) return false;
    if (s < 0) nonzero = true;
  }
  return nonzero;
}

// Columns of group elements are roots, so the sign of the first nonzero
// coordinate decides positivity.
bool RootEngine::column_positive(const std::vector<FieldElement>& mat,
                                 Node j) const {
  const std::size_t n = rank();
  for (Node i = 0; i < n; ++i) {
    const FieldElement& e = mat[i + n * j];
    if (e.is_zero()) continue;
    return e.sign() > 0;
  }
  return false;
}

bool RootEngine::column_negative(const std::vector<FieldElement>& mat,
                                 Node j) const {
  const std::size_t n = rank();
  for (Node i = 0; i < n; ++i) {
    const FieldElement& e = mat[i + n * j];
    if (e.is_zero()) continue;
    return e.sign() < 0;
  }
  return false;
}

bool RootEngine::column_supported_in(const std::vector<FieldElement>& mat,
                                     Node j, const NodeSet& J) const {
  const std::size_t n = rank();
  for (Node i = 0; i < n; ++i) {
    if (J.contains(i)) continue;
    if (!mat[i + n * j].is_zero()) return false;
  }
  return true;
}

void RootEngine::right_multiply(std::vector<FieldElement>& mat, Node b) const {
  const std::size_t n = rank();
  std::vector<FieldElement> colb(n);
  for (Node i = 0; i < n; ++i) colb[i] = mat[i + n * b];
  for (Node j = 0; j < n; ++j) {
    const FieldElement& g = form_.entry(b, j);
    if (g.is_zero()) continue;
    FieldElement c = g + g;
    for (Node i = 0; i < n; ++i) {
      if (colb[i].is_zero()) continue;
      mat[i + n * j] -= c * colb[i];
    }
  }
}

void RootEngine::left_multiply(std::vector<FieldElement>& mat, Node b) const {
  const std::size_t n = rank();
  std::vector<FieldElement> acc(n);  // sum_k B(b,k) row_k
  for (Node k = 0; k < n; ++k) {
    const FieldElement& g = form_.entry(b, k);
    if (g.is_zero()) continue;
    for (Node j = 0; j < n; ++j) {
      const FieldElement& e = mat[k + n * j];
      if (e.is_zero()) continue;
      acc[j] += g * e;
    }
  }
  for (Node j = 0; j < n; ++j) {
    if (acc[j].is_zero()) continue;
    mat[b + n * j] -= acc[j] + acc[j];
  }
}

GroupElement RootEngine::right_product(const GroupElement& w, Node b) const {
  std::vector<FieldElement> fwd = w.matrix();
  std::vector<FieldElement> inv = w.inverse_matrix();
  right_multiply(fwd, b);
  left_multiply(inv, b);
  return GroupElement(std::move(fwd), std::move(inv), rank());
}

Enumeration RootEngine::enumerate_impl(const NodeSet& generators,
                                       unsigned max_length, std::size_t cap,
                                       bool* exceeded) const {
  if (exceeded) *exceeded = false;
  Enumeration e;
  if (cap == 0) {
    if (exceeded) {
      *exceeded = true;
      return e;
    }
    throw BudgetExceededError("element cap is zero");
  }
  e.insert(identity(), 0, 0, 0);
  std::vector<std::size_t> frontier{0};
  unsigned len = 0;
  while (!frontier.empty() && len < max_length) {
    ++len;
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      for (Node b : generators) {
        // l(w r_b) = l(w) + 1 exactly when w b is positive.
        if (!column_positive(e.items_[idx].g.matrix(), b)) continue;
        GroupElement cand = right_product(e.items_[idx].g, b);
        if (e.find(cand)) continue;
        if (e.size() >= cap) {
          if (exceeded) {
            *exceeded = true;
            e.saturated_ = false;
            return e;
          }
          throw BudgetExceededError("element cap " + std::to_string(cap) +
                                    " reached at length " + std::to_string(len));
        }
        next.push_back(e.insert(std::move(cand), len, idx, b));
      }
    }
    frontier = std::move(next);
  }
  e.saturated_ = frontier.empty();
  return e;
}

Enumeration RootEngine::enumerate(unsigned max_length, std::size_t cap) const {
  return enumerate_impl(NodeSet::full(rank()), max_length, cap, nullptr);
}

Enumeration RootEngine::enumerate_subgroup(const NodeSet& generators,
                                           unsigned max_length,
                                           std::size_t cap) const {
  for (Node a : generators)
    if (a >= rank()) throw UnknownNodeError("generator index out of range");
  return enumerate_impl(generators, max_length, cap, nullptr);
}

std::pair<unsigned, std::vector<Root>> RootEngine::length_and_inversions(
    const GroupElement& w, unsigned max_steps) const {
  if (w.rank() != rank()) throw BadArgumentsError("element rank mismatch");
  // Greedy right descent to the identity yields a reduced word in reverse.
  GroupElement cur = w;
  std::vector<Node> collected;
  while (!cur.is_identity()) {
    if (collected.size() >= max_steps)
      throw DepthExceededError("descent exceeded " + std::to_string(max_steps) +
                               " steps");
    bool found = false;
    for (Node b = 0; b < rank(); ++b) {
      if (column_negative(cur.matrix(), b)) {
        cur = right_product(cur, b);
        collected.push_back(b);
        found = true;
        break;
      }
    }
    if (!found)
      throw BadArgumentsError("matrix admits no descent: not a group element");
  }
  // w = s_1 ... s_k with the word read backwards from `collected`;
  // N(w) = { a_k, s_k(a_{k-1}), s_k s_{k-1}(a_{k-2}), ... }.
  std::vector<Root> inversions;
  GroupElement u = identity();
  for (Node g : collected) {
    inversions.push_back(apply(u, simple_root(g)));
    u = right_product(u, g);
  }
  return {static_cast<unsigned>(collected.size()), std::move(inversions)};
}

GroupElement RootEngine::longest_element(const NodeSet& J) const {
  for (Node a : J)
    if (a >= rank()) throw UnknownNodeError("node index out of range");
  if (!is_spherical(matrix_, J))
    throw NotSphericalError("subset " + matrix_.set_str(J) + " is not spherical");
  GroupElement w = identity();
  std::size_t guard = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (Node b : J) {
      if (column_positive(w.matrix(), b)) {
        w = right_product(w, b);
        progress = true;
        break;
      }
    }
    if (++guard > 8u * 1024u * 1024u)
      throw Error("internal: longest-element ascent did not terminate");
  }
  return w;
}

namespace {

// If the root is a simple basis vector, its node index.
std::optional<Node> as_simple(const Root& r) {
  std::optional<Node> found;
  for (Node i = 0; i < r.rank(); ++i) {
    const FieldElement& c = r.coord(i);
    if (c.is_zero()) continue;
    if (c != FieldElement(1) || found) return std::nullopt;
    found = i;
  }
  return found;
}

}  // namespace

GroupElement RootEngine::v_element(Node a, const NodeSet& I) const {
  if (a >= rank()) throw UnknownNodeError("node index out of range");
  for (Node b : I)
    if (b >= rank()) throw UnknownNodeError("node index out of range");
  if (I.contains(a)) throw BadArgumentsError("v[a,I] requires a not in I");
  NodeSet iu = I.with(a);
  NodeSet comp;
  for (const NodeSet& c : coxeter_components(matrix_, iu)) {
    if (c.contains(a)) comp = c;
  }
  if (!is_spherical(matrix_, comp))
    throw NotSphericalError("component of I u {a} containing a is not spherical");
  GroupElement v = longest_element(comp) * longest_element(comp.without(a));
  // v maps I into I u {a} and fixes I \ L pointwise.
  for (Node b : I) {
    std::optional<Node> img = as_simple(v.image_of_simple(b));
    bool ok = img && iu.contains(*img);
    if (ok && !comp.contains(b)) ok = (*img == b);
    if (!ok) throw Error("internal: v[a,I] postcondition failed");
  }
  return v;
}

GroupElement RootEngine::min_double_coset_rep(const NodeSet& I, const NodeSet& J,
                                              GroupElement w) const {
  for (Node a : I.united(J))
    if (a >= rank()) throw UnknownNodeError("node index out of range");
  if (w.rank() != rank()) throw BadArgumentsError("element rank mismatch");
  bool progress = true;
  while (progress) {
    progress = false;
    for (Node x : I) {
      // l(r_x w) < l(w) iff w^-1 x is negative.
      if (column_negative(w.inverse_matrix(), x)) {
        std::vector<FieldElement> fwd = w.matrix();
        std::vector<FieldElement> inv = w.inverse_matrix();
        left_multiply(fwd, x);
        right_multiply(inv, x);
        w = GroupElement(std::move(fwd), std::move(inv), rank());
        progress = true;
        break;
      }
    }
    if (progress) continue;
    for (Node y : J) {
      if (column_negative(w.matrix(), y)) {
        w = right_product(w, y);
        progress = true;
        break;
      }
    }
  }
  return w;
}

OracleFcOutcome RootEngine::oracle_fc_outcome(Node a, unsigned max_length,
                                              std::size_t element_cap) const {
  if (a >= rank()) throw UnknownNodeError("node index out of range");
  const std::vector<NodeSet> max_spherical = maximal_spherical_subsets(matrix_);
  bool exceeded = false;
  Enumeration all = enumerate_impl(NodeSet::full(rank()), max_length, element_cap,
                                   &exceeded);

  using MatrixKey = std::vector<FieldElement>;
  std::vector<std::unordered_set<MatrixKey, MatrixHash>> seen_cosets(
      max_spherical.size());
  std::vector<std::unordered_set<MatrixKey, MatrixHash>> subgroup_sets(
      max_spherical.size());
  std::vector<char> subgroup_state(max_spherical.size(), 0);  // 0 new, 1 ok, 2 too big
  std::vector<std::vector<GroupElement>> subgroup_elems(max_spherical.size());

  std::vector<GroupElement> inter;
  bool seeded = false;
  bool done = false;

  for (const auto& item : all.items()) {
    if (done) break;
    for (std::size_t ji = 0; ji < max_spherical.size() && !done; ++ji) {
      const NodeSet& J = max_spherical[ji];
      if (subgroup_state[ji] == 2) continue;
      // r_a lies in w W_J w^-1 exactly when w^-1 a lies in Phi_J.
      if (!column_supported_in(item.g.inverse_matrix(), a, J)) continue;

      // Reduce to the minimal representative of the coset w W_J; the
      // conjugate subgroup only depends on it.
      GroupElement d = item.g;
      bool descended = true;
      while (descended) {
        descended = false;
        for (Node b : J) {
          if (column_negative(d.matrix(), b)) {
            d = right_product(d, b);
            descended = true;
            break;
          }
        }
      }
      if (!seen_cosets[ji].insert(d.matrix()).second) continue;

      if (subgroup_state[ji] == 0) {
        bool sub_exceeded = false;
        Enumeration sub =
            enumerate_impl(J, std::numeric_limits<unsigned>::max(), element_cap,
                           &sub_exceeded);
        if (sub_exceeded) {
          subgroup_state[ji] = 2;
          exceeded = true;
          continue;
        }
        subgroup_state[ji] = 1;
        for (const auto& si : sub.items()) {
          subgroup_sets[ji].insert(si.g.matrix());
          subgroup_elems[ji].push_back(si.g);
        }
      }

      if (!seeded) {
        GroupElement dinv = d.inverse();
        for (const GroupElement& g : subgroup_elems[ji])
          inter.push_back(d * g * dinv);
        seeded = true;
      } else {
        std::vector<GroupElement> kept;
        kept.reserve(inter.size());
        for (const GroupElement& t : inter) {
          MatrixKey u = mat_mul(mat_mul(d.inverse_matrix(), t.matrix(), rank()),
                                d.matrix(), rank());
          if (subgroup_sets[ji].count(u)) kept.push_back(t);
        }
        inter = std::move(kept);
      }
      // The intersection always contains 1 and r_a, so size 2 is final.
      if (seeded && inter.size() == 2) done = true;
    }
  }

  OracleFcOutcome out;
  if (!seeded) {
    out.complete = false;
    return out;
  }
  std::sort(inter.begin(), inter.end(), canonical_less);
  out.elements = std::move(inter);
  out.complete = !exceeded;
  return out;
}

std::vector<GroupElement> RootEngine::oracle_fc(Node a, unsigned max_length,
                                                std::size_t element_cap) const {
  OracleFcOutcome out = oracle_fc_outcome(a, max_length, element_cap);
  if (!out.complete)
    throw BudgetExceededError("oracle enumeration hit the element cap of " +
                              std::to_string(element_cap));
  return std::move(out.elements);
}

bool RootEngine::normalizer_condition(Node a, const NodeSet& J) const {
  if (a >= rank()) throw UnknownNodeError("node index out of range");
  for (Node b : J)
    if (b >= rank()) throw UnknownNodeError("node index out of range");
  if (!J.contains(a))
    throw BadArgumentsError("normalizer_condition requires a in J");
  if (!is_spherical(matrix_, NodeSet::full(rank())))
    throw NotSphericalError("normalizer_condition requires a finite group");
  Enumeration all = enumerate(std::numeric_limits<unsigned>::max(),
                              kDefaultElementCap);
  for (const auto& item : all.items()) {
    // w in Q: wa lies in Phi_J.
    if (!column_supported_in(item.g.matrix(), a, J)) continue;
    // w must stabilize Phi_J, i.e. send every simple root of J into V_J.
    for (Node b : J)
      if (!column_supported_in(item.g.matrix(), b, J)) return false;
  }
  return true;
}

std::vector<Root> RootEngine::root_orbit(Node a, unsigned depth) const {
  if (a >= rank()) throw UnknownNodeError("node index out of range");
  std::vector<Root> all{simple_root(a)};
  std::unordered_set<Root, RootHash> seen{all[0]};
  std::vector<std::size_t> frontier{0};
  for (unsigned d = 0; d < depth && !frontier.empty(); ++d) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      for (Node b = 0; b < rank(); ++b) {
        // r_b changes only coordinate b: v -> v - 2 B(b,v) e_b.
        Root img = all[idx];
        FieldElement c;
        for (Node j = 0; j < rank(); ++j) {
          if (img.coord(j).is_zero()) continue;
          const FieldElement& g = form_.entry(b, j);
          if (g.is_zero()) continue;
          c += g * img.coord(j);
        }
        img.coord(b) -= c + c;
        if (seen.insert(img).second) {
          all.push_back(img);
          next.push_back(all.size() - 1);
        }
      }
    }
    frontier = std::move(next);
  }
  return all;
}

}  // namespace coxfc
