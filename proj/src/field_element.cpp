#include "coxfc/field_element.hpp"

#include <cmath>
#include <optional>
#include <sstream>

namespace coxfc {

namespace {

// Product of the primes shared by two basis masks.
std::int64_t radicand_scale(int mask) {
  std::int64_t s = 1;
  if (mask & 1) s *= 2;
  if (mask & 2) s *= 3;
  if (mask & 4) s *= 5;
  return s;
}

int radicand_of_mask(int mask) { return static_cast<int>(radicand_scale(mask)); }

struct Enclosure {
  Rational lo, hi;
};

// Rational enclosures of the basis radicals, from continued-fraction
// convergents (adjacent convergents bracket the value).
const std::array<Enclosure, FieldElement::kBasisSize>& radical_enclosures() {
  static const std::array<Enclosure, FieldElement::kBasisSize> kEnc = {{
      {Rational(1), Rational(1)},                    // 1
      {Rational(239, 169), Rational(577, 408)},      // sqrt2
      {Rational(265, 153), Rational(1351, 780)},     // sqrt3
      {Rational(218, 89), Rational(485, 198)},       // sqrt6
      {Rational(682, 305), Rational(2889, 1292)},    // sqrt5
      {Rational(4443, 1405), Rational(721, 228)},    // sqrt10
      {Rational(1677, 433), Rational(1921, 496)},    // sqrt15
      {Rational(2525, 461), Rational(5291, 966)},    // sqrt30
  }};
  return kEnc;
}

using Q2 = std::array<Rational, 2>;  // p + q*sqrt2
using Q4 = std::array<Rational, 4>;  // masks over {sqrt2, sqrt3}

Q2 mul2(const Q2& a, const Q2& b) {
  return {a[0] * b[0] + Rational(2) * a[1] * b[1], a[0] * b[1] + a[1] * b[0]};
}

Q4 mul4(const Q4& a, const Q4& b) {
  Q4 r{};
  for (int i = 0; i < 4; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < 4; ++j) {
      if (b[j].is_zero()) continue;
      std::int64_t s = 1;
      if (i & j & 1) s *= 2;
      if (i & j & 2) s *= 3;
      r[i ^ j] += a[i] * b[j] * Rational(s);
    }
  }
  return r;
}

int sign2(const Q2& x) {
  const Rational& p = x[0];
  const Rational& q = x[1];
  if (q.is_zero()) return p.sign();
  if (p.is_zero()) return q.sign();
  if (p.sign() == q.sign()) return p.sign();
  // Opposite signs: compare p^2 against 2 q^2.
  Rational t = p * p - Rational(2) * q * q;
  // t == 0 would mean sqrt2 rational.
  return p.sign() > 0 ? t.sign() : -t.sign();
}

int sign4(const Q4& x) {
  Q2 p = {x[0], x[1]};   // part in Q(sqrt2)
  Q2 q = {x[2], x[3]};   // coefficient of sqrt3
  int sq = sign2(q);
  if (sq == 0) return sign2(p);
  int sp = sign2(p);
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  Q2 t = mul2(p, p);
  Q2 qq = mul2(q, q);
  t[0] -= Rational(3) * qq[0];
  t[1] -= Rational(3) * qq[1];
  // t == 0 would mean sqrt3 in Q(sqrt2).
  return sp > 0 ? sign2(t) : -sign2(t);
}

int sign8(const std::array<Rational, 8>& c) {
  Q4 a = {c[0], c[1], c[2], c[3]};  // part in Q(sqrt2,sqrt3)
  Q4 b = {c[4], c[5], c[6], c[7]};  // coefficient of sqrt5
  int sb = sign4(b);
  if (sb == 0) return sign4(a);
  int sa = sign4(a);
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  Q4 t = mul4(a, a);
  Q4 bb = mul4(b, b);
  for (int i = 0; i < 4; ++i) t[i] -= Rational(5) * bb[i];
  // t == 0 would mean sqrt5 in Q(sqrt2,sqrt3).
  return sa > 0 ? sign4(t) : -sign4(t);
}

}  // namespace

FieldElement FieldElement::sqrt_of(int radicand) {
  for (int m = 0; m < kBasisSize; ++m) {
    if (radicand_of_mask(m) == radicand) {
      FieldElement r;
      r.c_[m] = Rational(1);
      return r;
    }
  }
  throw BadArgumentsError("sqrt_of: radicand " + std::to_string(radicand) +
                          " is not a basis radicand");
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  FieldElement r;
  for (int i = 0; i < FieldElement::kBasisSize; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < FieldElement::kBasisSize; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i ^ j] += a.c_[i] * b.c_[j] * Rational(radicand_scale(i & j));
    }
  }
  return r;
}

int FieldElement::sign() const {
  int nonzero = -1;
  int count = 0;
  for (int m = 0; m < kBasisSize; ++m) {
    if (!c_[m].is_zero()) {
      nonzero = m;
      ++count;
    }
  }
  if (count == 0) return 0;
  if (count == 1) return c_[nonzero].sign();  // basis radicals are positive

  // Interval pass.
  try {
    const auto& enc = radical_enclosures();
    Rational lo(0), hi(0);
    for (int m = 0; m < kBasisSize; ++m) {
      if (c_[m].is_zero()) continue;
      if (c_[m].sign() > 0) {
        lo += c_[m] * enc[m].lo;
        hi += c_[m] * enc[m].hi;
      } else {
        lo += c_[m] * enc[m].hi;
        hi += c_[m] * enc[m].lo;
      }
    }
    if (lo.sign() > 0) return 1;
    if (hi.sign() < 0) return -1;
  } catch (const ArithmeticOverflowError&) {
    // fall through to the exact path
  }

  return sign8(c_);
}

bool operator<(const FieldElement& a, const FieldElement& b) {
  for (int m = 0; m < FieldElement::kBasisSize; ++m) {
    if (a.c_[m].num() != b.c_[m].num()) return a.c_[m].num() < b.c_[m].num();
    if (a.c_[m].den() != b.c_[m].den()) return a.c_[m].den() < b.c_[m].den();
  }
  return false;
}

double FieldElement::approx() const {
  static const double kVals[8] = {1.0,
                                  1.4142135623730951,
                                  1.7320508075688772,
                                  2.449489742783178,
                                  2.23606797749979,
                                  3.1622776601683795,
                                  3.872983346207417,
                                  5.477225575051661};
  double v = 0;
  for (int m = 0; m < kBasisSize; ++m) {
    if (c_[m].is_zero()) continue;
    v += static_cast<double>(c_[m].num()) / static_cast<double>(c_[m].den()) * kVals[m];
  }
  return v;
}

std::string FieldElement::str() const {
  static const char* kNames[8] = {"",       "*sqrt2",  "*sqrt3",  "*sqrt6",
                                  "*sqrt5", "*sqrt10", "*sqrt15", "*sqrt30"};
  std::ostringstream os;
  bool first = true;
  for (int m = 0; m < kBasisSize; ++m) {
    if (c_[m].is_zero()) continue;
    if (!first) os << " + ";
    os << c_[m].str() << kNames[m];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::size_t hash_value(const FieldElement& x) {
  std::size_t h = 0x811c9dc5u;
  for (int m = 0; m < FieldElement::kBasisSize; ++m) {
    const Rational& q = x.coeff(m);
    h = hash_combine(h, static_cast<std::size_t>(q.num()));
    h = hash_combine(h, static_cast<std::size_t>(q.den()));
  }
  return h;
}

}  // namespace coxfc
