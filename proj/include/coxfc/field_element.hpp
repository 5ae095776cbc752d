#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "coxfc/rational.hpp"

namespace coxfc {

// Element of the real field Q(sqrt2, sqrt3, sqrt5), stored with rational
// coordinates on the 8-element basis indexed by a bitmask:
//
//   bit 0 <-> sqrt2,  bit 1 <-> sqrt3,  bit 2 <-> sqrt5
//   mask:     0    1      2      3      4      5       6       7
//   basis:    1  sqrt2  sqrt3  sqrt6  sqrt5  sqrt10  sqrt15  sqrt30
//
// The product of basis elements i and j is radicand(i & j) * basis(i ^ j),
// where radicand(m) is the product of the primes shared by both masks.
// The field covers the bilinear-form entries for labels {1,2,3,4,5,6,inf}.
class FieldElement {
 public:
  static constexpr int kBasisSize = 8;

  FieldElement() = default;  // zero
  FieldElement(const Rational& r) { c_[0] = r; }   // NOLINT: implicit by design
  FieldElement(std::int64_t n) { c_[0] = Rational(n); }  // NOLINT

  // The basis element whose square is `radicand` (one of 1,2,3,5,6,10,15,30).
  static FieldElement sqrt_of(int radicand);

  const Rational& coeff(int mask) const { return c_[mask]; }
  Rational& coeff(int mask) { return c_[mask]; }

  bool is_zero() const {
    for (const auto& q : c_)
      if (!q.is_zero()) return false;
    return true;
  }
  bool is_rational() const {
    for (int m = 1; m < kBasisSize; ++m)
      if (!c_[m].is_zero()) return false;
    return true;
  }

  // Exact, total sign: a fast interval pass with rational enclosures of the
  // radicals, falling back to repeated-squaring elimination down the tower
  // Q < Q(sqrt2) < Q(sqrt2,sqrt3) < Q(sqrt2,sqrt3,sqrt5) when the interval
  // straddles zero.
  int sign() const;

  FieldElement operator-() const {
    FieldElement r;
    for (int m = 0; m < kBasisSize; ++m) r.c_[m] = -c_[m];
    return r;
  }

  FieldElement& operator+=(const FieldElement& o) {
    for (int m = 0; m < kBasisSize; ++m) c_[m] += o.c_[m];
    return *this;
  }
  FieldElement& operator-=(const FieldElement& o) {
    for (int m = 0; m < kBasisSize; ++m) c_[m] -= o.c_[m];
    return *this;
  }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) {
    a += b;
    return a;
  }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) {
    a -= b;
    return a;
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);

  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement scaled(const Rational& q) const {
    FieldElement r;
    if (q.is_zero()) return r;
    for (int m = 0; m < kBasisSize; ++m) r.c_[m] = c_[m] * q;
    return r;
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) {
    return !(a == b);
  }

  // Deterministic total order (coordinate-wise); used only for canonical
  // output ordering, it has no arithmetic meaning.
  friend bool operator<(const FieldElement& a, const FieldElement& b);

  double approx() const;
  std::string str() const;

 private:
  std::array<Rational, kBasisSize> c_{};
};

std::size_t hash_value(const FieldElement& x);

}  // namespace coxfc

template <>
struct std::hash<coxfc::FieldElement> {
  std::size_t operator()(const coxfc::FieldElement& x) const noexcept {
    return coxfc::hash_value(x);
  }
};
