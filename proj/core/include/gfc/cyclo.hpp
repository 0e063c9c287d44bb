// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <string>

#include "gfc/rational.hpp"

namespace gfc {

/// Element of the 7th cyclotomic field Q(z), z = e^{2*pi*i/7}, stored in the
/// power basis {1, z, z^2, z^3, z^4, z^5}. Every operation returns the unique
/// reduced representative (degree <= 5 after rewriting by 1+z+...+z^6 = 0),
/// so equality is plain coefficient comparison. Values are immutable in
/// practice: no operation mutates its arguments, which makes sharing across
/// threads safe.
class CycloElem {
 public:
  CycloElem() = default;  // zero
  explicit CycloElem(const Rational& r) { c_[0] = r; }
  explicit CycloElem(long n) { c_[0] = n; }
  explicit CycloElem(const std::array<Rational, 6>& coeffs) : c_(coeffs) {}

  /// z^k for any integer k (exponent taken mod 7); z^6 comes back reduced.
  static CycloElem zeta(long k = 1);

  const std::array<Rational, 6>& coeffs() const { return c_; }

  bool is_zero() const;
  /// True when the element lies in Q (coefficients 1..5 all vanish).
  bool is_rational() const;
  /// The value as a rational; requires is_rational().
  Rational rational_value() const;

  CycloElem operator-() const;
  CycloElem& operator+=(const CycloElem& o);
  CycloElem& operator-=(const CycloElem& o);
  CycloElem& operator*=(const CycloElem& o);

  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
  friend CycloElem operator*(const Rational& r, CycloElem a);

  /// Multiplicative inverse via the extended Euclidean algorithm against
  /// Phi_7(x) = 1 + x + ... + x^6. Throws division_by_zero on zero input.
  CycloElem inverse() const;
  friend CycloElem operator/(const CycloElem& a, const CycloElem& b) {
    return a * b.inverse();
  }

  /// Integer power; negative exponents go through inverse().
  CycloElem pow(long e) const;

  /// Galois conjugation z -> z^k for k in {1,...,6}.
  CycloElem galois(int k) const;

  bool operator==(const CycloElem& o) const { return c_ == o.c_; }
  bool operator!=(const CycloElem& o) const { return !(*this == o); }

  /// Strict total order (coefficient-lexicographic), for ordered containers.
  static int cmp(const CycloElem& a, const CycloElem& b);
  bool operator<(const CycloElem& o) const { return cmp(*this, o) < 0; }

  /// Human-readable rendering such as "2 - z^3 + 1/2*z^5".
  std::string str() const;

 private:
  std::array<Rational, 6> c_{};  // value-initialized mpq_class is 0
};

inline CycloElem operator*(const Rational& r, CycloElem a) {
  for (auto& c : a.c_) c *= r;
  return a;
}

/// cos(2*pi*k/7) = (z^k + z^-k)/2, exact in Q(z).
CycloElem cyclo_cos(long k);

}  // namespace gfc
