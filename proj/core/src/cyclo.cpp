// SPDX-License-Identifier: MIT
#include "gfc/cyclo.hpp"

#include <sstream>
#include <vector>

#include "gfc/errors.hpp"

namespace gfc {

CycloElem CycloElem::zeta(long k) {
  k %= 7;
  if (k < 0) k += 7;
  CycloElem e;
  if (k <= 5) {
    e.c_[static_cast<size_t>(k)] = 1;
  } else {  // z^6 = -(1 + z + ... + z^5)
    for (auto& c : e.c_) c = -1;
  }
  return e;
}

bool CycloElem::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool CycloElem::is_rational() const {
  for (size_t i = 1; i < 6; ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational CycloElem::rational_value() const {
  if (!is_rational()) throw degenerate_input("element is not rational: " + str());
  return c_[0];
}

CycloElem CycloElem::operator-() const {
  CycloElem r;
  for (size_t i = 0; i < 6; ++i) r.c_[i] = -c_[i];
  return r;
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
  for (size_t i = 0; i < 6; ++i) c_[i] += o.c_[i];
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
  for (size_t i = 0; i < 6; ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& o) {
  // Convolution product, fold z^7 = 1, then rewrite the z^6 coefficient.
  std::array<Rational, 7> d{};
  for (size_t i = 0; i < 6; ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < 6; ++j) {
      if (o.c_[j] == 0) continue;
      d[(i + j) % 7] += c_[i] * o.c_[j];
    }
  }
  for (size_t i = 0; i < 6; ++i) c_[i] = d[i] - d[6];
  return *this;
}

namespace {

using Poly = std::vector<Rational>;  // coefficient list, no trailing zeros

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_sub_scaled(const Poly& a, const Poly& b, const Rational& s, size_t shift) {
  Poly r = a;
  if (r.size() < b.size() + shift) r.resize(b.size() + shift);
  for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= s * b[i];
  trim(r);
  return r;
}

// Quotient and remainder of a by b over Q[x]; b nonzero.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  Poly q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    size_t shift = a.size() - b.size();
    Rational s = a.back() / b.back();
    q[shift] = s;
    a = poly_sub_scaled(a, b, s, shift);
  }
  trim(q);
  return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r = a;
  if (r.size() < b.size()) r.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

}  // namespace

CycloElem CycloElem::inverse() const {
  if (is_zero()) throw division_by_zero("inverse of zero in Q(zeta_7)");
  // Extended Euclid: s*a + t*Phi7 = gcd = const, so inverse = s/const.
  Poly r0(7, Rational(1));  // Phi_7 = 1 + x + ... + x^6
  Poly r1(c_.begin(), c_.end());
  trim(r1);
  Poly s0{}, s1{Rational(1)};  // coefficients of `a` along the recursion
  while (!r1.empty()) {
    auto [q, rem] = poly_divmod(r0, r1);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant: Phi_7 is irreducible over Q.
  Rational g = r0.at(0);
  CycloElem out;
  for (size_t i = 0; i < s0.size() && i < 6; ++i) out.c_[i] = s0[i] / g;
  return out;
}

CycloElem CycloElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloElem acc(1);
  CycloElem base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

CycloElem CycloElem::galois(int k) const {
  if (k < 1 || k > 6) throw degenerate_input("galois exponent must be in 1..6");
  CycloElem out;
  for (long i = 0; i < 6; ++i) {
    if (c_[static_cast<size_t>(i)] == 0) continue;
    out += c_[static_cast<size_t>(i)] * zeta(i * k);
  }
  return out;
}

int CycloElem::cmp(const CycloElem& a, const CycloElem& b) {
  for (size_t i = 0; i < 6; ++i) {
    int c = ::cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string CycloElem::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < 6; ++i) {
    if (c_[i] == 0) continue;
    Rational c = c_[i];
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    bool unit = (a == 1);
    if (i == 0 || !unit) {
      os << a.get_num().get_str();
      if (a.get_den() != 1) os << "/" << a.get_den().get_str();
      if (i > 0) os << "*";
    }
    if (i == 1) os << "z";
    if (i > 1) os << "z^" << i;
    first = false;
  }
  if (first) return "0";
  return os.str();
}

CycloElem cyclo_cos(long k) {
  return Rational(1, 2) * (CycloElem::zeta(k) + CycloElem::zeta(-k));
}

}  // namespace gfc
