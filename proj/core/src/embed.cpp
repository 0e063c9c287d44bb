// SPDX-License-Identifier: MIT
#include "gfc/embed.hpp"

#include <algorithm>
#include <cstdio>
#include <utility>
#include <vector>

#include "gfc/errors.hpp"

namespace gfc {

BigComplex::BigComplex(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(re_, prec);
  mpfr_init2(im_, prec);
  mpfr_set_zero(re_, 1);
  mpfr_set_zero(im_, 1);
}

BigComplex::BigComplex(const BigComplex& o) : prec_(o.prec_) {
  mpfr_init2(re_, prec_);
  mpfr_init2(im_, prec_);
  mpfr_set(re_, o.re_, MPFR_RNDN);
  mpfr_set(im_, o.im_, MPFR_RNDN);
}

BigComplex::BigComplex(BigComplex&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(re_, prec_);
  mpfr_init2(im_, prec_);
  mpfr_swap(re_, o.re_);
  mpfr_swap(im_, o.im_);
}

BigComplex& BigComplex::operator=(BigComplex o) {
  std::swap(prec_, o.prec_);
  mpfr_swap(re_, o.re_);
  mpfr_swap(im_, o.im_);
  return *this;
}

BigComplex::~BigComplex() {
  mpfr_clear(re_);
  mpfr_clear(im_);
}

BigComplex BigComplex::operator+(const BigComplex& o) const {
  BigComplex r(std::max(prec_, o.prec_));
  mpfr_add(r.re_, re_, o.re_, MPFR_RNDN);
  mpfr_add(r.im_, im_, o.im_, MPFR_RNDN);
  return r;
}

BigComplex BigComplex::operator-(const BigComplex& o) const {
  BigComplex r(std::max(prec_, o.prec_));
  mpfr_sub(r.re_, re_, o.re_, MPFR_RNDN);
  mpfr_sub(r.im_, im_, o.im_, MPFR_RNDN);
  return r;
}

BigComplex BigComplex::operator*(const BigComplex& o) const {
  BigComplex r(std::max(prec_, o.prec_));
  mpfr_t t1, t2;
  mpfr_init2(t1, r.prec_);
  mpfr_init2(t2, r.prec_);
  mpfr_mul(t1, re_, o.re_, MPFR_RNDN);
  mpfr_mul(t2, im_, o.im_, MPFR_RNDN);
  mpfr_sub(r.re_, t1, t2, MPFR_RNDN);
  mpfr_mul(t1, re_, o.im_, MPFR_RNDN);
  mpfr_mul(t2, im_, o.re_, MPFR_RNDN);
  mpfr_add(r.im_, t1, t2, MPFR_RNDN);
  mpfr_clear(t1);
  mpfr_clear(t2);
  return r;
}

double BigComplex::abs_upper() const {
  mpfr_t h;
  mpfr_init2(h, prec_);
  mpfr_hypot(h, re_, im_, MPFR_RNDU);
  double d = mpfr_get_d(h, MPFR_RNDU);
  mpfr_clear(h);
  return d;
}

bool BigComplex::abs_below_pow2(long log2_bound) const {
  mpfr_t h, b;
  mpfr_init2(h, prec_);
  mpfr_init2(b, prec_);
  mpfr_hypot(h, re_, im_, MPFR_RNDU);
  mpfr_set_ui(b, 1, MPFR_RNDN);
  mpfr_mul_2si(b, b, log2_bound, MPFR_RNDN);
  bool ok = mpfr_cmp(h, b) < 0;
  mpfr_clear(h);
  mpfr_clear(b);
  return ok;
}

double BigComplex::real_d() const { return mpfr_get_d(re_, MPFR_RNDN); }
double BigComplex::imag_d() const { return mpfr_get_d(im_, MPFR_RNDN); }

std::string BigComplex::str(int digits) const {
  char* rs = nullptr;
  char* is = nullptr;
  mpfr_asprintf(&rs, "%.*Rg", digits, re_);
  mpfr_asprintf(&is, "%.*Rg", digits, im_);
  std::string out = std::string(rs) + " + " + std::string(is) + "i";
  mpfr_free_str(rs);
  mpfr_free_str(is);
  return out;
}

BigComplex unit_root(long k, long n, mpfr_prec_t prec) {
  BigComplex r(prec);
  mpfr_t angle;
  mpfr_init2(angle, prec);
  mpfr_const_pi(angle, MPFR_RNDN);
  mpfr_mul_si(angle, angle, 2 * k, MPFR_RNDN);
  mpfr_div_si(angle, angle, n, MPFR_RNDN);
  mpfr_sin_cos(r.im(), r.re(), angle, MPFR_RNDN);
  mpfr_clear(angle);
  return r;
}

BigComplex embed(const CycloElem& a, long precision_bits) {
  if (precision_bits < 64) throw degenerate_input("embedding precision must be >= 64 bits");
  const mpfr_prec_t wp = static_cast<mpfr_prec_t>(precision_bits + 32);
  BigComplex acc(wp);
  mpfr_t coeff, t;
  mpfr_init2(coeff, wp);
  mpfr_init2(t, wp);
  for (long k = 0; k < 6; ++k) {
    const Rational& c = a.coeffs()[static_cast<size_t>(k)];
    if (c == 0) continue;
    mpfr_set_q(coeff, c.get_mpq_t(), MPFR_RNDN);
    BigComplex z = unit_root(k, 7, wp);
    mpfr_mul(t, z.re(), coeff, MPFR_RNDN);
    mpfr_add(acc.re(), acc.re(), t, MPFR_RNDN);
    mpfr_mul(t, z.im(), coeff, MPFR_RNDN);
    mpfr_add(acc.im(), acc.im(), t, MPFR_RNDN);
  }
  mpfr_clear(coeff);
  mpfr_clear(t);
  return acc;
}

}  // namespace gfc
