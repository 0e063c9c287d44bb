// SPDX-License-Identifier: MIT
#pragma once

#include <mpfr.h>

#include <string>

#include "gfc/cyclo.hpp"

namespace gfc {

/// Arbitrary-precision complex value (MPFR-backed). This is the test-oracle
/// channel only: no equality decision anywhere in the library is ever made
/// through it.
class BigComplex {
 public:
  explicit BigComplex(mpfr_prec_t prec);
  BigComplex(const BigComplex& o);
  BigComplex(BigComplex&& o) noexcept;
  BigComplex& operator=(BigComplex o);
  ~BigComplex();

  mpfr_prec_t precision() const { return prec_; }

  BigComplex operator+(const BigComplex& o) const;
  BigComplex operator-(const BigComplex& o) const;
  BigComplex operator*(const BigComplex& o) const;

  /// |value| rounded to double (upward); adequate for threshold checks.
  double abs_upper() const;
  /// True when |value| < 2^log2_bound.
  bool abs_below_pow2(long log2_bound) const;

  double real_d() const;
  double imag_d() const;
  /// Rendering like "1.2469796037e+00 + -4.1e-40i" with `digits` significant digits.
  std::string str(int digits = 17) const;

  mpfr_srcptr re() const { return re_; }
  mpfr_srcptr im() const { return im_; }
  mpfr_ptr re() { return re_; }
  mpfr_ptr im() { return im_; }

 private:
  mpfr_prec_t prec_;
  mpfr_t re_, im_;
};

/// e^{2*pi*i*k/n} at the given precision.
BigComplex unit_root(long k, long n, mpfr_prec_t prec);

/// Numerical embedding of `a` under z -> e^{2*pi*i/7}, carried out at
/// precision_bits + 32 working bits with correctly rounded MPFR primitives.
/// The accumulated error stays far below 2^-(precision_bits/2), the bound the
/// oracle contract promises; precision_bits must be >= 64.
BigComplex embed(const CycloElem& a, long precision_bits);

}  // namespace gfc
