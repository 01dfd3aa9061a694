/* Copyright (C) 2026 gaussval developers
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef GAUSSVAL_INTERVAL_HPP
#define GAUSSVAL_INTERVAL_HPP

// Rigorous interval arithmetic on top of MPFR's correctly rounded primitives.
// Every lower endpoint is produced with MPFR_RNDD and every upper endpoint
// with MPFR_RNDU, so the true value is always enclosed.

#include <mpfr.h>

#include "gaussval/rational.hpp"

namespace gaussval {

/// Owning RAII handle for an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

  /// Exact conversion (finite values only).
  Rational to_rational() const;
  double to_double(mpfr_rnd_t rnd) const { return mpfr_get_d(value_, rnd); }

 private:
  mpfr_t value_;
};

/// Closed interval [lo, hi] with MPFR endpoints.
class Interval {
 public:
  explicit Interval(mpfr_prec_t precision);

  /// Smallest representable enclosure of an exact rational.
  static Interval point(const Rational& q, mpfr_prec_t precision);
  /// Enclosure of [lo, hi] (lo <= hi required).
  static Interval hull(const Rational& lo, const Rational& hi, mpfr_prec_t precision);

  const BigFloat& lo() const noexcept { return lo_; }
  const BigFloat& hi() const noexcept { return hi_; }
  BigFloat& lo() noexcept { return lo_; }
  BigFloat& hi() noexcept { return hi_; }
  mpfr_prec_t precision() const noexcept { return lo_.precision(); }

  Rational lower() const { return lo_.to_rational(); }
  Rational upper() const { return hi_.to_rational(); }
  Rational width() const { return upper() - lower(); }
  bool contains(const Rational& q) const;
  bool positive() const { return mpfr_sgn(lo_.get()) > 0; }

  Interval& operator+=(const Interval& rhs);
  Interval& operator-=(const Interval& rhs);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Division; the divisor must not contain zero.
  friend Interval operator/(const Interval& a, const Interval& b);

 private:
  BigFloat lo_;
  BigFloat hi_;
};

/// Enclosure of x^r for a positive interval x and rational exponent r = p/q.
Interval pow(const Interval& x, const Rational& r);
/// Enclosure of base^r for a positive rational base.
Interval pow(const Rational& base, const Rational& r, mpfr_prec_t precision);
/// Enclosure of exp(x) for an exact rational x.
Interval exp(const Rational& x, mpfr_prec_t precision);

/// Certified rational lower bound on exp(-n), with about `mantissa_bits`
/// significant bits.
Rational exp_neg_lower(unsigned long n, mpfr_prec_t mantissa_bits = 128);
/// Certified rational upper bound on exp(-n).
Rational exp_neg_upper(unsigned long n, mpfr_prec_t mantissa_bits = 128);

/// Rounds a nonnegative rational upward to a dyadic rational with at most
/// `mantissa_bits` significant bits.
Rational round_up_dyadic(const Rational& q, mpfr_prec_t mantissa_bits = 64);
/// Rounds downward to a dyadic rational with at most `mantissa_bits` bits.
Rational round_down_dyadic(const Rational& q, mpfr_prec_t mantissa_bits = 64);

/// floor(log2(q)) for q > 0.
long floor_log2(const Rational& q);

}  // namespace gaussval

#endif  // GAUSSVAL_INTERVAL_HPP
