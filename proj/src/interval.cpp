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
#include "gaussval/interval.hpp"

#include <algorithm>
#include <utility>

#include "gaussval/error.hpp"

namespace gaussval {

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, std::max<mpfr_prec_t>(precision, MPFR_PREC_MIN));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

Rational BigFloat::to_rational() const {
  if (!mpfr_number_p(value_)) fail(ErrorCode::InvalidArgument, "non-finite value in interval endpoint");
  Rational q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

Interval::Interval(mpfr_prec_t precision) : lo_(precision), hi_(precision) {}

Interval Interval::point(const Rational& q, mpfr_prec_t precision) {
  Interval r(precision);
  mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::hull(const Rational& lo, const Rational& hi, mpfr_prec_t precision) {
  if (lo > hi) fail(ErrorCode::InvalidArgument, "interval with lo > hi");
  Interval r(precision);
  mpfr_set_q(r.lo_.get(), lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_.get(), hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

bool Interval::contains(const Rational& q) const { return lower() <= q && q <= upper(); }

Interval& Interval::operator+=(const Interval& rhs) {
  mpfr_add(lo_.get(), lo_.get(), rhs.lo_.get(), MPFR_RNDD);
  mpfr_add(hi_.get(), hi_.get(), rhs.hi_.get(), MPFR_RNDU);
  return *this;
}

Interval& Interval::operator-=(const Interval& rhs) {
  // Compute both endpoints before writing: rhs may alias *this.
  BigFloat lo(precision()), hi(precision());
  mpfr_sub(lo.get(), lo_.get(), rhs.hi_.get(), MPFR_RNDD);
  mpfr_sub(hi.get(), hi_.get(), rhs.lo_.get(), MPFR_RNDU);
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

namespace {

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// min / max over the four endpoint combinations, each rounded outward.
Interval combine4(const Interval& a, const Interval& b, BinaryOp op) {
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  const BigFloat* xs[2] = {&a.lo(), &a.hi()};
  const BigFloat* ys[2] = {&b.lo(), &b.hi()};
  Interval r(prec);
  BigFloat tmp(prec);
  bool first = true;
  for (const BigFloat* x : xs) {
    for (const BigFloat* y : ys) {
      op(tmp.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || mpfr_less_p(tmp.get(), r.lo().get())) mpfr_set(r.lo().get(), tmp.get(), MPFR_RNDD);
      op(tmp.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || mpfr_greater_p(tmp.get(), r.hi().get())) mpfr_set(r.hi().get(), tmp.get(), MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

}  // namespace

Interval operator*(const Interval& a, const Interval& b) { return combine4(a, b, mpfr_mul); }

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(b.lo().get()) <= 0 && mpfr_sgn(b.hi().get()) >= 0)
    fail(ErrorCode::InvalidArgument, "interval division by an interval containing zero");
  return combine4(a, b, mpfr_div);
}

Interval pow(const Interval& x, const Rational& r) {
  if (!x.positive()) fail(ErrorCode::InvalidArgument, "pow requires a positive base");
  const mpfr_prec_t prec = x.precision();
  const Integer& p = r.get_num();
  const Integer& q = r.get_den();
  if (!p.fits_ulong_p() && !Integer(-p).fits_ulong_p()) fail(ErrorCode::InvalidArgument, "exponent numerator too large");
  if (!q.fits_ulong_p()) fail(ErrorCode::InvalidArgument, "exponent denominator too large");
  const unsigned long abs_p = p >= 0 ? p.get_ui() : Integer(-p).get_ui();
  const unsigned long den = q.get_ui();

  // x^|p| then q-th root: both monotone increasing on positive inputs.
  Interval y(prec);
  mpfr_pow_ui(y.lo().get(), x.lo().get(), abs_p, MPFR_RNDD);
  mpfr_pow_ui(y.hi().get(), x.hi().get(), abs_p, MPFR_RNDU);
  if (den != 1) {
    mpfr_rootn_ui(y.lo().get(), y.lo().get(), den, MPFR_RNDD);
    mpfr_rootn_ui(y.hi().get(), y.hi().get(), den, MPFR_RNDU);
  }
  if (p >= 0) return y;
  Interval inv(prec);
  mpfr_ui_div(inv.lo().get(), 1, y.hi().get(), MPFR_RNDD);
  mpfr_ui_div(inv.hi().get(), 1, y.lo().get(), MPFR_RNDU);
  return inv;
}

Interval pow(const Rational& base, const Rational& r, mpfr_prec_t precision) {
  if (base <= 0) fail(ErrorCode::InvalidArgument, "pow requires a positive base");
  // Integral exponent parts are applied exactly before the root is taken.
  const Integer& p = r.get_num();
  const Integer& q = r.get_den();
  if (!q.fits_ulong_p()) fail(ErrorCode::InvalidArgument, "exponent denominator too large");
  if (!p.fits_slong_p()) fail(ErrorCode::InvalidArgument, "exponent numerator too large");
  const long pn = p.get_si();
  Rational powered;
  {
    Integer num, den;
    const unsigned long e = static_cast<unsigned long>(pn >= 0 ? pn : -pn);
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    powered = pn >= 0 ? Rational(num, den) : Rational(den, num);
    powered.canonicalize();
  }
  Interval y = Interval::point(powered, precision);
  const unsigned long den = q.get_ui();
  if (den != 1) {
    mpfr_rootn_ui(y.lo().get(), y.lo().get(), den, MPFR_RNDD);
    mpfr_rootn_ui(y.hi().get(), y.hi().get(), den, MPFR_RNDU);
  }
  return y;
}

Interval exp(const Rational& x, mpfr_prec_t precision) {
  Interval arg = Interval::point(x, precision);
  Interval r(precision);
  mpfr_exp(r.lo().get(), arg.lo().get(), MPFR_RNDD);
  mpfr_exp(r.hi().get(), arg.hi().get(), MPFR_RNDU);
  return r;
}

Rational exp_neg_lower(unsigned long n, mpfr_prec_t mantissa_bits) {
  BigFloat arg(mantissa_bits), r(mantissa_bits);
  mpfr_set_ui(arg.get(), n, MPFR_RNDN);  // exact: n fits in 64 bits
  mpfr_neg(arg.get(), arg.get(), MPFR_RNDN);
  mpfr_exp(r.get(), arg.get(), MPFR_RNDD);
  return r.to_rational();
}

Rational exp_neg_upper(unsigned long n, mpfr_prec_t mantissa_bits) {
  BigFloat arg(mantissa_bits), r(mantissa_bits);
  mpfr_set_ui(arg.get(), n, MPFR_RNDN);
  mpfr_neg(arg.get(), arg.get(), MPFR_RNDN);
  mpfr_exp(r.get(), arg.get(), MPFR_RNDU);
  return r.to_rational();
}

Rational round_up_dyadic(const Rational& q, mpfr_prec_t mantissa_bits) {
  BigFloat r(mantissa_bits);
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDU);
  return r.to_rational();
}

Rational round_down_dyadic(const Rational& q, mpfr_prec_t mantissa_bits) {
  BigFloat r(mantissa_bits);
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDD);
  return r.to_rational();
}

long floor_log2(const Rational& q) {
  if (q <= 0) fail(ErrorCode::InvalidArgument, "log2 of a nonpositive number");
  // 2^(bits(num)-bits(den)-1) < q < 2^(bits(num)-bits(den)+1); settle exactly.
  long e = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
  auto pow2 = [](long k) {
    Rational r(1);
    if (k >= 0) mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(k));
    else mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-k));
    return r;
  };
  while (pow2(e) > q) --e;
  while (pow2(e + 1) <= q) ++e;
  return e;
}

}  // namespace gaussval
