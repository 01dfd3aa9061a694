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
#ifndef GAUSSVAL_RATIONAL_HPP
#define GAUSSVAL_RATIONAL_HPP

#include <cstdint>
#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gaussval {

/// Exact rational number (always canonical: lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "n", "n/d" or "-n/d" in base 10. Throws Error(Parse) on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form; integers are written with denominator 1.
std::string to_string(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Nonnegative exact rational or +infinity: the codomain of a valuation.
class ExtRat {
 public:
  /// Zero.
  ExtRat() = default;
  ExtRat(const Rational& value);  // NOLINT(implicit): throws if negative
  ExtRat(long value) : ExtRat(Rational(value)) {}

  static ExtRat infinity() {
    ExtRat r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }

  /// The finite value; throws Error(InvalidArgument) on infinity.
  const Rational& value() const;

  friend bool operator==(const ExtRat& a, const ExtRat& b);
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

  friend ExtRat operator+(const ExtRat& a, const ExtRat& b);
  /// Scaling by a nonnegative rational; 0 * inf is rejected.
  friend ExtRat operator*(const Rational& k, const ExtRat& a);

  /// "num/den" or "inf".
  std::string str() const;
  static ExtRat parse(std::string_view text);

 private:
  bool infinite_ = false;
  Rational value_{0};
};

std::ostream& operator<<(std::ostream& os, const ExtRat& v);

/// Value of a (possibly truncated) infimum together with its exactness flag.
/// When `exact` is false the value is only an upper bound for the true one.
struct ValueWithCertificate {
  ExtRat value;
  bool exact = false;
};

}  // namespace gaussval

#endif  // GAUSSVAL_RATIONAL_HPP
