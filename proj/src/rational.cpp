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
#include "gaussval/rational.hpp"

#include <ostream>

#include "gaussval/error.hpp"

namespace gaussval {

namespace {

bool valid_integer_text(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t start = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) start = 1;
  if (start == s.size()) return false;
  for (std::size_t k = start; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num, true) || !valid_integer_text(den, false))
    fail(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Integer nz(n, 10);
  Integer dz(std::string(den), 10);
  if (dz == 0) fail(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational q(nz, dz);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

ExtRat::ExtRat(const Rational& value) : value_(value) {
  if (value_ < 0) fail(ErrorCode::InvalidArgument, "valuations are nonnegative, got " + to_string(value));
}

const Rational& ExtRat::value() const {
  if (infinite_) fail(ErrorCode::InvalidArgument, "value of infinity requested");
  return value_;
}

bool operator==(const ExtRat& a, const ExtRat& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ == b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ExtRat operator+(const ExtRat& a, const ExtRat& b) {
  if (a.infinite_ || b.infinite_) return ExtRat::infinity();
  return ExtRat(Rational(a.value_ + b.value_));
}

ExtRat operator*(const Rational& k, const ExtRat& a) {
  if (k < 0) fail(ErrorCode::InvalidArgument, "negative scale factor");
  if (a.infinite_) {
    if (k == 0) fail(ErrorCode::InvalidArgument, "0 * inf is undefined");
    return ExtRat::infinity();
  }
  return ExtRat(Rational(k * a.value_));
}

std::string ExtRat::str() const { return infinite_ ? std::string("inf") : to_string(value_); }

ExtRat ExtRat::parse(std::string_view text) {
  if (text == "inf") return infinity();
  const Rational q = parse_rational(text);
  if (q < 0) fail(ErrorCode::Parse, "negative valuation '" + std::string(text) + "'");
  return ExtRat(q);
}

std::ostream& operator<<(std::ostream& os, const ExtRat& v) { return os << v.str(); }

}  // namespace gaussval
