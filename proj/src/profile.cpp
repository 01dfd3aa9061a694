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
#include "gaussval/profile.hpp"

#include <string>

#include "gaussval/error.hpp"

namespace gaussval {

CoefficientProfile::CoefficientProfile(std::vector<ProfileEntry> entries, std::optional<Index> truncation)
    : entries_(std::move(entries)), truncation_(truncation) {
  if (truncation_ && *truncation_ < 0) fail(ErrorCode::InvalidArgument, "negative truncation index");
  bool any_finite = false;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const Index i = entries_[k].index;
    if (i < 0) fail(ErrorCode::InvalidArgument, "negative coefficient index");
    if (k > 0 && i <= entries_[k - 1].index)
      fail(ErrorCode::InvalidArgument, "profile indices must be strictly increasing");
    if (truncation_ && i > *truncation_)
      fail(ErrorCode::InvalidArgument, "index " + std::to_string(i) + " beyond truncation " +
                                           std::to_string(*truncation_));
    any_finite = any_finite || entries_[k].val.is_finite();
  }
  if (!entries_.empty() && !any_finite)
    fail(ErrorCode::InvalidArgument, "profile lists no finite valuation");
  if (entries_.empty() && truncation_)
    fail(ErrorCode::InvalidArgument, "a truncated profile needs at least one finite entry");
}

ValueWithCertificate gauss_valuation(const CoefficientProfile& f, const Rational& s) {
  if (f.is_zero()) fail(ErrorCode::ZeroElement, "valuation of zero");
  if (s < 0) fail(ErrorCode::InvalidArgument, "Gauss valuation needs s >= 0");
  ExtRat best = ExtRat::infinity();
  for (const auto& e : f.entries()) {
    if (e.val.is_infinite()) continue;
    const ExtRat term(Rational(e.val.value() + e.index * s));
    if (term < best) best = term;
  }
  bool exact = true;
  if (const auto n = f.truncation()) exact = best.value() <= Rational((*n + 1) * s);
  return {best, exact};
}

bool monotonicity_check(const CoefficientProfile& f, const Rational& s, const Rational& t) {
  if (s < 0 || s > t) fail(ErrorCode::InvalidArgument, "monotonicity check needs 0 <= s <= t");
  const auto vs = gauss_valuation(f, s);
  const auto vt = gauss_valuation(f, t);
  if (!vs.exact || !vt.exact) fail(ErrorCode::Inconclusive, "inconclusive at this truncation");
  return vt.value >= vs.value && vs.value >= ExtRat(0);
}

CoefficientProfile frobenius_pullback(const CoefficientProfile& f, long p) {
  if (p < 2) fail(ErrorCode::InvalidArgument, "Frobenius pullback needs p >= 2");
  std::vector<ProfileEntry> out;
  out.reserve(f.entries().size());
  const Rational inv(1, p);
  for (const auto& e : f.entries())
    out.push_back({e.index, e.val.is_infinite() ? ExtRat::infinity() : ExtRat(Rational(e.val.value() * inv))});
  return CoefficientProfile(std::move(out), f.truncation());
}

}  // namespace gaussval
