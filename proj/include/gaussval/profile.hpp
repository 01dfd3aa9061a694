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
#ifndef GAUSSVAL_PROFILE_HPP
#define GAUSSVAL_PROFILE_HPP

// Coefficient-valuation data of a pi-expansion f = sum [a_i] pi^i and the
// Gauss valuations v_s(f) = inf_i (v(a_i) + i s) computed from it.

#include <cstdint>
#include <optional>
#include <vector>

#include "gaussval/rational.hpp"

namespace gaussval {

using Index = std::int64_t;

struct ProfileEntry {
  Index index = 0;
  ExtRat val;

  friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};

/// The list {(i, v(a_i))} of a pi-expansion.
///
/// With a finite tail, every index that is not listed carries v = inf.
/// A profile truncated at N lists every index <= N (inf entries may be
/// omitted); indices > N are unknown but have nonnegative valuation.
/// The zero element is the empty finite profile.
class CoefficientProfile {
 public:
  /// The zero element.
  CoefficientProfile() = default;

  /// Validates and stores `entries` (strictly increasing indices, at least
  /// one finite value). `truncation` = N for a truncated profile.
  CoefficientProfile(std::vector<ProfileEntry> entries, std::optional<Index> truncation = std::nullopt);

  static CoefficientProfile finite(std::vector<ProfileEntry> entries) {
    return CoefficientProfile(std::move(entries));
  }
  static CoefficientProfile truncated(std::vector<ProfileEntry> entries, Index n) {
    return CoefficientProfile(std::move(entries), n);
  }

  const std::vector<ProfileEntry>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  bool is_truncated() const noexcept { return truncation_.has_value(); }
  /// N for a truncated profile.
  std::optional<Index> truncation() const noexcept { return truncation_; }

  friend bool operator==(const CoefficientProfile&, const CoefficientProfile&) = default;

 private:
  std::vector<ProfileEntry> entries_;
  std::optional<Index> truncation_;
};

/// v_s(f) with an exactness certificate. For a truncated profile the value
/// is exact iff it is <= (N+1) s, since every unlisted term is >= (N+1) s.
/// Throws Error(ZeroElement) for the zero profile, Error(InvalidArgument)
/// for s < 0.
ValueWithCertificate gauss_valuation(const CoefficientProfile& f, const Rational& s);

/// Test utility: v_t(f) >= v_s(f) >= 0 for 0 <= s <= t. Throws
/// Error(Inconclusive) when either evaluation is not certified exact.
bool monotonicity_check(const CoefficientProfile& f, const Rational& s, const Rational& t);

/// The profile of phi^{-1}(f): every valuation divided by p. Satisfies
/// v_t(result) = v_{pt}(f) / p.
CoefficientProfile frobenius_pullback(const CoefficientProfile& f, long p);

}  // namespace gaussval

#endif  // GAUSSVAL_PROFILE_HPP
