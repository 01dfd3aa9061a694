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
#ifndef GAUSSVAL_FA_FAMILY_HPP
#define GAUSSVAL_FA_FAMILY_HPP

// The separating family f_a, a > 1: coefficient profiles whose Newton polygon
// has a node at every positive integer and tracks F_a(i) = sum_{j >= i} j^-a
// within e^-i. f_a lies in p_nu exactly when a nu + 1 - a > 0.

#include <cstddef>
#include <optional>
#include <vector>

#include "gaussval/interval.hpp"
#include "gaussval/legendre.hpp"
#include "gaussval/polygon.hpp"
#include "gaussval/profile.hpp"
#include "gaussval/strata.hpp"

namespace gaussval {

struct FaSpec {
  Rational a;
  Index n = 0;                  ///< truncation N >= 2
  unsigned long precision = 0;  ///< working bits; 0 selects recommended_precision()
};

/// Certified enclosure of F_a(i) of width < 2^-precision: a partial sum of
/// j^-a plus an Euler-Maclaurin tail whose remainder is bounded by the first
/// omitted term (x^-a is completely monotone). Throws Error(Precision) with
/// the achieved width if the iteration cap is hit.
Interval reference_fa(const Rational& a, Index i, unsigned long precision);

/// Rounding tolerance for index i: min(e^-i proxy, (i^-a - (i+1)^-a) / 4).
/// The second term keeps every integer a node of the rounded polygon.
struct FaTolerance {
  Rational exp_proxy;       ///< certified lower bound on e^-i
  Rational convexity_cap;   ///< certified lower bound on (i^-a - (i+1)^-a)/4
  Rational epsilon() const { return exp_proxy < convexity_cap ? exp_proxy : convexity_cap; }
};

FaTolerance fa_tolerance(const Rational& a, Index i);

/// Working precision that makes every rounding in build_fa certifiable.
unsigned long recommended_precision(const Rational& a, Index n);

/// Smallest truncation for which L(s_i) is certified for every i <= horizon:
/// L(s_i) <= (N + 1) s_i needs N >= a/(a-1) i - 1/2 + O(1/i).
Index truncation_for_horizon(const Rational& a, Index horizon);

struct FaBuildReport {
  Rational a;
  Index n = 0;
  unsigned long precision = 0;
  CoefficientProfile profile;            ///< entries (i, q_i), 1 <= i <= N, truncated at N
  std::vector<Rational> error_bounds;    ///< [i-1]: certified bound on |q_i - F_a(i)|
  std::vector<FaTolerance> tolerances;   ///< [i-1]
  std::vector<Rational> slopes;          ///< [i-1]: s_i = q_i - q_{i+1}, 1 <= i < N
  ConvexProfile polygon;                 ///< newton_polygon(profile)
  Index certified_horizon = 0;           ///< largest i with L(s_i) certified exact
  HypothesisCertificate hypothesis;      ///< s_i (i + 1) -> 0

  const Rational& q(Index i) const;
  const Rational& slope(Index i) const;
};

/// Builds f_a. Deterministic in (a, N, precision). Throws Error(Precision)
/// naming the first index whose rounding cannot be certified.
FaBuildReport build_fa(const FaSpec& spec);

/// |s_i - i^-a| < 2 e^-i, certified with the stored e^-i proxy.
bool check_slope_estimate(const FaBuildReport& report, Index i);
/// (a-1)^-1 i^(1-a) - e^-i < q_i < (a-1)^-1 (i-1)^(1-a) + e^-i; only the
/// lower side applies at i = 1.
bool check_value_sandwich(const FaBuildReport& report, Index i);
/// Stored error bound is below both the e^-i proxy and the convexity cap.
bool check_rounding_certificate(const FaBuildReport& report, Index i);

struct IdentityResult {
  Rational lhs;  ///< L(s_i)
  Rational rhs;  ///< i s_i + q_i
  bool holds = false;
};

/// L(s_i) = i s_i + N(i), evaluated exactly. Throws Error(Truncation)
/// ("increase truncation") if L(s_i) is not certified at this N.
IdentityResult identity_III_check(const FaBuildReport& report, Index i);

/// Explicit bracket bounds valid for any profile meeting the slope and value
/// estimates:
///   L(s_i)/s_i^nu     >  [a/(a-1) i^(1-a) - (2i+1) e^-i] / (i^-a + 2e^-i)^nu
///   L(s_i)/s_{i+1}^nu <  [i^(1-a) + (i-1)^(1-a)/(a-1) + (2i+1) e^-i] / ((i+1)^-a - 2e^-(i+1))^nu
/// The upper bound needs i >= 2 and a positive denominator (nullopt otherwise).
Interval explicit_lower_bound(const Rational& a, const Rational& nu, Index i, mpfr_prec_t precision = 128);
std::optional<Interval> explicit_upper_bound(const Rational& a, const Rational& nu, Index i,
                                             mpfr_prec_t precision = 128);

struct ThresholdVerdict {
  Rational a;
  Rational nu;
  Rational exponent;                 ///< a nu + 1 - a
  StratumVerdict analytic;
  std::optional<RatioSequence> empirical;  ///< brackets of the built profile
  std::optional<StratumVerdict> empirical_verdict;
};

/// Analytic verdict from the sign of a nu + 1 - a: positive means f_a in
/// p_nu, negative means f_a outside. At zero (nu = (a-1)/a) the verdict kind
/// is Boundary with both bounds tending to a/(a-1), and membership is left
/// unset. With horizon > 0 the profile is built and
/// its brackets are attached. nu = 0 and nu = 1 give the verdicts for p and m.
ThresholdVerdict prop4_verdict(const Rational& a, const Rational& nu, std::size_t horizon);
/// Same, reusing an existing build for the empirical brackets.
ThresholdVerdict prop4_verdict(const FaBuildReport& report, const Rational& nu, std::size_t horizon);
/// Same, with the brackets read off a polygon supplied as the polygon of f_a.
ThresholdVerdict prop4_verdict(const Rational& a, const ConvexProfile& polygon, const Rational& nu,
                               std::size_t horizon);

}  // namespace gaussval

#endif  // GAUSSVAL_FA_FAMILY_HPP
