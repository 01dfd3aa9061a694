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
#ifndef GAUSSVAL_LEGENDRE_HPP
#define GAUSSVAL_LEGENDRE_HPP

// Legendre transform L(N)(t) = inf_{x >= 0} (N(x) + t x) of a Newton polygon.
// For the polygon of f this is the function t -> v_t(f): increasing, concave,
// piecewise linear with integer slopes.

#include <optional>
#include <string>
#include <vector>

#include "gaussval/polygon.hpp"
#include "gaussval/rational.hpp"

namespace gaussval {

struct Breakpoint {
  Rational t;
  Rational value;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Piecewise-linear description of L(N).
///
/// Breakpoints are the slope magnitudes s_1 > s_2 > ... of the polygon.
/// slopes()[0] = n_1 is the slope on (s_1, inf); slopes()[k] = n_{k+1} is the
/// slope on (s_{k+1}, s_k); the last entry is the slope down to the validity
/// floor. Below the floor the transform is not represented.
class ConcaveTransform {
 public:
  ConcaveTransform(std::vector<Breakpoint> breakpoints, std::vector<Index> slopes, Rational validity_floor,
                   Rational floor_value);

  const std::vector<Breakpoint>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<Index>& slopes() const noexcept { return slopes_; }
  const Rational& validity_floor() const noexcept { return floor_; }
  /// L(validity_floor).
  const Rational& floor_value() const noexcept { return floor_value_; }
  /// v_0 = L(0), known only when the floor is 0.
  std::optional<Rational> value_at_zero() const;

  /// L(t) for t >= validity_floor; Error(UnknownRegion) below it.
  Rational operator()(const Rational& t) const;

  /// Rescales to t -> L(p t) / p, the transform of the Frobenius pullback.
  ConcaveTransform frobenius_rescaled(long p) const;

  friend bool operator==(const ConcaveTransform&, const ConcaveTransform&) = default;

 private:
  std::vector<Breakpoint> breakpoints_;
  std::vector<Index> slopes_;
  Rational floor_;
  Rational floor_value_;
};

/// inf over nodes of (y + t x). For a truncated polygon with source
/// truncation N the value is exact iff it is <= (N + 1) t: unknown points
/// have abscissa >= N + 1 and nonnegative value.
ValueWithCertificate legendre_eval(const ConvexProfile& p, const Rational& t);

/// Full description of L(N); for a truncated polygon only the part above
/// the certification floor is kept.
ConcaveTransform legendre_full(const ConvexProfile& p);

/// The polygon whose transform is `t`. Throws Error(Truncation) unless the
/// validity floor is 0 ("polygon underdetermined near 0").
ConvexProfile inverse_legendre(const ConcaveTransform& t);

/// Analytic guarantee that s_i n_{i+1} -> 0 for a polygon with infinitely
/// many nodes, supplied by whoever constructed the polygon.
struct HypothesisCertificate {
  std::string statement;
  std::string justification;
};

struct Corollary1Result {
  Rational lhs;  ///< N(n_i)
  Rational rhs;  ///< -s_i n_i + L(s_i)
  bool holds = false;
};

/// Checks N(n_i) = -s_i n_i + L(s_i) at the i-th node (1-based).
/// Truncated polygons need a certificate and a certified-exact L(s_i);
/// otherwise Error(Truncation) is thrown.
Corollary1Result corollary1_check(const ConvexProfile& p, std::size_t node,
                                  const HypothesisCertificate* certificate = nullptr);

}  // namespace gaussval

#endif  // GAUSSVAL_LEGENDRE_HPP
