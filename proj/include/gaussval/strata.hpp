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
#ifndef GAUSSVAL_STRATA_HPP
#define GAUSSVAL_STRATA_HPP

// The strata p_lambda = { f : limsup_{t->0+} L(N(f))(t) / t^lambda = inf },
// with p_0 = { v_0 > 0 } and p_1 = { all coefficient valuations > 0 }.
//
// A limsup cannot be decided from finitely many breakpoints, so verdicts carry
// a provenance: Exact (the polygon is completely known), Analytic (explicit
// bounds for the f_a family) or Empirical (evidence up to a horizon only).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaussval/legendre.hpp"
#include "gaussval/polygon.hpp"
#include "gaussval/rational.hpp"

namespace gaussval {

/// Exponent lambda in [0, 1].
class StratumIndex {
 public:
  explicit StratumIndex(Rational lambda);
  const Rational& value() const noexcept { return lambda_; }

 private:
  Rational lambda_;
};

/// Outward-rounded double enclosure, for display only.
struct DoubleRange {
  double lo = 0;
  double hi = 0;
};

/// sign(value / t^lambda - c) for value >= 0, t > 0, c >= 0. Decided by
/// interval arithmetic first and by exact integer powers when the
/// enclosures overlap. Throws Error(Inconclusive) if neither route applies.
int compare_ratio(const Rational& value, const Rational& t, const Rational& lambda, const Rational& c);

/// sign(v1 / t1^lambda1 - v2 / t2^lambda2), same decision procedure.
int compare_ratio_pair(const Rational& v1, const Rational& t1, const Rational& lambda1, const Rational& v2,
                       const Rational& t2, const Rational& lambda2);

/// Display enclosure of value / t^lambda.
DoubleRange ratio_range(const Rational& value, const Rational& t, const Rational& lambda);

/// One breakpoint s_i with the two brackets
///   lower_i = L(s_i) / s_i^lambda  <=  sup_{[s_{i+1}, s_i]} L(t)/t^lambda  <=  L(s_i) / s_{i+1}^lambda = upper_i.
/// `next_t` is nullopt when s_{i+1} is 0 or not certified (no upper bracket).
struct RatioPoint {
  std::size_t i = 0;  ///< 1-based breakpoint index
  Rational t;
  Rational value;
  std::optional<Rational> next_t;
  DoubleRange lower;
  std::optional<DoubleRange> upper;
};

struct RatioSequence {
  Rational lambda;
  std::vector<RatioPoint> points;
  std::size_t requested_horizon = 0;
  /// False when fewer certified breakpoints than requested were available.
  bool complete = true;
};

/// Bracket sequences at the first `horizon` certified breakpoints.
RatioSequence ratio_sequence(const ConvexProfile& p, const StratumIndex& lambda, std::size_t horizon);

enum class VerdictKind { DivergenceWitnessed, BoundedUpTo, Boundary, Inconclusive };
enum class Provenance { Exact, Analytic, Empirical };

struct StratumVerdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  Provenance provenance = Provenance::Empirical;
  std::size_t horizon = 0;
  /// Attained ratio (divergence) or supremum (bounded), when applicable.
  std::optional<DoubleRange> ratio;
  /// Membership, set only for Exact and Analytic verdicts.
  std::optional<bool> member;
  std::string reason;
};

const char* to_string(VerdictKind kind);
const char* to_string(Provenance provenance);

/// Reads an Empirical verdict off the brackets. With h certified points:
/// divergence is witnessed when the last lower bracket exceeds every upper
/// bracket of the first half; boundedness when no upper bracket of the second
/// half exceeds the largest one of the first half. Needs h >= 4.
StratumVerdict empirical_verdict(const RatioSequence& seq);

/// Membership in m = p_1. Exact for a constant tail (member iff no node has
/// value 0) and for any polygon reaching value 0; Empirical otherwise.
StratumVerdict membership_in_m(const ConvexProfile& p, std::size_t horizon = 0);

/// Membership in p = p_0 (v_0 > 0). Inconclusive when v_0 is not determined.
StratumVerdict membership_in_p(const ConvexProfile& p);

struct StratumReport {
  RatioSequence sequence;
  StratumVerdict verdict;
};

/// Brackets plus verdict for one exponent. horizon = 0 means every certified
/// breakpoint.
StratumReport classify(const ConvexProfile& p, const StratumIndex& lambda, std::size_t horizon);

struct ChainReport {
  StratumReport lower;  ///< at lambda
  StratumReport upper;  ///< at mu
  /// ratio_mu(t) >= ratio_lambda(t) at every sampled t <= 1 (exact).
  bool pointwise_monotone = true;
  /// No decided verdict places f in p_lambda but outside p_mu.
  bool consistent = true;
};

/// Paired brackets at lambda < mu; Error(InvalidArgument) unless lambda < mu.
ChainReport stratum_chain_witness(const ConvexProfile& p, const StratumIndex& lambda, const StratumIndex& mu,
                                  std::size_t horizon);

struct ProductWitness {
  std::size_t checked = 0;
  std::size_t failures = 0;
  bool additive() const { return failures == 0; }
};

/// Checks L_{fg}(t) / t^lambda = L_f(t) / t^lambda + L_g(t) / t^lambda exactly
/// at the breakpoints of the product and at the supplied extra points.
ProductWitness product_witness(const ConvexProfile& f, const ConvexProfile& g, const std::vector<Rational>& extra_t);

}  // namespace gaussval

#endif  // GAUSSVAL_STRATA_HPP
