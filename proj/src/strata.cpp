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
#include "gaussval/strata.hpp"

#include <algorithm>

#include "gaussval/error.hpp"
#include "gaussval/interval.hpp"

namespace gaussval {

StratumIndex::StratumIndex(Rational lambda) : lambda_(std::move(lambda)) {
  if (lambda_ < 0 || lambda_ > 1) fail(ErrorCode::InvalidArgument, "stratum index must lie in [0, 1]");
}

namespace {

Rational pow_int(const Rational& q, unsigned long e) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), e);
  return Rational(num, den);  // already canonical
}

std::size_t bit_size(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

// Enclosure of value / t^lambda.
Interval ratio_interval(const Rational& value, const Rational& t, const Rational& lambda, mpfr_prec_t prec) {
  Interval v = Interval::point(value, prec);
  if (lambda == 0 || value == 0) return v;
  return v / pow(Interval::point(t, prec), lambda);
}

constexpr std::size_t kExactBitBudget = std::size_t{1} << 24;

}  // namespace

int compare_ratio_pair(const Rational& v1, const Rational& t1, const Rational& lambda1, const Rational& v2,
                       const Rational& t2, const Rational& lambda2) {
  if (v1 < 0 || v2 < 0 || t1 <= 0 || t2 <= 0) fail(ErrorCode::InvalidArgument, "ratio comparison needs v >= 0, t > 0");
  for (mpfr_prec_t prec : {64, 128, 256}) {
    const Interval r1 = ratio_interval(v1, t1, lambda1, prec);
    const Interval r2 = ratio_interval(v2, t2, lambda2, prec);
    if (mpfr_less_p(r1.hi().get(), r2.lo().get())) return -1;
    if (mpfr_greater_p(r1.lo().get(), r2.hi().get())) return 1;
  }
  // Exact route: v1^Q t2^(lambda2 Q) vs v2^Q t1^(lambda1 Q).
  Integer q;
  mpz_lcm(q.get_mpz_t(), lambda1.get_den_mpz_t(), lambda2.get_den_mpz_t());
  if (!q.fits_ulong_p() || q > 64) fail(ErrorCode::Inconclusive, "ratio comparison undecided at 256 bits");
  const unsigned long qq = q.get_ui();
  const unsigned long e1 = Integer(lambda1 * qq).get_ui();
  const unsigned long e2 = Integer(lambda2 * qq).get_ui();
  const std::size_t budget = qq * (bit_size(v1) + bit_size(v2)) + e1 * bit_size(t1) + e2 * bit_size(t2);
  if (budget > kExactBitBudget) fail(ErrorCode::Inconclusive, "ratio comparison exceeds exact bit budget");
  const Rational lhs = pow_int(v1, qq) * pow_int(t2, e2);
  const Rational rhs = pow_int(v2, qq) * pow_int(t1, e1);
  return cmp(lhs, rhs) < 0 ? -1 : (cmp(lhs, rhs) > 0 ? 1 : 0);
}

int compare_ratio(const Rational& value, const Rational& t, const Rational& lambda, const Rational& c) {
  if (c < 0) fail(ErrorCode::InvalidArgument, "ratio threshold must be nonnegative");
  return compare_ratio_pair(value, t, lambda, c, Rational(1), Rational(0));
}

DoubleRange ratio_range(const Rational& value, const Rational& t, const Rational& lambda) {
  const Interval r = ratio_interval(value, t, lambda, 64);
  return {r.lo().to_double(MPFR_RNDD), r.hi().to_double(MPFR_RNDU)};
}

RatioSequence ratio_sequence(const ConvexProfile& p, const StratumIndex& lambda, std::size_t horizon) {
  const ConcaveTransform transform = legendre_full(p);
  const auto& bps = transform.breakpoints();
  RatioSequence seq;
  seq.lambda = lambda.value();
  seq.requested_horizon = horizon;
  const std::size_t count = horizon == 0 ? bps.size() : std::min(horizon, bps.size());
  seq.complete = !p.is_truncated() || horizon == 0 || bps.size() >= horizon;
  seq.points.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    RatioPoint pt;
    pt.i = k + 1;
    pt.t = bps[k].t;
    pt.value = bps[k].value;
    pt.lower = ratio_range(pt.value, pt.t, seq.lambda);
    if (k + 1 < bps.size()) {
      pt.next_t = bps[k + 1].t;
      pt.upper = ratio_range(pt.value, *pt.next_t, seq.lambda);
    }
    seq.points.push_back(std::move(pt));
  }
  return seq;
}

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::DivergenceWitnessed: return "DivergenceWitnessed";
    case VerdictKind::BoundedUpTo: return "BoundedUpTo";
    case VerdictKind::Boundary: return "Boundary";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

const char* to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::Exact: return "Exact";
    case Provenance::Analytic: return "Analytic";
    case Provenance::Empirical: return "Empirical";
  }
  return "Empirical";
}

namespace {

// Index of the point with the largest upper bracket in [begin, end), or end.
std::size_t argmax_upper(const RatioSequence& seq, std::size_t begin, std::size_t end) {
  std::size_t best = end;
  for (std::size_t k = begin; k < end; ++k) {
    const auto& pt = seq.points[k];
    if (!pt.next_t) continue;
    if (best == end) {
      best = k;
      continue;
    }
    const auto& b = seq.points[best];
    if (compare_ratio_pair(pt.value, *pt.next_t, seq.lambda, b.value, *b.next_t, seq.lambda) > 0) best = k;
  }
  return best;
}

}  // namespace

StratumVerdict empirical_verdict(const RatioSequence& seq) {
  StratumVerdict v;
  v.provenance = Provenance::Empirical;
  const std::size_t h = seq.points.size();
  v.horizon = h;
  if (h < 4) {
    v.reason = "fewer than 4 certified breakpoints";
    return v;
  }
  const std::size_t half = h / 2;
  const std::size_t first_max = argmax_upper(seq, 0, half);
  if (first_max == half) {
    v.reason = "no upper brackets in the first half of the window";
    return v;
  }
  const auto& a = seq.points[first_max];
  const auto& last = seq.points[h - 1];
  if (compare_ratio_pair(last.value, last.t, seq.lambda, a.value, *a.next_t, seq.lambda) > 0) {
    v.kind = VerdictKind::DivergenceWitnessed;
    v.ratio = last.lower;
    v.reason = "last lower bracket exceeds every upper bracket of the first half";
    return v;
  }
  const std::size_t second_max = argmax_upper(seq, half, h);
  if (second_max == h ||
      compare_ratio_pair(seq.points[second_max].value, *seq.points[second_max].next_t, seq.lambda, a.value,
                         *a.next_t, seq.lambda) <= 0) {
    v.kind = VerdictKind::BoundedUpTo;
    v.ratio = a.upper;
    v.reason = "upper brackets of the second half never exceed the first-half maximum";
    return v;
  }
  v.reason = "brackets neither grow past nor stay below the first-half maximum";
  return v;
}

namespace {

// v_0 when the polygon is completely known: a constant tail, or a truncated
// polygon that already reaches value 0 (unknown points cannot lie lower).
std::optional<Rational> known_v0(const ConvexProfile& p) {
  const Rational& last = p.nodes().back().y;
  if (!p.is_truncated() || last == 0) return last;
  return std::nullopt;
}

StratumVerdict exact_verdict(bool member, std::string reason) {
  StratumVerdict v;
  v.kind = member ? VerdictKind::DivergenceWitnessed : VerdictKind::BoundedUpTo;
  v.provenance = Provenance::Exact;
  v.member = member;
  v.reason = std::move(reason);
  return v;
}

}  // namespace

StratumVerdict membership_in_m(const ConvexProfile& p, std::size_t horizon) {
  if (const auto v0 = known_v0(p)) {
    if (*v0 > 0) return exact_verdict(true, "no node has valuation 0");
    return exact_verdict(false, "a node has valuation 0, so L(t)/t stays bounded near 0");
  }
  return empirical_verdict(ratio_sequence(p, StratumIndex(Rational(1)), horizon));
}

StratumVerdict membership_in_p(const ConvexProfile& p) {
  if (const auto v0 = known_v0(p)) {
    if (*v0 > 0) return exact_verdict(true, "v_0 = " + gaussval::to_string(*v0) + " > 0");
    return exact_verdict(false, "v_0 = 0");
  }
  StratumVerdict v;
  v.reason = "v_0 is not determined by truncated data";
  return v;
}

StratumReport classify(const ConvexProfile& p, const StratumIndex& lambda, std::size_t horizon) {
  StratumReport r{ratio_sequence(p, lambda, horizon), {}};
  const Rational& l = lambda.value();
  if (l == 0) {
    r.verdict = membership_in_p(p);
  } else if (l == 1) {
    r.verdict = membership_in_m(p, horizon);
  } else if (const auto v0 = known_v0(p)) {
    // Near 0, L(t) = v_0 + n t: the ratio blows up iff v_0 > 0.
    r.verdict = *v0 > 0 ? exact_verdict(true, "v_0 > 0, so L(t)/t^lambda -> inf")
                        : exact_verdict(false, "v_0 = 0, so L(t)/t^lambda -> 0");
  } else {
    r.verdict = empirical_verdict(r.sequence);
  }
  r.verdict.horizon = r.sequence.points.size();
  return r;
}

ChainReport stratum_chain_witness(const ConvexProfile& p, const StratumIndex& lambda, const StratumIndex& mu,
                                  std::size_t horizon) {
  if (!(lambda.value() < mu.value())) fail(ErrorCode::InvalidArgument, "chain witness needs lambda < mu");
  ChainReport r{classify(p, lambda, horizon), classify(p, mu, horizon)};
  for (const auto& pt : r.lower.sequence.points) {
    if (pt.t > 1) continue;
    if (compare_ratio_pair(pt.value, pt.t, mu.value(), pt.value, pt.t, lambda.value()) < 0)
      r.pointwise_monotone = false;
  }
  const auto& vl = r.lower.verdict;
  const auto& vm = r.upper.verdict;
  if (vl.member && vm.member && *vl.member && !*vm.member) r.consistent = false;
  if (vl.kind == VerdictKind::DivergenceWitnessed && vm.kind == VerdictKind::BoundedUpTo) r.consistent = false;
  return r;
}

ProductWitness product_witness(const ConvexProfile& f, const ConvexProfile& g, const std::vector<Rational>& extra_t) {
  const ConvexProfile fg = minkowski_product(f, g);
  std::vector<Rational> ts = extra_t;
  for (std::size_t k = 0; k + 1 < fg.nodes().size(); ++k) ts.push_back(fg.slope_magnitude(k));
  ProductWitness w;
  for (const auto& t : ts) {
    ++w.checked;
    const auto lhs = legendre_eval(fg, t).value;
    const auto rhs = legendre_eval(f, t).value + legendre_eval(g, t).value;
    if (lhs != rhs) ++w.failures;
  }
  return w;
}

}  // namespace gaussval
