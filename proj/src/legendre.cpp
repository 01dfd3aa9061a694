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
#include "gaussval/legendre.hpp"

#include <algorithm>
#include <string>

#include "gaussval/error.hpp"

namespace gaussval {

ConcaveTransform::ConcaveTransform(std::vector<Breakpoint> breakpoints, std::vector<Index> slopes,
                                   Rational validity_floor, Rational floor_value)
    : breakpoints_(std::move(breakpoints)),
      slopes_(std::move(slopes)),
      floor_(std::move(validity_floor)),
      floor_value_(std::move(floor_value)) {
  if (slopes_.size() != breakpoints_.size() + 1)
    fail(ErrorCode::InvalidArgument, "transform needs exactly one more slope than breakpoints");
  if (floor_ < 0 || floor_value_ < 0) fail(ErrorCode::InvalidArgument, "negative floor or floor value");
  for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
    if (!(breakpoints_[k].t > floor_)) fail(ErrorCode::InvalidArgument, "breakpoint at or below validity floor");
    if (k > 0 && !(breakpoints_[k].t < breakpoints_[k - 1].t))
      fail(ErrorCode::InvalidArgument, "breakpoints must be strictly descending");
  }
  for (std::size_t k = 0; k < slopes_.size(); ++k) {
    if (slopes_[k] < 0) fail(ErrorCode::InvalidArgument, "negative transform slope");
    if (k > 0 && !(slopes_[k] > slopes_[k - 1]))
      fail(ErrorCode::InvalidArgument, "transform slopes must increase toward t = 0");
  }
  // Continuity: each breakpoint value must match the segment below it.
  for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
    const Rational& lower_t = k + 1 < breakpoints_.size() ? breakpoints_[k + 1].t : floor_;
    const Rational& lower_v = k + 1 < breakpoints_.size() ? breakpoints_[k + 1].value : floor_value_;
    if (breakpoints_[k].value != lower_v + slopes_[k + 1] * (breakpoints_[k].t - lower_t))
      fail(ErrorCode::InvalidArgument, "transform breakpoints are not continuous");
  }
}

std::optional<Rational> ConcaveTransform::value_at_zero() const {
  if (floor_ != 0) return std::nullopt;
  return floor_value_;
}

Rational ConcaveTransform::operator()(const Rational& t) const {
  if (t < floor_) fail(ErrorCode::UnknownRegion, "transform evaluated below its validity floor");
  // Segment k spans (breakpoint k, breakpoint k-1) with slope slopes_[k].
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t,
                             [](const Rational& v, const Breakpoint& b) { return v > b.t; });
  const auto k = static_cast<std::size_t>(it - breakpoints_.begin());
  if (k < breakpoints_.size()) return breakpoints_[k].value + slopes_[k] * (t - breakpoints_[k].t);
  return floor_value_ + slopes_[k] * (t - floor_);
}

ConcaveTransform ConcaveTransform::frobenius_rescaled(long p) const {
  if (p < 2) fail(ErrorCode::InvalidArgument, "Frobenius rescaling needs p >= 2");
  const Rational inv(1, p);
  std::vector<Breakpoint> bps;
  bps.reserve(breakpoints_.size());
  for (const auto& b : breakpoints_) bps.push_back({b.t * inv, b.value * inv});
  return ConcaveTransform(std::move(bps), slopes_, floor_ * inv, floor_value_ * inv);
}

namespace {

// Index of a node minimizing y + t x: the first node whose right slope
// magnitude is <= t (or the last node).
std::size_t minimizing_node(const ConvexProfile& p, const Rational& t) {
  std::size_t lo = 0, hi = p.nodes().size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (p.slope_magnitude(mid) <= t) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

}  // namespace

ValueWithCertificate legendre_eval(const ConvexProfile& p, const Rational& t) {
  if (t < 0) fail(ErrorCode::InvalidArgument, "Legendre transform evaluated at negative t");
  const auto& n = p.nodes()[minimizing_node(p, t)];
  Rational value = n.y + t * n.x;
  bool exact = true;
  if (p.is_truncated()) exact = value <= (*p.truncation() + 1) * t;
  return {ExtRat(value), exact};
}

ConcaveTransform legendre_full(const ConvexProfile& p) {
  const auto& nodes = p.nodes();
  const Rational floor = p.certification_floor();
  std::vector<Breakpoint> bps;
  std::vector<Index> slopes{nodes[0].x};
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    Rational s = p.slope_magnitude(k);
    if (!(s > floor)) break;
    Rational value = nodes[k].y + s * nodes[k].x;
    bps.push_back({std::move(s), std::move(value)});
    slopes.push_back(nodes[k + 1].x);
  }
  const auto& last = nodes[slopes.size() - 1];
  Rational floor_value = last.y + floor * last.x;
  return ConcaveTransform(std::move(bps), std::move(slopes), floor, std::move(floor_value));
}

ConvexProfile inverse_legendre(const ConcaveTransform& t) {
  if (t.validity_floor() != 0) fail(ErrorCode::Truncation, "polygon underdetermined near 0");
  const auto& bps = t.breakpoints();
  const auto& slopes = t.slopes();
  std::vector<PolygonNode> nodes;
  nodes.reserve(slopes.size());
  for (std::size_t k = 0; k < slopes.size(); ++k) {
    // Node k is the tangent point of the segment with slope slopes[k]; read its
    // intercept at the segment's upper breakpoint (or at 0 for the last one).
    Rational y = k < bps.size() ? Rational(bps[k].value - slopes[k] * bps[k].t) : t.floor_value();
    nodes.push_back({slopes[k], std::move(y)});
  }
  return ConvexProfile::constant(std::move(nodes));
}

Corollary1Result corollary1_check(const ConvexProfile& p, std::size_t node, const HypothesisCertificate* certificate) {
  if (node < 1 || node > p.nodes().size())
    fail(ErrorCode::InvalidArgument, "node index " + std::to_string(node) + " out of range");
  if (p.is_truncated() && certificate == nullptr)
    fail(ErrorCode::Truncation, "hypothesis unverifiable at finite truncation");
  const std::size_t k = node - 1;
  Rational s;
  if (k + 1 < p.nodes().size()) s = p.slope_magnitude(k);
  else if (p.is_truncated()) fail(ErrorCode::Truncation, "right slope of the last node is unknown under truncation");
  else s = 0;

  const auto l = legendre_eval(p, s);
  if (!l.exact) fail(ErrorCode::Truncation, "L(s_i) not certified at this truncation; increase truncation");
  Corollary1Result r;
  r.lhs = p.nodes()[k].y;
  r.rhs = l.value.value() - s * p.nodes()[k].x;
  r.holds = r.lhs == r.rhs;
  return r;
}

}  // namespace gaussval
