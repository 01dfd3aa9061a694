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
#include "gaussval/polygon.hpp"

#include <algorithm>
#include <string>

#include "gaussval/error.hpp"

namespace gaussval {

ConvexProfile::ConvexProfile(std::vector<PolygonNode> nodes, PolygonTail tail, std::optional<Index> truncation)
    : nodes_(std::move(nodes)), tail_(tail), truncation_(truncation) {
  if (nodes_.empty()) fail(ErrorCode::InvalidArgument, "a polygon needs at least one node");
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    if (nodes_[k].x < 0) fail(ErrorCode::InvalidArgument, "negative node abscissa");
    if (nodes_[k].y < 0) fail(ErrorCode::InvalidArgument, "negative node value");
    if (k == 0) continue;
    if (nodes_[k].x <= nodes_[k - 1].x) fail(ErrorCode::InvalidArgument, "node abscissas must increase");
    if (nodes_[k].y >= nodes_[k - 1].y) fail(ErrorCode::InvalidArgument, "node values must decrease");
    if (k >= 2 && !(slope_magnitude(k - 1) < slope_magnitude(k - 2)))
      fail(ErrorCode::InvalidArgument, "slopes must increase strictly (node " + std::to_string(nodes_[k - 1].x) +
                                           " is not a break point)");
  }
  if (tail_ == PolygonTail::Truncated) {
    if (!truncation_) truncation_ = nodes_.back().x;
    if (*truncation_ < nodes_.back().x) fail(ErrorCode::InvalidArgument, "truncation index left of the last node");
  } else if (truncation_) {
    fail(ErrorCode::InvalidArgument, "a constant-tail polygon has no truncation index");
  }
}

Rational ConvexProfile::slope_magnitude(std::size_t k) const {
  const auto& a = nodes_.at(k);
  const auto& b = nodes_.at(k + 1);
  return Rational((a.y - b.y) / (b.x - a.x));
}

std::vector<SlopeEntry> ConvexProfile::slope_sequence() const {
  std::vector<SlopeEntry> out;
  out.reserve(nodes_.size());
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    SlopeEntry e{nodes_[k].x, nodes_[k].y, std::nullopt};
    if (k + 1 < nodes_.size()) e.right_slope = slope_magnitude(k);
    else if (tail_ == PolygonTail::Constant) e.right_slope = Rational(0);
    out.push_back(std::move(e));
  }
  return out;
}

Rational ConvexProfile::certification_floor() const {
  if (tail_ == PolygonTail::Constant) return Rational(0);
  const Index n1 = *truncation_ + 1;
  Rational best = nodes_[0].y / (n1 - nodes_[0].x);
  for (std::size_t k = 1; k < nodes_.size(); ++k) {
    Rational c = nodes_[k].y / (n1 - nodes_[k].x);
    if (c < best) best = std::move(c);
  }
  return best;
}

std::vector<Index> ConvexProfile::certified_nodes() const {
  std::vector<Index> out;
  if (tail_ == PolygonTail::Constant) {
    for (const auto& n : nodes_) out.push_back(n.x);
    return out;
  }
  const Rational floor = certification_floor();
  out.push_back(nodes_[0].x);
  for (std::size_t k = 1; k < nodes_.size(); ++k) {
    if (!(slope_magnitude(k - 1) > floor)) break;
    out.push_back(nodes_[k].x);
  }
  return out;
}

namespace {

// True iff b lies strictly below the segment from a to c (a.x < b.x < c.x).
bool strictly_below(const PolygonNode& a, const PolygonNode& b, const PolygonNode& c) {
  return (b.y - a.y) * (c.x - a.x) < (c.y - a.y) * (b.x - a.x);
}

// Monotone chain over points sorted by strictly increasing x.
std::vector<PolygonNode> decreasing_hull(const std::vector<PolygonNode>& points) {
  // The hull stops at the leftmost point of minimal value; beyond it the
  // boundary is the horizontal ray.
  std::size_t last = 0;
  for (std::size_t k = 1; k < points.size(); ++k)
    if (points[k].y < points[last].y) last = k;

  std::vector<PolygonNode> hull;
  hull.reserve(last + 1);
  for (std::size_t k = 0; k <= last; ++k) {
    while (hull.size() >= 2 && !strictly_below(hull[hull.size() - 2], hull.back(), points[k])) hull.pop_back();
    hull.push_back(points[k]);
  }
  return hull;
}

}  // namespace

ConvexProfile newton_polygon(const CoefficientProfile& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroElement, "zero element has no Newton polygon");
  std::vector<PolygonNode> points;
  points.reserve(f.entries().size());
  for (const auto& e : f.entries())
    if (e.val.is_finite()) points.push_back({e.index, e.val.value()});
  auto hull = decreasing_hull(points);
  if (f.is_truncated()) return ConvexProfile(std::move(hull), PolygonTail::Truncated, f.truncation());
  return ConvexProfile(std::move(hull), PolygonTail::Constant);
}

CoefficientProfile to_profile(const ConvexProfile& p) {
  std::vector<ProfileEntry> entries;
  entries.reserve(p.nodes().size());
  for (const auto& n : p.nodes()) entries.push_back({n.x, ExtRat(n.y)});
  return CoefficientProfile(std::move(entries), p.truncation());
}

ExtRat eval_polygon(const ConvexProfile& p, const Rational& x) {
  if (x < 0) fail(ErrorCode::InvalidArgument, "polygon evaluated at negative abscissa");
  const auto& nodes = p.nodes();
  if (x < nodes.front().x) return ExtRat::infinity();
  if (x >= nodes.back().x) {
    if (x == nodes.back().x) return ExtRat(nodes.back().y);
    if (p.is_truncated()) fail(ErrorCode::UnknownRegion, "unknown region beyond the last node of a truncated polygon");
    return ExtRat(nodes.back().y);
  }
  // First node with abscissa > x.
  auto it = std::upper_bound(nodes.begin(), nodes.end(), x,
                             [](const Rational& v, const PolygonNode& n) { return v < n.x; });
  const auto& b = *it;
  const auto& a = *(it - 1);
  return ExtRat(Rational(a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x)));
}

ConvexProfile minkowski_product(const ConvexProfile& p, const ConvexProfile& q) {
  if (p.is_truncated() || q.is_truncated()) fail(ErrorCode::Truncation, "product undefined under truncation");
  struct Edge {
    Index dx;
    Rational dy;  // negative
    Rational slope;
  };
  std::vector<Edge> edges;
  for (const ConvexProfile* poly : {&p, &q}) {
    const auto& n = poly->nodes();
    for (std::size_t k = 0; k + 1 < n.size(); ++k) {
      const Index dx = n[k + 1].x - n[k].x;
      Rational dy = n[k + 1].y - n[k].y;
      Rational slope = dy / dx;
      edges.push_back({dx, std::move(dy), std::move(slope)});
    }
  }
  std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.slope < b.slope; });

  std::vector<PolygonNode> nodes;
  nodes.push_back({p.nodes().front().x + q.nodes().front().x, p.nodes().front().y + q.nodes().front().y});
  for (std::size_t k = 0; k < edges.size();) {
    // Edges of equal slope form one segment of the product.
    Index dx = 0;
    Rational dy = 0;
    std::size_t j = k;
    for (; j < edges.size() && edges[j].slope == edges[k].slope; ++j) {
      dx += edges[j].dx;
      dy += edges[j].dy;
    }
    const auto& prev = nodes.back();
    nodes.push_back({prev.x + dx, prev.y + dy});
    k = j;
  }
  return ConvexProfile::constant(std::move(nodes));
}

ConvexProfile sum_lower_bound(const ConvexProfile& p, const ConvexProfile& q) {
  if (p.is_truncated() || q.is_truncated()) fail(ErrorCode::Truncation, "bound undefined under truncation");
  // The convex hull of the union of both node sets is the convexified min.
  std::vector<PolygonNode> points;
  points.reserve(p.nodes().size() + q.nodes().size());
  std::merge(p.nodes().begin(), p.nodes().end(), q.nodes().begin(), q.nodes().end(), std::back_inserter(points),
             [](const PolygonNode& a, const PolygonNode& b) { return a.x < b.x; });
  std::vector<PolygonNode> merged;
  for (auto& pt : points) {
    if (!merged.empty() && merged.back().x == pt.x) {
      if (pt.y < merged.back().y) merged.back().y = pt.y;
    } else {
      merged.push_back(std::move(pt));
    }
  }
  return ConvexProfile::constant(decreasing_hull(merged));
}

}  // namespace gaussval
