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
#ifndef GAUSSVAL_POLYGON_HPP
#define GAUSSVAL_POLYGON_HPP

// Newton polygons: the boundary of the decreasing convex hull of the points
// (i, v(a_i)), stored as the list of its nodes.

#include <optional>
#include <vector>

#include "gaussval/profile.hpp"
#include "gaussval/rational.hpp"

namespace gaussval {

struct PolygonNode {
  Index x = 0;
  Rational y;

  friend bool operator==(const PolygonNode&, const PolygonNode&) = default;
};

enum class PolygonTail {
  Constant,   ///< slope 0 beyond the last node
  Truncated,  ///< unknown beyond the last node
};

/// One row of the slope sequence: node n_i, value N(n_i), and the magnitude
/// s_i of the slope on (n_i, n_{i+1}). The last right slope is 0 for a
/// constant tail and unknown (nullopt) for a truncated one.
struct SlopeEntry {
  Index x = 0;
  Rational y;
  std::optional<Rational> right_slope;
};

/// Nonnegative, convex, piecewise-linear, decreasing function on [0, inf)
/// that is +inf left of its first node.
///
/// Nodes have integer abscissas, strictly decreasing values and strictly
/// increasing (negative) slopes, so every listed point is a genuine break.
/// A truncated polygon remembers the truncation index N of its source
/// profile: points with abscissa > N are unknown.
class ConvexProfile {
 public:
  ConvexProfile(std::vector<PolygonNode> nodes, PolygonTail tail, std::optional<Index> truncation = std::nullopt);

  static ConvexProfile constant(std::vector<PolygonNode> nodes) {
    return ConvexProfile(std::move(nodes), PolygonTail::Constant);
  }

  const std::vector<PolygonNode>& nodes() const noexcept { return nodes_; }
  PolygonTail tail() const noexcept { return tail_; }
  bool is_truncated() const noexcept { return tail_ == PolygonTail::Truncated; }
  /// N for truncated polygons, nullopt otherwise.
  std::optional<Index> truncation() const noexcept { return truncation_; }

  /// Magnitude of the slope between node k and node k+1 (0-based).
  Rational slope_magnitude(std::size_t k) const;
  std::vector<SlopeEntry> slope_sequence() const;

  /// Smallest t at which the Legendre transform is certified exact:
  /// 0 for a constant tail, min_k y_k / (N + 1 - x_k) for a truncated one.
  Rational certification_floor() const;

  /// Abscissas that are certainly nodes of the true polygon. For a truncated
  /// polygon node k qualifies iff the slope to its left is steeper than the
  /// certification floor.
  std::vector<Index> certified_nodes() const;

  friend bool operator==(const ConvexProfile&, const ConvexProfile&) = default;

 private:
  std::vector<PolygonNode> nodes_;
  PolygonTail tail_;
  std::optional<Index> truncation_;
};

/// Decreasing lower convex hull via a single monotone-chain pass.
/// Collinear points are dropped. Throws Error(ZeroElement) for zero.
ConvexProfile newton_polygon(const CoefficientProfile& f);

/// Reads the node list back as coefficient data (finite or truncated).
CoefficientProfile to_profile(const ConvexProfile& p);

/// N(x): inf left of the first node, linear between nodes, constant after a
/// constant tail. Throws Error(UnknownRegion) beyond the last node of a
/// truncated polygon.
ExtRat eval_polygon(const ConvexProfile& p, const Rational& x);

/// Polygon of a product: its Legendre transform is the sum of the operands'
/// transforms. Computed by merging the two edge sequences by slope.
/// Throws Error(Truncation) for truncated operands.
ConvexProfile minkowski_product(const ConvexProfile& p, const ConvexProfile& q);

/// Convexified pointwise minimum, a lower bound for the polygon of a sum.
/// Throws Error(Truncation) for truncated operands.
ConvexProfile sum_lower_bound(const ConvexProfile& p, const ConvexProfile& q);

}  // namespace gaussval

#endif  // GAUSSVAL_POLYGON_HPP
