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
#ifndef GAUSSVAL_ORACLES_HPP
#define GAUSSVAL_ORACLES_HPP

// Slow reference implementations and random generators. Nothing here calls
// the algorithms it is meant to check.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gaussval/polygon.hpp"
#include "gaussval/profile.hpp"

namespace gaussval::oracle {

using Rng = std::mt19937_64;

/// Vertices of the decreasing lower convex hull, O(n^2): point k is a vertex
/// iff some t >= 0 makes it the unique minimiser of v_j + t j.
std::vector<PolygonNode> hull_vertices(const CoefficientProfile& f);

/// Polygon value at an integer abscissa by direct interpolation; nullopt
/// left of the first node.
std::optional<Rational> polygon_at(const ConvexProfile& p, Index x);

/// min over integer x in [0, x_max + 10] of N(x) + t x, with the grid
/// values tabulated once per polygon.
class GridLegendre {
 public:
  explicit GridLegendre(const ConvexProfile& p);
  Rational operator()(const Rational& t) const;

 private:
  std::vector<PolygonNode> grid_;
};

Rational legendre_grid(const ConvexProfile& p, const Rational& t);

/// min_i (v_i + i s) over the listed finite entries.
Rational valuation_direct(const CoefficientProfile& f, const Rational& s);

Rational random_rational(Rng& rng, long max_num, long max_den);
/// Random rational in [0, hi].
Rational random_unit(Rng& rng, const Rational& hi, long den = 97);

/// Finite profile with 1..max_entries entries, some infinite, values with
/// small denominators. With `allow_zero`, value 0 appears regularly.
CoefficientProfile random_profile(Rng& rng, std::size_t max_entries, bool allow_zero = true);

/// Constant-tail polygon built node by node from strictly decreasing slopes.
ConvexProfile random_polygon(Rng& rng, std::size_t max_nodes);

}  // namespace gaussval::oracle

#endif  // GAUSSVAL_ORACLES_HPP
