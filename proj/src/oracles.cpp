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
#include "gaussval/oracles.hpp"

#include <algorithm>
#include <optional>

namespace gaussval::oracle {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

}  // namespace

std::vector<PolygonNode> hull_vertices(const CoefficientProfile& f) {
  std::vector<PolygonNode> pts;
  for (const auto& e : f.entries())
    if (e.val.is_finite()) pts.push_back({e.index, e.val.value()});
  std::vector<PolygonNode> out;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    std::optional<Rational> lo, hi;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j == k) continue;
      const Rational dx(pts[j].x - pts[k].x);
      const Rational bound = (pts[k].y - pts[j].y) / dx;
      if (j < k) {
        // need t < (v_j - v_k)/(k - j)
        if (!hi || bound < *hi) hi = bound;
      } else if (!lo || bound > *lo) {
        lo = bound;
      }
    }
    const Rational floor = lo && *lo > 0 ? *lo : Rational(0);
    if (!hi || *hi > floor) out.push_back(pts[k]);
  }
  return out;
}

std::optional<Rational> polygon_at(const ConvexProfile& p, Index x) {
  const auto& n = p.nodes();
  if (x < n.front().x) return std::nullopt;
  for (std::size_t k = 0; k + 1 < n.size(); ++k) {
    if (x <= n[k + 1].x) {
      Rational w(x - n[k].x, n[k + 1].x - n[k].x);
      w.canonicalize();
      return n[k].y + w * (n[k + 1].y - n[k].y);
    }
  }
  return n.back().y;
}

GridLegendre::GridLegendre(const ConvexProfile& p) {
  const Index xmax = p.nodes().back().x;
  for (Index x = 0; x <= xmax + 10; ++x)
    if (const auto y = polygon_at(p, x)) grid_.push_back({x, *y});
}

Rational GridLegendre::operator()(const Rational& t) const {
  Rational best = grid_.front().y + t * grid_.front().x;
  for (const auto& g : grid_) {
    const Rational v = g.y + t * g.x;
    if (v < best) best = v;
  }
  return best;
}

Rational legendre_grid(const ConvexProfile& p, const Rational& t) { return GridLegendre(p)(t); }

Rational valuation_direct(const CoefficientProfile& f, const Rational& s) {
  std::optional<Rational> best;
  for (const auto& e : f.entries()) {
    if (e.val.is_infinite()) continue;
    const Rational v = e.val.value() + s * e.index;
    if (!best || v < *best) best = v;
  }
  return *best;
}

Rational random_rational(Rng& rng, long max_num, long max_den) {
  Rational q(uniform(rng, 0, max_num), uniform(rng, 1, max_den));
  q.canonicalize();
  return q;
}

Rational random_unit(Rng& rng, const Rational& hi, long den) {
  Rational q(uniform(rng, 0, den), den);
  q.canonicalize();
  return q * hi;
}

CoefficientProfile random_profile(Rng& rng, std::size_t max_entries, bool allow_zero) {
  const auto count = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_entries)));
  std::vector<ProfileEntry> entries;
  Index i = uniform(rng, 0, 3);
  bool any_finite = false;
  for (std::size_t k = 0; k < count; ++k) {
    const long roll = uniform(rng, 0, 19);
    ExtRat v;
    if (roll == 0) {
      v = ExtRat::infinity();
    } else if (allow_zero && roll == 1) {
      v = ExtRat(0);
    } else {
      Rational q = random_rational(rng, 60, 12);
      if (!allow_zero && q == 0) q = Rational(1, 7);
      v = ExtRat(q);
    }
    any_finite = any_finite || v.is_finite();
    entries.push_back({i, v});
    i += uniform(rng, 1, 3);
  }
  if (!any_finite) entries.back().val = ExtRat(Rational(1, 2));
  return CoefficientProfile(std::move(entries));
}

ConvexProfile random_polygon(Rng& rng, std::size_t max_nodes) {
  const auto count = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_nodes)));
  // Slope magnitudes s_1 > s_2 > ... > s_{count-1} > 0, from largest.
  std::vector<Rational> slopes;
  Rational s = random_rational(rng, 40, 6) + 1;
  for (std::size_t k = 0; k + 1 < count; ++k) {
    slopes.push_back(s);
    s = s * uniform(rng, 1, 9) / 10;
  }
  std::vector<Index> xs{uniform(rng, 0, 4)};
  for (std::size_t k = 0; k + 1 < count; ++k) xs.push_back(xs.back() + uniform(rng, 1, 4));
  std::vector<Rational> ys(count);
  ys.back() = uniform(rng, 0, 2) == 0 ? Rational(0) : random_rational(rng, 10, 5);
  for (std::size_t k = count - 1; k-- > 0;) ys[k] = ys[k + 1] + slopes[k] * (xs[k + 1] - xs[k]);
  std::vector<PolygonNode> nodes;
  for (std::size_t k = 0; k < count; ++k) nodes.push_back({xs[k], ys[k]});
  return ConvexProfile(std::move(nodes), PolygonTail::Constant);
}

}  // namespace gaussval::oracle
