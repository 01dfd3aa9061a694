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
#include "gaussval/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <utility>
#include <vector>

#include "gaussval/legendre.hpp"
#include "gaussval/serialize.hpp"

namespace gaussval {

namespace {

constexpr double kPanel = 360;
constexpr double kMargin = 40;
constexpr double kWidth = 2 * kPanel + 3 * kMargin;
constexpr double kHeight = kPanel + 2 * kMargin;

using Point = std::pair<double, double>;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Panel {
  double left;
  double xmax;
  double ymax;

  double px(double x) const { return left + kPanel * x / xmax; }
  double py(double y) const { return kMargin + kPanel * (1 - y / ymax); }
};

void axes(std::string& out, const Panel& p, const char* xlabel, const char* ylabel) {
  const double x0 = p.px(0), y0 = p.py(0);
  out += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x0 + kPanel) + "\" y2=\"" + num(y0) +
         "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x0) + "\" y2=\"" + num(kMargin) +
         "\" stroke=\"black\"/>\n";
  out += "<text x=\"" + num(x0 + kPanel - 10) + "\" y=\"" + num(y0 + 20) + "\" font-size=\"14\">" + xlabel +
         "</text>\n";
  out += "<text x=\"" + num(x0 + 6) + "\" y=\"" + num(kMargin - 10) + "\" font-size=\"14\">" + ylabel + "</text>\n";
}

void curve(std::string& out, const Panel& p, const std::vector<Point>& pts, const std::vector<Point>& marks,
           const char* colour) {
  out += "<polyline fill=\"none\" stroke=\"" + std::string(colour) + "\" stroke-width=\"2\" points=\"";
  for (std::size_t k = 0; k < pts.size(); ++k)
    out += (k ? " " : "") + num(p.px(pts[k].first)) + "," + num(p.py(pts[k].second));
  out += "\"/>\n";
  for (const auto& [x, y] : marks)
    out += "<circle cx=\"" + num(p.px(x)) + "\" cy=\"" + num(p.py(y)) + "\" r=\"3\" fill=\"" + colour + "\"/>\n";
}

}  // namespace

std::string plot_svg(const ConvexProfile& p) {
  const auto& nodes = p.nodes();
  const double last_x = static_cast<double>(nodes.back().x);
  const double xmax = std::max(1.0, last_x * 1.25 + 1);
  const double ymax = std::max(1e-9, nodes.front().y.get_d() * 1.1);

  std::vector<Point> poly, poly_marks;
  // Vertical ray at the first node: the polygon is +inf to its left.
  poly.emplace_back(static_cast<double>(nodes.front().x), ymax);
  for (const auto& n : nodes) {
    poly.emplace_back(static_cast<double>(n.x), n.y.get_d());
    poly_marks.push_back(poly.back());
  }
  if (!p.is_truncated()) poly.emplace_back(xmax, nodes.back().y.get_d());

  const ConcaveTransform l = legendre_full(p);
  const auto& bps = l.breakpoints();
  const double tmax = bps.empty() ? 1.0 : bps.front().t.get_d() * 1.5;
  const Rational t_top = bps.empty() ? Rational(l.validity_floor() + 1) : Rational(bps.front().t * 3 / 2);
  std::vector<Point> tr, tr_marks;
  tr.emplace_back(t_top.get_d(), l(t_top).get_d());
  for (const auto& b : bps) {
    tr.emplace_back(b.t.get_d(), b.value.get_d());
    tr_marks.push_back(tr.back());
  }
  tr.emplace_back(l.validity_floor().get_d(), l.floor_value().get_d());
  const double lmax = std::max(1e-9, tr.front().second * 1.1);

  const Panel left{kMargin, xmax, ymax};
  const Panel right{2 * kMargin + kPanel, tmax, lmax};

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
                    num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  axes(out, left, "x", "N(x)");
  axes(out, right, "t", "L(t)");
  curve(out, left, poly, poly_marks, "#1f4e9c");
  curve(out, right, tr, tr_marks, "#b0302a");
  out += "</svg>\n";
  return out;
}

std::string plot_csv(const ConvexProfile& p) {
  return "# polygon\n" + polygon_csv(p) + "# transform\n" + transform_csv(legendre_full(p));
}

}  // namespace gaussval
