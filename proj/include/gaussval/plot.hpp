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
#ifndef GAUSSVAL_PLOT_HPP
#define GAUSSVAL_PLOT_HPP

#include <string>

#include "gaussval/polygon.hpp"

namespace gaussval {

/// Static SVG with the polygon N (left panel) and its transform L(N) (right
/// panel): axes, one polyline each, node markers.
std::string plot_svg(const ConvexProfile& p);

/// The same data as CSV: a "polygon" block of nodes and a "transform" block
/// of breakpoints.
std::string plot_csv(const ConvexProfile& p);

}  // namespace gaussval

#endif  // GAUSSVAL_PLOT_HPP
