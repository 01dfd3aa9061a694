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
#ifndef GAUSSVAL_SERIALIZE_HPP
#define GAUSSVAL_SERIALIZE_HPP

// JSON and CSV formats. Rationals are written as canonical "num/den"
// strings; bracket ratios are display doubles.

#include <string>
#include <string_view>

#include <json.hpp>

#include "gaussval/fa_family.hpp"
#include "gaussval/legendre.hpp"
#include "gaussval/polygon.hpp"
#include "gaussval/profile.hpp"
#include "gaussval/strata.hpp"

namespace gaussval {

using Json = nlohmann::ordered_json;

/// Parses text as JSON; Error(Parse) on malformed input.
Json parse_json(std::string_view text);
/// Two-space indented dump with a trailing newline.
std::string dump_json(const Json& j);

/// {"entries": [[i, "num/den" | "inf"], ...], "tail": "finite" | {"truncated": N}}
Json to_json(const CoefficientProfile& f);
CoefficientProfile profile_from_json(const Json& j);

/// {"nodes": [[x, "num/den"], ...], "tail": "constant" | {"truncated": N}}.
/// The bare string "truncated" is accepted on input and means N = last x.
Json to_json(const ConvexProfile& p);
ConvexProfile polygon_from_json(const Json& j);

/// {"breakpoints": [["t", "L(t)"], ...], "slopes": [...], "floor": "t", "floor_value": "L"}
Json to_json(const ConcaveTransform& t);
ConcaveTransform transform_from_json(const Json& j);

/// Profile, rounding certificates and hypothesis. The polygon and slopes are
/// recomputed on load and the stored horizon is checked against them.
Json to_json(const FaBuildReport& r);
FaBuildReport fa_report_from_json(const Json& j);

Json to_json(const DoubleRange& r);
Json to_json(const StratumVerdict& v);
Json to_json(const RatioSequence& s);
Json to_json(const StratumReport& r);
Json to_json(const ChainReport& r);
Json to_json(const ThresholdVerdict& v);

/// "x,y" rows of the polygon nodes.
std::string polygon_csv(const ConvexProfile& p);
/// "t,L(t)" rows at the breakpoints plus the endpoints of the plotted range.
std::string transform_csv(const ConcaveTransform& t);
/// "i,t,lower_lo,lower_hi,upper_lo,upper_hi" rows.
std::string ratio_csv(const RatioSequence& s);

}  // namespace gaussval

#endif  // GAUSSVAL_SERIALIZE_HPP
