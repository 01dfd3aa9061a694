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
#include "gaussval/serialize.hpp"

#include <cstdio>
#include <string>

#include "gaussval/error.hpp"

namespace gaussval {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

Index read_index(const Json& j) {
  if (!j.is_number_integer()) bad("expected an integer index, got " + j.dump());
  return j.get<Index>();
}

Rational read_rational(const Json& j) {
  if (!j.is_string()) bad("expected a \"num/den\" string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

ExtRat read_ext(const Json& j) {
  if (!j.is_string()) bad("expected a \"num/den\" or \"inf\" string, got " + j.dump());
  return ExtRat::parse(j.get<std::string>());
}

const Json& pair_at(const Json& j, std::size_t k) {
  if (!j.is_array() || j.size() != 2) bad("expected a two-element array, got " + j.dump());
  return j[k];
}

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

std::string fmt_double(double d) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const CoefficientProfile& f) {
  Json entries = Json::array();
  for (const auto& e : f.entries()) entries.push_back(Json::array({e.index, e.val.str()}));
  Json out;
  out["entries"] = std::move(entries);
  if (const auto n = f.truncation()) out["tail"] = Json{{"truncated", *n}};
  else out["tail"] = "finite";
  return out;
}

CoefficientProfile profile_from_json(const Json& j) {
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) bad("\"entries\" must be an array");
  std::vector<ProfileEntry> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back({read_index(pair_at(e, 0)), read_ext(pair_at(e, 1))});
  const Json& tail = field(j, "tail");
  if (tail == "finite") return CoefficientProfile(std::move(out));
  if (tail.is_object()) return CoefficientProfile(std::move(out), read_index(field(tail, "truncated")));
  bad("\"tail\" must be \"finite\" or {\"truncated\": N}");
}

Json to_json(const ConvexProfile& p) {
  Json nodes = Json::array();
  for (const auto& n : p.nodes()) nodes.push_back(Json::array({n.x, to_string(n.y)}));
  Json out;
  out["nodes"] = std::move(nodes);
  if (p.is_truncated()) out["tail"] = Json{{"truncated", *p.truncation()}};
  else out["tail"] = "constant";
  return out;
}

ConvexProfile polygon_from_json(const Json& j) {
  const Json& nodes = field(j, "nodes");
  if (!nodes.is_array()) bad("\"nodes\" must be an array");
  std::vector<PolygonNode> out;
  out.reserve(nodes.size());
  for (const auto& n : nodes) out.push_back({read_index(pair_at(n, 0)), read_rational(pair_at(n, 1))});
  const Json& tail = field(j, "tail");
  if (tail == "constant") return ConvexProfile(std::move(out), PolygonTail::Constant);
  if (tail == "truncated") return ConvexProfile(std::move(out), PolygonTail::Truncated);
  if (tail.is_object()) return ConvexProfile(std::move(out), PolygonTail::Truncated, read_index(field(tail, "truncated")));
  bad("\"tail\" must be \"constant\", \"truncated\" or {\"truncated\": N}");
}

Json to_json(const ConcaveTransform& t) {
  Json bps = Json::array();
  for (const auto& b : t.breakpoints()) bps.push_back(Json::array({to_string(b.t), to_string(b.value)}));
  Json out;
  out["breakpoints"] = std::move(bps);
  out["slopes"] = t.slopes();
  out["floor"] = to_string(t.validity_floor());
  out["floor_value"] = to_string(t.floor_value());
  return out;
}

ConcaveTransform transform_from_json(const Json& j) {
  const Json& bps = field(j, "breakpoints");
  if (!bps.is_array()) bad("\"breakpoints\" must be an array");
  std::vector<Breakpoint> out;
  for (const auto& b : bps) out.push_back({read_rational(pair_at(b, 0)), read_rational(pair_at(b, 1))});
  const Json& slopes = field(j, "slopes");
  if (!slopes.is_array()) bad("\"slopes\" must be an array");
  std::vector<Index> sl;
  for (const auto& s : slopes) sl.push_back(read_index(s));
  return ConcaveTransform(std::move(out), std::move(sl), read_rational(field(j, "floor")),
                          read_rational(field(j, "floor_value")));
}

Json to_json(const FaBuildReport& r) {
  Json out;
  out["a"] = to_string(r.a);
  out["n"] = r.n;
  out["precision"] = r.precision;
  out["profile"] = to_json(r.profile);
  out["error_bounds"] = rationals(r.error_bounds);
  Json tol = Json::array();
  for (const auto& t : r.tolerances) tol.push_back(Json::array({to_string(t.exp_proxy), to_string(t.convexity_cap)}));
  out["tolerances"] = std::move(tol);
  out["certified_horizon"] = r.certified_horizon;
  out["hypothesis"] = Json{{"statement", r.hypothesis.statement}, {"justification", r.hypothesis.justification}};
  return out;
}

FaBuildReport fa_report_from_json(const Json& j) {
  const Rational a = read_rational(field(j, "a"));
  const Index n = read_index(field(j, "n"));
  const Json& prec = field(j, "precision");
  if (!prec.is_number_unsigned()) bad("\"precision\" must be a positive integer");
  CoefficientProfile profile = profile_from_json(field(j, "profile"));
  if (profile.truncation() != n || profile.entries().size() != static_cast<std::size_t>(n))
    bad("profile must list every index 1..n and be truncated at n");
  for (std::size_t k = 0; k < profile.entries().size(); ++k) {
    const auto& e = profile.entries()[k];
    if (e.index != static_cast<Index>(k + 1) || e.val.is_infinite()) bad("profile must list every index 1..n");
  }
  const Json& eb = field(j, "error_bounds");
  const Json& tol = field(j, "tolerances");
  if (!eb.is_array() || !tol.is_array() || eb.size() != static_cast<std::size_t>(n) ||
      tol.size() != static_cast<std::size_t>(n))
    bad("\"error_bounds\" and \"tolerances\" need one entry per index");
  std::vector<Rational> bounds;
  for (const auto& b : eb) bounds.push_back(read_rational(b));
  std::vector<FaTolerance> tolerances;
  for (const auto& t : tol) tolerances.push_back({read_rational(pair_at(t, 0)), read_rational(pair_at(t, 1))});
  std::vector<Rational> slopes;
  for (std::size_t k = 0; k + 1 < profile.entries().size(); ++k)
    slopes.push_back(profile.entries()[k].val.value() - profile.entries()[k + 1].val.value());
  ConvexProfile polygon = newton_polygon(profile);
  const Json& hyp = field(j, "hypothesis");
  HypothesisCertificate hypothesis{field(hyp, "statement").get<std::string>(),
                                   field(hyp, "justification").get<std::string>()};
  const Index horizon = read_index(field(j, "certified_horizon"));
  const Rational floor = polygon.certification_floor();
  Index check = 0;
  while (check + 1 < n && slopes[static_cast<std::size_t>(check)] >= floor) ++check;
  if (check != horizon) bad("stored certified_horizon does not match the profile");
  return FaBuildReport{a,
                       n,
                       prec.get<unsigned long>(),
                       std::move(profile),
                       std::move(bounds),
                       std::move(tolerances),
                       std::move(slopes),
                       std::move(polygon),
                       horizon,
                       std::move(hypothesis)};
}

Json to_json(const DoubleRange& r) { return Json::array({r.lo, r.hi}); }

Json to_json(const StratumVerdict& v) {
  Json out;
  out["kind"] = to_string(v.kind);
  out["provenance"] = to_string(v.provenance);
  out["horizon"] = v.horizon;
  out["ratio"] = v.ratio ? to_json(*v.ratio) : Json(nullptr);
  out["member"] = v.member ? Json(*v.member) : Json(nullptr);
  out["reason"] = v.reason;
  return out;
}

Json to_json(const RatioSequence& s) {
  Json t = Json::array(), lower = Json::array(), upper = Json::array();
  for (const auto& p : s.points) {
    t.push_back(p.t.get_d());
    lower.push_back(to_json(p.lower));
    upper.push_back(p.upper ? to_json(*p.upper) : Json(nullptr));
  }
  Json out;
  out["lambda"] = to_string(s.lambda);
  out["requested_horizon"] = s.requested_horizon;
  out["points"] = s.points.size();
  out["complete"] = s.complete;
  out["t"] = std::move(t);
  out["lower"] = std::move(lower);
  out["upper"] = std::move(upper);
  return out;
}

Json to_json(const StratumReport& r) {
  Json out;
  out["verdict"] = to_json(r.verdict);
  out["brackets"] = to_json(r.sequence);
  return out;
}

Json to_json(const ChainReport& r) {
  Json out;
  out["lower"] = to_json(r.lower);
  out["upper"] = to_json(r.upper);
  out["pointwise_monotone"] = r.pointwise_monotone;
  out["consistent"] = r.consistent;
  return out;
}

Json to_json(const ThresholdVerdict& v) {
  Json out;
  out["a"] = to_string(v.a);
  out["nu"] = to_string(v.nu);
  out["exponent"] = to_string(v.exponent);
  out["verdict"] = to_json(v.analytic);
  if (v.empirical_verdict) out["empirical_verdict"] = to_json(*v.empirical_verdict);
  if (v.empirical) out["brackets"] = to_json(*v.empirical);
  return out;
}

std::string polygon_csv(const ConvexProfile& p) {
  std::string out = "x,y\n";
  for (const auto& n : p.nodes()) out += std::to_string(n.x) + "," + to_string(n.y) + "\n";
  return out;
}

std::string transform_csv(const ConcaveTransform& t) {
  std::string out = "t,L\n";
  const auto& bps = t.breakpoints();
  const Rational top = bps.empty() ? Rational(t.validity_floor() + 1) : Rational(bps.front().t * 2);
  std::vector<Rational> ts{top};
  for (const auto& b : bps) ts.push_back(b.t);
  if (ts.back() != t.validity_floor()) ts.push_back(t.validity_floor());
  for (const auto& x : ts) out += to_string(x) + "," + to_string(t(x)) + "\n";
  return out;
}

std::string ratio_csv(const RatioSequence& s) {
  std::string out = "i,t,lower_lo,lower_hi,upper_lo,upper_hi\n";
  for (const auto& p : s.points) {
    out += std::to_string(p.i) + "," + fmt_double(p.t.get_d()) + "," + fmt_double(p.lower.lo) + "," +
           fmt_double(p.lower.hi) + ",";
    out += p.upper ? fmt_double(p.upper->lo) + "," + fmt_double(p.upper->hi) : std::string(",");
    out += "\n";
  }
  return out;
}

}  // namespace gaussval
