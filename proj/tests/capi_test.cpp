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
#include <doctest.h>

#include <cstring>
#include <string>

#include "gaussval/gaussval.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  gv_string_free(s);
  return out;
}

const char* kProfile = R"({"entries":[[0,"3"],[1,"1"],[2,"2"],[3,"0"]],"tail":"finite"})";

}  // namespace

TEST_CASE("C API: profile, valuation and polygon") {
  gv_profile* f = nullptr;
  REQUIRE(gv_profile_from_json(kProfile, &f) == GV_OK);
  char* v = nullptr;
  int exact = 0;
  REQUIRE(gv_gauss_valuation(f, "1/4", &v, &exact) == GV_OK);
  CHECK(take(v) == "3/4");
  CHECK(exact == 1);

  gv_polygon* p = nullptr;
  REQUIRE(gv_newton_polygon(f, &p) == GV_OK);
  char* json = nullptr;
  REQUIRE(gv_polygon_to_json(p, &json) == GV_OK);
  const std::string pj = take(json);
  CHECK(pj.find(R"("tail": "constant")") != std::string::npos);

  gv_transform* t = nullptr;
  REQUIRE(gv_legendre_full(p, &t) == GV_OK);
  REQUIRE(gv_transform_eval(t, "1", &v) == GV_OK);
  CHECK(take(v) == "2/1");
  gv_polygon* back = nullptr;
  REQUIRE(gv_inverse_legendre(t, &back) == GV_OK);
  CHECK(gv_polygon_equal(p, back) == 1);

  gv_profile* g = nullptr;
  REQUIRE(gv_frobenius_pullback(f, 3, &g) == GV_OK);
  REQUIRE(gv_gauss_valuation(g, "1/12", &v, &exact) == GV_OK);
  CHECK(take(v) == "1/4");

  gv_polygon_free(back);
  gv_transform_free(t);
  gv_polygon_free(p);
  gv_profile_free(g);
  gv_profile_free(f);
}

TEST_CASE("C API: errors carry codes and messages") {
  gv_profile* f = nullptr;
  CHECK(gv_profile_from_json("{", &f) == GV_PARSE);
  CHECK(std::strlen(gv_last_error()) > 0);
  CHECK(f == nullptr);
  CHECK(gv_profile_from_json(R"({"entries":[],"tail":"finite"})", &f) == GV_OK);
  gv_polygon* p = nullptr;
  CHECK(gv_newton_polygon(f, &p) == GV_ZERO_ELEMENT);
  char* v = nullptr;
  int exact = 0;
  CHECK(gv_gauss_valuation(f, "1", &v, &exact) == GV_ZERO_ELEMENT);
  CHECK(gv_gauss_valuation(nullptr, "1", &v, &exact) == GV_INVALID_ARGUMENT);
  gv_profile_free(f);
  CHECK(std::string(gv_status_name(GV_INCONCLUSIVE)) == "inconclusive");
  gv_polygon* t = nullptr;
  REQUIRE(gv_polygon_from_json(R"({"nodes":[[1,"2"],[2,"1"]],"tail":{"truncated":4}})", &t) == GV_OK);
  CHECK(gv_legendre_eval(t, "x", &v, &exact) == GV_PARSE);
  gv_transform* l = nullptr;
  REQUIRE(gv_legendre_full(t, &l) == GV_OK);
  gv_polygon* inv = nullptr;
  CHECK(gv_inverse_legendre(l, &inv) == GV_TRUNCATION);
  CHECK(std::string(gv_last_error()).find("underdetermined") != std::string::npos);
  gv_transform_free(l);
  gv_polygon_free(t);
  CHECK(std::string(gv_version()) == "0.1.0");
}

TEST_CASE("C API: f_a build, classify and plot") {
  gv_fa_report* r = nullptr;
  REQUIRE(gv_build_fa("2", 80, 0, &r) == GV_OK);
  long n = 0, horizon = 0;
  unsigned long bits = 0;
  REQUIRE(gv_fa_report_info(r, &n, &bits, &horizon) == GV_OK);
  CHECK(n == 80);
  CHECK(horizon >= 30);
  char* json = nullptr;
  REQUIRE(gv_fa_report_to_json(r, &json) == GV_OK);
  gv_fa_report* again = nullptr;
  REQUIRE(gv_fa_report_from_json(json, &again) == GV_OK);
  gv_string_free(json);
  gv_polygon* p = nullptr;
  REQUIRE(gv_fa_report_polygon(again, &p) == GV_OK);

  gv_verdict verdict = GV_VERDICT_INCONCLUSIVE;
  REQUIRE(gv_classify(p, "3/4", nullptr, "2", 30, &json, &verdict) == GV_OK);
  CHECK(verdict == GV_VERDICT_DIVERGENCE_WITNESSED);
  CHECK(take(json).find("Analytic") != std::string::npos);
  REQUIRE(gv_classify(p, "3/4", nullptr, nullptr, 30, &json, &verdict) == GV_OK);
  CHECK(verdict == GV_VERDICT_DIVERGENCE_WITNESSED);
  CHECK(take(json).find("Empirical") != std::string::npos);
  REQUIRE(gv_classify(p, "1/4", "3/4", nullptr, 30, &json, &verdict) == GV_OK);
  CHECK(verdict == GV_VERDICT_BOUNDED_UP_TO);
  CHECK(take(json).find("pointwise_monotone") != std::string::npos);
  CHECK(gv_classify(p, "2", nullptr, nullptr, 30, &json, &verdict) == GV_INVALID_ARGUMENT);

  REQUIRE(gv_plot(p, "svg", &json) == GV_OK);
  CHECK(take(json).rfind("<svg", 0) == 0);
  REQUIRE(gv_plot(p, "csv", &json) == GV_OK);
  CHECK(take(json).rfind("# polygon", 0) == 0);
  CHECK(gv_plot(p, "png", &json) == GV_INVALID_ARGUMENT);

  char* summary = nullptr;
  int ok = 0;
  REQUIRE(gv_verify("fa", 1, again, &summary, &json, &ok) == GV_OK);
  CHECK(ok == 1);
  CHECK(take(summary).find("fa: ") == 0);
  take(json);
  CHECK(gv_verify("nope", 1, nullptr, &summary, &json, &ok) == GV_INVALID_ARGUMENT);

  gv_polygon_free(p);
  gv_fa_report_free(again);
  gv_fa_report_free(r);
  CHECK(gv_build_fa("1", 10, 0, &r) == GV_INVALID_ARGUMENT);
}
