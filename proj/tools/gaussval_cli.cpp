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
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gaussval/gaussval.h"

namespace {

constexpr int kOk = 0;
constexpr int kMalformed = 1;
constexpr int kVerificationFailed = 2;
constexpr int kInconclusive = 3;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(gv_status s) { return s == GV_INCONCLUSIVE ? kInconclusive : kMalformed; }

void check(gv_status s, const std::string& context) {
  if (s != GV_OK) throw Failure{exit_code_for(s), context + ": " + gv_status_name(s) + ": " + gv_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kMalformed, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kMalformed, "cannot write " + path};
  out << text;
  if (!out) throw Failure{kMalformed, "cannot write " + path};
}

struct CString {
  char* p = nullptr;
  ~CString() { gv_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Free(p); }
};

using Profile = Handle<gv_profile, gv_profile_free>;
using Polygon = Handle<gv_polygon, gv_polygon_free>;
using Transform = Handle<gv_transform, gv_transform_free>;
using FaReport = Handle<gv_fa_report, gv_fa_report_free>;

void load_profile(const std::string& path, Profile& f) {
  check(gv_profile_from_json(read_file(path).c_str(), &f.p), path);
}

void load_polygon(const std::string& path, Polygon& p) {
  check(gv_polygon_from_json(read_file(path).c_str(), &p.p), path);
}

unsigned long default_precision() {
  const char* env = std::getenv("GAUSSVAL_PRECISION");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0') throw Failure{kMalformed, "GAUSSVAL_PRECISION must be a nonnegative integer"};
  return v;
}

const char* verdict_name(gv_verdict v) {
  switch (v) {
    case GV_VERDICT_DIVERGENCE_WITNESSED: return "DivergenceWitnessed";
    case GV_VERDICT_BOUNDED_UP_TO: return "BoundedUpTo";
    case GV_VERDICT_BOUNDARY: return "Boundary";
    case GV_VERDICT_INCONCLUSIVE: return "Inconclusive";
  }
  return "Inconclusive";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauss valuations, Newton polygons, Legendre transforms and the strata p_lambda"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gv_version()));

  std::string a, s, t, lambda, mu, suite = "all", format = "svg";
  std::string profile_path, polygon_path, report_path, fa_report_path, out_path;
  long n = 0;
  unsigned long precision = 0;
  std::size_t horizon = 0;
  std::uint64_t seed = 0;
  bool full = false, roundtrip = false;

  auto* build = app.add_subcommand("build-fa", "Build the f_a coefficient profile and its certificates");
  build->add_option("--a", a, "Exponent a > 1 as num/den")->required();
  build->add_option("--n", n, "Truncation N >= 2")->required();
  auto* prec_opt = build->add_option("--precision", precision,
                                     "Working precision in bits (default: $GAUSSVAL_PRECISION, else automatic)");
  build->add_option("--out", out_path, "Output JSON file (default: stdout)");

  auto* eval = app.add_subcommand("eval", "Print v_s(f) and whether it is certified exact");
  eval->add_option("--profile", profile_path, "Coefficient profile JSON")->required()->check(CLI::ExistingFile);
  eval->add_option("--s", s, "Nonnegative rational s as num/den")->required();

  auto* polygon = app.add_subcommand("polygon", "Write the Newton polygon of a profile");
  polygon->add_option("--profile", profile_path, "Coefficient profile JSON")->required()->check(CLI::ExistingFile);
  polygon->add_option("--out", out_path, "Output JSON file (default: stdout)");

  auto* transform = app.add_subcommand("transform", "Evaluate or describe the Legendre transform of a polygon");
  transform->add_option("--polygon", polygon_path, "Polygon JSON")->required()->check(CLI::ExistingFile);
  auto* t_opt = transform->add_option("--t", t, "Print L(t) and its exactness");
  auto* full_opt = transform->add_flag("--full", full, "Write the full piecewise-linear transform");
  auto* rt_opt = transform->add_flag("--roundtrip", roundtrip, "Check that inverting the transform gives the input");
  transform->add_option("--out", out_path, "Output file for --full (default: stdout)");
  t_opt->excludes(full_opt)->excludes(rt_opt);
  full_opt->excludes(rt_opt);

  auto* classify = app.add_subcommand("classify", "Bracket L(t)/t^lambda and report a stratum verdict");
  auto* cpoly = classify->add_option("--polygon", polygon_path, "Polygon JSON")->check(CLI::ExistingFile);
  auto* crep = classify->add_option("--fa-report", fa_report_path, "Use the polygon of a build-fa report")
                   ->check(CLI::ExistingFile);
  cpoly->excludes(crep);
  classify->add_option("--lambda", lambda, "Stratum index in [0, 1] as num/den")->required();
  classify->add_option("--mu", mu, "Second index mu > lambda for a paired report");
  classify->add_option("--a", a, "Treat the polygon as that of f_a (analytic verdicts)");
  classify->add_option("--horizon", horizon, "Number of breakpoints (0: all certified)")->required();
  classify->add_option("--out", out_path, "Report JSON file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Run property suites; exit 0 iff every check passes");
  verify->add_option("--suite", suite, "hull, legendre, corollary1, frobenius, fa, strata or all")
      ->check(CLI::IsMember({"hull", "legendre", "corollary1", "frobenius", "fa", "strata", "all"}));
  verify->add_option("--seed", seed, "Seed for the random instances")->required();
  verify->add_option("--fa-report", fa_report_path, "Check this build-fa report in the fa suite")
      ->check(CLI::ExistingFile);
  verify->add_option("--report", report_path, "Write every check result as JSON");

  auto* plot = app.add_subcommand("plot", "Draw a polygon and its transform on one canvas");
  plot->add_option("--polygon", polygon_path, "Polygon JSON")->required()->check(CLI::ExistingFile);
  plot->add_option("--out", out_path, "Output file")->required();
  plot->add_option("--format", format, "svg or csv")->check(CLI::IsMember({"svg", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    if (*build) {
      if (prec_opt->count() == 0) precision = default_precision();
      FaReport r;
      check(gv_build_fa(a.c_str(), n, precision, &r.p), "build-fa");
      CString json;
      check(gv_fa_report_to_json(r.p, &json.p), "build-fa");
      write_output(out_path, json.str());
      long nn = 0, horizon_out = 0;
      unsigned long bits = 0;
      check(gv_fa_report_info(r.p, &nn, &bits, &horizon_out), "build-fa");
      if (!out_path.empty())
        std::printf("a=%s N=%ld precision=%lu certified_horizon=%ld\n", a.c_str(), nn, bits, horizon_out);
      return kOk;
    }
    if (*eval) {
      Profile f;
      load_profile(profile_path, f);
      CString v;
      int exact = 0;
      check(gv_gauss_valuation(f.p, s.c_str(), &v.p, &exact), "eval");
      std::printf("%s %s\n", v.p, exact ? "exact" : "upper-bound");
      return kOk;
    }
    if (*polygon) {
      Profile f;
      load_profile(profile_path, f);
      Polygon p;
      check(gv_newton_polygon(f.p, &p.p), "polygon");
      CString json;
      check(gv_polygon_to_json(p.p, &json.p), "polygon");
      write_output(out_path, json.str());
      return kOk;
    }
    if (*transform) {
      Polygon p;
      load_polygon(polygon_path, p);
      if (t_opt->count()) {
        CString v;
        int exact = 0;
        check(gv_legendre_eval(p.p, t.c_str(), &v.p, &exact), "transform");
        std::printf("%s %s\n", v.p, exact ? "exact" : "upper-bound");
        return kOk;
      }
      Transform l;
      check(gv_legendre_full(p.p, &l.p), "transform");
      if (roundtrip) {
        CString json;
        check(gv_transform_to_json(l.p, &json.p), "transform");
        Transform reread;
        check(gv_transform_from_json(json.p, &reread.p), "transform");
        Polygon back;
        check(gv_inverse_legendre(reread.p, &back.p), "transform");
        if (!gv_polygon_equal(p.p, back.p)) {
          std::fprintf(stderr, "roundtrip mismatch\n");
          return kVerificationFailed;
        }
        std::printf("roundtrip ok\n");
        return kOk;
      }
      if (!full) throw Failure{kMalformed, "transform needs one of --t, --full, --roundtrip"};
      CString json;
      check(gv_transform_to_json(l.p, &json.p), "transform");
      write_output(out_path, json.str());
      return kOk;
    }
    if (*classify) {
      Polygon p;
      if (!fa_report_path.empty()) {
        FaReport r;
        check(gv_fa_report_from_json(read_file(fa_report_path).c_str(), &r.p), fa_report_path);
        check(gv_fa_report_polygon(r.p, &p.p), fa_report_path);
      } else if (!polygon_path.empty()) {
        load_polygon(polygon_path, p);
      } else {
        throw Failure{kMalformed, "classify needs --polygon or --fa-report"};
      }
      CString json;
      gv_verdict verdict = GV_VERDICT_INCONCLUSIVE;
      check(gv_classify(p.p, lambda.c_str(), mu.empty() ? nullptr : mu.c_str(), a.empty() ? nullptr : a.c_str(),
                        horizon, &json.p, &verdict),
            "classify");
      write_output(out_path, json.str());
      if (!out_path.empty()) std::printf("%s\n", verdict_name(verdict));
      return verdict == GV_VERDICT_INCONCLUSIVE ? kInconclusive : kOk;
    }
    if (*verify) {
      FaReport r;
      if (!fa_report_path.empty())
        check(gv_fa_report_from_json(read_file(fa_report_path).c_str(), &r.p), fa_report_path);
      CString summary, json;
      int ok = 0;
      check(gv_verify(suite.c_str(), seed, r.p, &summary.p, &json.p, &ok), "verify");
      std::fputs(summary.p, stdout);
      if (!report_path.empty()) write_output(report_path, json.str());
      return ok ? kOk : kVerificationFailed;
    }
    if (*plot) {
      Polygon p;
      load_polygon(polygon_path, p);
      CString out;
      check(gv_plot(p.p, format.c_str(), &out.p), "plot");
      write_output(out_path, out.str());
      return kOk;
    }
  } catch (const Failure& f) {
    std::fprintf(stderr, "gaussval: %s\n", f.message.c_str());
    return f.exit_code;
  }
  return kMalformed;
}
