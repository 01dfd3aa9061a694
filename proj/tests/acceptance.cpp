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
// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gaussval/error.hpp"
#include "gaussval/fa_family.hpp"
#include "gaussval/legendre.hpp"
#include "gaussval/strata.hpp"
#include "gaussval/verify.hpp"

using namespace gaussval;

namespace {

constexpr std::uint64_t kSeed = 20260415;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string summarize(const std::vector<CheckResult>& checks, bool& pass) {
  std::string out;
  pass = true;
  for (const auto& c : checks) {
    pass = pass && c.ok();
    if (!out.empty()) out += "; ";
    out += c.name + " " + std::to_string(c.passed) + "/" + std::to_string(c.passed + c.failed);
    if (!c.failures.empty()) out += " [" + c.failures.front() + "]";
  }
  return out;
}

Outcome from_checks(const std::vector<CheckResult>& checks) {
  Outcome o;
  o.detail = summarize(checks, o.pass);
  return o;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

Outcome fa_estimates() {
  Outcome o{true, ""};
  for (const char* a_text : {"3/2", "2", "3"}) {
    const auto t0 = std::chrono::steady_clock::now();
    const FaBuildReport r = build_fa({parse_rational(a_text), 300, 0});
    Index bad = 0;
    for (Index i = 1; i <= r.certified_horizon; ++i) {
      const bool good = check_slope_estimate(r, i) && check_value_sandwich(r, i) && identity_III_check(r, i).holds;
      if (!good && bad == 0) bad = i;
    }
    const double secs = seconds_since(t0);
    const bool ok = bad == 0 && r.certified_horizon > 0 && secs <= 60.0;
    o.pass = o.pass && ok;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += std::string("a=") + a_text + " horizon=" + std::to_string(r.certified_horizon) + " " + fixed(secs) +
                "s";
    if (bad != 0) o.detail += " first failure at i=" + std::to_string(bad);
  }
  return o;
}

Outcome threshold() {
  const Rational a(2), in(3, 4), out(1, 4);
  const Index limit = 10000;
  Outcome o{true, ""};

  const ThresholdVerdict vin = prop4_verdict(a, in, 0);
  const ThresholdVerdict vout = prop4_verdict(a, out, 0);
  const bool analytic = vin.analytic.member == std::optional<bool>(true) &&
                        vout.analytic.member == std::optional<bool>(false);
  o.pass = analytic;
  o.detail = std::string("analytic 3/4:") + to_string(vin.analytic.kind) + " 1/4:" + to_string(vout.analytic.kind);

  const auto t0 = std::chrono::steady_clock::now();
  const FaBuildReport r = build_fa({a, truncation_for_horizon(a, limit), 0});
  o.detail += "; N=" + std::to_string(r.n) + " bits=" + std::to_string(r.precision) +
              " horizon=" + std::to_string(r.certified_horizon) + " build " + fixed(seconds_since(t0)) + "s";
  if (r.certified_horizon < limit + 1) {
    o.pass = false;
    o.detail += " (horizon below " + std::to_string(limit + 1) + ")";
    return o;
  }

  Index first_above = 0;
  double worst_upper = 0;
  Index worst_at = 0;
  bool upper_ok = true;
  for (Index i = 1; i <= limit; ++i) {
    const ValueWithCertificate v = legendre_eval(r.polygon, r.slope(i));
    if (!v.exact) {
      o.pass = false;
      o.detail += "; L(s_" + std::to_string(i) + ") not certified";
      return o;
    }
    const Rational& value = v.value.value();
    if (first_above == 0 && compare_ratio(value, r.slope(i), in, Rational(10)) > 0) first_above = i;
    if (compare_ratio(value, r.slope(i + 1), out, Rational(4)) > 0) upper_ok = false;
    const double hi = ratio_range(value, r.slope(i + 1), out).hi;
    if (hi > worst_upper) {
      worst_upper = hi;
      worst_at = i;
    }
  }
  o.pass = o.pass && first_above != 0 && upper_ok;
  o.detail += "; lower(3/4) > 10 first at i=" + (first_above ? std::to_string(first_above) : std::string("none"));
  o.detail += "; max upper(1/4) = " + fixed(worst_upper, 4) + " at i=" + std::to_string(worst_at);
  return o;
}

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(GAUSSVAL_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("gaussval_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string args = "build-fa --a 2 --n 300 --precision 640 --out ";
  const Run r1 = run_cli(args + (dir / "one.json").string());
  const Run r2 = run_cli(args + (dir / "two.json").string());
  const std::string one = slurp(dir / "one.json"), two = slurp(dir / "two.json");
  fs::remove_all(dir);
  Outcome o;
  const bool same = r1.code == 0 && r2.code == 0 && !one.empty() && one == two;
  o.detail = "build-fa twice: " + std::string(same ? "identical" : "differ") + " (" + std::to_string(one.size()) +
             " bytes)";
  const Run v = run_cli("verify --suite all --seed 42");
  o.detail += "; verify --suite all --seed 42 exit " + std::to_string(v.code);
  o.pass = same && v.code == 0;
  if (v.code != 0) {
    std::fputs(v.out.c_str(), stderr);
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"hull oracle", [] { return from_checks({check_hull_oracle(kSeed, 200, 50)}); }},
      {"legendre vs grid", [] { return from_checks({check_legendre_grid(kSeed + 1, 200, 100)}); }},
      {"product duality and sum bound",
       [] { return from_checks({check_product_duality(kSeed + 2, 100, 50), check_sum_lower_bound(kSeed + 3, 100, 50)}); }},
      {"node identity", [] { return from_checks({check_corollary1(kSeed + 4, 200)}); }},
      {"frobenius pullback", [] { return from_checks({check_frobenius(kSeed + 5, 100, 50)}); }},
      {"f_a estimates", fa_estimates},
      {"threshold", threshold},
      {"m-decision", [] { return from_checks({check_m_decision(kSeed + 6, 500)}); }},
      {"determinism", determinism},
  };

  int failures = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %zu %s (%ss): %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].name,
                fixed(seconds_since(t0)).c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed in %ss\n", criteria.size() - failures, criteria.size(),
              fixed(seconds_since(start)).c_str());
  return failures == 0 ? 0 : 1;
}
