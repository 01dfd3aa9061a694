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
#include "gaussval/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>

#include "gaussval/error.hpp"
#include "gaussval/legendre.hpp"
#include "gaussval/oracles.hpp"
#include "gaussval/strata.hpp"

namespace gaussval {

namespace {

constexpr std::size_t kKeptFailures = 8;

using oracle::Rng;

std::string describe(const ConvexProfile& p) {
  std::string s = "[";
  for (const auto& n : p.nodes()) s += "(" + std::to_string(n.x) + "," + to_string(n.y) + ")";
  return s + "]";
}

std::string describe(const CoefficientProfile& f) {
  std::string s = "{";
  for (const auto& e : f.entries()) s += "(" + std::to_string(e.index) + "," + e.val.str() + ")";
  return s + "}";
}

// Runs body(k) for every instance, turning exceptions into failures.
void each(CheckResult& r, std::size_t count, const std::function<void(std::size_t)>& body) {
  for (std::size_t k = 0; k < count; ++k) {
    try {
      body(k);
    } catch (const std::exception& e) {
      r.record(false, "instance " + std::to_string(k) + ": " + e.what());
    }
  }
}

Rational random_t(Rng& rng) {
  if (std::uniform_int_distribution<int>(0, 9)(rng) == 0) return Rational(0);
  return oracle::random_rational(rng, 200, 37);
}

Rational random_lambda(Rng& rng) {
  Rational l(std::uniform_int_distribution<long>(0, 12)(rng), 12);
  l.canonicalize();
  return l;
}

}  // namespace

void CheckResult::record(bool good, const std::string& what) {
  if (good) {
    ++passed;
    return;
  }
  ++failed;
  if (failures.size() < kKeptFailures) failures.push_back(what);
}

std::size_t SuiteResult::passed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.passed;
  return n;
}

std::size_t SuiteResult::failed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.failed;
  return n;
}

bool SuiteResult::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok(); });
}

CheckResult check_hull_oracle(std::uint64_t seed, std::size_t count, std::size_t max_entries) {
  CheckResult r{"hull equals brute-force hull"};
  Rng rng(seed);
  each(r, count, [&](std::size_t) {
    const CoefficientProfile f = oracle::random_profile(rng, max_entries);
    const ConvexProfile p = newton_polygon(f);
    r.record(p.nodes() == oracle::hull_vertices(f) && !p.is_truncated(), "profile " + describe(f));
  });
  return r;
}

CheckResult check_hull_truncated(std::uint64_t seed, std::size_t count) {
  CheckResult r{"truncated hull equals brute-force hull"};
  Rng rng(seed ^ 0x5bd1e995u);
  each(r, count, [&](std::size_t) {
    const CoefficientProfile src = oracle::random_profile(rng, 30);
    const Index n = src.entries().back().index + std::uniform_int_distribution<Index>(0, 3)(rng);
    const CoefficientProfile f(src.entries(), n);
    const ConvexProfile p = newton_polygon(f);
    r.record(p.nodes() == oracle::hull_vertices(f) && p.truncation() == n, "profile " + describe(f));
  });
  return r;
}

CheckResult check_legendre_grid(std::uint64_t seed, std::size_t polygons, std::size_t samples) {
  CheckResult r{"legendre_eval equals grid minimum"};
  Rng rng(seed ^ 0x1234567u);
  each(r, polygons, [&](std::size_t) {
    const ConvexProfile p = oracle::random_polygon(rng, 20);
    const oracle::GridLegendre grid(p);
    for (std::size_t k = 0; k < samples; ++k) {
      const Rational t = random_t(rng);
      const auto v = legendre_eval(p, t);
      r.record(v.exact && v.value == ExtRat(grid(t)), describe(p) + " at t=" + to_string(t));
    }
  });
  return r;
}

CheckResult check_legendre_roundtrip(std::uint64_t seed, std::size_t count) {
  CheckResult r{"transform round trip and piecewise evaluation"};
  Rng rng(seed ^ 0x9e3779b9u);
  each(r, count, [&](std::size_t) {
    const ConvexProfile p = oracle::random_polygon(rng, 20);
    const ConcaveTransform l = legendre_full(p);
    bool good = inverse_legendre(l) == p;
    for (int k = 0; k < 10; ++k) {
      const Rational t = random_t(rng);
      good = good && ExtRat(l(t)) == legendre_eval(p, t).value;
    }
    r.record(good, describe(p));
  });
  return r;
}

CheckResult check_product_duality(std::uint64_t seed, std::size_t pairs, std::size_t samples) {
  CheckResult r{"transform of product is sum of transforms"};
  Rng rng(seed ^ 0xabcdef1u);
  each(r, pairs, [&](std::size_t) {
    const ConvexProfile p = oracle::random_polygon(rng, 15);
    const ConvexProfile q = oracle::random_polygon(rng, 15);
    const ConvexProfile pq = minkowski_product(p, q);
    const oracle::GridLegendre gp(p), gq(q);
    for (std::size_t k = 0; k < samples; ++k) {
      const Rational t = random_t(rng);
      r.record(legendre_eval(pq, t).value == ExtRat(gp(t) + gq(t)),
               describe(p) + " * " + describe(q) + " at t=" + to_string(t));
    }
  });
  return r;
}

CheckResult check_sum_lower_bound(std::uint64_t seed, std::size_t pairs, std::size_t samples) {
  CheckResult r{"transform of sum bound is pointwise minimum"};
  Rng rng(seed ^ 0x7f4a7c15u);
  each(r, pairs, [&](std::size_t) {
    const ConvexProfile p = oracle::random_polygon(rng, 15);
    const ConvexProfile q = oracle::random_polygon(rng, 15);
    const ConvexProfile s = sum_lower_bound(p, q);
    const oracle::GridLegendre gp(p), gq(q);
    for (std::size_t k = 0; k < samples; ++k) {
      const Rational t = random_t(rng);
      r.record(legendre_eval(s, t).value == ExtRat(std::min(gp(t), gq(t))),
               describe(p) + " + " + describe(q) + " at t=" + to_string(t));
    }
  });
  return r;
}

CheckResult check_corollary1(std::uint64_t seed, std::size_t count) {
  CheckResult r{"node value equals -s_i n_i + L(s_i)"};
  Rng rng(seed ^ 0x2545f491u);
  each(r, count, [&](std::size_t) {
    const ConvexProfile p = oracle::random_polygon(rng, 20);
    const oracle::GridLegendre grid(p);
    const auto slopes = p.slope_sequence();
    for (std::size_t i = 1; i <= p.nodes().size(); ++i) {
      const Corollary1Result c = corollary1_check(p, i);
      const auto& node = p.nodes()[i - 1];
      const Rational& s = *slopes[i - 1].right_slope;
      const Rational brute = -s * node.x + grid(s);
      r.record(c.holds && c.lhs == node.y && c.rhs == brute, describe(p) + " node " + std::to_string(i));
    }
  });
  return r;
}

CheckResult check_frobenius(std::uint64_t seed, std::size_t count, std::size_t samples) {
  CheckResult r{"v_t(pullback f) = v_pt(f) / p"};
  Rng rng(seed ^ 0x3c6ef372u);
  each(r, count, [&](std::size_t) {
    const CoefficientProfile f = oracle::random_profile(rng, 30);
    for (long p : {2L, 3L, 5L}) {
      const CoefficientProfile g = frobenius_pullback(f, p);
      for (std::size_t k = 0; k < samples; ++k) {
        const Rational t = random_t(rng);
        const auto lhs = gauss_valuation(g, t);
        const Rational rhs = oracle::valuation_direct(f, p * t) / p;
        r.record(lhs.exact && lhs.value == ExtRat(rhs),
                 describe(f) + " p=" + std::to_string(p) + " t=" + to_string(t));
      }
    }
  });
  return r;
}

CheckResult check_monotonicity(std::uint64_t seed, std::size_t count) {
  CheckResult r{"v_t(f) >= v_s(f) >= 0 for s <= t"};
  Rng rng(seed ^ 0x6a09e667u);
  each(r, count, [&](std::size_t) {
    const CoefficientProfile f = oracle::random_profile(rng, 30);
    Rational s = random_t(rng), t = random_t(rng);
    if (t < s) std::swap(s, t);
    r.record(monotonicity_check(f, s, t), describe(f) + " s=" + to_string(s) + " t=" + to_string(t));
  });
  return r;
}

CheckResult check_bracket_validity(std::uint64_t seed, std::size_t count, std::size_t samples) {
  CheckResult r{"brackets enclose sampled ratios"};
  Rng rng(seed ^ 0xbb67ae85u);
  each(r, count, [&](std::size_t) {
    const ConvexProfile p = oracle::random_polygon(rng, 12);
    const Rational lambda = random_lambda(rng);
    const RatioSequence seq = ratio_sequence(p, StratumIndex(lambda), 0);
    for (const auto& pt : seq.points) {
      if (!pt.next_t) continue;
      bool good = true;
      bool attains_lower = false;
      for (std::size_t k = 0; k < samples; ++k) {
        const Rational t = *pt.next_t + (pt.t - *pt.next_t) * Rational(static_cast<long>(k), static_cast<long>(samples - 1));
        const Rational v = legendre_eval(p, t).value.value();
        good = good && compare_ratio_pair(v, t, lambda, pt.value, *pt.next_t, lambda) <= 0;
        attains_lower = attains_lower || compare_ratio_pair(v, t, lambda, pt.value, pt.t, lambda) >= 0;
      }
      r.record(good && attains_lower, describe(p) + " lambda=" + to_string(lambda) + " i=" + std::to_string(pt.i));
    }
  });
  return r;
}

CheckResult check_monotone_chain(std::uint64_t seed, std::size_t count) {
  CheckResult r{"ratio at mu >= ratio at lambda for t <= 1"};
  Rng rng(seed ^ 0x3c6ef372fe94f82bull);
  each(r, count, [&](std::size_t) {
    const ConvexProfile p = oracle::random_polygon(rng, 12);
    Rational lambda = random_lambda(rng), mu = random_lambda(rng);
    if (lambda == mu) mu = lambda == 1 ? Rational(11, 12) : Rational(1);
    if (mu < lambda) std::swap(lambda, mu);
    const ChainReport c = stratum_chain_witness(p, StratumIndex(lambda), StratumIndex(mu), 0);
    bool good = c.pointwise_monotone && c.consistent;
    for (int k = 0; k < 10; ++k) {
      const Rational t = oracle::random_rational(rng, 36, 37) + Rational(1, 1000);
      if (t > 1) continue;
      const Rational v = legendre_eval(p, t).value.value();
      good = good && compare_ratio_pair(v, t, mu, v, t, lambda) >= 0;
    }
    r.record(good, describe(p) + " lambda=" + to_string(lambda) + " mu=" + to_string(mu));
  });
  return r;
}

CheckResult check_m_decision(std::uint64_t seed, std::size_t count) {
  CheckResult r{"membership in m agrees with the zero-node criterion"};
  Rng rng(seed ^ 0x510e527fu);
  each(r, count, [&](std::size_t) {
    const CoefficientProfile f = oracle::random_profile(rng, 20);
    bool has_zero = false;
    for (const auto& v : oracle::hull_vertices(f)) has_zero = has_zero || v.y == 0;
    const StratumVerdict v = membership_in_m(newton_polygon(f));
    r.record(v.provenance == Provenance::Exact && v.member && *v.member == !has_zero, describe(f));
  });
  return r;
}

CheckResult check_ratio_additivity(std::uint64_t seed, std::size_t pairs) {
  CheckResult r{"ratio of product is sum of ratios"};
  Rng rng(seed ^ 0x9b05688cu);
  each(r, pairs, [&](std::size_t) {
    const ConvexProfile p = oracle::random_polygon(rng, 12);
    const ConvexProfile q = oracle::random_polygon(rng, 12);
    std::vector<Rational> ts;
    for (int k = 0; k < 10; ++k) ts.push_back(oracle::random_rational(rng, 50, 23) + Rational(1, 1000));
    const ProductWitness w = product_witness(p, q, ts);
    r.record(w.additive() && w.checked >= ts.size(), describe(p) + " * " + describe(q));
  });
  return r;
}

std::vector<CheckResult> check_fa_report(const FaBuildReport& report, Index reference_limit) {
  const Index n = report.n;
  const std::string tag = "a=" + to_string(report.a) + " N=" + std::to_string(n);
  CheckResult slope{"slope estimate |s_i - i^-a| < 2 e^-i (" + tag + ")"};
  CheckResult sandwich{"value sandwich (" + tag + ")"};
  CheckResult rounding{"rounding certificates (" + tag + ")"};
  CheckResult convex{"nodes at every integer (" + tag + ")"};
  CheckResult identity{"L(s_i) = i s_i + q_i at certified indices (" + tag + ")"};
  CheckResult reference{"agreement with independent F_a enclosure (" + tag + ")"};

  each(slope, 1, [&](std::size_t) {
    for (Index i = 1; i < n; ++i) slope.record(check_slope_estimate(report, i), "i=" + std::to_string(i));
  });
  each(sandwich, 1, [&](std::size_t) {
    for (Index i = 1; i <= n; ++i) sandwich.record(check_value_sandwich(report, i), "i=" + std::to_string(i));
  });
  each(rounding, 1, [&](std::size_t) {
    for (Index i = 1; i <= n; ++i) rounding.record(check_rounding_certificate(report, i), "i=" + std::to_string(i));
  });
  each(convex, 1, [&](std::size_t) {
    bool good = report.polygon.nodes().size() == static_cast<std::size_t>(n);
    for (std::size_t k = 0; good && k < report.polygon.nodes().size(); ++k)
      good = report.polygon.nodes()[k].x == static_cast<Index>(k + 1);
    for (std::size_t k = 0; good && k + 1 < report.slopes.size(); ++k) good = report.slopes[k] > report.slopes[k + 1];
    convex.record(good, "node set differs from 1..N");
  });
  each(identity, 1, [&](std::size_t) {
    for (Index i = 1; i <= report.certified_horizon; ++i) {
      const IdentityResult id = identity_III_check(report, i);
      identity.record(id.holds, "i=" + std::to_string(i));
    }
  });
  each(reference, 1, [&](std::size_t) {
    for (Index i = 1; i <= std::min(n, reference_limit); ++i) {
      const FaTolerance& tol = report.tolerances[static_cast<std::size_t>(i - 1)];
      const Rational eps = tol.epsilon();
      const auto bits = static_cast<unsigned long>(16 - floor_log2(eps));
      const Interval enc = reference_fa(report.a, i, bits);
      const Rational& q = report.q(i);
      const Rational worst = std::max(Rational(q - enc.lower()), Rational(enc.upper() - q));
      const Rational best = enc.contains(q) ? Rational(0) : std::min(Rational(abs(q - enc.lower())), Rational(abs(q - enc.upper())));
      const Rational& claimed = report.error_bounds[static_cast<std::size_t>(i - 1)];
      reference.record(worst < eps && best <= claimed, "i=" + std::to_string(i));
    }
  });
  return {slope, sandwich, rounding, convex, identity, reference};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"hull", "legendre", "corollary1", "frobenius", "fa", "strata"};
  return names;
}

namespace {

SuiteResult run_one(const std::string& suite, std::uint64_t seed, const std::optional<FaBuildReport>& fa_report) {
  SuiteResult s{suite, {}};
  if (suite == "hull") {
    s.checks.push_back(check_hull_oracle(seed, 200));
    s.checks.push_back(check_hull_truncated(seed, 100));
  } else if (suite == "legendre") {
    s.checks.push_back(check_legendre_grid(seed, 200, 100));
    s.checks.push_back(check_legendre_roundtrip(seed, 100));
    s.checks.push_back(check_product_duality(seed, 100, 50));
    s.checks.push_back(check_sum_lower_bound(seed, 100, 50));
  } else if (suite == "corollary1") {
    s.checks.push_back(check_corollary1(seed, 200));
  } else if (suite == "frobenius") {
    s.checks.push_back(check_frobenius(seed, 100, 50));
    s.checks.push_back(check_monotonicity(seed, 200));
  } else if (suite == "fa") {
    std::vector<FaBuildReport> reports;
    if (fa_report) {
      reports.push_back(*fa_report);
    } else {
      reports.push_back(build_fa(FaSpec{Rational(2), 50, 0}));
      reports.push_back(build_fa(FaSpec{Rational(3, 2), 100, 0}));
      reports.push_back(build_fa(FaSpec{Rational(3), 50, 0}));
    }
    for (const auto& rep : reports)
      for (auto& c : check_fa_report(rep)) s.checks.push_back(std::move(c));
  } else if (suite == "strata") {
    s.checks.push_back(check_bracket_validity(seed, 100));
    s.checks.push_back(check_monotone_chain(seed, 200));
    s.checks.push_back(check_m_decision(seed, 500));
    s.checks.push_back(check_ratio_additivity(seed, 100));
  } else {
    fail(ErrorCode::InvalidArgument, "unknown suite \"" + suite + "\"");
  }
  return s;
}

}  // namespace

std::vector<SuiteResult> run_suites(const std::string& suite, std::uint64_t seed,
                                    const std::optional<FaBuildReport>& fa_report) {
  if (suite != "all") return {run_one(suite, seed, fa_report)};
  std::vector<std::future<SuiteResult>> jobs;
  for (const auto& name : suite_names())
    jobs.push_back(std::async(std::launch::async, [&, name] { return run_one(name, seed, fa_report); }));
  std::vector<SuiteResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace gaussval
