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

#include <cmath>
#include <string>

#include "gaussval/fa_family.hpp"
#include "support.hpp"

using namespace gaussval;
using gaussval::test::error_of;
using gaussval::test::q;

namespace {

const FaBuildReport& f2() {
  static const FaBuildReport r = build_fa(FaSpec{Rational(2), 50, 0});
  return r;
}

}  // namespace

TEST_CASE("reference F_2(1) encloses pi^2/6") {
  const Interval z = reference_fa(Rational(2), 1, 120);
  CHECK(z.width() < Rational(1) / (Integer(1) << 120));
  // pi^2/6 = 1.6449340668482264364724151666460...
  CHECK(z.lower() < q(16449340668482265, 10000000000000000));
  CHECK(z.upper() > q(16449340668482264, 10000000000000000));
  Interval pi2(200);
  mpfr_const_pi(pi2.lo().get(), MPFR_RNDD);
  mpfr_const_pi(pi2.hi().get(), MPFR_RNDU);
  const Interval zeta2 = pi2 * pi2 / Interval::point(Rational(6), 200);
  CHECK(zeta2.lower() <= z.upper());
  CHECK(z.lower() <= zeta2.upper());
}

TEST_CASE("reference enclosures telescope") {
  for (const Rational& a : {q(3, 2), q(2), q(3), q(7, 3)}) {
    for (Index i : {1, 2, 3, 10, 57}) {
      const Interval d = reference_fa(a, i, 100) - reference_fa(a, i + 1, 100);
      const Interval term = pow(Rational(i), Rational(-a), 160);
      CHECK(d.lower() <= term.upper());
      CHECK(term.lower() <= d.upper());
    }
  }
}

TEST_CASE("reference enclosures respect the integral sandwich") {
  for (const Rational& a : {q(3, 2), q(2), q(5, 2)}) {
    for (Index i : {2, 5, 40, 300}) {
      const Interval f = reference_fa(a, i, 80);
      const Rational a1 = a - 1;
      CHECK(pow(Rational(i), Rational(-a1), 100).upper() / a1 < f.lower());
      CHECK(f.upper() < pow(Rational(i - 1), Rational(-a1), 100).lower() / a1);
    }
  }
}

TEST_CASE("reference_fa argument checks") {
  CHECK(error_of([] { reference_fa(Rational(1), 1, 10); }) == ErrorCode::InvalidArgument);
  CHECK(error_of([] { reference_fa(Rational(2), 0, 10); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("build_fa a=2 N=50: slope and value estimates") {
  const auto& r = f2();
  CHECK(r.n == 50);
  CHECK(r.profile.truncation() == 50);
  CHECK(r.profile.entries().front().index == 1);
  for (Index i = 1; i < 50; ++i) CHECK(check_slope_estimate(r, i));
  for (Index i = 1; i <= 50; ++i) CHECK(check_value_sandwich(r, i));
  for (Index i = 1; i <= 50; ++i) CHECK(check_rounding_certificate(r, i));
  for (Index i = 1; i < 50; ++i) CHECK(std::abs(r.slope(i).get_d() * i * i - 1) < 1e-9 + 2 * std::exp(-i) * i * i);
}

TEST_CASE("build_fa puts a node at every integer") {
  for (const Rational& a : {q(3), q(2), q(3, 2)}) {
    const FaBuildReport r = build_fa(FaSpec{a, 50, 0});
    const auto& nodes = r.polygon.nodes();
    REQUIRE(nodes.size() == 50);
    for (std::size_t k = 0; k < nodes.size(); ++k) CHECK(nodes[k].x == static_cast<Index>(k + 1));
    // Every node except the last has a known right slope.
    const auto seq = r.polygon.slope_sequence();
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) CHECK(seq[k].right_slope == r.slopes[k]);
    CHECK_FALSE(seq.back().right_slope.has_value());
  }
}

TEST_CASE("L(s_i) = i s_i + q_i at certified nodes") {
  const auto id = identity_III_check(f2(), 10);
  CHECK(id.holds);
  CHECK(id.lhs == id.rhs);
  const FaBuildReport r = build_fa(FaSpec{q(3, 2), 100, 0});
  CHECK(identity_III_check(r, 5).holds);
  const auto first = identity_III_check(f2(), 1);
  CHECK(first.lhs == f2().slope(1) + f2().q(1));
  for (Index i = 1; i <= f2().certified_horizon; ++i) CHECK(identity_III_check(f2(), i).holds);
}

TEST_CASE("node identity beyond the certified horizon asks for more truncation") {
  const auto& r = f2();
  CHECK(r.certified_horizon >= 20);
  CHECK(r.certified_horizon < 49);
  try {
    identity_III_check(r, r.certified_horizon + 1);
    FAIL("expected a truncation error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Truncation);
    CHECK(std::string(e.what()).find("increase truncation") != std::string::npos);
  }
}

TEST_CASE("truncation_for_horizon certifies the requested horizon") {
  for (const Rational& a : {q(3, 2), q(2), q(3)}) {
    for (Index h : {5, 20, 60}) {
      const Index n = truncation_for_horizon(a, h);
      const FaBuildReport r = build_fa(FaSpec{a, n, 0});
      CHECK(r.certified_horizon >= h);
    }
  }
}

TEST_CASE("build_fa is deterministic and rejects bad specs") {
  const FaBuildReport again = build_fa(FaSpec{Rational(2), 50, 0});
  CHECK(again.profile == f2().profile);
  CHECK(again.error_bounds == f2().error_bounds);
  CHECK(error_of([] { build_fa(FaSpec{Rational(1), 50, 0}); }) == ErrorCode::InvalidArgument);
  CHECK(error_of([] { build_fa(FaSpec{Rational(2), 1, 0}); }) == ErrorCode::InvalidArgument);
  try {
    build_fa(FaSpec{Rational(2), 50, 24});
    FAIL("expected a precision error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Precision);
    CHECK(std::string(e.what()).find("index") != std::string::npos);
  }
}

TEST_CASE("fixed precision above the recommendation reproduces the profile") {
  const unsigned long bits = recommended_precision(Rational(2), 50);
  CHECK(bits == f2().precision);
  const FaBuildReport r = build_fa(FaSpec{Rational(2), 50, bits + 100});
  for (Index i = 1; i <= 50; ++i) CHECK(check_rounding_certificate(r, i));
}

TEST_CASE("explicit bounds bracket the built brackets") {
  const FaBuildReport r = build_fa(FaSpec{Rational(2), 200, 0});
  for (const Rational& nu : {q(1, 4), q(1, 2), q(3, 4)}) {
    const auto seq = ratio_sequence(r.polygon, StratumIndex(nu), 60);
    for (std::size_t k = 1; k < seq.points.size(); ++k) {
      const auto& pt = seq.points[k];
      const Index i = static_cast<Index>(pt.i);
      const Interval lb = explicit_lower_bound(Rational(2), nu, i);
      CHECK(lb.hi().to_double(MPFR_RNDU) <= pt.lower.hi);
      const auto ub = explicit_upper_bound(Rational(2), nu, i);
      REQUIRE(ub.has_value());
      REQUIRE(pt.upper.has_value());
      CHECK(pt.upper->lo <= ub->lo().to_double(MPFR_RNDD));
    }
  }
  CHECK_FALSE(explicit_upper_bound(Rational(2), q(1, 2), 1).has_value());
}

TEST_CASE("threshold verdicts") {
  auto v = prop4_verdict(Rational(2), q(3, 4), 0);
  CHECK(v.exponent == q(1, 2));
  CHECK(v.analytic.kind == VerdictKind::DivergenceWitnessed);
  CHECK(v.analytic.provenance == Provenance::Analytic);
  CHECK(v.analytic.member == true);
  CHECK_FALSE(v.empirical.has_value());

  v = prop4_verdict(Rational(2), q(1, 4), 0);
  CHECK(v.exponent == q(-1, 2));
  CHECK(v.analytic.kind == VerdictKind::BoundedUpTo);
  CHECK(v.analytic.member == false);

  v = prop4_verdict(q(3, 2), q(1, 3), 0);
  CHECK(v.exponent == 0);
  CHECK(v.analytic.kind == VerdictKind::Boundary);
  CHECK_FALSE(v.analytic.member.has_value());
  REQUIRE(v.analytic.ratio.has_value());
  CHECK(v.analytic.ratio->lo == doctest::Approx(3.0));

  CHECK(prop4_verdict(Rational(2), q(0), 0).analytic.member == false);
  CHECK(prop4_verdict(Rational(2), q(1), 0).analytic.member == true);
  CHECK(error_of([] { prop4_verdict(Rational(2), q(3, 2), 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("threshold verdicts with empirical brackets agree") {
  const FaBuildReport r = build_fa(FaSpec{Rational(2), 300, 0});
  const auto up = prop4_verdict(r, q(3, 4), 100);
  REQUIRE(up.empirical_verdict.has_value());
  CHECK(up.empirical_verdict->kind == VerdictKind::DivergenceWitnessed);
  CHECK(up.empirical->points.size() == 100);
  const auto down = prop4_verdict(r, q(1, 4), 100);
  CHECK(down.empirical_verdict->kind == VerdictKind::BoundedUpTo);
  const auto built = prop4_verdict(Rational(2), q(3, 4), 30);
  CHECK(built.empirical->points.size() == 30);
  CHECK(built.empirical->complete);
}
