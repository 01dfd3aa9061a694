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

#include "gaussval/fa_family.hpp"
#include "gaussval/oracles.hpp"
#include "gaussval/strata.hpp"
#include "support.hpp"

using namespace gaussval;
using gaussval::test::error_of;
using gaussval::test::poly;
using gaussval::test::q;

TEST_CASE("StratumIndex range") {
  CHECK(StratumIndex(q(0)).value() == 0);
  CHECK(StratumIndex(q(1)).value() == 1);
  CHECK(error_of([] { StratumIndex(q(-1, 2)); }) == ErrorCode::InvalidArgument);
  CHECK(error_of([] { StratumIndex(q(3, 2)); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("compare_ratio decides exact ties and near ties") {
  // 2 / 4^(1/2) = 1
  CHECK(compare_ratio(q(2), q(4), q(1, 2), q(1)) == 0);
  CHECK(compare_ratio(q(2), q(4), q(1, 2), q(99, 100)) == 1);
  CHECK(compare_ratio(q(2), q(4), q(1, 2), q(101, 100)) == -1);
  // 1 / (1/8)^(2/3) = 4
  CHECK(compare_ratio(q(1), q(1, 8), q(2, 3), q(4)) == 0);
  // Differ far below 256 bits: (1 + 2^-300) vs 1 at lambda 1/3.
  Rational tiny(1);
  mpq_div_2exp(tiny.get_mpq_t(), tiny.get_mpq_t(), 300);
  CHECK(compare_ratio(1 + tiny, q(1), q(1, 3), q(1)) == 1);
  CHECK(compare_ratio_pair(q(1), q(1, 8), q(1, 3), q(2), q(1), q(0)) == 0);
  CHECK(error_of([] { compare_ratio(q(1), q(0), q(1, 2), q(1)); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("compare_ratio gives up beyond the exact route") {
  Rational tiny(1);
  mpq_div_2exp(tiny.get_mpq_t(), tiny.get_mpq_t(), 400);
  // Denominator 97 cannot be handled exactly.
  CHECK(error_of([&] { compare_ratio_pair(1 + tiny, q(1), q(1, 97), q(1), q(1), q(1, 97)); }) ==
        ErrorCode::Inconclusive);
}

TEST_CASE("ratio_sequence on a finite polygon") {
  const auto p = poly({{0, q(3)}, {1, q(1)}, {3, q(0)}});
  const RatioSequence s = ratio_sequence(p, StratumIndex(q(1, 2)), 0);
  REQUIRE(s.points.size() == 2);
  CHECK(s.points[0].t == 2);
  CHECK(s.points[0].value == 3);
  CHECK(s.points[0].next_t == q(1, 2));
  CHECK(s.points[0].lower.lo <= 3 / std::sqrt(2.0));
  CHECK(s.points[0].lower.hi >= 3 / std::sqrt(2.0));
  REQUIRE(s.points[0].upper.has_value());
  CHECK(s.points[0].upper->lo <= 3 / std::sqrt(0.5));
  CHECK_FALSE(s.points[1].upper.has_value());
  CHECK(s.complete);
  CHECK(ratio_sequence(p, StratumIndex(q(1, 2)), 1).points.size() == 1);
}

TEST_CASE("membership_in_m and membership_in_p on finite polygons") {
  const auto p = poly({{0, q(3)}, {1, q(1)}, {3, q(0)}});
  auto v = membership_in_m(p);
  CHECK(v.provenance == Provenance::Exact);
  CHECK(v.member == false);
  v = membership_in_m(poly({{0, q(2)}}));
  CHECK(v.member == true);
  v = membership_in_p(poly({{0, q(2)}}));
  CHECK(v.member == true);
  CHECK(v.kind == VerdictKind::DivergenceWitnessed);
  CHECK(membership_in_p(p).member == false);
  CHECK(membership_in_m(poly({{1, q(2)}, {2, q(1, 2)}})).member == true);
}

TEST_CASE("membership on truncated polygons") {
  const ConvexProfile t({{1, q(3)}, {2, q(1)}, {3, q(1, 2)}}, PolygonTail::Truncated, 5);
  const auto vp = membership_in_p(t);
  CHECK(vp.kind == VerdictKind::Inconclusive);
  CHECK_FALSE(vp.member.has_value());
  const auto vm = membership_in_m(t);
  CHECK(vm.provenance == Provenance::Empirical);
  CHECK_FALSE(vm.member.has_value());
  // A truncated polygon reaching 0 is fully known.
  const ConvexProfile z({{1, q(3)}, {2, q(0)}}, PolygonTail::Truncated, 4);
  CHECK(membership_in_p(z).member == false);
  CHECK(membership_in_m(z).provenance == Provenance::Exact);
}

TEST_CASE("classify on known polygons") {
  const auto p = poly({{0, q(3)}, {1, q(1)}, {3, q(0)}});
  for (const Rational& l : {q(0), q(1, 3), q(1)}) {
    const auto r = classify(p, StratumIndex(l), 0);
    CHECK(r.verdict.provenance == Provenance::Exact);
    CHECK(r.verdict.member == false);
  }
  const auto r = classify(poly({{0, q(1)}, {2, q(0)}}), StratumIndex(q(1, 2)), 0);
  CHECK(r.verdict.member == false);
  const auto u = classify(poly({{0, q(1)}}), StratumIndex(q(1, 2)), 0);
  CHECK(u.verdict.member == true);
}

TEST_CASE("empirical verdicts need four points") {
  const ConvexProfile t({{1, q(3)}, {2, q(1)}, {3, q(1, 2)}}, PolygonTail::Truncated, 5);
  const auto r = classify(t, StratumIndex(q(1, 2)), 0);
  CHECK(r.verdict.kind == VerdictKind::Inconclusive);
  CHECK(r.verdict.provenance == Provenance::Empirical);
}

TEST_CASE("empirical verdicts on f_2") {
  const FaBuildReport rep = build_fa(FaSpec{Rational(2), 400, 0});
  const auto up = classify(rep.polygon, StratumIndex(q(3, 4)), 150);
  CHECK(up.verdict.kind == VerdictKind::DivergenceWitnessed);
  CHECK_FALSE(up.verdict.member.has_value());
  const auto down = classify(rep.polygon, StratumIndex(q(1, 4)), 150);
  CHECK(down.verdict.kind == VerdictKind::BoundedUpTo);
  // Lower brackets at 3/4 grow like 2 i^(1/2): about 20 at i = 100.
  const auto& pt = up.sequence.points[99];
  CHECK(pt.lower.lo > 19);
  CHECK(pt.lower.hi < 21);
  const auto m = membership_in_m(rep.polygon, 150);
  CHECK(m.kind == VerdictKind::DivergenceWitnessed);
  CHECK(m.provenance == Provenance::Empirical);
}

TEST_CASE("stratum_chain_witness") {
  const auto p = poly({{0, q(3)}, {1, q(1)}, {3, q(0)}});
  const auto c = stratum_chain_witness(p, StratumIndex(q(1, 4)), StratumIndex(q(3, 4)), 0);
  CHECK(c.pointwise_monotone);
  CHECK(c.consistent);
  CHECK(error_of([&] { stratum_chain_witness(p, StratumIndex(q(1, 2)), StratumIndex(q(1, 2)), 0); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("product witness") {
  const auto p = poly({{0, q(3)}, {1, q(1)}, {3, q(0)}});
  const auto g = poly({{0, q(1)}, {1, q(0)}});
  const auto w = product_witness(p, g, {q(1, 3), q(5, 7), q(2)});
  CHECK(w.additive());
  CHECK(w.checked >= 3);
}

TEST_CASE("property: brackets enclose dense samples") {
  oracle::Rng rng(31);
  for (int k = 0; k < 40; ++k) {
    const auto p = oracle::random_polygon(rng, 8);
    for (const Rational& l : {q(1, 4), q(1, 2), q(2, 3)}) {
      const auto seq = ratio_sequence(p, StratumIndex(l), 0);
      for (const auto& pt : seq.points) {
        if (!pt.next_t) continue;
        for (int j = 0; j <= 49; ++j) {
          const Rational t = *pt.next_t + (pt.t - *pt.next_t) * q(j, 49);
          const Rational v = legendre_eval(p, t).value.value();
          CHECK(compare_ratio_pair(v, t, l, pt.value, *pt.next_t, l) <= 0);
        }
      }
    }
  }
}
