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
#include "gaussval/fa_family.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "gaussval/error.hpp"

namespace gaussval {

namespace {

void require_valid_a(const Rational& a) {
  if (!(a > 1)) fail(ErrorCode::InvalidArgument, "f_a needs a > 1, got " + to_string(a));
}

Rational pow2(long k) {
  Rational r(1);
  if (k >= 0) mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(k));
  else mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-k));
  return r;
}

unsigned long bit_length(unsigned long long v) {
  unsigned long b = 0;
  while (v) {
    ++b;
    v >>= 1;
  }
  return b;
}

// Bernoulli numbers B_0..B_m (B_1 = -1/2), cached across calls.
class BernoulliTable {
 public:
  const Rational& operator[](std::size_t m) {
    std::lock_guard<std::mutex> lock(mutex_);
    extend(m);
    return values_[m];
  }

 private:
  void extend(std::size_t m) {
    if (values_.empty()) values_.push_back(Rational(1));
    while (values_.size() <= m) {
      const std::size_t n = values_.size();
      if (n >= 3 && n % 2 == 1) {
        values_.push_back(Rational(0));
        continue;
      }
      // B_n = -1/(n+1) sum_{k<n} C(n+1, k) B_k
      Rational sum(0);
      Integer binom(1);
      for (std::size_t k = 0; k < n; ++k) {
        if (values_[k] != 0) sum += binom * values_[k];
        binom = binom * static_cast<unsigned long>(n + 1 - k) / static_cast<unsigned long>(k + 1);
      }
      Rational b = -sum / static_cast<unsigned long>(n + 1);
      b.canonicalize();
      values_.push_back(std::move(b));
    }
  }

  std::mutex mutex_;
  std::vector<Rational> values_;
};

BernoulliTable& bernoulli() {
  static BernoulliTable table;
  return table;
}

constexpr int kMaxEulerMaclaurinTerms = 300;
constexpr Index kMaxReferenceCut = Index{1} << 20;

struct TailResult {
  Interval sum;
  Rational remainder;  // bound on |R_K|
};

// sum_{j >= m} j^-a by Euler-Maclaurin at cut m, stopping once the next term
// drops below `target`. nullopt when the asymptotic terms start growing first.
std::optional<TailResult> euler_maclaurin_tail(const Rational& a, Index m, const Rational& target,
                                               mpfr_prec_t work) {
  const Rational mq(m);
  const Interval m_pow = pow(mq, Rational(-a), work);  // m^-a
  Interval sum = m_pow * Interval::point(Rational(mq / (a - 1) + Rational(1, 2)), work);
  // r_k = (a)_{2k-1} / ((2k)! m^{2k-1}); T_k = B_{2k} r_k m^-a.
  Rational r = a / (2 * mq);
  Rational prev_magnitude = -1;
  for (int k = 1; k <= kMaxEulerMaclaurinTerms; ++k) {
    if (k > 1) {
      r *= (a + (2 * k - 3)) * (a + (2 * k - 2));
      r /= mq * mq * static_cast<unsigned long>((2 * k - 1) * (2 * k));
    }
    const Rational coeff = bernoulli()[static_cast<std::size_t>(2 * k)] * r;
    const Interval term = Interval::point(coeff, work) * m_pow;
    const Rational magnitude = std::max(Rational(abs(term.lower())), Rational(abs(term.upper())));
    if (magnitude < target) return TailResult{std::move(sum), magnitude};
    if (prev_magnitude >= 0 && magnitude >= prev_magnitude) return std::nullopt;
    prev_magnitude = magnitude;
    sum += term;
  }
  return std::nullopt;
}

}  // namespace

Interval reference_fa(const Rational& a, Index i, unsigned long precision) {
  require_valid_a(a);
  if (i < 1) fail(ErrorCode::InvalidArgument, "F_a(i) needs i >= 1");
  if (precision < 1) fail(ErrorCode::InvalidArgument, "precision must be positive");
  const Rational target = pow2(-static_cast<long>(precision));
  const auto work = static_cast<mpfr_prec_t>(precision + 64 + bit_length(static_cast<unsigned long long>(kMaxReferenceCut)));
  Rational achieved = -1;
  for (Index m = std::max<Index>(i, 8); m <= kMaxReferenceCut; m *= 2) {
    auto tail = euler_maclaurin_tail(a, m, target / 4, work);
    if (!tail) continue;
    Interval total = tail->sum;
    for (Index j = i; j < m; ++j) total += pow(Rational(j), Rational(-a), work);
    total += Interval::hull(-tail->remainder, tail->remainder, work);
    achieved = total.width();
    if (achieved < target) return total;
  }
  fail(ErrorCode::Precision, "reference enclosure of F_a(" + std::to_string(i) + ") did not reach 2^-" +
                                 std::to_string(precision) +
                                 (achieved >= 0 ? "; achieved width " + to_string(round_up_dyadic(achieved, 16))
                                                : std::string("; Euler-Maclaurin cap reached")));
}

FaTolerance fa_tolerance(const Rational& a, Index i) {
  require_valid_a(a);
  if (i < 1) fail(ErrorCode::InvalidArgument, "tolerance index must be >= 1");
  constexpr mpfr_prec_t kBits = 128;
  const Interval here = pow(Rational(i), Rational(-a), kBits);
  const Interval next = pow(Rational(i + 1), Rational(-a), kBits);
  const Rational gap = (here.lower() - next.upper()) / 4;
  if (!(gap > 0)) fail(ErrorCode::Precision, "convexity gap not resolved at index " + std::to_string(i));
  return {exp_neg_lower(static_cast<unsigned long>(i)), round_down_dyadic(gap, 64)};
}

namespace {

unsigned long precision_for(const Rational& a, Index n, const std::vector<FaTolerance>& tolerances) {
  long worst = 0;
  for (const FaTolerance& t : tolerances) worst = std::max(worst, 1 - floor_log2(t.epsilon()));
  // zeta(a) < 1 + 1/(a-1), plus rounding accumulated over n terms.
  const Integer magnitude = ceil(Rational(1 + 1 / (a - 1)));
  return static_cast<unsigned long>(worst) + 32 + bit_length(static_cast<unsigned long long>(n + 1)) +
         mpz_sizeinbase(magnitude.get_mpz_t(), 2);
}

std::vector<FaTolerance> tolerances_up_to(const Rational& a, Index n) {
  std::vector<FaTolerance> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Index i = 1; i <= n; ++i) out.push_back(fa_tolerance(a, i));
  return out;
}

}  // namespace

unsigned long recommended_precision(const Rational& a, Index n) {
  require_valid_a(a);
  if (n < 1) fail(ErrorCode::InvalidArgument, "truncation must be >= 1");
  return precision_for(a, n, tolerances_up_to(a, n));
}

Index truncation_for_horizon(const Rational& a, Index horizon) {
  require_valid_a(a);
  if (horizon < 1) fail(ErrorCode::InvalidArgument, "horizon must be >= 1");
  const Integer n = ceil(Rational(a / (a - 1) * horizon)) + 2;
  if (!n.fits_slong_p()) fail(ErrorCode::InvalidArgument, "horizon too large");
  return std::max<Index>(n.get_si(), horizon + 2);
}

const Rational& FaBuildReport::q(Index i) const {
  if (i < 1 || i > n) fail(ErrorCode::InvalidArgument, "index " + std::to_string(i) + " outside 1..N");
  return profile.entries()[static_cast<std::size_t>(i - 1)].val.value();
}

const Rational& FaBuildReport::slope(Index i) const {
  if (i < 1 || i >= n) fail(ErrorCode::InvalidArgument, "slope index " + std::to_string(i) + " outside 1..N-1");
  return slopes[static_cast<std::size_t>(i - 1)];
}

namespace {

// Enclosure of zeta(a) = F_a(1). zeta is decreasing on (1, inf), so a
// non-dyadic exponent is bracketed by its two roundings.
Interval zeta_enclosure(const Rational& a, mpfr_prec_t work) {
  Interval z(work);
  if (a.get_den() == 1 && a.get_num().fits_ulong_p()) {
    const unsigned long n = a.get_num().get_ui();
    mpfr_zeta_ui(z.lo().get(), n, MPFR_RNDD);
    mpfr_zeta_ui(z.hi().get(), n, MPFR_RNDU);
    return z;
  }
  const Interval ea = Interval::point(a, work + 32);
  mpfr_zeta(z.lo().get(), ea.hi().get(), MPFR_RNDD);
  mpfr_zeta(z.hi().get(), ea.lo().get(), MPFR_RNDU);
  return z;
}

}  // namespace

FaBuildReport build_fa(const FaSpec& spec) {
  require_valid_a(spec.a);
  if (spec.n < 2) fail(ErrorCode::InvalidArgument, "f_a truncation must be >= 2");
  const Rational& a = spec.a;
  const Index n = spec.n;

  std::vector<FaTolerance> tolerances = tolerances_up_to(a, n);
  const unsigned long precision = spec.precision != 0 ? spec.precision : precision_for(a, n, tolerances);
  const auto work = static_cast<mpfr_prec_t>(precision);

  // Exponent enclosure for the terms j^-a.
  const Interval neg_a = Interval::point(Rational(-a), work + 32);

  std::vector<ProfileEntry> entries;
  entries.reserve(static_cast<std::size_t>(n));
  std::vector<Rational> error_bounds;
  error_bounds.reserve(static_cast<std::size_t>(n));

  // F(1) = zeta(a); F(i + 1) = F(i) - i^-a.
  Interval value = zeta_enclosure(a, work);
  Interval term(work);
  BigFloat scaled(work);
  for (Index i = 1; i <= n; ++i) {
    const Rational eps = tolerances[static_cast<std::size_t>(i - 1)].epsilon();
    // Grid 2^-k with 2^-k <= eps / 8.
    const long k = 3 - floor_log2(eps);
    mpfr_mul_2si(scaled.get(), value.lo().get(), k, MPFR_RNDN);  // exact
    Integer z;
    mpfr_get_z(z.get_mpz_t(), scaled.get(), MPFR_RNDN);
    Rational q(z);
    if (k >= 0) mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(k));
    else mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(-k));

    const Rational lo = value.lower();
    const Rational hi = value.upper();
    const Rational err = std::max(Rational(hi - q), Rational(q - lo));
    Rational bound = round_up_dyadic(err, 64);
    if (!(bound < eps) || !(q > 0))
      fail(ErrorCode::Precision, "working precision " + std::to_string(precision) +
                                     " bits insufficient for the rounding tolerance at index " + std::to_string(i));
    entries.push_back({i, ExtRat(q)});
    error_bounds.push_back(std::move(bound));

    if (i < n) {
      mpfr_ui_pow(term.lo().get(), static_cast<unsigned long>(i), neg_a.lo().get(), MPFR_RNDD);
      mpfr_ui_pow(term.hi().get(), static_cast<unsigned long>(i), neg_a.hi().get(), MPFR_RNDU);
      value -= term;
    }
  }

  CoefficientProfile profile = CoefficientProfile::truncated(std::move(entries), n);
  std::vector<Rational> slopes;
  slopes.reserve(static_cast<std::size_t>(n - 1));
  for (std::size_t k = 0; k + 1 < profile.entries().size(); ++k)
    slopes.push_back(profile.entries()[k].val.value() - profile.entries()[k + 1].val.value());

  ConvexProfile polygon = newton_polygon(profile);
  if (polygon.nodes().size() != static_cast<std::size_t>(n))
    fail(ErrorCode::Precision, "rounded profile lost a node; convexity cap violated");

  const Rational floor = polygon.certification_floor();
  Index horizon = 0;
  while (horizon + 1 < n && slopes[static_cast<std::size_t>(horizon)] >= floor) ++horizon;

  HypothesisCertificate hypothesis{
      "s_i (i + 1) -> 0 as i -> inf",
      "|s_i - i^-a| < 2 e^-i gives s_i (i + 1) < (i^-a + 2 e^-i)(i + 1), which tends to 0 because a > 1"};

  return FaBuildReport{a,
                       n,
                       precision,
                       std::move(profile),
                       std::move(error_bounds),
                       std::move(tolerances),
                       std::move(slopes),
                       std::move(polygon),
                       horizon,
                       std::move(hypothesis)};
}

namespace {

mpfr_prec_t check_precision(const FaBuildReport& report) {
  return static_cast<mpfr_prec_t>(report.precision + 64);
}

}  // namespace

bool check_slope_estimate(const FaBuildReport& report, Index i) {
  const Rational& s = report.slope(i);
  const Interval target = pow(Rational(i), Rational(-report.a), check_precision(report));
  const Rational deviation = std::max(Rational(s - target.lower()), Rational(target.upper() - s));
  return deviation < 2 * report.tolerances[static_cast<std::size_t>(i - 1)].exp_proxy;
}

bool check_value_sandwich(const FaBuildReport& report, Index i) {
  if (i < 1 || i > report.n) fail(ErrorCode::InvalidArgument, "index " + std::to_string(i) + " out of range");
  const Rational& q = report.q(i);
  const Rational& e = report.tolerances[static_cast<std::size_t>(i - 1)].exp_proxy;
  const mpfr_prec_t prec = check_precision(report);
  const Rational a1 = report.a - 1;
  const Rational lower = pow(Rational(i), Rational(-a1), prec).upper() / a1 - e;
  if (!(lower < q)) return false;
  if (i == 1) return true;
  const Rational upper = pow(Rational(i - 1), Rational(-a1), prec).lower() / a1 + e;
  return q < upper;
}

bool check_rounding_certificate(const FaBuildReport& report, Index i) {
  const auto k = static_cast<std::size_t>(i - 1);
  const Rational& bound = report.error_bounds.at(k);
  const FaTolerance& tol = report.tolerances.at(k);
  return bound < tol.exp_proxy && bound < tol.convexity_cap;
}

IdentityResult identity_III_check(const FaBuildReport& report, Index i) {
  const Rational& s = report.slope(i);
  // Node identity at i, under the analytic hypothesis certificate.
  const Corollary1Result c = corollary1_check(report.polygon, static_cast<std::size_t>(i), &report.hypothesis);
  IdentityResult r;
  r.lhs = c.rhs + s * i;  // L(s_i)
  r.rhs = i * s + report.q(i);
  r.holds = c.holds && r.lhs == r.rhs;
  return r;
}

Interval explicit_lower_bound(const Rational& a, const Rational& nu, Index i, mpfr_prec_t precision) {
  require_valid_a(a);
  if (i < 1) fail(ErrorCode::InvalidArgument, "explicit bound needs i >= 1");
  const Rational e = exp_neg_upper(static_cast<unsigned long>(i));
  const Interval ii = pow(Rational(i), Rational(1 - a), precision);
  const Interval num =
      ii * Interval::point(Rational(a / (a - 1)), precision) - Interval::point(Rational((2 * i + 1) * e), precision);
  const Interval den = pow(pow(Rational(i), Rational(-a), precision) + Interval::point(Rational(2 * e), precision), nu);
  return num / den;
}

std::optional<Interval> explicit_upper_bound(const Rational& a, const Rational& nu, Index i, mpfr_prec_t precision) {
  require_valid_a(a);
  if (i < 2) return std::nullopt;
  const Rational e = exp_neg_upper(static_cast<unsigned long>(i));
  const Rational e_next = exp_neg_upper(static_cast<unsigned long>(i + 1));
  const Interval num = pow(Rational(i), Rational(1 - a), precision) +
                       pow(Rational(i - 1), Rational(1 - a), precision) * Interval::point(Rational(1 / (a - 1)), precision) +
                       Interval::point(Rational((2 * i + 1) * e), precision);
  const Interval base = pow(Rational(i + 1), Rational(-a), precision) - Interval::point(Rational(2 * e_next), precision);
  if (!base.positive()) return std::nullopt;
  return num / pow(base, nu);
}

namespace {

ThresholdVerdict analytic_verdict(const Rational& a, const Rational& nu, std::size_t horizon) {
  require_valid_a(a);
  if (nu < 0 || nu > 1) fail(ErrorCode::InvalidArgument, "threshold verdict needs 0 <= nu <= 1");
  ThresholdVerdict v;
  v.a = a;
  v.nu = nu;
  v.exponent = a * nu + 1 - a;
  v.analytic.provenance = Provenance::Analytic;
  v.analytic.horizon = horizon;
  const Index probe = std::max<Index>(2, static_cast<Index>(horizon));
  const int sign = sgn(v.exponent);
  if (sign > 0) {
    const Interval lb = explicit_lower_bound(a, nu, probe);
    v.analytic.kind = VerdictKind::DivergenceWitnessed;
    v.analytic.member = true;
    v.analytic.ratio = DoubleRange{lb.lo().to_double(MPFR_RNDD), lb.hi().to_double(MPFR_RNDU)};
    v.analytic.reason = "exponent a nu + 1 - a = " + to_string(v.exponent) +
                        " > 0: the explicit lower bound grows like a/(a-1) i^(a nu + 1 - a)";
  } else if (sign < 0) {
    v.analytic.kind = VerdictKind::BoundedUpTo;
    v.analytic.member = false;
    if (const auto ub = explicit_upper_bound(a, nu, probe))
      v.analytic.ratio = DoubleRange{ub->lo().to_double(MPFR_RNDD), ub->hi().to_double(MPFR_RNDU)};
    v.analytic.reason = "exponent a nu + 1 - a = " + to_string(v.exponent) +
                        " < 0: the explicit upper bound decays like i^(a nu + 1 - a)";
  } else {
    const Rational limit = a / (a - 1);
    v.analytic.kind = VerdictKind::Boundary;
    v.analytic.ratio = DoubleRange{limit.get_d(), limit.get_d()};
    v.analytic.reason = "nu = (a-1)/a: threshold case, both explicit bounds tend to a/(a-1); membership not assigned";
  }
  return v;
}

}  // namespace

ThresholdVerdict prop4_verdict(const FaBuildReport& report, const Rational& nu, std::size_t horizon) {
  return prop4_verdict(report.a, report.polygon, nu, horizon);
}

ThresholdVerdict prop4_verdict(const Rational& a, const ConvexProfile& polygon, const Rational& nu,
                               std::size_t horizon) {
  ThresholdVerdict v = analytic_verdict(a, nu, horizon);
  if (horizon > 0) {
    RatioSequence seq = ratio_sequence(polygon, StratumIndex(nu), horizon);
    v.empirical_verdict = empirical_verdict(seq);
    v.empirical = std::move(seq);
  }
  return v;
}

ThresholdVerdict prop4_verdict(const Rational& a, const Rational& nu, std::size_t horizon) {
  if (horizon == 0) return analytic_verdict(a, nu, 0);
  require_valid_a(a);
  const FaBuildReport report = build_fa(FaSpec{a, truncation_for_horizon(a, static_cast<Index>(horizon)), 0});
  return prop4_verdict(report, nu, horizon);
}

}  // namespace gaussval
