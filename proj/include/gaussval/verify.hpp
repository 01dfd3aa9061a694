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
#ifndef GAUSSVAL_VERIFY_HPP
#define GAUSSVAL_VERIFY_HPP

// Property suites comparing the core against the oracles and identities.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaussval/fa_family.hpp"

namespace gaussval {

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  ///< first few counterexamples

  bool ok() const { return failed == 0 && passed > 0; }
  void record(bool good, const std::string& what);
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const;
};

// Individual property checks; `count` is the number of random instances.
CheckResult check_hull_oracle(std::uint64_t seed, std::size_t count, std::size_t max_entries = 50);
CheckResult check_hull_truncated(std::uint64_t seed, std::size_t count);
CheckResult check_legendre_grid(std::uint64_t seed, std::size_t polygons, std::size_t samples);
CheckResult check_legendre_roundtrip(std::uint64_t seed, std::size_t count);
CheckResult check_product_duality(std::uint64_t seed, std::size_t pairs, std::size_t samples);
CheckResult check_sum_lower_bound(std::uint64_t seed, std::size_t pairs, std::size_t samples);
CheckResult check_corollary1(std::uint64_t seed, std::size_t count);
CheckResult check_frobenius(std::uint64_t seed, std::size_t count, std::size_t samples);
CheckResult check_monotonicity(std::uint64_t seed, std::size_t count);
CheckResult check_bracket_validity(std::uint64_t seed, std::size_t count, std::size_t samples = 50);
CheckResult check_monotone_chain(std::uint64_t seed, std::size_t count);
CheckResult check_m_decision(std::uint64_t seed, std::size_t count);
CheckResult check_ratio_additivity(std::uint64_t seed, std::size_t pairs);

/// f_a invariants on a built report: slope estimate, value sandwich,
/// rounding certificates, L(s_i) = i s_i + q_i at every certified index, strict
/// convexity, and agreement with the independent F_a enclosure for
/// i <= reference_limit.
std::vector<CheckResult> check_fa_report(const FaBuildReport& report, Index reference_limit = 200);

/// Suites: hull, legendre, corollary1, frobenius, fa, strata, all.
/// `fa_report` replaces the default builds of the fa suite.
std::vector<SuiteResult> run_suites(const std::string& suite, std::uint64_t seed,
                                    const std::optional<FaBuildReport>& fa_report = std::nullopt);

const std::vector<std::string>& suite_names();

}  // namespace gaussval

#endif  // GAUSSVAL_VERIFY_HPP
