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
#ifndef GAUSSVAL_TESTS_SUPPORT_HPP
#define GAUSSVAL_TESTS_SUPPORT_HPP

#include <optional>

#include "gaussval/error.hpp"
#include "gaussval/polygon.hpp"
#include "gaussval/profile.hpp"

namespace gaussval::test {

template <class F>
std::optional<ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline ConvexProfile poly(std::initializer_list<std::pair<Index, Rational>> nodes) {
  std::vector<PolygonNode> v;
  for (const auto& [x, y] : nodes) v.push_back({x, y});
  return ConvexProfile(std::move(v), PolygonTail::Constant);
}

inline CoefficientProfile finite(std::initializer_list<std::pair<Index, Rational>> entries) {
  std::vector<ProfileEntry> v;
  for (const auto& [i, y] : entries) v.push_back({i, ExtRat(y)});
  return CoefficientProfile(std::move(v));
}

}  // namespace gaussval::test

#endif  // GAUSSVAL_TESTS_SUPPORT_HPP
