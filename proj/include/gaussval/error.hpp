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
#ifndef GAUSSVAL_ERROR_HPP
#define GAUSSVAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gaussval {

// Numeric values are part of the C ABI (see gaussval.h).
enum class ErrorCode {
  InvalidArgument = 1,
  Parse = 2,
  ZeroElement = 3,
  UnknownRegion = 4,
  Truncation = 5,
  Precision = 6,
  Inconclusive = 7,
  Io = 8,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace gaussval

#endif  // GAUSSVAL_ERROR_HPP
