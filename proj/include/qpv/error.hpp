// Copyright 2026 qpv developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qpv {

/// Failure categories shared by the C++ core and the C API.
/// Values are stable; the C header mirrors them one-to-one.
enum class ErrorCode : int {
    invalid_argument = 1,
    model_mismatch = 2,
    kind_mismatch = 3,
    not_orthogonal = 4,
    not_contained = 5,
    bad_granularity = 6,
    bad_decomposition = 7,
    not_jointly_decidable = 8,
    zero_probability_condition = 9,
    orthogonal_prior = 10,
    weight_out_of_range = 11,
    zero_state = 12,
    unsupported_model = 13,
    rank_deficient = 14,
    degenerate_denominator = 15,
    regime_violation = 16,
    internal = 17,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
    if (!condition)
        fail(code, message);
}

const char* error_code_name(ErrorCode code);

} // namespace qpv
