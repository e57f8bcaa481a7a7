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

#include "qpv/model.hpp"

namespace qpv {

const char* model_kind_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::classical: return "classical";
        case ModelKind::quantum_real: return "quantum-real";
        case ModelKind::quantum_complex: return "quantum-complex";
        case ModelKind::quaternionic: return "quaternionic";
    }
    return "unknown";
}

ModelKind model_kind_from_name(const std::string& name) {
    if (name == "classical")
        return ModelKind::classical;
    if (name == "quantum-real")
        return ModelKind::quantum_real;
    if (name == "quantum-complex")
        return ModelKind::quantum_complex;
    if (name == "quaternionic")
        return ModelKind::quaternionic;
    fail(ErrorCode::invalid_argument, "unknown model kind '" + name + "'");
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_argument: return "invalid_argument";
        case ErrorCode::model_mismatch: return "model_mismatch";
        case ErrorCode::kind_mismatch: return "kind_mismatch";
        case ErrorCode::not_orthogonal: return "not_orthogonal";
        case ErrorCode::not_contained: return "not_contained";
        case ErrorCode::bad_granularity: return "bad_granularity";
        case ErrorCode::bad_decomposition: return "bad_decomposition";
        case ErrorCode::not_jointly_decidable: return "not_jointly_decidable";
        case ErrorCode::zero_probability_condition: return "zero_probability_condition";
        case ErrorCode::orthogonal_prior: return "orthogonal_prior";
        case ErrorCode::weight_out_of_range: return "weight_out_of_range";
        case ErrorCode::zero_state: return "zero_state";
        case ErrorCode::unsupported_model: return "unsupported_model";
        case ErrorCode::rank_deficient: return "rank_deficient";
        case ErrorCode::degenerate_denominator: return "degenerate_denominator";
        case ErrorCode::regime_violation: return "regime_violation";
        case ErrorCode::internal: return "internal";
    }
    return "unknown";
}

} // namespace qpv
