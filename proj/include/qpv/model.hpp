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

#include <string>

#include "qpv/error.hpp"

namespace qpv {

/// The probabilistic theories the workbench can instantiate.
///
/// `quaternionic` is formula-only: the dimension tables and the theory
/// classifier handle it, but no propositions, states or group elements can
/// be constructed over it.
enum class ModelKind : int {
    classical = 0,
    quantum_real = 1,
    quantum_complex = 2,
    quaternionic = 3,
};

/// A theory instance: kind plus the granularity d of the top proposition.
///
/// Real-kind matrix data is stored in complex containers with exactly zero
/// imaginary parts; construction paths enforce that invariant.
struct Model {
    ModelKind kind = ModelKind::quantum_complex;
    int dim = 1;

    Model() = default;
    Model(ModelKind k, int d) : kind(k), dim(d) {
        require(d >= 1, ErrorCode::invalid_argument, "model granularity must be >= 1");
        require(k != ModelKind::quaternionic, ErrorCode::unsupported_model,
                "quaternionic models are formula-only; no instance can be built");
    }

    bool operator==(const Model& other) const {
        return kind == other.kind && dim == other.dim;
    }
};

inline bool is_quantum(ModelKind kind) {
    return kind == ModelKind::quantum_real || kind == ModelKind::quantum_complex;
}

const char* model_kind_name(ModelKind kind);
ModelKind model_kind_from_name(const std::string& name);

inline void require_same_model(const Model& a, const Model& b) {
    require(a == b, ErrorCode::model_mismatch, "operands belong to different models");
}

// Numeric conventions shared across modules.
inline constexpr double kTol = 1e-9;          // projector / probability comparisons
inline constexpr double kEigenGap = 1e-7;     // eigenvalue clustering in joint decompositions
inline constexpr double kWeightSlack = 1e-12; // classical weight slack
inline constexpr double kDenomTol = 1e-10;    // conditional-chain denominators
inline constexpr double kRankTol = 1e-8;      // informational-completeness rank threshold

} // namespace qpv
