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

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpv/model.hpp"

namespace qpv {

/// One verification record. `anchor` names the claim being checked (or
/// "plumbing" for infrastructure checks).
struct CheckRecord {
    std::string name;
    std::string anchor;
    nlohmann::json inputs;
    nlohmann::json expected;
    nlohmann::json observed;
    std::string status; // pass | fail | skipped
};

/// Machine-readable verification report. JSON rendering is canonical: keys
/// sorted, floats rounded to 12 significant digits, checks ordered by name.
class Report {
  public:
    Report(std::string command, nlohmann::json config);

    void add(CheckRecord record);
    void add_check(const std::string& name, const std::string& anchor,
                   const nlohmann::json& inputs, const nlohmann::json& expected,
                   const nlohmann::json& observed, bool ok);
    void add_skipped(const std::string& name, const std::string& anchor,
                     const nlohmann::json& inputs, const std::string& why);

    bool all_passed() const;
    const std::vector<CheckRecord>& checks() const { return checks_; }
    const std::string& command() const { return command_; }

    nlohmann::json to_json() const;
    std::string render_json() const;
    std::string render_markdown() const;
    std::string render(const std::string& format) const;

  private:
    std::string command_;
    nlohmann::json config_;
    std::vector<CheckRecord> checks_;
};

/// Round through 12 significant digits so serialized reports are bit-stable.
nlohmann::json rounded(double value);

struct VerifyOptions {
    ModelKind kind = ModelKind::quantum_complex;
    int dim = 4;
    std::uint64_t seed = 42;
    double tolerance = kTol;
    int trials = 1000;
    int dmax = 8;
};

/// Randomized invariant suites for propositions, states and composition.
Report run_verify(const VerifyOptions& options);

/// Admissibility table for abstract theory candidates plus the known-theory
/// dimension rows.
Report run_classify(int mu_max, int dmax);

/// Known-theory rows only (the composition/reductionism counterexamples).
Report run_counterexamples();

struct ZenoOptions {
    std::vector<double> eps_grid = {1e-4, 4e-4, 1e-2};
    std::vector<int> n_list = {1, 2, 4, 9, 16};
    int dim = 2;
    std::uint64_t seed = 42;
};

/// Continuity, scaling-law, measurement-limit and preparation-tolerance
/// numerics.
Report run_zeno(const ZenoOptions& options);

/// Joint-table reconstruction round trip on random composite states.
Report run_tomography(int dim_a, int dim_b, int trials, std::uint64_t seed);

} // namespace qpv
