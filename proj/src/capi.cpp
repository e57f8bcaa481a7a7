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

#include "qpv.h"

#include <cstring>
#include <new>
#include <string>

#include "qpv/composition.hpp"
#include "qpv/report.hpp"
#include "qpv/state.hpp"

namespace {

thread_local std::string g_last_error;

qpv_status status_from(qpv::ErrorCode code) {
    return static_cast<qpv_status>(static_cast<int>(code));
}

template <typename Fn>
qpv_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return QPV_OK;
    } catch (const qpv::Error& e) {
        g_last_error = e.what();
        return status_from(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return QPV_ERROR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QPV_ERROR_INTERNAL;
    }
}

qpv::ModelKind kind_from(qpv_model_kind kind) {
    switch (kind) {
        case QPV_MODEL_CLASSICAL: return qpv::ModelKind::classical;
        case QPV_MODEL_QUANTUM_REAL: return qpv::ModelKind::quantum_real;
        case QPV_MODEL_QUANTUM_COMPLEX: return qpv::ModelKind::quantum_complex;
        case QPV_MODEL_QUATERNIONIC: return qpv::ModelKind::quaternionic;
    }
    qpv::fail(qpv::ErrorCode::invalid_argument, "unknown model kind value");
}

void require_handle(const void* handle, const char* what) {
    qpv::require(handle != nullptr, qpv::ErrorCode::invalid_argument,
                 std::string("null ") + what + " handle");
}

} // namespace

struct qpv_model {
    qpv::Model value;
};

struct qpv_proposition {
    qpv::Proposition value;
};

struct qpv_state {
    qpv::State value;
};

struct qpv_report {
    qpv::Report value;
};

extern "C" {

const char* qpv_version(void) {
    return "0.1.0";
}

const char* qpv_last_error_message(void) {
    return g_last_error.c_str();
}

const char* qpv_status_name(qpv_status status) {
    if (status == QPV_OK)
        return "ok";
    return qpv::error_code_name(static_cast<qpv::ErrorCode>(static_cast<int>(status)));
}

qpv_status qpv_model_create(qpv_model_kind kind, int dim, qpv_model** out) {
    return guarded([&] {
        require_handle(out, "output");
        *out = new qpv_model{qpv::Model(kind_from(kind), dim)};
    });
}

void qpv_model_free(qpv_model* model) {
    delete model;
}

int qpv_model_dim(const qpv_model* model) {
    return model == nullptr ? 0 : model->value.dim;
}

qpv_status qpv_proposition_basis(const qpv_model* model, const int* indices, size_t count,
                                 qpv_proposition** out) {
    return guarded([&] {
        require_handle(model, "model");
        require_handle(out, "output");
        qpv::require(indices != nullptr || count == 0, qpv::ErrorCode::invalid_argument,
                     "null index array");
        std::vector<int> idx(indices, indices + count);
        *out = new qpv_proposition{qpv::Proposition::basis(model->value, idx)};
    });
}

qpv_status qpv_proposition_top(const qpv_model* model, qpv_proposition** out) {
    return guarded([&] {
        require_handle(model, "model");
        require_handle(out, "output");
        *out = new qpv_proposition{qpv::Proposition::top(model->value)};
    });
}

qpv_status qpv_proposition_absurd(const qpv_model* model, qpv_proposition** out) {
    return guarded([&] {
        require_handle(model, "model");
        require_handle(out, "output");
        *out = new qpv_proposition{qpv::Proposition::absurd(model->value)};
    });
}

qpv_status qpv_proposition_sample(const qpv_model* model, int granularity, uint64_t seed,
                                  qpv_proposition** out) {
    return guarded([&] {
        require_handle(model, "model");
        require_handle(out, "output");
        *out = new qpv_proposition{
            qpv::sample_refinement(qpv::Proposition::top(model->value), granularity, seed)};
    });
}

void qpv_proposition_free(qpv_proposition* proposition) {
    delete proposition;
}

int qpv_granularity(const qpv_proposition* proposition) {
    return proposition == nullptr ? 0 : proposition->value.granularity();
}

qpv_status qpv_partial_sum(const qpv_proposition* x, const qpv_proposition* y,
                           qpv_proposition** out) {
    return guarded([&] {
        require_handle(x, "proposition");
        require_handle(y, "proposition");
        require_handle(out, "output");
        *out = new qpv_proposition{qpv::partial_sum(x->value, y->value)};
    });
}

qpv_status qpv_are_orthogonal(const qpv_proposition* x, const qpv_proposition* y, int* out) {
    return guarded([&] {
        require_handle(x, "proposition");
        require_handle(y, "proposition");
        require_handle(out, "output");
        *out = qpv::are_orthogonal(x->value, y->value) ? 1 : 0;
    });
}

qpv_status qpv_implies(const qpv_proposition* x, const qpv_proposition* a, int* out) {
    return guarded([&] {
        require_handle(x, "proposition");
        require_handle(a, "proposition");
        require_handle(out, "output");
        *out = qpv::implies(x->value, a->value) ? 1 : 0;
    });
}

qpv_status qpv_relative_complement(const qpv_proposition* a, const qpv_proposition* x,
                                   qpv_proposition** out) {
    return guarded([&] {
        require_handle(a, "proposition");
        require_handle(x, "proposition");
        require_handle(out, "output");
        *out = new qpv_proposition{qpv::relative_complement(a->value, x->value)};
    });
}

qpv_status qpv_jointly_decidable(const qpv_proposition* x, const qpv_proposition* y, int* out) {
    return guarded([&] {
        require_handle(x, "proposition");
        require_handle(y, "proposition");
        require_handle(out, "output");
        *out = qpv::jointly_decidable(x->value, y->value) ? 1 : 0;
    });
}

qpv_status qpv_tensor_proposition(const qpv_proposition* x, const qpv_proposition* y,
                                  qpv_proposition** out) {
    return guarded([&] {
        require_handle(x, "proposition");
        require_handle(y, "proposition");
        require_handle(out, "output");
        *out = new qpv_proposition{qpv::tensor_proposition(x->value, y->value)};
    });
}

qpv_status qpv_state_random(const qpv_model* model, int pure, uint64_t seed, qpv_state** out) {
    return guarded([&] {
        require_handle(model, "model");
        require_handle(out, "output");
        *out = new qpv_state{qpv::random_state(model->value, pure != 0, seed)};
    });
}

qpv_status qpv_state_maximally_mixed(const qpv_model* model, qpv_state** out) {
    return guarded([&] {
        require_handle(model, "model");
        require_handle(out, "output");
        *out = new qpv_state{qpv::State::maximally_mixed(model->value)};
    });
}

qpv_status qpv_state_pure(const qpv_proposition* ray, qpv_state** out) {
    return guarded([&] {
        require_handle(ray, "proposition");
        require_handle(out, "output");
        *out = new qpv_state{qpv::State::pure(ray->value)};
    });
}

void qpv_state_free(qpv_state* state) {
    delete state;
}

qpv_status qpv_probability(const qpv_state* rho, const qpv_proposition* x, double* out) {
    return guarded([&] {
        require_handle(rho, "state");
        require_handle(x, "proposition");
        require_handle(out, "output");
        *out = qpv::probability(rho->value, x->value);
    });
}

qpv_status qpv_condition(const qpv_state* rho, const qpv_proposition* x, qpv_state** out) {
    return guarded([&] {
        require_handle(rho, "state");
        require_handle(x, "proposition");
        require_handle(out, "output");
        *out = new qpv_state{qpv::condition(rho->value, x->value)};
    });
}

qpv_status qpv_is_pure(const qpv_state* rho, int* out) {
    return guarded([&] {
        require_handle(rho, "state");
        require_handle(out, "output");
        *out = qpv::is_pure(rho->value) ? 1 : 0;
    });
}

qpv_status qpv_tensor_state(const qpv_state* a, const qpv_state* b, qpv_state** out) {
    return guarded([&] {
        require_handle(a, "state");
        require_handle(b, "state");
        require_handle(out, "output");
        *out = new qpv_state{qpv::tensor_state(a->value, b->value)};
    });
}

qpv_status qpv_dim_group(qpv_model_kind kind, int d, long long* out) {
    return guarded([&] {
        require_handle(out, "output");
        *out = qpv::dim_group(kind_from(kind), d);
    });
}

qpv_status qpv_state_parameter_count(qpv_model_kind kind, int d, long long* out) {
    return guarded([&] {
        require_handle(out, "output");
        *out = qpv::state_parameter_count(kind_from(kind), d);
    });
}

qpv_status qpv_dim_most_accurate(qpv_model_kind kind, int d, long long* out) {
    return guarded([&] {
        require_handle(out, "output");
        *out = qpv::dim_most_accurate(kind_from(kind), d);
    });
}

qpv_status qpv_mu_prime_symmetric(int d, long long* out) {
    return guarded([&] {
        require_handle(out, "output");
        *out = qpv::mu_prime_symmetric(d);
    });
}

qpv_status qpv_run_verify(qpv_model_kind kind, int dim, uint64_t seed, double tolerance,
                          int trials, int dmax, qpv_report** out) {
    return guarded([&] {
        require_handle(out, "output");
        qpv::VerifyOptions options;
        options.kind = kind_from(kind);
        options.dim = dim;
        options.seed = seed;
        options.tolerance = tolerance;
        options.trials = trials;
        options.dmax = dmax;
        *out = new qpv_report{qpv::run_verify(options)};
    });
}

qpv_status qpv_run_classify(int mu_max, int dmax, qpv_report** out) {
    return guarded([&] {
        require_handle(out, "output");
        *out = new qpv_report{qpv::run_classify(mu_max, dmax)};
    });
}

qpv_status qpv_run_counterexamples(qpv_report** out) {
    return guarded([&] {
        require_handle(out, "output");
        *out = new qpv_report{qpv::run_counterexamples()};
    });
}

qpv_status qpv_run_zeno(const double* eps_grid, size_t eps_count, const int* n_list,
                        size_t n_count, int dim, uint64_t seed, qpv_report** out) {
    return guarded([&] {
        require_handle(out, "output");
        qpv::require(eps_grid != nullptr && eps_count > 0, qpv::ErrorCode::invalid_argument,
                     "empty eps grid");
        qpv::require(n_list != nullptr && n_count > 0, qpv::ErrorCode::invalid_argument,
                     "empty N list");
        qpv::ZenoOptions options;
        options.eps_grid.assign(eps_grid, eps_grid + eps_count);
        options.n_list.assign(n_list, n_list + n_count);
        options.dim = dim;
        options.seed = seed;
        *out = new qpv_report{qpv::run_zeno(options)};
    });
}

qpv_status qpv_run_tomography(int dim_a, int dim_b, int trials, uint64_t seed, qpv_report** out) {
    return guarded([&] {
        require_handle(out, "output");
        *out = new qpv_report{qpv::run_tomography(dim_a, dim_b, trials, seed)};
    });
}

int qpv_report_passed(const qpv_report* report) {
    return report != nullptr && report->value.all_passed() ? 1 : 0;
}

qpv_status qpv_report_render(const qpv_report* report, const char* format, char** out) {
    return guarded([&] {
        require_handle(report, "report");
        require_handle(out, "output");
        qpv::require(format != nullptr, qpv::ErrorCode::invalid_argument, "null format");
        const std::string text = report->value.render(format);
        char* buffer = new char[text.size() + 1];
        std::memcpy(buffer, text.c_str(), text.size() + 1);
        *out = buffer;
    });
}

void qpv_report_free(qpv_report* report) {
    delete report;
}

void qpv_string_free(char* text) {
    delete[] text;
}

} // extern "C"
