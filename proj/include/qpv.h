/*
 * Copyright 2026 qpv developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of the qpv shared library.
 *
 * Objects are opaque handles created and released here; every fallible call
 * returns a qpv_status and writes results through out-parameters. On
 * failure, qpv_last_error_message() describes the problem for the calling
 * thread.
 */

#ifndef QPV_H
#define QPV_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QPV_API __declspec(dllexport)
#else
#define QPV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qpv_status {
    QPV_OK = 0,
    QPV_ERROR_INVALID_ARGUMENT = 1,
    QPV_ERROR_MODEL_MISMATCH = 2,
    QPV_ERROR_KIND_MISMATCH = 3,
    QPV_ERROR_NOT_ORTHOGONAL = 4,
    QPV_ERROR_NOT_CONTAINED = 5,
    QPV_ERROR_BAD_GRANULARITY = 6,
    QPV_ERROR_BAD_DECOMPOSITION = 7,
    QPV_ERROR_NOT_JOINTLY_DECIDABLE = 8,
    QPV_ERROR_ZERO_PROBABILITY_CONDITION = 9,
    QPV_ERROR_ORTHOGONAL_PRIOR = 10,
    QPV_ERROR_WEIGHT_OUT_OF_RANGE = 11,
    QPV_ERROR_ZERO_STATE = 12,
    QPV_ERROR_UNSUPPORTED_MODEL = 13,
    QPV_ERROR_RANK_DEFICIENT = 14,
    QPV_ERROR_DEGENERATE_DENOMINATOR = 15,
    QPV_ERROR_REGIME_VIOLATION = 16,
    QPV_ERROR_INTERNAL = 17
} qpv_status;

typedef enum qpv_model_kind {
    QPV_MODEL_CLASSICAL = 0,
    QPV_MODEL_QUANTUM_REAL = 1,
    QPV_MODEL_QUANTUM_COMPLEX = 2,
    QPV_MODEL_QUATERNIONIC = 3
} qpv_model_kind;

typedef struct qpv_model qpv_model;
typedef struct qpv_proposition qpv_proposition;
typedef struct qpv_state qpv_state;
typedef struct qpv_report qpv_report;

QPV_API const char* qpv_version(void);

/* Thread-local message for the most recent failure. */
QPV_API const char* qpv_last_error_message(void);
QPV_API const char* qpv_status_name(qpv_status status);

/* models ------------------------------------------------------------- */

QPV_API qpv_status qpv_model_create(qpv_model_kind kind, int dim, qpv_model** out);
QPV_API void qpv_model_free(qpv_model* model);
QPV_API int qpv_model_dim(const qpv_model* model);

/* propositions -------------------------------------------------------- */

/* Span / subset of the listed computational basis indices. */
QPV_API qpv_status qpv_proposition_basis(const qpv_model* model, const int* indices, size_t count,
                                         qpv_proposition** out);
QPV_API qpv_status qpv_proposition_top(const qpv_model* model, qpv_proposition** out);
QPV_API qpv_status qpv_proposition_absurd(const qpv_model* model, qpv_proposition** out);
/* Uniform granularity-k refinement of the top proposition. */
QPV_API qpv_status qpv_proposition_sample(const qpv_model* model, int granularity, uint64_t seed,
                                          qpv_proposition** out);
QPV_API void qpv_proposition_free(qpv_proposition* proposition);

QPV_API int qpv_granularity(const qpv_proposition* proposition);
QPV_API qpv_status qpv_partial_sum(const qpv_proposition* x, const qpv_proposition* y,
                                   qpv_proposition** out);
QPV_API qpv_status qpv_are_orthogonal(const qpv_proposition* x, const qpv_proposition* y,
                                      int* out);
QPV_API qpv_status qpv_implies(const qpv_proposition* x, const qpv_proposition* a, int* out);
QPV_API qpv_status qpv_relative_complement(const qpv_proposition* a, const qpv_proposition* x,
                                           qpv_proposition** out);
QPV_API qpv_status qpv_jointly_decidable(const qpv_proposition* x, const qpv_proposition* y,
                                         int* out);
QPV_API qpv_status qpv_tensor_proposition(const qpv_proposition* x, const qpv_proposition* y,
                                          qpv_proposition** out);

/* states --------------------------------------------------------------- */

QPV_API qpv_status qpv_state_random(const qpv_model* model, int pure, uint64_t seed,
                                    qpv_state** out);
QPV_API qpv_status qpv_state_maximally_mixed(const qpv_model* model, qpv_state** out);
QPV_API qpv_status qpv_state_pure(const qpv_proposition* ray, qpv_state** out);
QPV_API void qpv_state_free(qpv_state* state);

QPV_API qpv_status qpv_probability(const qpv_state* rho, const qpv_proposition* x, double* out);
QPV_API qpv_status qpv_condition(const qpv_state* rho, const qpv_proposition* x, qpv_state** out);
QPV_API qpv_status qpv_is_pure(const qpv_state* rho, int* out);
QPV_API qpv_status qpv_tensor_state(const qpv_state* a, const qpv_state* b, qpv_state** out);

/* dimension formulas ---------------------------------------------------- */

QPV_API qpv_status qpv_dim_group(qpv_model_kind kind, int d, long long* out);
QPV_API qpv_status qpv_state_parameter_count(qpv_model_kind kind, int d, long long* out);
QPV_API qpv_status qpv_dim_most_accurate(qpv_model_kind kind, int d, long long* out);
QPV_API qpv_status qpv_mu_prime_symmetric(int d, long long* out);

/* verification reports --------------------------------------------------- */

QPV_API qpv_status qpv_run_verify(qpv_model_kind kind, int dim, uint64_t seed, double tolerance,
                                  int trials, int dmax, qpv_report** out);
QPV_API qpv_status qpv_run_classify(int mu_max, int dmax, qpv_report** out);
QPV_API qpv_status qpv_run_counterexamples(qpv_report** out);
QPV_API qpv_status qpv_run_zeno(const double* eps_grid, size_t eps_count, const int* n_list,
                                size_t n_count, int dim, uint64_t seed, qpv_report** out);
QPV_API qpv_status qpv_run_tomography(int dim_a, int dim_b, int trials, uint64_t seed,
                                      qpv_report** out);

/* 1 when every check passed, 0 otherwise. */
QPV_API int qpv_report_passed(const qpv_report* report);
/* format: "json" or "md"; free the text with qpv_string_free. */
QPV_API qpv_status qpv_report_render(const qpv_report* report, const char* format, char** out);
QPV_API void qpv_report_free(qpv_report* report);
QPV_API void qpv_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* QPV_H */
