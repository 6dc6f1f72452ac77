#include "qadc/qadc.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include "serialization.hpp"

using namespace qadc;

struct qadc_quantizer {
    Quantizer q;
};

struct qadc_code {
    AssociatedCode c;
};

namespace {

thread_local std::string g_last_error;

qadc_status to_status(const Error& e) {
    switch (e.code()) {
        case ErrorCode::InvalidArgument: return QADC_ERR_INVALID_ARGUMENT;
        case ErrorCode::ZeroPolynomial: return QADC_ERR_ZERO_POLYNOMIAL;
        case ErrorCode::InfeasibleSpec: return QADC_ERR_INFEASIBLE_SPEC;
        case ErrorCode::LengthMismatch: return QADC_ERR_LENGTH_MISMATCH;
        case ErrorCode::OddTransitionCount: return QADC_ERR_ODD_TRANSITION_COUNT;
        case ErrorCode::UnsortedInput: return QADC_ERR_UNSORTED_INPUT;
        case ErrorCode::TooLarge: return QADC_ERR_TOO_LARGE;
        case ErrorCode::NoFeasibleInput: return QADC_ERR_NO_FEASIBLE_INPUT;
        case ErrorCode::NonStochasticMatrix: return QADC_ERR_NON_STOCHASTIC;
        case ErrorCode::EmptySearchSpace: return QADC_ERR_EMPTY_SEARCH_SPACE;
        case ErrorCode::ParseError: return QADC_ERR_PARSE;
        case ErrorCode::Internal: return QADC_ERR_INTERNAL;
    }
    return QADC_ERR_INTERNAL;
}

template <typename F>
qadc_status guarded(F&& fn) {
    try {
        fn();
        g_last_error.clear();
        return QADC_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return to_status(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QADC_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

qadc_status require(bool cond, const char* what) {
    if (cond) return QADC_OK;
    g_last_error = what;
    return QADC_ERR_INVALID_ARGUMENT;
}

} // namespace

extern "C" {

const char* qadc_status_name(qadc_status s) {
    switch (s) {
        case QADC_OK: return "ok";
        case QADC_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case QADC_ERR_ZERO_POLYNOMIAL: return "zero_polynomial";
        case QADC_ERR_INFEASIBLE_SPEC: return "infeasible_spec";
        case QADC_ERR_LENGTH_MISMATCH: return "length_mismatch";
        case QADC_ERR_ODD_TRANSITION_COUNT: return "odd_transition_count";
        case QADC_ERR_UNSORTED_INPUT: return "unsorted_input";
        case QADC_ERR_TOO_LARGE: return "too_large";
        case QADC_ERR_NO_FEASIBLE_INPUT: return "no_feasible_input";
        case QADC_ERR_NON_STOCHASTIC: return "non_stochastic_matrix";
        case QADC_ERR_EMPTY_SEARCH_SPACE: return "empty_search_space";
        case QADC_ERR_PARSE: return "parse_error";
        case QADC_ERR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* qadc_last_error(void) { return g_last_error.c_str(); }

void qadc_string_free(char* s) { std::free(s); }

qadc_status qadc_quantizer_from_json(const char* json, qadc_quantizer** out) {
    if (auto rc = require(json && out, "null argument")) return rc;
    return guarded([&] { *out = new qadc_quantizer{quantizer_from_json(json)}; });
}

qadc_status qadc_quantizer_to_json(const qadc_quantizer* q, char** json_out) {
    if (auto rc = require(q && json_out, "null argument")) return rc;
    return guarded([&] { *json_out = dup_string(quantizer_to_json(q->q, 2)); });
}

void qadc_quantizer_free(qadc_quantizer* q) { delete q; }

qadc_status qadc_quantizer_info(const qadc_quantizer* q, int* n_q, int* ell, int* delta) {
    if (auto rc = require(q != nullptr, "null quantizer")) return rc;
    if (n_q) *n_q = q->q.n_q;
    if (ell) *ell = q->q.ell;
    if (delta) *delta = q->q.delta;
    return QADC_OK;
}

qadc_status qadc_quantizer_quantize(const qadc_quantizer* q, double y, int* out_levels) {
    if (auto rc = require(q && out_levels, "null argument")) return rc;
    return guarded([&] {
        const Codeword w = quantize(q->q, y);
        std::memcpy(out_levels, w.data(), w.size() * sizeof(int));
    });
}

qadc_status qadc_quantizer_transition_points(const qadc_quantizer* q, double tol, double* out,
                                             int capacity, int* out_len, int* repeated_roots) {
    if (auto rc = require(q && out_len, "null argument")) return rc;
    return guarded([&] {
        const TransitionPoints tp = transition_points(q->q, tol > 0 ? tol : 1e-7);
        *out_len = static_cast<int>(tp.roots.size());
        if (repeated_roots) *repeated_roots = tp.repeated ? 1 : 0;
        if (out) {
            if (capacity < static_cast<int>(tp.roots.size()))
                fail(ErrorCode::LengthMismatch, "transition point buffer too small");
            std::memcpy(out, tp.roots.data(), tp.roots.size() * sizeof(double));
        }
    });
}

qadc_status qadc_quantizer_code(const qadc_quantizer* q, qadc_code** out) {
    if (auto rc = require(q && out, "null argument")) return rc;
    return guarded([&] { *out = new qadc_code{associated_code(q->q)}; });
}

qadc_status qadc_code_from_json(const char* json, qadc_code** out) {
    if (auto rc = require(json && out, "null argument")) return rc;
    return guarded([&] { *out = new qadc_code{code_from_json(json)}; });
}

qadc_status qadc_code_to_json(const qadc_code* c, char** json_out) {
    if (auto rc = require(c && json_out, "null argument")) return rc;
    return guarded([&] { *json_out = dup_string(code_to_json(c->c)); });
}

void qadc_code_free(qadc_code* c) { delete c; }

qadc_status qadc_code_length(const qadc_code* c, int* num_words, int* width) {
    if (auto rc = require(c != nullptr, "null code")) return rc;
    if (num_words) *num_words = static_cast<int>(c->c.codewords.size());
    if (width) *width = c->c.width();
    return QADC_OK;
}

qadc_status qadc_code_word(const qadc_code* c, int index, int* out) {
    if (auto rc = require(c && out, "null argument")) return rc;
    if (auto rc = require(index >= 0 && index < static_cast<int>(c->c.codewords.size()),
                          "codeword index out of range"))
        return rc;
    const Codeword& w = c->c.codewords[static_cast<size_t>(index)];
    std::memcpy(out, w.data(), w.size() * sizeof(int));
    return QADC_OK;
}

qadc_status qadc_code_size(const qadc_code* c, int* distinct) {
    if (auto rc = require(c && distinct, "null argument")) return rc;
    return guarded([&] { *distinct = code_size(c->c); });
}

qadc_status qadc_code_transition_counts(const qadc_code* c, int* out) {
    if (auto rc = require(c && out, "null argument")) return rc;
    return guarded([&] {
        const std::vector<int> k = transition_counts(c->c);
        std::memcpy(out, k.data(), k.size() * sizeof(int));
    });
}

qadc_status qadc_code_repeated_roots(const qadc_code* c, int* flag) {
    if (auto rc = require(c && flag, "null argument")) return rc;
    *flag = c->c.repeated_roots ? 1 : 0;
    return QADC_OK;
}

qadc_status qadc_code_validate(const qadc_code* c, int ell, int delta, int n_q,
                               char** report_json) {
    if (auto rc = require(c && report_json, "null argument")) return rc;
    return guarded([&] {
        *report_json = dup_string(report_to_json(validate_properties(c->c, ell, delta, n_q), 2));
    });
}

qadc_status qadc_reflected_gray(int n, qadc_code** out) {
    if (auto rc = require(out != nullptr, "null argument")) return rc;
    return guarded([&] { *out = new qadc_code{reflected_gray(n)}; });
}

qadc_status qadc_balanced_gray(int n, qadc_code** out) {
    if (auto rc = require(out != nullptr, "null argument")) return rc;
    return guarded([&] { *out = new qadc_code{balanced_gray(n)}; });
}

qadc_status qadc_construct_code(int n_q, const int* kappas, int ell, qadc_code** out) {
    if (auto rc = require(kappas && out, "null argument")) return rc;
    return guarded([&] {
        TransitionSpec spec;
        spec.n_q = n_q;
        spec.ell = ell;
        spec.kappas.assign(kappas, kappas + (n_q > 0 ? n_q : 0));
        *out = new qadc_code{construct_code(spec)};
    });
}

qadc_status qadc_synthesize_quantizer(const qadc_code* c, const double* roots, int n_roots,
                                      qadc_quantizer** out) {
    if (auto rc = require(c && out && (roots || n_roots == 0), "null argument")) return rc;
    return guarded([&] {
        const RootList r(roots, roots + n_roots);
        *out = new qadc_quantizer{synthesize_quantizer(c->c, r)};
    });
}

qadc_status qadc_synthesize_quantizer_theorem1(const double* thresholds, int n,
                                               qadc_quantizer** out) {
    if (auto rc = require(thresholds && out, "null argument")) return rc;
    return guarded([&] {
        const RootList t(thresholds, thresholds + n);
        *out = new qadc_quantizer{synthesize_quantizer_theorem1(t)};
    });
}

qadc_status qadc_search_max_code(int n_q, int ell, int delta, int* gamma, qadc_code** witness) {
    if (auto rc = require(gamma != nullptr, "null argument")) return rc;
    return guarded([&] {
        MaxCodeResult r = search_max_code(n_q, ell, delta);
        *gamma = r.gamma;
        if (witness) *witness = new qadc_code{std::move(r.witness)};
    });
}

qadc_status qadc_gamma_bounds(int n_q, int ell, int delta, int* lower, int* upper) {
    if (auto rc = require(lower && upper, "null argument")) return rc;
    return guarded([&] {
        const auto [lo, hi] = gamma_bounds(n_q, ell, delta);
        *lower = lo;
        *upper = hi;
    });
}

qadc_status qadc_high_snr_capacity(int n_q, int ell, int delta, double* bits_lower,
                                   double* bits_upper) {
    if (auto rc = require(bits_lower && bits_upper, "null argument")) return rc;
    return guarded([&] {
        const auto [lo, hi] = high_snr_capacity(n_q, ell, delta);
        *bits_lower = lo;
        *bits_upper = hi;
    });
}

qadc_status qadc_capacity_point(const char* config_json, double snr_db, char** result_json) {
    if (auto rc = require(config_json && result_json, "null argument")) return rc;
    return guarded([&] {
        ExperimentConfig cfg = config_from_json(config_json);
        const ChannelSpec spec = ChannelSpec::from_snr_db(snr_db, cfg.h);
        const auto [glo, ghi] = gamma_bounds(cfg.n_q, cfg.ell, cfg.delta);
        const double sq = std::sqrt(spec.power);
        const InputGrid grid = InputGrid::symmetric(cfg.curve.input_step_scale * sq,
                                                    cfg.curve.input_range_scale * sq);
        CapacityResult res;
        if (ghi >= 2) res = optimize_thresholds(spec, ghi, grid, cfg.curve.search);
        *result_json = dup_string(capacity_result_to_json(res, 2));
    });
}

qadc_status qadc_rate_curve(const char* config_json, char** csv_out) {
    if (auto rc = require(config_json && csv_out, "null argument")) return rc;
    return guarded([&] {
        const ExperimentConfig cfg = config_from_json(config_json);
        const auto points = rate_curve(cfg.snr_db, cfg.h, cfg.n_q, cfg.ell, cfg.delta, cfg.curve);
        *csv_out = dup_string(rate_table_csv(points));
    });
}

} // extern "C"
