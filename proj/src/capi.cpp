/*
   Copyright 2026 the qkzpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qkzpoly/qkzpoly.h"

#include <new>
#include <string>

#include "asmcount.hpp"
#include "jsonio.hpp"
#include "loopmodel.hpp"
#include "qkzcore.hpp"
#include "verify.hpp"

struct qkz_buf {
    std::string text;
};

namespace {

thread_local std::string t_last_error;

constexpr int kDefaultSizeGuard = 8;

qkz_status status_of(qkz::ErrorCode code) {
    using qkz::ErrorCode;
    switch (code) {
    case ErrorCode::InvalidArgument: return QKZ_ERR_INVALID_ARGUMENT;
    case ErrorCode::DegenerateParameters: return QKZ_ERR_DEGENERATE_PARAMETERS;
    case ErrorCode::DivisionByZero: return QKZ_ERR_DIVISION_BY_ZERO;
    case ErrorCode::HigherOrderPole:
    case ErrorCode::NoPole: return QKZ_ERR_POLE_ORDER;
    case ErrorCode::CapMismatch:
    case ErrorCode::ExponentExceedsCap: return QKZ_ERR_CAP_MISMATCH;
    case ErrorCode::KernelDimension:
    case ErrorCode::Internal: return QKZ_ERR_INTERNAL;
    }
    return QKZ_ERR_INTERNAL;
}

qkz_status fill(qkz_buf** out, std::string text) {
    if (out == nullptr) {
        t_last_error = "null output parameter";
        return QKZ_ERR_INVALID_ARGUMENT;
    }
    *out = new (std::nothrow) qkz_buf{std::move(text)};
    if (*out == nullptr) {
        t_last_error = "out of memory";
        return QKZ_ERR_NOMEM;
    }
    return QKZ_OK;
}

template <class F>
qkz_status guarded(F&& f) {
    try {
        return f();
    } catch (const qkz::Error& e) {
        t_last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        t_last_error = "out of memory";
        return QKZ_ERR_NOMEM;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return QKZ_ERR_INTERNAL;
    } catch (...) {
        t_last_error = "unknown error";
        return QKZ_ERR_INTERNAL;
    }
}

} // namespace

extern "C" {

const char* qkz_buf_data(const qkz_buf* buf) {
    return buf ? buf->text.c_str() : nullptr;
}

size_t qkz_buf_size(const qkz_buf* buf) {
    return buf ? buf->text.size() : 0;
}

void qkz_buf_free(qkz_buf* buf) {
    delete buf;
}

const char* qkz_last_error(void) {
    return t_last_error.c_str();
}

const char* qkz_version(void) {
    return "0.1.0";
}

qkz_status qkz_ground_state(int n, const char* tau, const char* format, int allow_large,
                            qkz_buf** out) {
    return guarded([&]() -> qkz_status {
        if (n < 1) {
            t_last_error = "ground-state table needs n >= 1";
            return QKZ_ERR_INVALID_ARGUMENT;
        }
        if (n > kDefaultSizeGuard && !allow_large) {
            t_last_error = "n exceeds the default size guard (8); request the large-size override (--allow-large)";
            return QKZ_ERR_INVALID_ARGUMENT;
        }
        std::optional<qkz::Rat> tau_value;
        if (tau != nullptr && std::string(tau) != "sym")
            tau_value = qkz::parse_rat(tau);
        std::string fmt = format ? format : "json";
        qkz::ComponentTable table = qkz::psi_table(n, tau_value);
        if (fmt == "json")
            return fill(out, qkz::component_table_json(table));
        if (fmt == "pretty")
            return fill(out, qkz::component_table_pretty(table));
        t_last_error = "unknown format: " + fmt;
        return QKZ_ERR_INVALID_ARGUMENT;
    });
}

qkz_status qkz_loop_model(int n, const char* format, int allow_large, qkz_buf** out) {
    return guarded([&]() -> qkz_status {
        if (n < 1) {
            t_last_error = "loop model needs n >= 1";
            return QKZ_ERR_INVALID_ARGUMENT;
        }
        if (n > kDefaultSizeGuard && !allow_large) {
            t_last_error = "n exceeds the default size guard (8); request the large-size override (--allow-large)";
            return QKZ_ERR_INVALID_ARGUMENT;
        }
        std::string fmt = format ? format : "json";
        qkz::LoopVector xi = qkz::loop_ground_state(n);
        if (fmt == "json")
            return fill(out, qkz::loop_vector_json(xi));
        if (fmt == "pretty")
            return fill(out, qkz::loop_vector_pretty(xi));
        t_last_error = "unknown format: " + fmt;
        return QKZ_ERR_INVALID_ARGUMENT;
    });
}

qkz_status qkz_asm_table(int max_n, const char* format, qkz_buf** out) {
    return guarded([&]() -> qkz_status {
        if (max_n < 1) {
            t_last_error = "ASM table needs max_n >= 1";
            return QKZ_ERR_INVALID_ARGUMENT;
        }
        std::string fmt = format ? format : "json";
        if (fmt == "json")
            return fill(out, qkz::asm_table_json(max_n));
        if (fmt == "csv")
            return fill(out, qkz::asm_table_csv(max_n));
        if (fmt == "pretty")
            return fill(out, qkz::asm_table_pretty(max_n));
        t_last_error = "unknown format: " + fmt;
        return QKZ_ERR_INVALID_ARGUMENT;
    });
}

qkz_status qkz_inhom_component(const char* kind, const int* indices, int index_count,
                               const char* const* z, int z_count, const char* q, qkz_buf** out) {
    return guarded([&]() -> qkz_status {
        if (kind == nullptr || indices == nullptr || z == nullptr || q == nullptr) {
            t_last_error = "null argument";
            return QKZ_ERR_INVALID_ARGUMENT;
        }
        std::string kind_str(kind);
        if (kind_str != "down" && kind_str != "up") {
            t_last_error = "kind must be \"down\" or \"up\"";
            return QKZ_ERR_INVALID_ARGUMENT;
        }
        std::vector<int> idx(indices, indices + index_count);
        std::vector<qkz::ExactScalar> zs;
        zs.reserve(static_cast<std::size_t>(z_count));
        for (int i = 0; i < z_count; ++i)
            zs.emplace_back(qkz::parse_rat(z[i]));
        qkz::ExactScalar qv = qkz::parse_q_spec(q);
        qkz::ComponentIndex index(kind_str == "down" ? qkz::ComponentIndex::Kind::Down
                                                     : qkz::ComponentIndex::Kind::Up,
                                  std::move(idx), z_count);
        qkz::ExactScalar value = kind_str == "down" ? qkz::psi_inhom(index, zs, qv)
                                                    : qkz::psibar_inhom(index, zs, qv);
        return fill(out, qkz::inhom_component_json(index, zs, qv, value));
    });
}

qkz_status qkz_verify(const char* suite, const qkz_verify_options* options, const char* format,
                      qkz_buf** out) {
    return guarded([&]() -> qkz_status {
        if (suite == nullptr) {
            t_last_error = "null suite name";
            return QKZ_ERR_INVALID_ARGUMENT;
        }
        qkz::VerifyOptions opts;
        if (options != nullptr) {
            opts.seed = options->seed;
            opts.trials = options->trials;
            opts.chain_size = options->chain_size;
            opts.max_n = options->max_n;
            if (options->q != nullptr)
                opts.q_spec = options->q;
        }
        qkz::SuiteReport report = qkz::run_suite(suite, opts);
        std::string fmt = format ? format : "pretty";
        std::string text;
        if (fmt == "json")
            text = qkz::report_json(report);
        else if (fmt == "pretty")
            text = qkz::report_text(report);
        else {
            t_last_error = "unknown format: " + fmt;
            return QKZ_ERR_INVALID_ARGUMENT;
        }
        qkz_status rc = fill(out, std::move(text));
        if (rc != QKZ_OK)
            return rc;
        if (!report.all_pass()) {
            t_last_error = "verification suite reported failures";
            return QKZ_VERIFY_FAILED;
        }
        return QKZ_OK;
    });
}

} // extern "C"
