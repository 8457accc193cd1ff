// Copyright 2026 The lqcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lqc/lqc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "lqc/commands.hpp"
#include "lqc/error.hpp"

struct lqc_circuit {
    lqc::CircuitDocument doc;
};

struct lqc_state {
    lqc::LorentzState state;
};

namespace {

thread_local std::string g_last_error;

lqc_status status_of(lqc::ErrorCode code) {
    switch (code) {
    case lqc::ErrorCode::InvalidArgument:
        return LQC_ERR_INVALID_ARGUMENT;
    case lqc::ErrorCode::Parse:
        return LQC_ERR_PARSE;
    case lqc::ErrorCode::SizeLimit:
        return LQC_ERR_SIZE_LIMIT;
    case lqc::ErrorCode::Unobservable:
        return LQC_ERR_UNOBSERVABLE;
    case lqc::ErrorCode::AlgorithmFailure:
        return LQC_ERR_ALGORITHM;
    }
    return LQC_ERR_INTERNAL;
}

template <class F> lqc_status guarded(F &&body) {
    try {
        body();
        g_last_error.clear();
        return LQC_OK;
    } catch (const lqc::Error &e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc &) {
        g_last_error = "out of memory";
        return LQC_ERR_INTERNAL;
    } catch (const std::exception &e) {
        g_last_error = std::string("internal error: ") + e.what();
        return LQC_ERR_INTERNAL;
    }
}

void need(const void *p, const char *what) {
    lqc::require(p != nullptr, std::string(what) + " must not be NULL");
}

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char *lqc_version(void) { return "1.0.0"; }

const char *lqc_status_name(lqc_status status) {
    switch (status) {
    case LQC_OK:
        return "ok";
    case LQC_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case LQC_ERR_PARSE:
        return "parse error";
    case LQC_ERR_SIZE_LIMIT:
        return "size limit";
    case LQC_ERR_UNOBSERVABLE:
        return "unobservable state";
    case LQC_ERR_ALGORITHM:
        return "algorithm failure";
    case LQC_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char *lqc_last_error(void) { return g_last_error.c_str(); }

void lqc_string_free(char *text) { std::free(text); }

lqc_status lqc_circuit_parse(const char *json, lqc_circuit **out) {
    return guarded([&] {
        need(json, "json");
        need(out, "out");
        *out = nullptr;
        *out = new lqc_circuit{lqc::parse_circuit_text(json)};
    });
}

void lqc_circuit_free(lqc_circuit *circuit) { delete circuit; }

size_t lqc_circuit_wire_count(const lqc_circuit *circuit) {
    return circuit ? circuit->doc.circuit.layout().size() : 0;
}

size_t lqc_circuit_gate_count(const lqc_circuit *circuit) {
    return circuit ? circuit->doc.circuit.gates().size() : 0;
}

lqc_status lqc_circuit_initial_state(const lqc_circuit *circuit, lqc_state **out) {
    return guarded([&] {
        need(circuit, "circuit");
        need(out, "out");
        *out = new lqc_state{circuit->doc.initial};
    });
}

lqc_status lqc_state_basis(const lqc_circuit *circuit, const char *bits, lqc_state **out) {
    return guarded([&] {
        need(circuit, "circuit");
        need(bits, "bits");
        need(out, "out");
        *out = new lqc_state{lqc::LorentzState::basis(circuit->doc.circuit.layout(), std::string_view(bits))};
    });
}

void lqc_state_free(lqc_state *state) { delete state; }

lqc_status lqc_execute(const lqc_circuit *circuit, const lqc_state *input, lqc_state **out) {
    return guarded([&] {
        need(circuit, "circuit");
        need(input, "input");
        need(out, "out");
        *out = new lqc_state{lqc::execute(circuit->doc.circuit, input->state)};
    });
}

lqc_status lqc_state_indefinite_norm(const lqc_state *state, double *out) {
    return guarded([&] {
        need(state, "state");
        need(out, "out");
        *out = state->state.indefinite_norm();
    });
}

lqc_status lqc_state_indefinite_norm_scaled(const lqc_state *state, double *out) {
    return guarded([&] {
        need(state, "state");
        need(out, "out");
        *out = state->state.indefinite_norm_scaled();
    });
}

lqc_status lqc_state_log_scale(const lqc_state *state, double *out) {
    return guarded([&] {
        need(state, "state");
        need(out, "out");
        *out = state->state.log_scale();
    });
}

lqc_status lqc_state_probability(const lqc_state *state, const char *qubit_bits, double *out) {
    return guarded([&] {
        need(state, "state");
        need(qubit_bits, "qubit_bits");
        need(out, "out");
        const auto dist = state->state.observable_distribution();
        lqc::require(std::strlen(qubit_bits) == state->state.layout().qubit_count(),
                     "expected one character per qubit");
        const auto it = dist.entries.find(qubit_bits);
        *out = it == dist.entries.end() ? 0.0 : it->second;
    });
}

lqc_status lqc_state_to_json(const lqc_state *state, char **out) {
    return guarded([&] {
        need(state, "state");
        need(out, "out");
        *out = dup_string(lqc::state_to_json(state->state).dump(2) + "\n");
    });
}

lqc_status lqc_command(const char *name, const char *input, const char *options_json, const char *format,
                       char **report) {
    return guarded([&] {
        need(name, "name");
        need(report, "report");
        *report = nullptr;
        lqc::Json options = lqc::Json::object();
        if (options_json != nullptr && *options_json != '\0') {
            options = lqc::parse_json_text(options_json, "options");
        }
        const lqc::Json rep = lqc::run_command(name, input ? input : "", options);
        *report = dup_string(lqc::render_report(rep, format ? format : "json"));
    });
}

} // extern "C"
