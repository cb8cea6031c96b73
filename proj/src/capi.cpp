#include "arrcoh/arrcoh.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "arrcoh/errors.hpp"
#include "arrcoh/io.hpp"
#include "arrcoh/verify.hpp"

struct arrcoh_arrangement {
    arrcoh::ParsedInput input;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::size_t cap_from(int max_size) {
    return max_size <= 0 ? arrcoh::kDefaultComplexCap : static_cast<std::size_t>(max_size);
}

std::size_t gate_from(int oracle_gate) {
    return oracle_gate <= 0 ? arrcoh::kDefaultOracleGate : static_cast<std::size_t>(oracle_gate);
}

template <typename Fn>
arrcoh_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const arrcoh::InputError& e) {
        g_last_error = e.what();
        return ARRCOH_ERROR_INPUT;
    } catch (const arrcoh::LimitError& e) {
        g_last_error = e.what();
        return ARRCOH_ERROR_LIMIT;
    } catch (const arrcoh::PreconditionError& e) {
        g_last_error = e.what();
        return ARRCOH_ERROR_PRECONDITION;
    } catch (const arrcoh::CheckError& e) {
        g_last_error = e.what();
        return ARRCOH_ERROR_CHECK;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ARRCOH_ERROR_INTERNAL;
    }
}

} // namespace

extern "C" {

const char* arrcoh_version(void) {
    return "1.0.0";
}

const char* arrcoh_last_error(void) {
    return g_last_error.c_str();
}

void arrcoh_string_free(char* text) {
    std::free(text);
}

arrcoh_status arrcoh_arrangement_parse(const char* json_text, int allow_family,
                                       arrcoh_arrangement** out) {
    if (json_text == nullptr || out == nullptr) {
        g_last_error = "null argument";
        return ARRCOH_ERROR_INPUT;
    }
    *out = nullptr;
    return guarded([&] {
        auto parsed = arrcoh::parse_input(json_text, allow_family != 0);
        *out = new arrcoh_arrangement{std::move(parsed)};
        return ARRCOH_OK;
    });
}

void arrcoh_arrangement_free(arrcoh_arrangement* arr) {
    delete arr;
}

int arrcoh_arrangement_size(const arrcoh_arrangement* arr) {
    return arr == nullptr ? -1 : static_cast<int>(arr->input.family.size());
}

int arrcoh_arrangement_ambient_dim(const arrcoh_arrangement* arr) {
    return arr == nullptr ? -1 : static_cast<int>(arr->input.family.ambient_dim());
}

int arrcoh_arrangement_is_arrangement(const arrcoh_arrangement* arr) {
    return arr == nullptr ? 0 : (arr->input.is_arrangement ? 1 : 0);
}

arrcoh_status arrcoh_poincare_report(const arrcoh_arrangement* arr, int max_size,
                                     char** json_out) {
    if (arr == nullptr || json_out == nullptr) {
        g_last_error = "null argument";
        return ARRCOH_ERROR_INPUT;
    }
    return guarded([&] {
        *json_out = dup_string(
            arrcoh::poincare_report(arr->input.family, cap_from(max_size)).dump());
        return ARRCOH_OK;
    });
}

arrcoh_status arrcoh_lattice_report(const arrcoh_arrangement* arr, char** json_out) {
    if (arr == nullptr || json_out == nullptr) {
        g_last_error = "null argument";
        return ARRCOH_ERROR_INPUT;
    }
    return guarded([&] {
        *json_out = dup_string(arrcoh::lattice_report(arr->input).dump());
        return ARRCOH_OK;
    });
}

arrcoh_status arrcoh_triple_report(const arrcoh_arrangement* arr, const char* pivot_name,
                                   int max_size, char** json_out) {
    if (arr == nullptr || pivot_name == nullptr || json_out == nullptr) {
        g_last_error = "null argument";
        return ARRCOH_ERROR_INPUT;
    }
    return guarded([&] {
        if (!arr->input.is_arrangement)
            throw arrcoh::InputError("triple requires a proper arrangement (no containments)");
        *json_out = dup_string(
            arrcoh::triple_report_json(arr->input.arrangement(), pivot_name, cap_from(max_size))
                .dump());
        return ARRCOH_OK;
    });
}

arrcoh_status arrcoh_verify_report(const arrcoh_arrangement* arr, int oracle_gate, int max_size,
                                   char** json_out) {
    if (arr == nullptr || json_out == nullptr) {
        g_last_error = "null argument";
        return ARRCOH_ERROR_INPUT;
    }
    return guarded([&] {
        const arrcoh::VerifyReport report =
            arrcoh::run_verify(arr->input, gate_from(oracle_gate), cap_from(max_size));
        *json_out =
            dup_string(arrcoh::verify_report_json(report, arr->input.family).dump());
        if (!report.all_passed) {
            g_last_error = "verification failures; see report";
            return ARRCOH_ERROR_CHECK;
        }
        return ARRCOH_OK;
    });
}

arrcoh_status arrcoh_oracle_compare_report(const arrcoh_arrangement* arr, int oracle_gate,
                                           int max_size, char** json_out) {
    if (arr == nullptr || json_out == nullptr) {
        g_last_error = "null argument";
        return ARRCOH_ERROR_INPUT;
    }
    return guarded([&] {
        bool match = false;
        *json_out = dup_string(arrcoh::oracle_compare_report(arr->input, gate_from(oracle_gate),
                                                             cap_from(max_size), &match)
                                   .dump());
        if (!match) {
            g_last_error = "model and oracle disagree";
            return ARRCOH_ERROR_CHECK;
        }
        return ARRCOH_OK;
    });
}

} // extern "C"
