#include "ewall.h"

#include "ew/columns.hpp"
#include "ew/commands.hpp"
#include "ew/error.hpp"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

struct ew_context {
    ew::Session session;
    std::string last_error;
    explicit ew_context(std::string dir) : session(std::move(dir)) {}
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::string str_or(const char* s, const char* fallback) { return s ? s : fallback; }

// Runs body, turning exceptions into a status and recording the message on ctx.
template <class Body>
ew_status guarded(ew_context* ctx, Body body) {
    if (!ctx) return EW_USAGE;
    ctx->last_error.clear();
    try {
        body();
        return EW_OK;
    } catch (const ew::Error& e) {
        ctx->last_error = e.what();
        return static_cast<ew_status>(static_cast<int>(e.code()));
    } catch (const ew::UsageError& e) {
        ctx->last_error = e.what();
        return EW_USAGE;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return EW_INTERNAL;
    }
}

template <class Body>
ew_status produce(ew_context* ctx, char** out, Body body) {
    if (!out) return EW_USAGE;
    *out = nullptr;
    return guarded(ctx, [&] { *out = dup_string(body()); });
}

} // namespace

extern "C" {

const char* ew_default_data_dir(void) {
    static const std::string dir = ew::default_data_dir();
    return dir.c_str();
}

const char* ew_status_name(ew_status s) {
    if (s == EW_OK) return "OK";
    if (s == EW_USAGE) return "USAGE";
    if (s >= EW_BAD_TYPE && s <= EW_INTERNAL) return ew::error_name(static_cast<ew::ErrorCode>(s));
    return "UNKNOWN";
}

ew_status ew_context_new(const char* data_dir, ew_context** out) {
    if (!out) return EW_USAGE;
    *out = nullptr;
    std::string dir = data_dir && *data_dir ? data_dir : ew::default_data_dir();
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) return EW_IO;
    try {
        *out = new ew_context(dir);
    } catch (...) {
        return EW_INTERNAL;
    }
    return EW_OK;
}

void ew_context_free(ew_context* ctx) { delete ctx; }

const char* ew_last_error(const ew_context* ctx) { return ctx ? ctx->last_error.c_str() : "no context"; }

void ew_free_string(char* s) { std::free(s); }

ew_status ew_build(ew_context* ctx, const char* type, const char* what, const char* format, char** out) {
    return produce(ctx, out, [&] {
        return ew::cmd_build(ctx->session, str_or(type, ""), str_or(what, "B"),
                             ew::parse_format(str_or(format, "text")));
    });
}

ew_status ew_tables(ew_context* ctx, const char* type, const char* which, const char* format, char** out) {
    return produce(ctx, out, [&] {
        return ew::cmd_tables(ctx->session, str_or(type, ""), str_or(which, ""),
                              ew::parse_format(str_or(format, "text")));
    });
}

ew_status ew_enumerate(ew_context* ctx, const ew_enumerate_options* opts, char** out) {
    if (!opts) return EW_USAGE;
    return produce(ctx, out, [&] {
        ew::EnumerateRequest r;
        r.type = str_or(opts->type, "");
        r.lambda = str_or(opts->lambda, "L0");
        r.model = str_or(opts->model, "reduced");
        r.depth = opts->depth;
        r.hw_only = opts->hw_only != 0;
        r.format = ew::parse_format(str_or(opts->format, "text"));
        return ew::cmd_enumerate(ctx->session, r);
    });
}

ew_status ew_verify(ew_context* ctx, const char* const* only, size_t n_only, char** report_json,
                    char** summary, int* all_pass) {
    if (!report_json || !summary || !all_pass || (n_only && !only)) return EW_USAGE;
    *report_json = nullptr;
    *summary = nullptr;
    *all_pass = 0;
    return guarded(ctx, [&] {
        std::vector<std::string> ids;
        for (size_t k = 0; k < n_only; ++k) ids.push_back(str_or(only[k], ""));
        ew::VerifyOutcome v = ew::cmd_verify(ctx->session, ids);
        *report_json = dup_string(v.report);
        *summary = dup_string(v.summary);
        *all_pass = v.pass ? 1 : 0;
    });
}

ew_status ew_column_show(ew_context* ctx, const char* type, const char* element, int shift, char** out) {
    return produce(ctx, out, [&] {
        return ew::cmd_column_show(ctx->session, str_or(type, ""), str_or(element, ""), shift);
    });
}

ew_status ew_energy_dump(ew_context* ctx, const char* type, const char* format, char** out) {
    return produce(ctx, out, [&] {
        return ew::cmd_energy_dump(ctx->session, str_or(type, ""), ew::parse_format(str_or(format, "text")));
    });
}

} // extern "C"
