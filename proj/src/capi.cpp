#include "frobun.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>

#include "frobun/action_expr.hpp"
#include "frobun/json_out.hpp"

using namespace frobun;

struct frobun_group {
    GroupData data;
};

struct frobun_curve {
    std::optional<CurveModel> model;
    WeilPolynomial P;
};

struct frobun_action {
    DiagonalAction action;
    std::string expr;
};

namespace {

thread_local std::string g_last_error;

int set_error(int code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

int map_code(ErrorCode c) {
    switch (c) {
    case ErrorCode::InvalidArgument: return FROBUN_ERR_INVALID;
    case ErrorCode::DomainError: return FROBUN_ERR_DOMAIN;
    case ErrorCode::ContextError: return FROBUN_ERR_CONTEXT;
    case ErrorCode::Internal: return FROBUN_ERR_INTERNAL;
    }
    return FROBUN_ERR_INTERNAL;
}

template <typename Fn> int guarded(Fn&& fn) {
    try {
        fn();
        return FROBUN_OK;
    } catch (const Error& e) {
        return set_error(map_code(e.code()), e.what());
    } catch (const std::exception& e) {
        return set_error(FROBUN_ERR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit_json(const Json& j, char** out) { *out = dup_string(dump_json(j)); }

long parse_long(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size() || s.empty())
            fail(ErrorCode::InvalidArgument, std::string("bad ") + what + " '" + s + "'");
        return v;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail(ErrorCode::InvalidArgument, std::string("bad ") + what + " '" + s + "'");
    }
}

std::optional<std::vector<RootOfUnity>> parse_eps(const char* eps) {
    if (!eps || !*eps)
        return std::nullopt;
    std::vector<RootOfUnity> out;
    std::string s(eps);
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        std::size_t colon = tok.find(':');
        if (tok.empty() || colon == std::string::npos)
            fail(ErrorCode::InvalidArgument, "eps entry '" + tok + "' is not of the form order:exponent");
        out.push_back({parse_long(tok.substr(0, colon), "eps order"),
                       parse_long(tok.substr(colon + 1), "eps exponent")});
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

void require(const void* handle, const char* what) {
    if (!handle)
        fail(ErrorCode::InvalidArgument, std::string(what) + " handle is null");
}

} // namespace

extern "C" {

const char* frobun_version(void) { return "0.1.0"; }

const char* frobun_strerror(int code) {
    switch (code) {
    case FROBUN_OK: return "ok";
    case FROBUN_ERR_INVALID: return "invalid input";
    case FROBUN_ERR_DOMAIN: return "domain error";
    case FROBUN_ERR_CONTEXT: return "context mismatch";
    case FROBUN_ERR_INTERNAL: return "internal error";
    }
    return "unknown error code";
}

const char* frobun_last_error(void) { return g_last_error.c_str(); }

void frobun_string_free(char* s) { std::free(s); }

int frobun_group_parse(const char* spec, const char* eps, frobun_group** out) {
    return guarded([&] {
        require(spec, "spec");
        require(out, "out");
        auto g = std::make_unique<frobun_group>();
        g->data = parse_group(spec, parse_eps(eps));
        *out = g.release();
    });
}

void frobun_group_free(frobun_group* g) { delete g; }

int frobun_group_info_json(const frobun_group* g, char** json_out) {
    return guarded([&] {
        require(g, "group");
        emit_json(group_json(g->data), json_out);
    });
}

int frobun_group_count_json(const frobun_group* g, unsigned long q, char** json_out) {
    return guarded([&] {
        require(g, "group");
        emit_json(group_count_json(g->data, prime_power_from_value(q)), json_out);
    });
}

int frobun_group_bruteforce_sl(unsigned n, unsigned long q, char** count_out) {
    return guarded([&] {
        require(count_out, "out");
        *count_out = dup_string(brute_force_count_sl(n, q).get_str());
    });
}

int frobun_curve_from_model(const char* model, unsigned long q, unsigned threads, frobun_curve** out) {
    return guarded([&] {
        require(model, "model");
        require(out, "out");
        auto c = std::make_unique<frobun_curve>();
        c->model = parse_curve_model(model, prime_power_from_value(q));
        c->P = weil_from_model(*c->model, threads == 0 ? 1 : threads);
        *out = c.release();
    });
}

int frobun_curve_from_counts(unsigned long q, unsigned genus, const long long* counts, size_t n,
                             frobun_curve** out) {
    return guarded([&] {
        require(out, "out");
        if (n > 0)
            require(counts, "counts");
        std::vector<Int> cc;
        for (size_t i = 0; i < n; ++i)
            cc.push_back(Int(static_cast<long>(counts[i])));
        auto c = std::make_unique<frobun_curve>();
        c->P = weil_numerator_from_counts(prime_power_from_value(q), genus, cc);
        *out = c.release();
    });
}

int frobun_curve_from_coeffs(unsigned long q, const char* const* coeffs, size_t n, frobun_curve** out) {
    return guarded([&] {
        require(out, "out");
        require(coeffs, "coeffs");
        std::vector<Int> cc;
        for (size_t i = 0; i < n; ++i)
            cc.emplace_back(coeffs[i]);
        auto c = std::make_unique<frobun_curve>();
        c->P = weil_from_coeffs(prime_power_from_value(q), cc);
        *out = c.release();
    });
}

void frobun_curve_free(frobun_curve* c) { delete c; }

int frobun_curve_genus(const frobun_curve* c, unsigned* genus_out) {
    return guarded([&] {
        require(c, "curve");
        require(genus_out, "out");
        *genus_out = c->P.g;
    });
}

int frobun_curve_zeta_json(const frobun_curve* c, char** json_out) {
    return guarded([&] {
        require(c, "curve");
        emit_json(curve_zeta_json(c->P), json_out);
    });
}

int frobun_curve_count_points(const frobun_curve* c, unsigned k, unsigned threads, char** count_out) {
    return guarded([&] {
        require(c, "curve");
        require(count_out, "out");
        Int n = c->model ? count_points(*c->model, k, threads) : point_count_from_weil(c->P, k);
        *count_out = dup_string(n.get_str());
    });
}

int frobun_curve_zeta_value(const frobun_curve* c, long s, char** value_out) {
    return guarded([&] {
        require(c, "curve");
        require(value_out, "out");
        *value_out = dup_string(rat_str(zeta_value(c->P, s)));
    });
}

int frobun_poincare_json(const frobun_group* g, unsigned genus, unsigned max_degree, int classifying,
                         const char* component, char** json_out) {
    return guarded([&] {
        require(g, "group");
        ComponentLabel label;
        if (component && *component)
            label.theta = component;
        emit_json(poincare_json(g->data, genus, max_degree, classifying != 0, label), json_out);
    });
}

int frobun_action_parse(const frobun_group* g, unsigned genus, unsigned long q, const char* expr,
                        frobun_action** out) {
    return guarded([&] {
        require(g, "group");
        require(expr, "expr");
        require(out, "out");
        auto a = std::make_unique<frobun_action>();
        a->action = parse_action_expr(expr, g->data, genus, prime_power_from_value(q));
        a->expr = expr;
        *out = a.release();
    });
}

int frobun_action_classifying(const frobun_group* g, unsigned long q, const char* kind,
                              frobun_action** out) {
    return guarded([&] {
        require(g, "group");
        require(kind, "kind");
        require(out, "out");
        auto a = std::make_unique<frobun_action>();
        a->action = classifying_action(frobenius_kind_from_name(kind), g->data, prime_power_from_value(q));
        a->expr = kind;
        *out = a.release();
    });
}

void frobun_action_free(frobun_action* a) { delete a; }

int frobun_action_table_json(const frobun_action* a, char** json_out) {
    return guarded([&] {
        require(a, "action");
        emit_json(action_table_json(a->action), json_out);
    });
}

int frobun_trace_json(const frobun_action* a, const frobun_curve* c, unsigned max_degree,
                      char** json_out) {
    return guarded([&] {
        require(a, "action");
        require(c, "curve");
        TraceReport rep = trace_report(a->action, c->P, max_degree);
        emit_json(trace_json(rep, a->action, c->P, a->expr), json_out);
    });
}

int frobun_truncated_trace_json(const frobun_action* a, const frobun_curve* c, int signed_mode,
                                char** json_out) {
    return guarded([&] {
        require(a, "action");
        require(c, "curve");
        auto rep = generator_truncated_trace(a->action, c->P,
                                             signed_mode ? SignMode::Signed : SignMode::Unsigned);
        emit_json(truncated_trace_json(rep, a->action), json_out);
    });
}

int frobun_verify_json(char** json_out) {
    return guarded([&] {
        require(json_out, "out");
        emit_json(verify_json(run_verify_suite()), json_out);
    });
}

} // extern "C"
