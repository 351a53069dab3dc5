// frobun command line front end. All computation goes through the C API in
// frobun.h; this file only parses arguments and renders reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "frobun.h"

using Json = nlohmann::json;

namespace {

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { frobun_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

[[noreturn]] void die(int rc) {
    std::cerr << "error: " << frobun_strerror(rc);
    const char* detail = frobun_last_error();
    if (detail && *detail)
        std::cerr << ": " << detail;
    std::cerr << "\n";
    std::exit(rc == FROBUN_ERR_INTERNAL ? 2 : 1);
}

void check(int rc) {
    if (rc != FROBUN_OK)
        die(rc);
}

struct GroupGuard {
    frobun_group* g = nullptr;
    ~GroupGuard() { frobun_group_free(g); }
};
struct CurveGuard {
    frobun_curve* c = nullptr;
    ~CurveGuard() { frobun_curve_free(c); }
};
struct ActionGuard {
    frobun_action* a = nullptr;
    ~ActionGuard() { frobun_action_free(a); }
};

std::vector<long long> parse_count_list(const std::string& s) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (tok.empty()) {
            std::cerr << "error: empty entry in count list\n";
            std::exit(1);
        }
        out.push_back(std::stoll(tok));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        out.push_back(s.substr(pos, comma == std::string::npos ? comma : comma - pos));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

// Shared curve options: exactly one of --model / --counts / --coeffs.
struct CurveSpec {
    std::string model;
    std::string counts;
    std::string coeffs;
    unsigned long q = 0;
    unsigned threads = 1;

    void add_options(CLI::App* cmd, bool need_q = true) {
        auto* m = cmd->add_option("--model", model, "curve model: 'y2=<poly in x>' or 'plane:<poly in x,y,z>'");
        auto* c = cmd->add_option("--counts", counts, "point counts N_1..N_g, comma separated");
        auto* p = cmd->add_option("--coeffs", coeffs, "zeta numerator coefficients a_0..a_2g, comma separated");
        m->excludes(c)->excludes(p);
        c->excludes(p);
        if (need_q)
            cmd->add_option("--q", q, "field size, a prime power")->required();
    }

    frobun_curve* build(unsigned genus_hint, bool have_genus) const {
        frobun_curve* out = nullptr;
        if (!model.empty()) {
            check(frobun_curve_from_model(model.c_str(), q, threads, &out));
        } else if (!counts.empty()) {
            std::vector<long long> cc = parse_count_list(counts);
            unsigned g = have_genus ? genus_hint : static_cast<unsigned>(cc.size());
            check(frobun_curve_from_counts(q, g, cc.data(), cc.size(), &out));
        } else if (!coeffs.empty()) {
            std::vector<std::string> cs = split_commas(coeffs);
            std::vector<const char*> ptrs;
            for (const auto& s : cs)
                ptrs.push_back(s.c_str());
            check(frobun_curve_from_coeffs(q, ptrs.data(), ptrs.size(), &out));
        } else {
            std::cerr << "error: give exactly one of --model, --counts, --coeffs\n";
            std::exit(1);
        }
        return out;
    }
};

void print_json_or(const std::string& json_text, bool json_mode,
                   const std::function<void(const Json&)>& render) {
    if (json_mode) {
        std::cout << json_text;
        return;
    }
    render(Json::parse(json_text));
}

void render_group_info(const Json& j) {
    std::cout << "group " << j["label"].get<std::string>() << "\n";
    std::cout << "  series:    " << j["series"].get<std::string>() << "\n";
    std::cout << "  rank:      " << j["rank"] << "\n";
    std::cout << "  degrees:   ";
    for (const auto& d : j["degrees"])
        std::cout << d << " ";
    std::cout << "\n  dimension: " << j["dimension"] << "\n";
    std::cout << "  eps:       ";
    for (const auto& e : j["eps"])
        std::cout << "zeta(" << e[0] << "," << e[1] << ") ";
    std::cout << "\n  f-classes: " << (j["includeF"].get<bool>() ? "yes" : "no (Gm factor)") << "\n";
}

void render_group_count(const Json& j) {
    std::cout << "#" << j["group"]["label"].get<std::string>() << "(F_" << j["q"] << ") = q^"
              << j["qDimExponent"] << " * product of:\n";
    for (const auto& f : j["factors"])
        std::cout << "  " << f.get<std::string>() << "\n";
    if (j["value"].is_null())
        std::cout << "value: not rational in the monomial normal form (nontrivial eps); numeric = "
                  << j["valueNumeric"] << "\n";
    else
        std::cout << "value: " << j["value"].get<std::string>() << "\n";
}

void render_curve_zeta(const Json& j) {
    std::cout << "q = " << j["q"] << ", genus = " << j["g"] << "\n";
    std::cout << "P(T) coefficients a_0..a_2g: ";
    for (const auto& a : j["P"])
        std::cout << a << " ";
    std::cout << "\n|lambda| = sqrt(q) check: " << (j["lambdaAbsCheck"].get<bool>() ? "ok" : "FAILED") << "\n";
    std::cout << "point counts N_k: ";
    for (const auto& n : j["counts"])
        std::cout << n << " ";
    std::cout << "\n";
}

void render_poincare(const Json& j) {
    std::cout << "Poincare series of " << j["group"].get<std::string>();
    if (j["classifying"].get<bool>())
        std::cout << " (classifying stack)";
    else
        std::cout << ", genus " << j["genus"];
    std::cout << ", through degree " << j["maxDegree"] << ":\n  ";
    for (const auto& d : j["dims"])
        std::cout << d << " ";
    std::cout << "\ngenerators:\n";
    for (const auto& g : j["generators"]) {
        std::cout << "  " << g["kind"].get<std::string>() << "_" << g["i"];
        if (g.contains("j"))
            std::cout << "^(" << g["j"] << ")";
        std::cout << "  degree " << g["deg"] << "\n";
    }
}

void render_action_table(const Json& j) {
    std::cout << "action table over " << j["group"].get<std::string>();
    if (!j["classifying"].get<bool>())
        std::cout << ", genus " << j["genus"];
    std::cout << ", q = " << j["q"] << ":\n";
    for (const auto& row : j["table"])
        std::cout << "  " << row["name"].get<std::string>() << " -> "
                  << row["eigenvalue"].get<std::string>() << "\n";
}

void render_trace(const Json& j) {
    std::cout << "trace of " << j["action"].get<std::string>() << " on " << j["group"].get<std::string>()
              << ", genus " << j["genus"] << ", q = " << j["q"] << "\n";
    std::cout << "verdict: " << j["verdict"].get<std::string>();
    if (!j["rho"].is_null())
        std::cout << "  (ratio bound rho = " << j["rho"].get<std::string>() << ")";
    std::cout << "\n";
    if (!j["offenders"].empty()) {
        std::cout << "offending generators:";
        for (const auto& o : j["offenders"])
            std::cout << " " << o.get<std::string>();
        std::cout << "\n";
    }
    if (!j["closedForm"].is_null())
        std::cout << "closed form: " << j["closedForm"].get<std::string>() << "\n";
    if (j.contains("mass"))
        std::cout << "Behrend mass: " << j["mass"].get<std::string>() << "\n";
    if (!j["errorBound"].is_null())
        std::cout << "error bound at M: " << j["errorBound"].get<std::string>() << " = "
                  << j["errorBoundExact"].get<std::string>() << "\n";
    if (!j["partialSums"].empty()) {
        std::cout << "alternating partial sums S_0..S_M:\n  ";
        for (const auto& s : j["partialSums"])
            std::cout << s.get<std::string>() << " ";
        std::cout << "\n";
    }
    std::cout << "generator magnitudes:\n";
    for (const auto& m : j["magnitudes"])
        std::cout << "  |" << m["gen"].get<std::string>() << "| = " << m["magnitude"].get<std::string>()
                  << "\n";
    std::cout << "closed-form factors (per group index):\n";
    for (const auto& f : j["factors"]) {
        std::cout << "  i=" << f["i"] << ": numerator " << f["numerator"].get<std::string>() << "\n";
        for (const auto& d : f["denominators"])
            std::cout << "        / (" << d.get<std::string>() << ")\n";
        if (!f["value"].is_null())
            std::cout << "        = " << f["value"].get<std::string>() << "\n";
    }
    if (j.contains("frobPsiNote")) {
        const auto& n = j["frobPsiNote"];
        std::cout << "note: frob^s o psi^n with s=" << n["s"] << ", n=" << n["n"]
                  << "; classical condition '" << n["classicalCondition"].get<std::string>() << "' "
                  << (n["classicalConditionHolds"].get<bool>() ? "holds" : "does not hold")
                  << ", computed verdict: " << n["computedVerdict"].get<std::string>() << "\n";
    }
}

void render_truncated(const Json& j) {
    std::cout << "generator-truncated trace (" << j["sign"].get<std::string>() << " exterior sum) on "
              << j["group"].get<std::string>() << ", genus " << j["genus"] << "\n";
    auto field = [&](const char* key, const char* label) {
        if (j[key].is_null())
            std::cout << "  " << label << ": (not rational; nontrivial eps)\n";
        else
            std::cout << "  " << label << ": " << j[key].get<std::string>() << "\n";
    };
    field("aPart", "a-part   ");
    field("fPart", "f-part   ");
    field("exteriorPart", "exterior ");
    field("value", "value    ");
    std::cout << "  exterior bound: " << j["exteriorBound"].get<std::string>() << "\n";
}

void render_verify(const Json& j) {
    for (const auto& c : j["checks"]) {
        std::cout << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "  " << c["name"].get<std::string>();
        if (c.contains("detail"))
            std::cout << "  (" << c["detail"].get<std::string>() << ")";
        std::cout << "\n";
    }
    std::cout << (j["allPass"].get<bool>() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"frobun: exact Frobenius eigenvalue arithmetic for moduli of principal bundles over "
                 "curves over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json_mode = false;
    unsigned max_degree = 40;
    unsigned threads = 1;
    app.add_flag("--json", json_mode, "emit canonical JSON instead of text");
    app.add_option("--max-degree", max_degree, "series truncation degree M (default 40)");
    app.add_option("--threads", threads, "worker threads for point counting (output is identical)");

    std::string group_spec, eps_spec;

    // group {info,count}
    auto* group_cmd = app.add_subcommand("group", "group descriptors and point counts");
    group_cmd->require_subcommand(1);
    auto* ginfo = group_cmd->add_subcommand("info", "show rank, Weyl degrees, dimension");
    ginfo->add_option("--group", group_spec, "group label, e.g. A1, B3, Gm, A1xG2")->required();
    ginfo->add_option("--eps", eps_spec, "twist roots of unity, 'order:exp' per rank index");
    auto* gcount = group_cmd->add_subcommand("count", "Steinberg count #G(F_q)");
    gcount->add_option("--group", group_spec, "group label")->required();
    gcount->add_option("--eps", eps_spec, "twist roots of unity");
    unsigned long gq = 0;
    gcount->add_option("--q", gq, "field size, a prime power")->required();

    // curve {zeta,count}
    auto* curve_cmd = app.add_subcommand("curve", "curve models and zeta data");
    curve_cmd->require_subcommand(1);
    CurveSpec zeta_spec, count_spec;
    unsigned zeta_genus = 0;
    auto* czeta = curve_cmd->add_subcommand("zeta", "Weil zeta numerator from a model or from counts");
    zeta_spec.add_options(czeta);
    auto* zg = czeta->add_option("--g", zeta_genus, "genus (defaults to the count of --counts entries)");
    auto* ccount = curve_cmd->add_subcommand("count", "point count over F_{q^k}");
    count_spec.add_options(ccount);
    unsigned count_k = 1;
    ccount->add_option("--k", count_k, "extension degree (default 1)");

    // cohomology poincare
    auto* coh_cmd = app.add_subcommand("cohomology", "graded dimensions of the cohomology algebra");
    coh_cmd->require_subcommand(1);
    auto* poin = coh_cmd->add_subcommand("poincare", "Poincare series and generator inventory");
    poin->add_option("--group", group_spec, "group label")->required();
    unsigned genus = 0;
    bool classifying = false;
    poin->add_option("--genus", genus, "curve genus");
    poin->add_flag("--classifying", classifying, "classifying stack instead of the moduli stack");
    poin->add_option("--eps", eps_spec, "twist roots of unity");
    std::string component;
    poin->add_option("--component", component, "pi_1(G) component label (metadata only)");

    // frobenius table
    auto* frob_cmd = app.add_subcommand("frobenius", "Frobenius eigenvalue tables");
    frob_cmd->require_subcommand(1);
    auto* ftable = frob_cmd->add_subcommand("table", "generator -> eigenvalue table");
    ftable->add_option("--group", group_spec, "group label")->required();
    ftable->add_option("--eps", eps_spec, "twist roots of unity");
    ftable->add_option("--genus", genus, "curve genus");
    std::string kind, compose_expr;
    auto* kopt = ftable->add_option("--kind", kind, "one of psi, phi, frob, fbar");
    auto* copt = ftable->add_option("--compose,--action", compose_expr,
                                    "composition expression, e.g. 'frob^2 o psi^3' (applied right-to-left)");
    kopt->excludes(copt);
    unsigned long fq = 0;
    ftable->add_option("--q", fq, "field size, a prime power")->required();
    bool fclassifying = false;
    ftable->add_flag("--classifying", fclassifying, "table on the classifying stack (frob/fbar only)");

    // trace
    auto* trace_cmd = app.add_subcommand("trace", "alternating traces, closed forms, convergence");
    trace_cmd->add_option("--group", group_spec, "group label")->required();
    trace_cmd->add_option("--eps", eps_spec, "twist roots of unity");
    unsigned trace_genus = 0;
    auto* tg = trace_cmd->add_option("--genus", trace_genus, "curve genus (checked against the curve)");
    CurveSpec trace_curve;
    trace_curve.add_options(trace_cmd);
    std::string action_expr = "frob";
    trace_cmd->add_option("--action", action_expr, "action expression (default frob)");
    bool truncated = false;
    std::string sign_mode = "unsigned";
    trace_cmd->add_flag("--truncated", truncated, "generator-truncated trace instead of the full algebra");
    trace_cmd->add_option("--sign", sign_mode, "exterior sum sign mode: unsigned (default) or signed")
        ->check(CLI::IsMember({"unsigned", "signed"}));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the cross-module oracle suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1; // normalize: input errors exit 1
    }

    auto make_group = [&]() {
        GroupGuard g;
        check(frobun_group_parse(group_spec.c_str(), eps_spec.empty() ? nullptr : eps_spec.c_str(), &g.g));
        return g;
    };

    if (ginfo->parsed()) {
        GroupGuard g = make_group();
        StringGuard out;
        check(frobun_group_info_json(g.g, &out.s));
        print_json_or(out.str(), json_mode, render_group_info);
    } else if (gcount->parsed()) {
        GroupGuard g = make_group();
        StringGuard out;
        check(frobun_group_count_json(g.g, gq, &out.s));
        print_json_or(out.str(), json_mode, render_group_count);
    } else if (czeta->parsed()) {
        zeta_spec.threads = threads;
        CurveGuard c;
        c.c = zeta_spec.build(zeta_genus, !zg->empty());
        StringGuard out;
        check(frobun_curve_zeta_json(c.c, &out.s));
        print_json_or(out.str(), json_mode, render_curve_zeta);
    } else if (ccount->parsed()) {
        count_spec.threads = threads;
        CurveGuard c;
        c.c = count_spec.build(0, false);
        StringGuard out;
        check(frobun_curve_count_points(c.c, count_k, threads, &out.s));
        if (json_mode) {
            Json j;
            j["q"] = count_spec.q;
            j["k"] = count_k;
            j["count"] = out.str();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << out.str() << "\n";
        }
    } else if (poin->parsed()) {
        GroupGuard g = make_group();
        StringGuard out;
        check(frobun_poincare_json(g.g, genus, max_degree, classifying ? 1 : 0,
                                   component.empty() ? nullptr : component.c_str(), &out.s));
        print_json_or(out.str(), json_mode, render_poincare);
    } else if (ftable->parsed()) {
        GroupGuard g = make_group();
        ActionGuard a;
        if (fclassifying) {
            if (kind.empty()) {
                std::cerr << "error: classifying tables need --kind frob or --kind fbar\n";
                return 1;
            }
            check(frobun_action_classifying(g.g, fq, kind.c_str(), &a.a));
        } else {
            std::string expr = !compose_expr.empty() ? compose_expr : kind;
            if (expr.empty()) {
                std::cerr << "error: give --kind or --compose\n";
                return 1;
            }
            check(frobun_action_parse(g.g, genus, fq, expr.c_str(), &a.a));
        }
        StringGuard out;
        check(frobun_action_table_json(a.a, &out.s));
        print_json_or(out.str(), json_mode, render_action_table);
    } else if (trace_cmd->parsed()) {
        trace_curve.threads = threads;
        CurveGuard c;
        c.c = trace_curve.build(trace_genus, !tg->empty());
        unsigned curve_genus = 0;
        check(frobun_curve_genus(c.c, &curve_genus));
        if (!tg->empty() && trace_genus != curve_genus) {
            std::cerr << "error: --genus " << trace_genus << " does not match the curve genus "
                      << curve_genus << "\n";
            return 1;
        }
        GroupGuard g = make_group();
        ActionGuard a;
        check(frobun_action_parse(g.g, curve_genus, trace_curve.q, action_expr.c_str(), &a.a));
        StringGuard out;
        if (truncated)
            check(frobun_truncated_trace_json(a.a, c.c, sign_mode == "signed" ? 1 : 0, &out.s));
        else
            check(frobun_trace_json(a.a, c.c, max_degree, &out.s));
        print_json_or(out.str(), json_mode, truncated ? render_truncated : render_trace);
    } else if (verify_cmd->parsed()) {
        StringGuard out;
        check(frobun_verify_json(&out.s));
        Json j = Json::parse(out.str());
        if (json_mode)
            std::cout << out.str();
        else
            render_verify(j);
        return j["allPass"].get<bool>() ? 0 : 1;
    }
    return 0;
}
