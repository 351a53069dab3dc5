#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <string>

#include "frobun.h"

using Json = nlohmann::json;

namespace {

struct Str {
    char* s = nullptr;
    ~Str() { frobun_string_free(s); }
    std::string get() const { return s ? s : ""; }
    Json json() const { return Json::parse(get()); }
};

} // namespace

TEST_CASE("version and error strings") {
    CHECK(std::string(frobun_version()) == "0.1.0");
    CHECK(std::string(frobun_strerror(FROBUN_OK)) == "ok");
    CHECK(std::string(frobun_strerror(FROBUN_ERR_INVALID)) == "invalid input");
    CHECK(std::string(frobun_strerror(99)) == "unknown error code");
}

TEST_CASE("group lifecycle and info") {
    frobun_group* g = nullptr;
    REQUIRE(frobun_group_parse("A1", nullptr, &g) == FROBUN_OK);
    Str info;
    REQUIRE(frobun_group_info_json(g, &info.s) == FROBUN_OK);
    Json j = info.json();
    CHECK(j["label"] == "A1");
    CHECK(j["rank"] == 1);
    CHECK(j["degrees"][0] == 2);
    CHECK(j["dimension"] == 3);
    frobun_group_free(g);
}

TEST_CASE("group parse failures set codes and messages") {
    frobun_group* g = nullptr;
    CHECK(frobun_group_parse("Z9", nullptr, &g) == FROBUN_ERR_INVALID);
    CHECK(std::string(frobun_last_error()).find("unknown series") != std::string::npos);
    CHECK(frobun_group_parse("A1", "3:1,3:2", &g) == FROBUN_ERR_INVALID); // eps length
    CHECK(frobun_group_parse(nullptr, nullptr, &g) == FROBUN_ERR_INVALID);
}

TEST_CASE("steinberg counts through the C API") {
    frobun_group* g = nullptr;
    REQUIRE(frobun_group_parse("A1", nullptr, &g) == FROBUN_OK);
    Str out;
    REQUIRE(frobun_group_count_json(g, 2, &out.s) == FROBUN_OK);
    Json j = out.json();
    CHECK(j["value"] == "6");

    Str brute;
    REQUIRE(frobun_group_bruteforce_sl(2, 2, &brute.s) == FROBUN_OK);
    CHECK(brute.get() == "6");

    CHECK(frobun_group_count_json(g, 6, &out.s) == FROBUN_ERR_INVALID); // not a prime power
    frobun_group_free(g);
}

TEST_CASE("curves from model, counts and coefficients agree") {
    frobun_curve* from_model = nullptr;
    REQUIRE(frobun_curve_from_model("y2=x3+x", 3, 1, &from_model) == FROBUN_OK);
    long long counts[] = {4};
    frobun_curve* from_counts = nullptr;
    REQUIRE(frobun_curve_from_counts(3, 1, counts, 1, &from_counts) == FROBUN_OK);
    const char* coeffs[] = {"1", "0", "3"};
    frobun_curve* from_coeffs = nullptr;
    REQUIRE(frobun_curve_from_coeffs(3, coeffs, 3, &from_coeffs) == FROBUN_OK);

    Str a, b, c;
    REQUIRE(frobun_curve_zeta_json(from_model, &a.s) == FROBUN_OK);
    REQUIRE(frobun_curve_zeta_json(from_counts, &b.s) == FROBUN_OK);
    REQUIRE(frobun_curve_zeta_json(from_coeffs, &c.s) == FROBUN_OK);
    CHECK(a.get() == b.get());
    CHECK(b.get() == c.get());
    Json j = a.json();
    CHECK(j["q"] == 3);
    CHECK(j["g"] == 1);
    CHECK(j["P"] == Json::array({1, 0, 3}));
    CHECK(j["lambdaAbsCheck"] == true);
    CHECK(j["counts"] == Json::array({4, 16, 28}));

    unsigned genus = 9;
    REQUIRE(frobun_curve_genus(from_model, &genus) == FROBUN_OK);
    CHECK(genus == 1);

    Str n2_enum, n2_weil;
    REQUIRE(frobun_curve_count_points(from_model, 2, 2, &n2_enum.s) == FROBUN_OK);
    REQUIRE(frobun_curve_count_points(from_counts, 2, 1, &n2_weil.s) == FROBUN_OK);
    CHECK(n2_enum.get() == "16");
    CHECK(n2_weil.get() == "16");

    Str z;
    REQUIRE(frobun_curve_zeta_value(from_model, 2, &z.s) == FROBUN_OK);
    CHECK(z.get() == "7/4");
    CHECK(frobun_curve_zeta_value(from_model, 1, &z.s) == FROBUN_ERR_DOMAIN);

    frobun_curve_free(from_model);
    frobun_curve_free(from_counts);
    frobun_curve_free(from_coeffs);
}

TEST_CASE("curve error paths") {
    frobun_curve* c = nullptr;
    CHECK(frobun_curve_from_model("y2=x3", 3, 1, &c) == FROBUN_ERR_DOMAIN);  // singular
    CHECK(frobun_curve_from_model("y2=x3+x", 4, 1, &c) == FROBUN_ERR_INVALID); // char 2
    CHECK(frobun_curve_from_model("what", 3, 1, &c) == FROBUN_ERR_INVALID);
    long long counts[] = {4, 17};
    CHECK(frobun_curve_from_counts(3, 2, counts, 2, &c) == FROBUN_ERR_DOMAIN); // inconsistent
    const char* coeffs[] = {"1", "1", "5"};
    CHECK(frobun_curve_from_coeffs(3, coeffs, 3, &c) == FROBUN_ERR_INVALID); // functional equation
}

TEST_CASE("poincare series JSON") {
    frobun_group* g = nullptr;
    REQUIRE(frobun_group_parse("A1", nullptr, &g) == FROBUN_OK);
    Str out;
    REQUIRE(frobun_poincare_json(g, 1, 6, 0, "0", &out.s) == FROBUN_OK);
    Json j = out.json();
    CHECK(j["dims"] == Json::array({1, 0, 1, 2, 2, 2, 3}));
    CHECK(j["generators"][0]["kind"] == "a");
    CHECK(j["generators"][0]["deg"] == 4);

    Str cl;
    REQUIRE(frobun_poincare_json(g, 0, 8, 1, nullptr, &cl.s) == FROBUN_OK);
    Json cj = cl.json();
    CHECK(cj["classifying"] == true);
    CHECK(cj["dims"] == Json::array({1, 0, 0, 0, 1, 0, 0, 0, 1}));
    frobun_group_free(g);
}

TEST_CASE("actions and traces through the C API") {
    frobun_group* g = nullptr;
    REQUIRE(frobun_group_parse("A1", nullptr, &g) == FROBUN_OK);
    frobun_action* a = nullptr;
    REQUIRE(frobun_action_parse(g, 1, 3, "frob", &a) == FROBUN_OK);

    Str table;
    REQUIRE(frobun_action_table_json(a, &table.s) == FROBUN_OK);
    Json tj = table.json();
    REQUIRE(tj["table"].size() == 4);
    CHECK(tj["table"][0]["name"] == "a_1");
    CHECK(tj["table"][0]["eigenvalue"] == "1 * q^-2");

    frobun_curve* c = nullptr;
    long long counts[] = {4};
    REQUIRE(frobun_curve_from_counts(3, 1, counts, 1, &c) == FROBUN_OK);

    Str trace;
    REQUIRE(frobun_trace_json(a, c, 40, &trace.s) == FROBUN_OK);
    Json j = trace.json();
    CHECK(j["verdict"] == "converges");
    CHECK(j["rho"] == "q^-1");
    CHECK(j["closedForm"] == "7/4");
    CHECK(j["mass"] == "7/4");
    CHECK(j["partialSums"].size() == 41);

    // determinism: a second run yields identical bytes
    Str trace2;
    REQUIRE(frobun_trace_json(a, c, 40, &trace2.s) == FROBUN_OK);
    CHECK(trace.get() == trace2.get());

    Str trunc;
    frobun_action* psi = nullptr;
    REQUIRE(frobun_action_parse(g, 1, 3, "psi", &psi) == FROBUN_OK);
    REQUIRE(frobun_truncated_trace_json(psi, c, 0, &trunc.s) == FROBUN_OK);
    Json uj = trunc.json();
    CHECK(uj["sign"] == "unsigned");
    CHECK(uj["value"] == "5/3");

    // composition expression with the classical-condition note
    frobun_action* comp = nullptr;
    REQUIRE(frobun_action_parse(g, 1, 3, "frob^2 o psi^3", &comp) == FROBUN_OK);
    Str ctrace;
    REQUIRE(frobun_trace_json(comp, c, 20, &ctrace.s) == FROBUN_OK);
    Json cj = ctrace.json();
    CHECK(cj["verdict"] == "converges");
    CHECK(cj["frobPsiNote"]["classicalConditionHolds"] == true);
    CHECK(cj["frobPsiNote"]["s"] == 2);

    // genus mismatch between action and curve
    frobun_action* wrong = nullptr;
    REQUIRE(frobun_action_parse(g, 2, 3, "frob", &wrong) == FROBUN_OK);
    Str bad;
    CHECK(frobun_trace_json(wrong, c, 10, &bad.s) == FROBUN_ERR_CONTEXT);

    CHECK(frobun_action_parse(g, 1, 3, "frob^", &wrong) == FROBUN_ERR_INVALID);

    frobun_action_free(a);
    frobun_action_free(psi);
    frobun_action_free(comp);
    frobun_action_free(wrong);
    frobun_curve_free(c);
    frobun_group_free(g);
}

TEST_CASE("classifying actions through the C API") {
    frobun_group* g = nullptr;
    REQUIRE(frobun_group_parse("A1", nullptr, &g) == FROBUN_OK);
    frobun_action* a = nullptr;
    REQUIRE(frobun_action_classifying(g, 3, "frob", &a) == FROBUN_OK);
    Str table;
    REQUIRE(frobun_action_table_json(a, &table.s) == FROBUN_OK);
    Json j = table.json();
    CHECK(j["classifying"] == true);
    CHECK(j["table"][0]["name"] == "c_1");
    CHECK(j["table"][0]["eigenvalue"] == "1 * q^-2");
    CHECK(frobun_action_classifying(g, 3, "psi", &a) == FROBUN_ERR_INVALID);

    // the generator-truncated trace needs the moduli-stack context
    frobun_curve* c = nullptr;
    long long counts[] = {4};
    REQUIRE(frobun_curve_from_counts(3, 1, counts, 1, &c) == FROBUN_OK);
    Str bad;
    CHECK(frobun_truncated_trace_json(a, c, 0, &bad.s) == FROBUN_ERR_INVALID);

    frobun_curve_free(c);
    frobun_action_free(a);
    frobun_group_free(g);
}
