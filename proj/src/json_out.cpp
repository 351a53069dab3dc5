#include "frobun/json_out.hpp"

#include "frobun/action_expr.hpp"

namespace frobun {

Json json_int(const Int& v) {
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

Json json_rat(const Rat& v) { return rat_str(v); }

Json monomial_json(const ScalarMonomial& m) {
    Json j;
    j["coef"] = rat_str(m.coef);
    j["zeta"] = {m.zeta.order, m.zeta.exponent};
    j["qHalves"] = m.qexp.halves;
    j["lam"] = m.lam;
    return j;
}

Json sum_json(const ScalarSum& s) {
    Json terms = Json::array();
    for (const auto& t : s.terms)
        terms.push_back(monomial_json(t));
    Json j;
    j["terms"] = terms;
    j["text"] = sum_str(s);
    return j;
}

Json group_json(const GroupData& G) {
    Json j;
    j["series"] = series_name(G.series);
    j["label"] = G.label();
    j["rank"] = G.rank;
    j["degrees"] = G.degrees;
    j["dimension"] = G.dimension;
    Json eps = Json::array();
    for (const auto& e : G.eps)
        eps.push_back({e.order, e.exponent});
    j["eps"] = eps;
    j["includeF"] = G.include_f_all();
    if (G.series == Series::Product) {
        Json factors = Json::array();
        for (const auto& f : G.factors)
            factors.push_back(group_json(f));
        j["factors"] = factors;
    }
    return j;
}

Json group_count_json(const GroupData& G, const PrimePower& q) {
    SteinbergCount c = steinberg_count(G, q);
    Json j;
    j["group"] = group_json(G);
    j["q"] = q.value().get_ui();
    j["qDimExponent"] = c.q_dim_exponent;
    Json factors = Json::array();
    for (const auto& f : c.factors)
        factors.push_back(sum_str(f));
    j["factors"] = factors;
    j["value"] = c.value ? json_rat(*c.value) : Json(nullptr);
    j["valueNumeric"] = c.numeric.real();
    return j;
}

Json curve_zeta_json(const WeilPolynomial& P) {
    Json j;
    j["q"] = P.q.value().get_ui();
    j["g"] = P.g;
    Json coeffs = Json::array();
    for (const auto& a : P.coeffs)
        coeffs.push_back(json_int(a));
    j["P"] = coeffs;
    j["lambdaAbsCheck"] = lambda_abs_check(P);
    Json counts = Json::array();
    unsigned kmax = std::max(3u, P.g);
    for (unsigned k = 1; k <= kmax; ++k)
        counts.push_back(json_int(point_count_from_weil(P, k)));
    j["counts"] = counts;
    return j;
}

namespace {

Json generator_json(const GeneratorSpec& g) {
    Json j;
    switch (g.kind) {
    case GenKind::a: j["kind"] = "a"; break;
    case GenKind::f: j["kind"] = "f"; break;
    case GenKind::b: j["kind"] = "b"; break;
    case GenKind::c: j["kind"] = "c"; break;
    }
    j["i"] = g.group_index;
    if (g.kind == GenKind::b)
        j["j"] = g.curve_index;
    j["deg"] = g.degree;
    return j;
}

} // namespace

Json poincare_json(const GroupData& G, unsigned genus, unsigned max_degree, bool classifying,
                   const ComponentLabel& component) {
    Json j;
    j["group"] = G.label();
    if (!classifying) {
        j["genus"] = genus;
        j["component"] = component.theta;
    }
    j["classifying"] = classifying;
    j["maxDegree"] = max_degree;
    IntSeries s = classifying ? classifying_poincare_series(G, max_degree)
                              : poincare_series(G, genus, max_degree);
    Json dims = Json::array();
    for (const auto& c : s.coeff)
        dims.push_back(json_int(c));
    j["dims"] = dims;
    Json gens = Json::array();
    for (const auto& g : (classifying ? classifying_generators(G) : generators(G, genus)))
        gens.push_back(generator_json(g));
    j["generators"] = gens;
    return j;
}

Json action_table_json(const DiagonalAction& A) {
    Json j;
    j["group"] = A.context.group.label();
    if (!A.context.classifying)
        j["genus"] = A.context.genus;
    j["classifying"] = A.context.classifying;
    j["q"] = A.context.q.value().get_ui();
    Json table = Json::array();
    for (std::size_t i = 0; i < A.gens.size(); ++i) {
        Json row;
        row["gen"] = generator_json(A.gens[i]);
        row["name"] = A.gens[i].name();
        row["eigenvalue"] = monomial_str(A.eigenvalues[i]);
        row["eigenvalueTerms"] = monomial_json(A.eigenvalues[i]);
        table.push_back(row);
    }
    j["table"] = table;
    return j;
}

Json trace_json(const TraceReport& rep, const DiagonalAction& A, const WeilPolynomial& P,
                const std::string& action_expr) {
    Json j;
    j["verdict"] = verdict_name(rep.convergence.verdict);
    j["rho"] = rep.convergence.rho ? Json(rep.convergence.rho->str()) : Json(nullptr);
    j["closedForm"] = rep.closed_form ? json_rat(*rep.closed_form) : Json(nullptr);
    Json sums = Json::array();
    for (const auto& sv : rep.partial_sums)
        sums.push_back(json_rat(sv));
    j["partialSums"] = sums;
    if (rep.mass)
        j["mass"] = json_rat(*rep.mass);
    j["errorBound"] = rep.error_bound ? Json(rep.error_bound->str()) : Json(nullptr);
    j["errorBoundExact"] = rep.error_bound_exact ? Json(rep.error_bound_exact->str()) : Json(nullptr);

    Json offenders = Json::array();
    for (const auto& g : rep.convergence.offenders)
        offenders.push_back(g.name());
    j["offenders"] = offenders;
    Json mags = Json::array();
    for (const auto& gm : rep.convergence.magnitudes) {
        Json row;
        row["gen"] = gm.gen.name();
        row["magnitude"] = gm.magnitude.str();
        mags.push_back(row);
    }
    j["magnitudes"] = mags;

    Json factors = Json::array();
    for (const auto& f : rep.factors) {
        Json row;
        row["i"] = f.group_index;
        row["numerator"] = sum_str(f.numerator);
        row["numeratorTerms"] = sum_json(f.numerator)["terms"];
        Json dens = Json::array();
        for (const auto& d : f.denominators)
            dens.push_back(sum_str(d));
        row["denominators"] = dens;
        row["value"] = f.value ? json_rat(*f.value) : Json(nullptr);
        factors.push_back(row);
    }
    j["factors"] = factors;

    // the classical condition for frob^s o psi^n, printed next to the
    // computed verdict (the exact exponent arithmetic is stronger)
    if (auto pat = match_frob_psi(action_expr)) {
        Json note;
        note["s"] = pat->s;
        note["n"] = pat->n;
        note["classicalCondition"] = "n > s";
        note["classicalConditionHolds"] = pat->n > pat->s;
        note["computedVerdict"] = verdict_name(rep.convergence.verdict);
        j["frobPsiNote"] = note;
    }

    j["q"] = P.q.value().get_ui();
    j["genus"] = A.context.genus;
    j["group"] = A.context.group.label();
    j["action"] = action_expr;
    return j;
}

Json truncated_trace_json(const TruncatedTraceReport& rep, const DiagonalAction& A) {
    Json j;
    j["mode"] = "truncated";
    j["sign"] = rep.sign == SignMode::Unsigned ? "unsigned" : "signed";
    j["aPart"] = rep.a_part ? json_rat(*rep.a_part) : Json(nullptr);
    j["fPart"] = rep.f_part ? json_rat(*rep.f_part) : Json(nullptr);
    j["exteriorPart"] = rep.exterior_part ? json_rat(*rep.exterior_part) : Json(nullptr);
    j["value"] = rep.value ? json_rat(*rep.value) : Json(nullptr);
    j["aPartSymbolic"] = sum_str(rep.a_symbolic);
    j["fPartSymbolic"] = sum_str(rep.f_symbolic);
    j["exteriorBound"] = rep.exterior_bound.str();
    j["group"] = A.context.group.label();
    j["genus"] = A.context.genus;
    return j;
}

Json verify_json(const std::vector<VerifyCheck>& checks) {
    Json j;
    Json arr = Json::array();
    bool all = true;
    for (const auto& c : checks) {
        Json row;
        row["name"] = c.name;
        row["pass"] = c.pass;
        if (!c.detail.empty())
            row["detail"] = c.detail;
        arr.push_back(row);
        all = all && c.pass;
    }
    j["checks"] = arr;
    j["allPass"] = all;
    return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

} // namespace frobun
