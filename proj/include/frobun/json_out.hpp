#pragma once

#include <json.hpp>

#include "frobun/oracle.hpp"

namespace frobun {

using Json = nlohmann::ordered_json;

// Canonical JSON: fixed key order, exact rationals as "num/den" strings,
// q-powers as "q^k" / "q^(k/2)" strings. Floats appear only in fields
// explicitly named *Numeric / *Check (diagnostics). Integer-valued data is
// emitted as a JSON number when it fits in 64 bits, as a decimal string
// otherwise, so output stays byte-deterministic.
Json json_int(const Int& v);
Json json_rat(const Rat& v);

// Structured form of an exact scalar sum, one object per monomial:
// {"coef":"-1/2","zeta":[3,1],"qHalves":-2,"lam":[1,0]}.
Json monomial_json(const ScalarMonomial& m);
Json sum_json(const ScalarSum& s);

Json group_json(const GroupData& G);
Json group_count_json(const GroupData& G, const PrimePower& q);
Json curve_zeta_json(const WeilPolynomial& P);
Json poincare_json(const GroupData& G, unsigned genus, unsigned max_degree, bool classifying,
                   const ComponentLabel& component = {});
Json action_table_json(const DiagonalAction& A);
Json trace_json(const TraceReport& rep, const DiagonalAction& A, const WeilPolynomial& P,
                const std::string& action_expr);
Json truncated_trace_json(const TruncatedTraceReport& rep, const DiagonalAction& A);
Json verify_json(const std::vector<VerifyCheck>& checks);

std::string dump_json(const Json& j);

} // namespace frobun
