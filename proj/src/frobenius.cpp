#include "frobun/frobenius.hpp"

#include <algorithm>

namespace frobun {

std::string frobenius_kind_name(FrobeniusKind k) {
    switch (k) {
    case FrobeniusKind::InducedArithmetic: return "psi";
    case FrobeniusKind::AbsoluteArithmetic: return "frob";
    case FrobeniusKind::InducedGeometric: return "phi";
    case FrobeniusKind::AbsoluteGeometric: return "fbar";
    }
    return "?";
}

FrobeniusKind frobenius_kind_from_name(const std::string& name) {
    if (name == "psi")
        return FrobeniusKind::InducedArithmetic;
    if (name == "frob")
        return FrobeniusKind::AbsoluteArithmetic;
    if (name == "phi")
        return FrobeniusKind::InducedGeometric;
    if (name == "fbar")
        return FrobeniusKind::AbsoluteGeometric;
    fail(ErrorCode::InvalidArgument, "unknown Frobenius kind '" + name + "' (psi, phi, frob, fbar)");
}

const ScalarMonomial& DiagonalAction::eigenvalue(const GeneratorSpec& g) const {
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i] == g)
            return eigenvalues[i];
    fail(ErrorCode::InvalidArgument, "generator " + g.name() + " not in action context");
}

bool DiagonalAction::is_identity() const {
    return std::all_of(eigenvalues.begin(), eigenvalues.end(),
                       [](const ScalarMonomial& m) { return m.is_one(); });
}

DiagonalAction base_action(FrobeniusKind kind, const GroupData& G, unsigned genus, const PrimePower& q) {
    DiagonalAction A;
    A.context = {G, genus, q, false};
    A.gens = generators(G, genus);
    std::size_t two_g = 2 * genus;
    for (const auto& gen : A.gens) {
        unsigned i = gen.group_index;
        long d = static_cast<long>(G.degrees[i - 1]);
        ScalarMonomial ev = ScalarMonomial::one(two_g);
        switch (kind) {
        case FrobeniusKind::InducedArithmetic: // psi: a -> a, b -> L^-1 b, f -> q^-1 f
            if (gen.kind == GenKind::b)
                ev.lam[gen.curve_index - 1] = -1;
            else if (gen.kind == GenKind::f)
                ev.qexp.halves = -2;
            break;
        case FrobeniusKind::InducedGeometric: // phi: a -> a, b -> L b, f -> q f
            if (gen.kind == GenKind::b)
                ev.lam[gen.curve_index - 1] = 1;
            else if (gen.kind == GenKind::f)
                ev.qexp.halves = 2;
            break;
        case FrobeniusKind::AbsoluteArithmetic: // frob: eps_i q^{-d_i} (a), L eps_i q^{-d_i} (b), eps_i q^{-d_i+1} (f)
            ev.zeta = G.eps[i - 1];
            ev.qexp.halves = -2 * d;
            if (gen.kind == GenKind::b)
                ev.lam[gen.curve_index - 1] = 1;
            else if (gen.kind == GenKind::f)
                ev.qexp.halves = -2 * (d - 1);
            break;
        case FrobeniusKind::AbsoluteGeometric: // fbar: eps_i^-1 q^{d_i} (a), L^-1 eps_i^-1 q^{d_i} (b), eps_i^-1 q^{d_i-1} (f)
            ev.zeta = G.eps[i - 1].inverse();
            ev.qexp.halves = 2 * d;
            if (gen.kind == GenKind::b)
                ev.lam[gen.curve_index - 1] = -1;
            else if (gen.kind == GenKind::f)
                ev.qexp.halves = 2 * (d - 1);
            break;
        }
        ev.normalize();
        A.eigenvalues.push_back(std::move(ev));
    }
    return A;
}

DiagonalAction identity_action(const GroupData& G, unsigned genus, const PrimePower& q) {
    DiagonalAction A;
    A.context = {G, genus, q, false};
    A.gens = generators(G, genus);
    A.eigenvalues.assign(A.gens.size(), ScalarMonomial::one(2 * genus));
    return A;
}

DiagonalAction compose(const DiagonalAction& A, const DiagonalAction& B) {
    if (!(A.context == B.context))
        fail(ErrorCode::ContextError, "cannot compose actions with different contexts");
    DiagonalAction C = A;
    for (std::size_t i = 0; i < C.eigenvalues.size(); ++i)
        C.eigenvalues[i] = monomial_mul(A.eigenvalues[i], B.eigenvalues[i]);
    return C;
}

DiagonalAction iterate(const DiagonalAction& A, long n) {
    DiagonalAction C = A;
    for (auto& ev : C.eigenvalues)
        ev = monomial_pow(ev, n);
    return C;
}

DiagonalAction classifying_action(FrobeniusKind kind, const GroupData& G, const PrimePower& q) {
    if (kind == FrobeniusKind::InducedArithmetic || kind == FrobeniusKind::InducedGeometric)
        fail(ErrorCode::InvalidArgument,
             "induced Frobenius kinds do not exist on the classifying stack (no curve)");
    DiagonalAction A;
    A.context = {G, 0, q, true};
    A.gens = classifying_generators(G);
    for (const auto& gen : A.gens) {
        long d = static_cast<long>(G.degrees[gen.group_index - 1]);
        ScalarMonomial ev = ScalarMonomial::one(0);
        if (kind == FrobeniusKind::AbsoluteArithmetic) {
            ev.zeta = G.eps[gen.group_index - 1];
            ev.qexp.halves = -2 * d;
        } else {
            ev.zeta = G.eps[gen.group_index - 1].inverse();
            ev.qexp.halves = 2 * d;
        }
        ev.normalize();
        A.eigenvalues.push_back(std::move(ev));
    }
    return A;
}

} // namespace frobun
