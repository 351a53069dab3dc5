#pragma once

#include <string>
#include <vector>

#include "frobun/cohomology.hpp"

namespace frobun {

// psi / Frob act via the Galois generator (arithmetic); phi / Fbar via the
// q-power map (geometric). "Induced" transports the curve's Frobenius to
// the moduli stack, "absolute" acts on the whole stack.
enum class FrobeniusKind {
    InducedArithmetic,  // psi
    AbsoluteArithmetic, // frob
    InducedGeometric,   // phi
    AbsoluteGeometric,  // fbar
};

std::string frobenius_kind_name(FrobeniusKind k);
FrobeniusKind frobenius_kind_from_name(const std::string& name);

struct ActionContext {
    GroupData group;
    unsigned genus = 0;
    PrimePower q;
    bool classifying = false;

    bool operator==(const ActionContext&) const = default;
};

// A Frobenius (or any composition of the four kinds) as a diagonal action:
// one single-monomial eigenvalue per generator, stored parallel to the
// canonical generator list.
struct DiagonalAction {
    ActionContext context;
    std::vector<GeneratorSpec> gens;
    std::vector<ScalarMonomial> eigenvalues;

    const ScalarMonomial& eigenvalue(const GeneratorSpec& g) const;
    bool is_identity() const;
    bool operator==(const DiagonalAction&) const = default;
};

DiagonalAction base_action(FrobeniusKind kind, const GroupData& G, unsigned genus, const PrimePower& q);
DiagonalAction identity_action(const GroupData& G, unsigned genus, const PrimePower& q);

// Eigenvalues multiply generatorwise; contexts must match.
DiagonalAction compose(const DiagonalAction& A, const DiagonalAction& B);

// n-th power (negative n iterates the inverse; eigenvalues are units).
DiagonalAction iterate(const DiagonalAction& A, long n);

// Classifying-stack actions on c-generators; only the absolute kinds exist
// there (no curve to induce from).
DiagonalAction classifying_action(FrobeniusKind kind, const GroupData& G, const PrimePower& q);

} // namespace frobun
