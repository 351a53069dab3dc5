#pragma once

#include <optional>
#include <string>

#include "frobun/frobenius.hpp"

namespace frobun {

// Grammar: atom in {psi, phi, frob, fbar}, optional "^<int>" iteration,
// compositions joined by "o" and applied right-to-left (function
// composition order, so "frob^2 o psi^3" iterates psi first).
DiagonalAction parse_action_expr(const std::string& expr, const GroupData& G, unsigned genus,
                                 const PrimePower& q);

// Recognize "frob^s o psi^n" (s >= 1, n >= 0) up to reordering; used to
// report the classical convergence condition next to the computed verdict.
struct FrobPsiPattern {
    long s = 0;
    long n = 0;
};
std::optional<FrobPsiPattern> match_frob_psi(const std::string& expr);

} // namespace frobun
