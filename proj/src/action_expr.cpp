#include "frobun/action_expr.hpp"

#include <cctype>

namespace frobun {

namespace {

struct Token {
    std::string atom;
    long power = 1;
};

std::vector<Token> tokenize(const std::string& expr) {
    std::vector<Token> tokens;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < expr.size() && std::isspace(static_cast<unsigned char>(expr[pos])))
            ++pos;
    };
    bool expect_atom = true;
    while (true) {
        skip_ws();
        if (pos >= expr.size())
            break;
        if (!expect_atom) {
            if (expr[pos] != 'o')
                fail(ErrorCode::InvalidArgument,
                     "action expression: expected 'o' at position " + std::to_string(pos));
            ++pos;
            expect_atom = true;
            continue;
        }
        std::size_t start = pos;
        while (pos < expr.size() && std::isalpha(static_cast<unsigned char>(expr[pos])))
            ++pos;
        std::string word = expr.substr(start, pos - start);
        if (word.empty() || word == "o")
            fail(ErrorCode::InvalidArgument,
                 "action expression: expected an atom at position " + std::to_string(start));
        Token t;
        t.atom = word;
        skip_ws();
        if (pos < expr.size() && expr[pos] == '^') {
            ++pos;
            skip_ws();
            std::size_t nstart = pos;
            if (pos < expr.size() && (expr[pos] == '-' || expr[pos] == '+'))
                ++pos;
            while (pos < expr.size() && std::isdigit(static_cast<unsigned char>(expr[pos])))
                ++pos;
            if (pos == nstart || (pos - nstart == 1 && !std::isdigit(static_cast<unsigned char>(expr[nstart]))))
                fail(ErrorCode::InvalidArgument,
                     "action expression: expected an integer exponent at position " + std::to_string(nstart));
            if (pos - nstart > 6)
                fail(ErrorCode::InvalidArgument, "action expression: exponent out of range");
            t.power = std::stol(expr.substr(nstart, pos - nstart));
        }
        tokens.push_back(std::move(t));
        expect_atom = false;
    }
    if (tokens.empty())
        fail(ErrorCode::InvalidArgument, "empty action expression");
    if (expect_atom)
        fail(ErrorCode::InvalidArgument, "action expression: trailing 'o'");
    return tokens;
}

} // namespace

DiagonalAction parse_action_expr(const std::string& expr, const GroupData& G, unsigned genus,
                                 const PrimePower& q) {
    std::vector<Token> tokens = tokenize(expr);
    // right-to-left application; diagonal actions commute, so this is a
    // documentation choice rather than a numerical one
    DiagonalAction result = identity_action(G, genus, q);
    for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
        FrobeniusKind kind = frobenius_kind_from_name(it->atom);
        result = compose(iterate(base_action(kind, G, genus, q), it->power), result);
    }
    return result;
}

std::optional<FrobPsiPattern> match_frob_psi(const std::string& expr) {
    std::vector<Token> tokens;
    try {
        tokens = tokenize(expr);
    } catch (const Error&) {
        return std::nullopt;
    }
    FrobPsiPattern pat;
    bool saw_frob = false, saw_psi = false;
    for (const auto& t : tokens) {
        if (t.atom == "frob" && !saw_frob && t.power >= 1) {
            pat.s = t.power;
            saw_frob = true;
        } else if (t.atom == "psi" && !saw_psi && t.power >= 0) {
            pat.n = t.power;
            saw_psi = true;
        } else {
            return std::nullopt;
        }
    }
    if (!saw_frob || !saw_psi)
        return std::nullopt;
    return pat;
}

} // namespace frobun
