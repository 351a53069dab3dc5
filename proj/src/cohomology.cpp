#include "frobun/cohomology.hpp"

namespace frobun {

std::string GeneratorSpec::name() const {
    switch (kind) {
    case GenKind::a: return "a_" + std::to_string(group_index);
    case GenKind::f: return "f_" + std::to_string(group_index);
    case GenKind::c: return "c_" + std::to_string(group_index);
    case GenKind::b:
        return "b_" + std::to_string(group_index) + "^(" + std::to_string(curve_index) + ")";
    }
    return "?";
}

std::vector<GeneratorSpec> generators(const GroupData& G, unsigned genus) {
    std::vector<GeneratorSpec> out;
    for (unsigned i = 1; i <= G.rank; ++i)
        out.push_back({GenKind::a, i, 0, 2 * G.degrees[i - 1]});
    for (unsigned i = 1; i <= G.rank; ++i) {
        if (!G.has_f[i - 1])
            continue;
        if (G.degrees[i - 1] < 2)
            fail(ErrorCode::DomainError, "degenerate f-generator of degree 0 (d_i = 1 with f present)");
        out.push_back({GenKind::f, i, 0, 2 * G.degrees[i - 1] - 2});
    }
    for (unsigned i = 1; i <= G.rank; ++i)
        for (unsigned j = 1; j <= 2 * genus; ++j)
            out.push_back({GenKind::b, i, j, 2 * G.degrees[i - 1] - 1});
    return out;
}

std::vector<GeneratorSpec> classifying_generators(const GroupData& G) {
    std::vector<GeneratorSpec> out;
    for (unsigned i = 1; i <= G.rank; ++i)
        out.push_back({GenKind::c, i, 0, 2 * G.degrees[i - 1]});
    return out;
}

namespace {

// multiply series (mod t^{M+1}) by 1/(1 - t^e)
void mul_geometric(std::vector<Int>& s, unsigned e) {
    // (sum s_m t^m) * (1 + t^e + t^{2e} + ...): prefix-sum with stride e
    for (std::size_t m = e; m < s.size(); ++m)
        s[m] += s[m - e];
}

// multiply series (mod t^{M+1}) by (1 + t^e)
void mul_exterior(std::vector<Int>& s, unsigned e) {
    for (std::size_t m = s.size(); m-- > e;)
        s[m] += s[m - e];
}

IntSeries series_from_generators(const std::vector<GeneratorSpec>& gens, unsigned max_degree) {
    std::vector<Int> s(max_degree + 1, Int(0));
    s[0] = 1;
    for (const auto& g : gens) {
        if (g.even()) {
            if (g.degree == 0)
                fail(ErrorCode::DomainError, "degenerate even generator of degree 0");
            mul_geometric(s, g.degree);
        } else {
            mul_exterior(s, g.degree);
        }
    }
    return IntSeries{std::move(s)};
}

} // namespace

IntSeries poincare_series(const GroupData& G, unsigned genus, unsigned max_degree) {
    return series_from_generators(generators(G, genus), max_degree);
}

IntSeries classifying_poincare_series(const GroupData& G, unsigned max_degree) {
    return series_from_generators(classifying_generators(G), max_degree);
}

Int betti(const GroupData& G, unsigned genus, unsigned m) {
    return poincare_series(G, genus, m).coeff[m];
}

IntSeries series_convolve(const IntSeries& a, const IntSeries& b) {
    std::size_t n = std::min(a.coeff.size(), b.coeff.size());
    std::vector<Int> c(n, Int(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n && j < b.coeff.size(); ++j)
            c[i + j] += a.coeff[i] * b.coeff[j];
    return IntSeries{std::move(c)};
}

} // namespace frobun
