#include "frobun/group.hpp"

#include <algorithm>
#include <numeric>

#include "frobun/finite_field.hpp"

namespace frobun {

namespace {

std::vector<unsigned> weyl_degrees(Series s, unsigned rank) {
    std::vector<unsigned> d;
    switch (s) {
    case Series::A: // rank n: 2..n+1
        if (rank < 1)
            fail(ErrorCode::InvalidArgument, "A series needs rank >= 1");
        for (unsigned i = 2; i <= rank + 1; ++i)
            d.push_back(i);
        break;
    case Series::B:
    case Series::C: // 2,4,...,2n
        if (rank < 2)
            fail(ErrorCode::InvalidArgument, "B/C series needs rank >= 2");
        for (unsigned i = 1; i <= rank; ++i)
            d.push_back(2 * i);
        break;
    case Series::D: // 2,4,...,2n-2,n
        if (rank < 3)
            fail(ErrorCode::InvalidArgument, "D series needs rank >= 3");
        for (unsigned i = 1; i + 1 <= rank; ++i)
            d.push_back(2 * i);
        d.push_back(rank);
        break;
    case Series::G2:
        if (rank != 2)
            fail(ErrorCode::InvalidArgument, "G2 has rank 2");
        d = {2, 6};
        break;
    case Series::F4:
        if (rank != 4)
            fail(ErrorCode::InvalidArgument, "F4 has rank 4");
        d = {2, 6, 8, 12};
        break;
    case Series::E6:
        if (rank != 6)
            fail(ErrorCode::InvalidArgument, "E6 has rank 6");
        d = {2, 5, 6, 8, 9, 12};
        break;
    case Series::E7:
        if (rank != 7)
            fail(ErrorCode::InvalidArgument, "E7 has rank 7");
        d = {2, 6, 8, 10, 12, 14, 18};
        break;
    case Series::E8:
        if (rank != 8)
            fail(ErrorCode::InvalidArgument, "E8 has rank 8");
        d = {2, 8, 12, 14, 18, 20, 24, 30};
        break;
    case Series::Gm:
        if (rank != 1)
            fail(ErrorCode::InvalidArgument, "Gm has rank 1");
        d = {1};
        break;
    case Series::Product:
        fail(ErrorCode::InvalidArgument, "product groups are built from factors");
    }
    return d;
}

} // namespace

std::string series_name(Series s) {
    switch (s) {
    case Series::A: return "A";
    case Series::B: return "B";
    case Series::C: return "C";
    case Series::D: return "D";
    case Series::E6: return "E6";
    case Series::E7: return "E7";
    case Series::E8: return "E8";
    case Series::F4: return "F4";
    case Series::G2: return "G2";
    case Series::Gm: return "Gm";
    case Series::Product: return "product";
    }
    return "?";
}

bool GroupData::include_f_all() const {
    return std::all_of(has_f.begin(), has_f.end(), [](bool b) { return b; });
}

std::string GroupData::label() const {
    if (series == Series::Product) {
        std::string s;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i)
                s += "x";
            s += factors[i].label();
        }
        return s;
    }
    if (series == Series::Gm || series == Series::E6 || series == Series::E7 || series == Series::E8 ||
        series == Series::F4 || series == Series::G2)
        return series_name(series);
    return series_name(series) + std::to_string(rank);
}

GroupData group_from_type(Series series, unsigned rank,
                          const std::optional<std::vector<RootOfUnity>>& eps_override) {
    GroupData g;
    g.series = series;
    g.rank = rank;
    g.degrees = weyl_degrees(series, rank);
    unsigned sum = std::accumulate(g.degrees.begin(), g.degrees.end(), 0u);
    if (series == Series::Gm) {
        g.dimension = 1;
        g.has_f = {false};
    } else {
        for (unsigned d : g.degrees)
            if (d < 2)
                fail(ErrorCode::Internal, "semisimple degree table entry < 2");
        g.dimension = 2 * sum - rank;
        g.has_f.assign(rank, true);
    }
    if (eps_override) {
        if (eps_override->size() != rank)
            fail(ErrorCode::InvalidArgument, "eps override must list " + std::to_string(rank) + " roots of unity");
        g.eps = *eps_override;
        for (auto& e : g.eps) {
            int sign = 1;
            e = normalize_root(e, sign);
            if (sign < 0)
                e = RootOfUnity{2, 1}; // keep -1 as an explicit twist
        }
    } else {
        g.eps.assign(rank, RootOfUnity::one());
    }
    return g;
}

GroupData group_product(const std::vector<GroupData>& factors) {
    if (factors.empty())
        fail(ErrorCode::InvalidArgument, "empty product group");
    if (factors.size() == 1)
        return factors.front();
    GroupData g;
    g.series = Series::Product;
    g.factors = factors;
    for (const auto& f : factors) {
        g.rank += f.rank;
        g.dimension += f.dimension;
        g.degrees.insert(g.degrees.end(), f.degrees.begin(), f.degrees.end());
        g.eps.insert(g.eps.end(), f.eps.begin(), f.eps.end());
        g.has_f.insert(g.has_f.end(), f.has_f.begin(), f.has_f.end());
    }
    return g;
}

GroupData parse_group(const std::string& spec, const std::optional<std::vector<RootOfUnity>>& eps_override) {
    if (spec.empty() || spec.front() == 'x' || spec.back() == 'x' || spec.find("xx") != std::string::npos)
        fail(ErrorCode::InvalidArgument, "bad group spec '" + spec + "'");
    std::vector<GroupData> factors;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t next = spec.find('x', pos);
        std::string tok = spec.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? spec.size() : next + 1;
        if (tok.empty())
            fail(ErrorCode::InvalidArgument, "empty group token in '" + spec + "'");
        Series s;
        unsigned rank = 0;
        if (tok == "Gm") {
            s = Series::Gm;
            rank = 1;
        } else {
            char c = tok[0];
            std::string rest = tok.substr(1);
            if (rest.empty() || rest.size() > 3 ||
                rest.find_first_not_of("0123456789") != std::string::npos)
                fail(ErrorCode::InvalidArgument, "bad group token '" + tok + "'");
            rank = static_cast<unsigned>(std::stoul(rest));
            switch (c) {
            case 'A': s = Series::A; break;
            case 'B': s = Series::B; break;
            case 'C': s = Series::C; break;
            case 'D': s = Series::D; break;
            case 'E':
                if (rank == 6) s = Series::E6;
                else if (rank == 7) s = Series::E7;
                else if (rank == 8) s = Series::E8;
                else fail(ErrorCode::InvalidArgument, "E series rank must be 6, 7 or 8");
                break;
            case 'F':
                if (rank != 4)
                    fail(ErrorCode::InvalidArgument, "F series rank must be 4");
                s = Series::F4;
                break;
            case 'G':
                if (rank != 2)
                    fail(ErrorCode::InvalidArgument, "G series rank must be 2");
                s = Series::G2;
                break;
            default:
                fail(ErrorCode::InvalidArgument, "unknown series '" + std::string(1, c) + "'");
            }
        }
        factors.push_back(group_from_type(s, rank));
    }
    GroupData g = group_product(factors);
    if (eps_override) {
        if (eps_override->size() != g.rank)
            fail(ErrorCode::InvalidArgument, "eps override must list " + std::to_string(g.rank) + " roots of unity");
        g.eps = *eps_override;
        for (auto& e : g.eps) {
            int sign = 1;
            e = normalize_root(e, sign);
            if (sign < 0)
                e = RootOfUnity{2, 1};
        }
    }
    return g;
}

SteinbergCount steinberg_count(const GroupData& g, const PrimePower& q) {
    SteinbergCount out;
    out.q_dim_exponent = static_cast<long>(g.dimension);
    bool rational = true;
    Rat val = int_pow(q.p, static_cast<long>(q.s) * static_cast<long>(g.dimension));
    std::complex<double> num(val.get_d(), 0.0);
    for (unsigned i = 0; i < g.rank; ++i) {
        ScalarMonomial t;
        t.coef = -1;
        t.zeta = g.eps[i];
        t.qexp.halves = -2 * static_cast<long>(g.degrees[i]);
        t.normalize();
        ScalarSum factor = sum_add(ScalarSum::one(), ScalarSum(t));
        out.factors.push_back(factor);
        std::complex<double> fn = evaluate_numeric(factor, q, {});
        num *= fn;
        if (t.zeta.is_one()) {
            val *= Rat(1) + t.coef * q_half_pow(q, t.qexp.halves);
        } else {
            rational = false;
        }
    }
    out.numeric = num;
    if (rational)
        out.value = val;
    return out;
}

Int brute_force_count_sl(unsigned n, unsigned long q) {
    if (n != 2 && n != 3)
        fail(ErrorCode::InvalidArgument, "brute force SL count supports n in {2,3}");
    PrimePower pp = prime_power_from_value(q);
    double cells = std::pow(static_cast<double>(q), static_cast<double>(n * n));
    if (cells > 1e8)
        fail(ErrorCode::DomainError, "enumeration cap exceeded for SL_" + std::to_string(n) + "(F_" +
                                         std::to_string(q) + ")");
    FiniteField F(pp.p, pp.s);
    unsigned long N = F.size();
    Int count = 0;
    if (n == 2) {
        for (unsigned long a = 0; a < N; ++a)
            for (unsigned long b = 0; b < N; ++b)
                for (unsigned long c = 0; c < N; ++c)
                    for (unsigned long d = 0; d < N; ++d)
                        if (F.sub(F.mul(a, d), F.mul(b, c)) == 1)
                            ++count;
        return count;
    }
    for (unsigned long a = 0; a < N; ++a)
        for (unsigned long b = 0; b < N; ++b)
            for (unsigned long c = 0; c < N; ++c)
                for (unsigned long d = 0; d < N; ++d)
                    for (unsigned long e = 0; e < N; ++e)
                        for (unsigned long f = 0; f < N; ++f) {
                            // det = a(ei-fh) - b(di-fg) + c(dh-eg)
                            for (unsigned long gg = 0; gg < N; ++gg)
                                for (unsigned long h = 0; h < N; ++h)
                                    for (unsigned long i = 0; i < N; ++i) {
                                        unsigned long det = F.sub(
                                            F.add(F.mul(a, F.sub(F.mul(e, i), F.mul(f, h))),
                                                  F.mul(c, F.sub(F.mul(d, h), F.mul(e, gg)))),
                                            F.mul(b, F.sub(F.mul(d, i), F.mul(f, gg))));
                                        if (det == 1)
                                            ++count;
                                    }
                        }
    return count;
}

} // namespace frobun
