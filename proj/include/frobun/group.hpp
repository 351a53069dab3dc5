#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobun/scalar.hpp"

namespace frobun {

enum class Series { A, B, C, D, E6, E7, E8, F4, G2, Gm, Product };

std::string series_name(Series s);

// Group descriptor: rank, Weyl degrees, dimension, twist roots of unity.
// Semisimple series satisfy dim = 2*sum(d_i) - r and d_i >= 2; Gm is the
// rank-1 torus special case (d_1 = 1, no f-generators).
struct GroupData {
    Series series = Series::A;
    std::vector<GroupData> factors; // Product only
    unsigned rank = 0;
    std::vector<unsigned> degrees;
    unsigned dimension = 0;
    std::vector<RootOfUnity> eps;
    std::vector<bool> has_f; // per degree index; all true except Gm factors

    bool include_f_all() const;
    bool operator==(const GroupData&) const = default;
    std::string label() const; // "A1", "G2", "A1xGm", ...
};

GroupData group_from_type(Series series, unsigned rank,
                          const std::optional<std::vector<RootOfUnity>>& eps_override = std::nullopt);

GroupData group_product(const std::vector<GroupData>& factors);

// Parse "A1", "E8", "Gm", "B3", products joined with 'x': "A1xG2".
GroupData parse_group(const std::string& spec,
                      const std::optional<std::vector<RootOfUnity>>& eps_override = std::nullopt);

// #G(F_q) = q^dim * prod_i (1 - eps_i q^{-d_i}). The factors are exact
// ScalarSums; `value` is present when every factor is rational (all eps of
// order <= 2) and is then an exact rational (an integer for split groups).
struct SteinbergCount {
    std::vector<ScalarSum> factors; // (1 - eps_i q^{-d_i}) per i
    long q_dim_exponent = 0;
    std::optional<Rat> value;
    std::complex<double> numeric; // diagnostic
};

SteinbergCount steinberg_count(const GroupData& g, const PrimePower& q);

// Exhaustive count of n x n matrices over F_q with det 1 (independent
// oracle for the Steinberg formula). Candidate cap: q^{n^2} <= 10^8.
Int brute_force_count_sl(unsigned n, unsigned long q);

} // namespace frobun
