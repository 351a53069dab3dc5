#pragma once

#include <string>
#include <vector>

#include "frobun/group.hpp"

namespace frobun {

enum class GenKind { a, f, b, c };

// Name of a connected component of the moduli stack (an element of
// pi_1(G)). Metadata only: generator degrees and eigenvalue tables are the
// same on every component, so nothing downstream branches on it.
struct ComponentLabel {
    std::string theta = "0";
    bool operator==(const ComponentLabel&) const = default;
};

// One Atiyah-Bott generator (or a classifying-stack c-generator).
// Degrees: a_i in 2d_i, b_i^{(j)} in 2d_i - 1, f_i in 2d_i - 2, c_i in 2d_i.
// a/f/c generate polynomially, b exterior-wise.
struct GeneratorSpec {
    GenKind kind = GenKind::a;
    unsigned group_index = 1; // i in 1..r
    unsigned curve_index = 0; // j in 1..2g, kind b only
    unsigned degree = 0;

    bool even() const { return kind != GenKind::b; }
    std::string name() const; // "a_1", "b_2^(3)", ...
    bool operator==(const GeneratorSpec&) const = default;
};

// Canonical generator list for one connected component of the moduli stack:
// a_1..a_r, f_i (where present), then b_i^(j) with i major, j minor.
std::vector<GeneratorSpec> generators(const GroupData& G, unsigned genus);

// Classifying-stack generators c_1..c_r in degrees 2d_i.
std::vector<GeneratorSpec> classifying_generators(const GroupData& G);

// Truncated integer series; index = cohomological degree.
struct IntSeries {
    std::vector<Int> coeff;

    unsigned truncation() const { return static_cast<unsigned>(coeff.size()) - 1; }
};

IntSeries poincare_series(const GroupData& G, unsigned genus, unsigned max_degree);
IntSeries classifying_poincare_series(const GroupData& G, unsigned max_degree);
Int betti(const GroupData& G, unsigned genus, unsigned m);

// Coefficientwise (Cauchy) product, truncated to the shorter input.
IntSeries series_convolve(const IntSeries& a, const IntSeries& b);

} // namespace frobun
