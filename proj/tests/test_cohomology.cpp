#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frobun/cohomology.hpp"
#include "frobun/oracle.hpp"

using namespace frobun;

namespace {
GroupData sl2() { return group_from_type(Series::A, 1); }
GroupData sl3() { return group_from_type(Series::A, 2); }
GroupData g2() { return group_from_type(Series::G2, 2); }
GroupData gm() { return group_from_type(Series::Gm, 1); }
} // namespace

TEST_CASE("generator inventory for SL2, genus 1") {
    auto gens = generators(sl2(), 1);
    REQUIRE(gens.size() == 4);
    CHECK(gens[0] == GeneratorSpec{GenKind::a, 1, 0, 4});
    CHECK(gens[1] == GeneratorSpec{GenKind::f, 1, 0, 2});
    CHECK(gens[2] == GeneratorSpec{GenKind::b, 1, 1, 3});
    CHECK(gens[3] == GeneratorSpec{GenKind::b, 1, 2, 3});
    CHECK(gens[2].name() == "b_1^(1)");
}

TEST_CASE("generator inventory for Gm, genus 2: no f, degree-1 b's") {
    auto gens = generators(gm(), 2);
    REQUIRE(gens.size() == 5);
    CHECK(gens[0] == GeneratorSpec{GenKind::a, 1, 0, 2});
    for (unsigned j = 1; j <= 4; ++j)
        CHECK(gens[j] == GeneratorSpec{GenKind::b, 1, j, 1});
}

TEST_CASE("genus 0 has no b generators") {
    for (const auto& G : {sl2(), g2()})
        for (const auto& gen : generators(G, 0))
            CHECK(gen.kind != GenKind::b);
}

TEST_CASE("degenerate f-degree is rejected") {
    GroupData broken = gm();
    broken.has_f = {true}; // d_1 = 1 with an f generator present
    CHECK_THROWS_AS(generators(broken, 1), Error);
}

TEST_CASE("Poincare series of SL2 at genus 1") {
    IntSeries s = poincare_series(sl2(), 1, 6);
    CHECK(s.coeff == std::vector<Int>{1, 0, 1, 2, 2, 2, 3});
}

TEST_CASE("Poincare series of Gm at genus 1") {
    IntSeries s = poincare_series(gm(), 1, 3);
    CHECK(s.coeff == std::vector<Int>{1, 2, 2, 2});
}

TEST_CASE("unit coefficient in degree zero for every group") {
    for (const auto& G : {sl2(), sl3(), g2(), gm()})
        for (unsigned g : {0u, 1u, 3u})
            CHECK(poincare_series(G, g, 0).coeff[0] == 1);
}

TEST_CASE("betti extraction") {
    CHECK(betti(sl2(), 1, 6) == 3); // a*f, f^3, b1 b2
    CHECK(betti(sl2(), 1, 1) == 0);
    CHECK(betti(sl2(), 1, 3) == 2); // b_1^(1), b_1^(2)
}

TEST_CASE("degree 1 vanishes whenever all d_i >= 2") {
    for (const auto& G : {sl2(), sl3(), g2()})
        for (unsigned g : {0u, 1u, 2u})
            CHECK(betti(G, g, 1) == 0);
}

TEST_CASE("series against the brute-force monomial enumerator") {
    for (const auto& G : {sl2(), sl3(), g2()})
        for (unsigned g : {0u, 1u, 2u}) {
            CAPTURE(G.label());
            CAPTURE(g);
            IntSeries fast = poincare_series(G, g, 12);
            IntSeries slow = poincare_by_enumeration(G, g, 12);
            CHECK(fast.coeff == slow.coeff);
        }
    // Gm too (the enumerator knows nothing about include_f)
    for (unsigned g : {0u, 1u, 2u})
        CHECK(poincare_series(gm(), g, 8).coeff == poincare_by_enumeration(gm(), g, 8).coeff);
}

TEST_CASE("product group series is the convolution of the factors") {
    GroupData prod = group_product({sl2(), g2()});
    for (unsigned g : {0u, 1u, 2u}) {
        IntSeries lhs = poincare_series(prod, g, 16);
        IntSeries rhs = series_convolve(poincare_series(sl2(), g, 16), poincare_series(g2(), g, 16));
        CHECK(lhs.coeff == rhs.coeff);
    }
    // mixed product with a Gm factor keeps the per-factor f bookkeeping
    GroupData mixed = group_product({sl2(), gm()});
    for (unsigned g : {0u, 1u}) {
        IntSeries lhs = poincare_series(mixed, g, 10);
        IntSeries rhs = series_convolve(poincare_series(sl2(), g, 10), poincare_series(gm(), g, 10));
        CHECK(lhs.coeff == rhs.coeff);
        CHECK(lhs.coeff == poincare_by_enumeration(mixed, g, 10).coeff);
    }
}

TEST_CASE("coefficients are nonnegative and grow reasonably") {
    IntSeries s = poincare_series(g2(), 2, 40);
    for (const auto& c : s.coeff)
        CHECK(c >= 0);
}

TEST_CASE("classifying stack: polynomial generators in degrees 2d_i") {
    auto gens = classifying_generators(g2());
    REQUIRE(gens.size() == 2);
    CHECK(gens[0] == GeneratorSpec{GenKind::c, 1, 0, 4});
    CHECK(gens[1] == GeneratorSpec{GenKind::c, 2, 0, 12});
    // series = 1/((1-t^4)(1-t^12))
    IntSeries s = classifying_poincare_series(g2(), 16);
    CHECK(s.coeff[0] == 1);
    CHECK(s.coeff[4] == 1);
    CHECK(s.coeff[8] == 1);
    CHECK(s.coeff[12] == 2);  // c1^3, c2
    CHECK(s.coeff[16] == 2);  // c1^4, c1 c2
    CHECK(s.coeff[2] == 0);
}
