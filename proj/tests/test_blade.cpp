#include <doctest.h>

#include <vector>

#include "gapower/blade.hpp"
#include "gapower/errors.hpp"
#include "support/oracles.hpp"

using gapower::Blade;
using gapower::blade_product;

namespace {

// All 2^n canonical blades over indices 1..n.
std::vector<Blade> all_blades(unsigned n) {
    std::vector<Blade> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<unsigned> idx;
        for (unsigned bit = 0; bit < n; ++bit)
            if (mask & (1u << bit)) idx.push_back(bit + 1);
        out.emplace_back(std::span<const unsigned>(idx));
    }
    return out;
}

} // namespace

TEST_CASE("blade construction and accessors") {
    CHECK(Blade{}.grade() == 0);
    CHECK(Blade{}.max_index() == 0);
    CHECK(Blade::scalar() == Blade{});
    CHECK(Blade::vector(3).grade() == 1);
    CHECK(Blade::vector(3).max_index() == 3);
    CHECK(Blade::bivector(1, 4) == Blade{1, 4});
    CHECK(Blade{1, 2, 5}.grade() == 3);

    CHECK_THROWS_AS((Blade{2, 1}), gapower::InvalidInput);  // not ascending
    CHECK_THROWS_AS((Blade{1, 1}), gapower::InvalidInput);  // repeated
    CHECK_THROWS_AS((Blade{0, 1}), gapower::InvalidInput);  // orders are 1-based
    CHECK_THROWS_AS(Blade::bivector(4, 1), gapower::InvalidInput);
    CHECK_THROWS_AS(Blade::vector(0), gapower::InvalidInput);
}

TEST_CASE("blade ordering is grade-major") {
    CHECK(Blade::scalar() < Blade::vector(1));
    CHECK(Blade::vector(9) < Blade::bivector(1, 2));
    CHECK(Blade::bivector(1, 3) < Blade::bivector(2, 3));
    CHECK(Blade::bivector(1, 2) < Blade::bivector(1, 3));
}

TEST_CASE("blade product unit cases") {
    auto [b1, s1] = blade_product(Blade::vector(1), Blade::vector(2));
    CHECK(b1 == Blade::bivector(1, 2));
    CHECK(s1 == 1);

    auto [b2, s2] = blade_product(Blade::vector(2), Blade::vector(1));
    CHECK(b2 == Blade::bivector(1, 2));
    CHECK(s2 == -1);

    auto [b3, s3] = blade_product(Blade::vector(2), Blade::vector(2));
    CHECK(b3 == Blade::scalar());
    CHECK(s3 == 1);

    // Contraction from the left: (s1 s2) s2 = s1.
    auto [b4, s4] = blade_product(Blade::bivector(1, 2), Blade::vector(2));
    CHECK(b4 == Blade::vector(1));
    CHECK(s4 == 1);

    auto [b5, s5] = blade_product(Blade::scalar(), Blade::bivector(3, 7));
    CHECK(b5 == Blade::bivector(3, 7));
    CHECK(s5 == 1);
}

TEST_CASE("blade squares follow the grade rule") {
    // B B = (-1)^(k(k-1)/2) for a grade-k blade with unit axes.
    for (const Blade& b : all_blades(6)) {
        auto [r, s] = blade_product(b, b);
        CHECK(r == Blade::scalar());
        const unsigned k = b.grade();
        const int want = (k * (k - 1) / 2) % 2 ? -1 : 1;
        CHECK(s == want);
    }
}

TEST_CASE("blade product matches the transposition oracle exhaustively") {
    for (unsigned n = 1; n <= 5; ++n) {
        const auto blades = all_blades(n);
        for (const Blade& a : blades) {
            for (const Blade& b : blades) {
                const auto got = blade_product(a, b);
                const auto want = oracle::blade_product_by_transpositions(
                    a.indices(), b.indices());
                REQUIRE(got.first.indices() == want.indices);
                REQUIRE(got.second == want.sign);
            }
        }
    }
}

TEST_CASE("blade product is associative") {
    const auto blades = all_blades(4);
    for (const Blade& a : blades)
        for (const Blade& b : blades)
            for (const Blade& c : blades) {
                auto [ab, s_ab] = blade_product(a, b);
                auto [ab_c, s_abc] = blade_product(ab, c);
                auto [bc, s_bc] = blade_product(b, c);
                auto [a_bc, s_abc2] = blade_product(a, bc);
                REQUIRE(ab_c == a_bc);
                REQUIRE(s_ab * s_abc == s_bc * s_abc2);
            }
}

TEST_CASE("blade rendering") {
    CHECK(Blade::scalar().str() == "1");
    CHECK(Blade::vector(4).str() == "s4");
    CHECK(Blade::bivector(1, 2).str() == "s12");
    CHECK(Blade{2, 11}.str() == "s{2,11}");
}
