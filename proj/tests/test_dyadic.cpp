#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "summab/dyadic.hpp"
#include "summab/scalar.hpp"

#include "oracles.hpp"

#include <bit>
#include <cstdint>
#include <vector>

using namespace summab;

TEST_CASE("binary coefficients reconstruct the number")
{
    for (std::uint64_t n = 1; n <= (1u << 16); ++n) {
        std::vector<int> eps = binary_coefficients(n);
        std::uint64_t back = 0;
        for (size_t j = 0; j < eps.size(); ++j)
            back += static_cast<std::uint64_t>(eps[j]) << j;
        REQUIRE(back == n);
        REQUIRE(eps.back() == 0);
    }
}

TEST_CASE("variation values")
{
    CHECK(variation(1) == 2);
    CHECK(variation(3) == 2);
    CHECK(variation(5) == 4);
    CHECK_THROWS_AS(variation(0), precondition_error);

    for (int k = 0; k <= 30; ++k) {
        CHECK(variation(std::uint64_t{1} << k) == 2);
        CHECK(variation((std::uint64_t{1} << (k + 1)) - 1) == 2);
    }
}

TEST_CASE("variation agrees with block counting and respects the bit-length bound")
{
    for (std::uint64_t n = 1; n <= (1u << 14); ++n) {
        int v = variation(n);
        REQUIRE(v == oracle::variation_blocks(n));
        REQUIRE(v <= std::bit_width(n) + 1);
    }
}

TEST_CASE("spectrum")
{
    CHECK(spectrum(1) == std::vector<int>{0});
    CHECK(spectrum(5) == std::vector<int>{0, 2});
    for (int k = 0; k <= 40; ++k)
        CHECK(spectrum(std::uint64_t{1} << k) == std::vector<int>{k});
    CHECK(spectrum(0).empty());
}

TEST_CASE("nested spectra")
{
    std::vector<std::uint64_t> good{1, 5, 21};
    auto r = is_nested(good);
    CHECK(r.nested);
    CHECK(r.first_violation == -1);

    std::vector<std::uint64_t> bad{1, 2};
    r = is_nested(bad);
    CHECK_FALSE(r.nested);
    CHECK(r.first_violation == 1);

    std::vector<std::uint64_t> late{1, 5, 21, 85, 86};
    r = is_nested(late);
    CHECK_FALSE(r.nested);
    CHECK(r.first_violation == 4);

    CHECK_THROWS_AS(is_nested(std::vector<std::uint64_t>{5}), precondition_error);
    CHECK_THROWS_AS(is_nested(std::vector<std::uint64_t>{5, 5}), precondition_error);
    CHECK_THROWS_AS(is_nested(std::vector<std::uint64_t>{0, 1}), precondition_error);
}

TEST_CASE("nested pair agrees with the digit oracle below 2^10")
{
    for (std::uint64_t a = 1; a < 1024; ++a)
        for (std::uint64_t b = a + 1; b < 1024; ++b)
            REQUIRE(nested_pair(a, b) == oracle::nested_pair_digits(a, b));
}

TEST_CASE("generated nested sequence with unbounded variation")
{
    auto seq = gen_nested_unbounded_variation(32);
    REQUIRE(seq.size() == 32);
    CHECK(seq[0] == 1);
    CHECK(seq[1] == 5);
    CHECK(seq[2] == 21);
    CHECK(is_nested(seq).nested);
    for (int k = 0; k < 32; ++k) {
        CHECK(variation(seq[static_cast<size_t>(k)]) == 2 * (k + 1));
        std::vector<int> sp = spectrum(seq[static_cast<size_t>(k)]);
        REQUIRE(static_cast<int>(sp.size()) == k + 1);
        for (int j = 0; j <= k; ++j)
            CHECK(sp[static_cast<size_t>(j)] == 2 * j);
    }

    // consecutive nesting implies nesting of every pair
    auto sub = gen_nested_unbounded_variation(16);
    for (size_t i = 0; i < sub.size(); ++i)
        for (size_t j = i + 1; j < sub.size(); ++j)
            CHECK(nested_pair(sub[i], sub[j]));

    CHECK_THROWS_AS(gen_nested_unbounded_variation(0), precondition_error);
    CHECK_THROWS_AS(gen_nested_unbounded_variation(33), ceiling_error);
}
