#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "summab/bridge.hpp"
#include "summab/generators.hpp"
#include "summab/means.hpp"
#include "summab/reciprocal.hpp"
#include "summab/scalar.hpp"

#include "oracles.hpp"

#include <cmath>
#include <vector>

using namespace summab;
using oracle::rat;

namespace {

struct LogSchemeFixture {
    WeightScheme<Rational> weights = WeightScheme<Rational>::logarithmic();
    VaryingCesaroParams<Rational> recip = VaryingCesaroParams<Rational>::reciprocal();
    VaryingCesaroParams<Rational> half = VaryingCesaroParams<Rational>::constant(rat(1, 2));
    ReciprocalCoeffs<Rational> coeffs = reciprocal_coeffs(weights, 128);
};

} // namespace

TEST_CASE("bridge b values")
{
    LogSchemeFixture fx;
    for (int m : {0, 1, 5, 17})
        CHECK(bridge_b(0, m, fx.recip, fx.coeffs) == rat(1));
    CHECK(bridge_b(1, 1, fx.recip, fx.coeffs) == rat(0));
    CHECK(bridge_b(2, 2, fx.recip, fx.coeffs) == rat(-1, 36));
    CHECK(bridge_b(1, 2, fx.recip, fx.coeffs) == rat(-1, 6));

    ReciprocalCoeffs<Rational> short_coeffs{{rat(1), rat(-1, 2)}, "logarithmic"};
    CHECK_THROWS_AS(bridge_b(2, 2, fx.recip, short_coeffs), precondition_error);
    CHECK_THROWS_AS(bridge_b(-1, 2, fx.recip, fx.coeffs), precondition_error);
}

TEST_CASE("bridge rows at small n")
{
    LogSchemeFixture fx;

    BridgeRow<Rational> r0 = bridge_row(0, fx.weights, fx.recip, fx.coeffs);
    CHECK(r0.t == std::vector<Rational>{rat(1)});
    CHECK(r0.row_sum == rat(1));
    CHECK(r0.abs_row_sum == rat(1));
    CHECK(r0.negative_indices.empty());

    BridgeRow<Rational> r1 = bridge_row(1, fx.weights, fx.recip, fx.coeffs);
    CHECK(r1.alpha_n == rat(1, 2));
    CHECK(r1.t == std::vector<Rational>{rat(0), rat(1)});
    CHECK(r1.row_sum == rat(1));
    CHECK(r1.abs_row_sum == rat(1));

    BridgeRow<Rational> r2 = bridge_row(2, fx.weights, fx.recip, fx.coeffs);
    CHECK(r2.alpha_n == rat(1, 3));
    CHECK(r2.t == std::vector<Rational>{rat(-1, 56), rat(-9, 56), rat(66, 56)});
    CHECK(r2.row_sum == rat(1));
    CHECK(r2.abs_row_sum == rat(19, 14));
    CHECK(r2.negative_indices == std::vector<int>{0, 1});
    CHECK(r2.b == std::vector<Rational>{rat(1), rat(-1, 6), rat(-1, 36)});
}

TEST_CASE("row sums are exactly 1 for every scheme/rule pair")
{
    const int nmax = 32;
    std::vector<WeightScheme<Rational>> schemes;
    schemes.push_back(WeightScheme<Rational>::logarithmic());
    schemes.push_back(WeightScheme<Rational>::ones());
    schemes.push_back(WeightScheme<Rational>::geometric(rat(1, 2)));
    std::vector<VaryingCesaroParams<Rational>> rules;
    rules.push_back(VaryingCesaroParams<Rational>::reciprocal());
    rules.push_back(VaryingCesaroParams<Rational>::constant(rat(1, 2)));
    rules.push_back(VaryingCesaroParams<Rational>::constant(rat(1)));

    for (const auto& w : schemes) {
        for (const auto& p : rules) {
            auto scan = rowsum_scan(nmax, w, p);
            REQUIRE(scan.size() == static_cast<size_t>(nmax) + 1);
            for (const auto& entry : scan)
                CHECK(entry.row_sum_minus_1 == rat(0));
        }
    }
}

TEST_CASE("representation identity sigma = sum t N")
{
    LogSchemeFixture fx;

    SUBCASE("unit impulse, n = 2")
    {
        SeqPrefix<Rational> s({rat(1), rat(0), rat(0)});
        CHECK(varying_cesaro_mean(s, fx.recip, 2) == rat(1, 7));
        BridgeRow<Rational> row = bridge_row(2, fx.weights, fx.recip, fx.coeffs);
        // right side assembled by hand from the frozen row and Noerlund values
        Rational rhs = Rational(rat(-1, 56) * rat(1) + rat(-9, 56) * rat(1, 3) +
                                rat(66, 56) * rat(2, 11));
        CHECK(rhs == rat(1, 7));
        CHECK(verify_identity2(s, row, fx.weights) == rat(0));
        CHECK(verify_identity2(s, 2, fx.weights, fx.recip) == rat(0));
    }

    SUBCASE("constant sequence")
    {
        SeqPrefix<Rational> ones = SeqPrefix<Rational>::constant(rat(1), 20);
        for (int n = 0; n < 20; ++n)
            CHECK(verify_identity2(ones, n, fx.weights, fx.recip) == rat(0));
    }

    SUBCASE("random rational prefixes, several scheme/rule pairs")
    {
        const int nmax = 24;
        std::vector<WeightScheme<Rational>> schemes;
        schemes.push_back(WeightScheme<Rational>::logarithmic());
        schemes.push_back(WeightScheme<Rational>::geometric(rat(1, 3)));
        for (const auto& w : schemes) {
            auto coeffs = reciprocal_coeffs(w, nmax);
            for (const auto& p : {fx.recip, fx.half}) {
                for (std::uint64_t seed = 1; seed <= 10; ++seed) {
                    SeqPrefix<Rational> s = random_rational_prefix<Rational>(seed, nmax + 1);
                    for (int n = 0; n <= nmax; ++n) {
                        BridgeRow<Rational> row = bridge_row(n, w, p, coeffs);
                        CHECK(verify_identity2(s, row, w) == rat(0));
                    }
                }
            }
        }
    }

    SUBCASE("out of range")
    {
        SeqPrefix<Rational> s({rat(1)});
        CHECK_THROWS_AS(verify_identity2(s, 1, fx.weights, fx.recip), precondition_error);
    }
}

TEST_CASE("ratio condition report")
{
    LogSchemeFixture fx;

    SUBCASE("logarithmic weights, reciprocal rule: equality at j = n, failure at j = 1")
    {
        for (int n : {1, 2, 3, 8, 20}) {
            auto report = cond_check(fx.weights, fx.recip, n);
            CHECK(report.alpha_n == rat(1, n + 1));
            const auto& at_n = report.entries.back();
            CHECK(at_n.j == n);
            CHECK(at_n.lhs == at_n.rhs);
            CHECK(report.holds_at_matching);
            if (n >= 2) {
                CHECK_FALSE(report.entries.front().holds);
                CHECK(report.failing.front() == 1);
                CHECK_FALSE(report.holds_all);
            } else {
                CHECK(report.holds_all);
            }
        }
    }

    SUBCASE("constant alpha = 1/2 holds at every index")
    {
        for (int n : {1, 4, 16, 32}) {
            auto report = cond_check(fx.weights, fx.half, n);
            CHECK(report.holds_all);
            CHECK(report.failing.empty());
            // boundary: equality exactly at j = 1
            CHECK(report.entries.front().lhs == report.entries.front().rhs);
        }
    }

    SUBCASE("preconditions")
    {
        CHECK_THROWS_AS(cond_check(fx.weights, fx.recip, 0), precondition_error);
        auto zero_tail = WeightScheme<Rational>::from_values({rat(1), rat(0), rat(1)});
        CHECK_THROWS_AS(cond_check(zero_tail, fx.recip, 2), precondition_error);
    }
}

TEST_CASE("full ratio condition forces nonnegative rows with unit absolute sum")
{
    LogSchemeFixture fx;
    const int nmax = 32;

    SUBCASE("constant alpha = 1/2 with logarithmic weights")
    {
        auto scan = rowsum_scan(nmax, fx.weights, fx.half);
        for (const auto& entry : scan) {
            CHECK(entry.negative_count == 0);
            CHECK(entry.abs_row_sum == rat(1));
        }
    }

    SUBCASE("geometric weights under constant alpha = 1/2")
    {
        auto w = WeightScheme<Rational>::geometric(rat(1, 4));
        for (int n = 1; n <= 16; ++n)
            CHECK(cond_check(w, fx.half, n).holds_all);
        auto scan = rowsum_scan(16, w, fx.half);
        for (const auto& entry : scan) {
            CHECK(entry.negative_count == 0);
            CHECK(entry.abs_row_sum == rat(1));
        }
    }

    SUBCASE("row-by-row implication on a rule that fails the condition")
    {
        // reciprocal rule: negativity may appear only when some index fails
        auto coeffs = reciprocal_coeffs(fx.weights, nmax);
        for (int n = 1; n <= nmax; ++n) {
            BridgeRow<Rational> row = bridge_row(n, fx.weights, fx.recip, coeffs);
            if (cond_check(fx.weights, fx.recip, n).holds_all) {
                CHECK(row.negative_indices.empty());
                CHECK(row.abs_row_sum == rat(1));
            }
        }
    }
}

TEST_CASE("triangle bound |sigma_n| <= abs_row_sum * max |N_k|")
{
    LogSchemeFixture fx;
    const int nmax = 16;
    auto coeffs = reciprocal_coeffs(fx.weights, nmax);
    for (std::uint64_t seed = 21; seed <= 25; ++seed) {
        SeqPrefix<Rational> s = random_rational_prefix<Rational>(seed, nmax + 1);
        for (int n = 0; n <= nmax; ++n) {
            BridgeRow<Rational> row = bridge_row(n, fx.weights, fx.recip, coeffs);
            Rational max_abs_n = 0;
            for (int k = 0; k <= n; ++k) {
                Rational a = abs(norlund_mean(s, fx.weights, k));
                if (a > max_abs_n)
                    max_abs_n = a;
            }
            Rational sigma = varying_cesaro_mean(s, fx.recip, n);
            CHECK(abs(sigma) <= Rational(row.abs_row_sum * max_abs_n));
        }
    }
}

TEST_CASE("bridge transform as a triangular matrix")
{
    LogSchemeFixture fx;
    auto matrix = bridge_matrix(fx.weights, fx.recip, fx.coeffs);
    CHECK(matrix.provenance == "bridge-derived");
    for (int n = 0; n <= 8; ++n) {
        BridgeRow<Rational> row = bridge_row(n, fx.weights, fx.recip, fx.coeffs);
        for (int k = 0; k <= n; ++k)
            CHECK(matrix.entry(k, n) == row.t[static_cast<size_t>(k)]);
    }
    // condition (a) holds on any window; condition (c) statistic exceeds 1
    // exactly on the rows that carry negative entries
    auto report = check_regularity(matrix, 0, 12, oracle::rat(0));
    CHECK_FALSE(report.any_a_violated);
    CHECK(report.rows[2].abs_row_sum == oracle::rat(19, 14));

    // transforming the Noerlund means of s reproduces sigma_n
    SeqPrefix<Rational> s = random_rational_prefix<Rational>(55, 13);
    std::vector<Rational> norlund_values;
    for (int k = 0; k < 13; ++k)
        norlund_values.push_back(norlund_mean(s, fx.weights, k));
    SeqPrefix<Rational> nseq(std::move(norlund_values));
    for (int n = 0; n < 13; ++n)
        CHECK(matrix_transform(nseq, matrix, n) == varying_cesaro_mean(s, fx.recip, n));
}

TEST_CASE("rowsum scan tables")
{
    LogSchemeFixture fx;
    auto scan = rowsum_scan(2, fx.weights, fx.recip);
    REQUIRE(scan.size() == 3);
    CHECK(scan[0].abs_row_sum == rat(1));
    CHECK(scan[1].abs_row_sum == rat(1));
    CHECK(scan[2].abs_row_sum == rat(19, 14));
    CHECK(scan[2].negative_count == 2);
    CHECK_THROWS_AS(rowsum_scan(0, fx.weights, fx.recip), precondition_error);
}

TEST_CASE("floating bridge rows stay within the documented residual band")
{
    auto w = WeightScheme<double>::logarithmic();
    auto p = VaryingCesaroParams<double>::reciprocal();
    auto scan = rowsum_scan(300, w, p);
    for (const auto& entry : scan)
        CHECK(std::fabs(entry.row_sum_minus_1) <= 1e-10);
}

TEST_CASE("floating scan with the tetunashvili rule starts past m")
{
    auto w = WeightScheme<double>::logarithmic();
    auto p = VaryingCesaroParams<double>::tetunashvili(0.6, 1);
    auto scan = rowsum_scan(64, w, p);
    REQUIRE(!scan.empty());
    CHECK(scan.front().n == 2);
    for (const auto& entry : scan)
        CHECK(std::fabs(entry.row_sum_minus_1) <= 1e-10);
}
