#include <doctest.h>

#include "detstrat/laurent_poly.hpp"
#include "oracles/brute_partitions.hpp"

#include <random>

using namespace detstrat;

namespace {

const LaurentPoly one = LaurentPoly::constant(1);
const LaurentPoly q = LaurentPoly::monomial(1);

LaurentPoly random_poly(std::mt19937& rng)
{
    std::uniform_int_distribution<int> lo(-4, 4), len(0, 5), coeff(-5, 5);
    std::vector<Integer> c(static_cast<std::size_t>(len(rng)));
    for (auto& x : c) x = coeff(rng);
    return LaurentPoly(lo(rng), std::move(c));
}

// Polynomial whose q^k coefficient counts the partitions of size k in the box.
LaurentPoly box_generating_function(int rows, int cols)
{
    LaurentPoly out;
    for (const auto& [k, count] : oracle::box_size_counts(rows, cols)) out += LaurentPoly::monomial(k, count);
    return out;
}

}  // namespace

TEST_CASE("canonical trimming")
{
    CHECK(LaurentPoly(3, {0, 0, 2, 0}) == LaurentPoly::monomial(5, 2));
    CHECK(LaurentPoly(3, {0, 0}).is_zero());
    CHECK(LaurentPoly(3, {0, 0}).min_exponent() == 0);
    CHECK(LaurentPoly(-2, {1, 0, 3}).coefficient(0) == 3);
    CHECK(LaurentPoly(-2, {1, 0, 3}).coefficient(7) == 0);
}

TEST_CASE("add")
{
    CHECK((one + q) + q == LaurentPoly(0, {1, 2}));
    const LaurentPoly p(-1, {4, 0, -2});
    CHECK(p + LaurentPoly{} == p);
    CHECK((q + (-q)).is_zero());
    CHECK(add(q, q) == LaurentPoly::monomial(1, 2));
}

TEST_CASE("mul")
{
    CHECK(mul(one + q, one - q) == LaurentPoly(0, {1, 0, -1}));
    const LaurentPoly p(-1, {4, 0, -2});
    CHECK(p * one == p);
    CHECK(LaurentPoly::monomial(-2) * LaurentPoly::monomial(5) == LaurentPoly::monomial(3));
    CHECK((p * LaurentPoly{}).is_zero());
}

TEST_CASE("shift")
{
    CHECK(shift(LaurentPoly(0, {1, 0, 1}), -3) == LaurentPoly(-3, {1, 0, 1}));
    const LaurentPoly p(2, {1, -1});
    CHECK(shift(p, 0) == p);
    CHECK(shift(LaurentPoly{}, 7).is_zero());
}

TEST_CASE("substitute_power")
{
    CHECK(substitute_power(one + q, 2) == LaurentPoly(0, {1, 0, 1}));
    const LaurentPoly p(-1, {2, 3});
    CHECK(substitute_power(p, 1) == p);
    CHECK(substitute_power(LaurentPoly(0, {1, 1, 1}), 4) == LaurentPoly(0, {1, 0, 0, 0, 1, 0, 0, 0, 1}));
    CHECK(substitute_power(LaurentPoly(-1, {1, 1}), 3) == LaurentPoly::monomial(-3) + LaurentPoly::monomial(0));
    CHECK_THROWS_AS(substitute_power(p, 0), std::invalid_argument);
    CHECK_THROWS_AS(substitute_power(p, -2), std::invalid_argument);
}

TEST_CASE("evaluate")
{
    CHECK(evaluate(gauss_binomial(4, 2), 1) == 6);
    CHECK(evaluate(LaurentPoly::monomial(3), -1) == -1);
    CHECK(evaluate(LaurentPoly{}, 5) == 0);
    CHECK(evaluate(LaurentPoly(1, {1, 2}), 3) == 3 + 2 * 9);
    CHECK(evaluate(LaurentPoly(-3, {1, 0, 2}), -1) == -1 - 2);
    CHECK(evaluate(LaurentPoly(-2, {1, 5}), 1) == 6);
    CHECK_THROWS_AS(evaluate(LaurentPoly(-1, {1}), 2), std::invalid_argument);
}

TEST_CASE("to_string")
{
    CHECK(LaurentPoly(-3, {1, 0, 2, 1}).to_string() == "q^-3 + 2*q^-1 + 1");
    CHECK(LaurentPoly{}.to_string() == "0");
    CHECK(LaurentPoly(0, {-1, 1, -3}).to_string() == "-1 + q - 3*q^2");
    CHECK(LaurentPoly::monomial(4).to_string() == "q^4");
}

TEST_CASE("gauss_binomial examples against rectangle enumeration")
{
    // [a choose b] counts partitions in the (a-b) x b box by size.
    CHECK(box_generating_function(1, 1) == LaurentPoly(0, {1, 1}));
    CHECK(box_generating_function(2, 2) == LaurentPoly(0, {1, 1, 2, 1, 1}));

    CHECK(gauss_binomial(2, 1) == LaurentPoly(0, {1, 1}));
    CHECK(gauss_binomial(4, 2) == LaurentPoly(0, {1, 1, 2, 1, 1}));
    for (int a = 0; a <= 6; ++a) CHECK(gauss_binomial(a, 0) == one);
    CHECK(gauss_binomial(0, 0) == one);
    CHECK_THROWS_AS(gauss_binomial(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(gauss_binomial(3, -1), std::invalid_argument);
}

TEST_CASE("gauss_binomial identities for a <= 10")
{
    for (int a = 0; a <= 10; ++a)
        for (int b = 0; b <= a; ++b) {
            const LaurentPoly g = gauss_binomial(a, b);
            CHECK(g == gauss_binomial(a, a - b));
            CHECK(evaluate(g, 1) == oracle::brute_binomial(a, b));
            CHECK(g.min_exponent() == 0);
            CHECK(g.coefficient(0) == 1);
            CHECK(g.max_exponent() == b * (a - b));
            if (b >= 1 && b <= a - 1)
                CHECK(g == gauss_binomial(a - 1, b - 1) + shift(gauss_binomial(a - 1, b), b));
            if (a <= 8) CHECK(g == box_generating_function(a - b, b));
        }
}

TEST_CASE("ring laws on random polynomials")
{
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 300; ++trial) {
        const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        if (a.min_exponent() >= 0 && b.min_exponent() >= 0)
            CHECK(evaluate(a * b, 2) == evaluate(a, 2) * evaluate(b, 2));
        CHECK(evaluate(a * b, -1) == evaluate(a, -1) * evaluate(b, -1));
    }
}

TEST_CASE("coefficients are arbitrary precision")
{
    LaurentPoly p = LaurentPoly(0, {1, 1});
    LaurentPoly acc = one;
    for (int k = 0; k < 100; ++k) acc *= p;
    // central binomial(100, 50) exceeds 64 bits
    CHECK(acc.coefficient(50) == Integer("100891344545564193334812497256"));
    CHECK(evaluate(acc, 1) == Integer(1) << 100);
}
