#include <doctest.h>

#include "detstrat/characters.hpp"
#include "oracles/characters.hpp"

#include <functional>

using namespace detstrat;

namespace {

IntegerWeight constant_weight(int n, int v) { return IntegerWeight(std::vector<int>(static_cast<std::size_t>(n), v)); }

// Every dominant weight of length n with entries in [lo, hi].
void for_each_dominant(int n, int lo, int hi, const std::function<void(const IntegerWeight&)>& f)
{
    std::vector<int> w;
    auto rec = [&](auto&& self, int cap) -> void {
        if (static_cast<int>(w.size()) == n) {
            f(IntegerWeight(w));
            return;
        }
        for (int v = cap; v >= lo; --v) {
            w.push_back(v);
            self(self, v);
            w.pop_back();
        }
    };
    rec(rec, hi);
}

}  // namespace

TEST_CASE("lambda_extension")
{
    CHECK(lambda_extension(IntegerWeight{3, 1}, 1, 3) == IntegerWeight{2, 1, 1});
    CHECK(lambda_extension(IntegerWeight{2, 2}, 2, 2) == IntegerWeight{2, 2});
    CHECK_THROWS_AS(lambda_extension(IntegerWeight{2}, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(lambda_extension(IntegerWeight{2, 1}, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(lambda_extension(IntegerWeight{2, 1}, 1, 1), std::invalid_argument);
}

TEST_CASE("member_general")
{
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= m; ++n) {
            CHECK(member_general(constant_weight(n, m), m, 0));
            CHECK(member_general(constant_weight(n, 0), m, n));
            if (n < m) CHECK_FALSE(member_general(constant_weight(n, 0), m, 0));
        }
    CHECK_THROWS_AS(member_general(IntegerWeight{0, 0}, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(member_general(IntegerWeight{0, 0}, 3, -1), std::invalid_argument);
}

TEST_CASE("member_symmetric")
{
    CHECK(member_symmetric(IntegerWeight{0, 0}, 2));
    CHECK(member_symmetric(IntegerWeight{2, 0}, 1));
    CHECK_FALSE(member_symmetric(IntegerWeight{1, 1}, 1));
    CHECK_THROWS_AS(member_symmetric(IntegerWeight{0, 0}, 3), std::invalid_argument);
}

TEST_CASE("member_skew")
{
    CHECK(member_skew(IntegerWeight{0, 0, 0, 0}, 2));
    // n=4, p=1: lambda_2 = 2 >= 1, lambda_3 = 1 <= 2, pairs (2,2),(1,1) hold.
    CHECK(member_skew(IntegerWeight{2, 2, 1, 1}, 1));
    CHECK_FALSE(member_skew(IntegerWeight{2, 2, 1, 1}, 0));
    CHECK_FALSE(member_skew(IntegerWeight{2, 2, 1, 1}, 2));
    CHECK(member_skew(IntegerWeight{4, 4, 4, 4, 4}, 0));
    CHECK_FALSE(member_skew(IntegerWeight{4, 4, 4, 4, 3}, 0));
    CHECK_THROWS_AS(member_skew(IntegerWeight{0, 0, 0}, 2), std::invalid_argument);
}

TEST_CASE("multiplicity")
{
    CHECK(multiplicity(SpaceSpec::general(2, 2), 2, IntegerWeight{0, 0}) == 1);
    CHECK(multiplicity(SpaceSpec::symmetric(2), 1, IntegerWeight{1, 1}) == 0);
    CHECK(multiplicity(SpaceSpec::skew(4), 2, IntegerWeight{0, 0, 0, 0}) == 1);
    CHECK_THROWS_AS(multiplicity(SpaceSpec::skew(4), 3, IntegerWeight{0, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(multiplicity(SpaceSpec::skew(4), 1, IntegerWeight{0, 0}), std::invalid_argument);
}

TEST_CASE("character sets of distinct strata are disjoint")
{
    for (int n = 1; n <= 5; ++n) {
        std::vector<SpaceSpec> spaces{SpaceSpec::symmetric(n)};
        for (int m = n; m <= 5; ++m) spaces.push_back(SpaceSpec::general(m, n));
        if (n >= 2) spaces.push_back(SpaceSpec::skew(n));
        for (const auto& space : spaces)
            for_each_dominant(n, -6, 6, [&](const IntegerWeight& w) {
                int hits = 0;
                for (int p = 0; p <= space.max_stratum(); ++p) hits += multiplicity(space, p, w);
                CHECK_MESSAGE(hits <= 1, space.to_string() << " " << w.to_string());
            });
    }
}

TEST_CASE("lambda(n-p) is dominant on A(p)")
{
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= m; ++n)
            for_each_dominant(n, 0, 7, [&](const IntegerWeight& w) {
                for (int p = 0; p <= n; ++p)
                    if (member_general(w, m, p)) CHECK_NOTHROW(lambda_extension(w, n - p, m));
            });
}

// D_n = S = Sym(Sym^2 F) (resp. Sym(Lambda^2 F)) as representations: S_mu F
// appears iff S_{mu^v} F^v does, i.e. iff dual(mu) is in the character set.
TEST_CASE("character of S matches Sym^d of the quadratic representation")
{
    auto check = [](int n, bool symmetric) {
        const int top = symmetric ? n : n / 2;
        const auto weights = oracle::quadratic_weights(n, symmetric);
        for (int d = 0; d <= 4; ++d) {
            const auto decomposition = oracle::decompose(oracle::power_character(weights, d, true), {n});
            // every partition of 2d with at most n parts
            for_each_dominant(n, 0, 2 * d, [&](const IntegerWeight& mu) {
                long long total = 0;
                for (int v : mu.entries()) total += v;
                if (total != 2 * d) return;
                const IntegerWeight dual = dual_weight(mu);
                const bool member = symmetric ? member_symmetric(dual, top) : member_skew(dual, top);
                const auto it = decomposition.find(mu.entries());
                const long long mult = it == decomposition.end() ? 0 : it->second;
                CHECK_MESSAGE(mult == (member ? 1 : 0), (symmetric ? "symm " : "skew ") << n << " " << mu.to_string());
            });
        }
    };
    for (int n = 1; n <= 3; ++n) check(n, true);
    for (int n = 2; n <= 5; ++n) check(n, false);
}
