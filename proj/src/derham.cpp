#include "detstrat/derham.hpp"

#include "detstrat/characters.hpp"
#include "detstrat/plethysm.hpp"

#include <stdexcept>

namespace detstrat {

namespace {

LaurentPoly enum_general(int m, int n, int p)
{
    LaurentPoly gf;
    for (int i = 0; i <= m * n; ++i) {
        long long count = 0;
        for (const auto& mu : cauchy_exterior(m, n, i)) {
            const IntegerWeight w = mu.padded(static_cast<std::size_t>(n));
            // lambda_extension is only guaranteed dominant inside A(p).
            if (!member_general(w, m, p)) continue;
            if (conjugate(mu).padded(static_cast<std::size_t>(m)) == lambda_extension(w, n - p, m)) ++count;
        }
        if (count) gf += LaurentPoly::monomial(i, count);
    }
    return gf;
}

template <class Sets, class Member>
LaurentPoly enum_single(int n, long long dim, Sets sets, Member member)
{
    LaurentPoly gf;
    for (int i = 0; i <= dim; ++i) {
        long long count = 0;
        for (const auto& lambda : sets(n, i))
            if (member(lambda.padded(static_cast<std::size_t>(n)))) ++count;
        if (count) gf += LaurentPoly::monomial(i, count);
    }
    return gf;
}

long long choose2(long long k) { return k * (k - 1) / 2; }

}  // namespace

int epsilon_symmetric(int n, int p)
{
    return (p % 2 == 0 && n % 2 == 1) ? 1 : 0;
}

LaurentPoly inv_derham_gf_enum(const SpaceSpec& space, int p)
{
    space.require_stratum(p);
    const int n = space.n();
    switch (space.family()) {
    case Family::General: return enum_general(space.m(), n, p);
    case Family::Symmetric:
        return enum_single(n, space.ambient_dimension(), symmetric_exterior_partitions,
                           [p](const IntegerWeight& w) { return member_symmetric(w, p); });
    case Family::Skew:
        return enum_single(n, space.ambient_dimension(), skew_exterior_partitions,
                           [p](const IntegerWeight& w) { return member_skew(w, p); });
    }
    throw std::logic_error("unknown family");
}

LaurentPoly inv_derham_gf_closed(const SpaceSpec& space, int p)
{
    space.require_stratum(p);
    const int n = space.n();
    switch (space.family()) {
    case Family::General: {
        const long long e = static_cast<long long>(space.m() - p) * (n - p);
        return shift(substitute_power(gauss_binomial(n, p), 2), static_cast<int>(e));
    }
    case Family::Symmetric: {
        const int half = n / 2;
        const int s = p / 2;
        const int top = half + epsilon_symmetric(n, p);
        return shift(substitute_power(gauss_binomial(top, s), 4), static_cast<int>(choose2(n - p + 1)));
    }
    case Family::Skew: {
        const int half = n / 2;
        const long long e = choose2(n) - static_cast<long long>(p) * (2LL * n - 2LL * p - 1);
        return shift(substitute_power(gauss_binomial(half, p), 4), static_cast<int>(e));
    }
    }
    throw std::logic_error("unknown family");
}

LaurentPoly inv_derham_gf(const SpaceSpec& space, int p, Method method)
{
    return method == Method::Enumerate ? inv_derham_gf_enum(space, p) : inv_derham_gf_closed(space, p);
}

LaurentPoly ic_poincare(const SpaceSpec& space, int p)
{
    return shift(inv_derham_gf_closed(space, p), -static_cast<int>(space.ambient_dimension()));
}

Integer euler_char_at_origin(const SpaceSpec& space, int p, Method method)
{
    const Integer value = evaluate(inv_derham_gf(space, p, method), -1);
    return space.ambient_dimension() % 2 == 0 ? value : Integer(-value);
}

}  // namespace detstrat
