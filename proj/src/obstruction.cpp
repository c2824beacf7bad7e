#include "detstrat/obstruction.hpp"

#include <stdexcept>

namespace detstrat {

namespace {

Integer sign(long long exponent) { return exponent % 2 == 0 ? 1 : -1; }

std::size_t order_of(const SpaceSpec& space) { return static_cast<std::size_t>(space.strata_count()); }

// The slice transversal to stratum i, on which X_j becomes stratum j-i.
SpaceSpec slice(const SpaceSpec& space, int i)
{
    switch (space.family()) {
    case Family::General: return SpaceSpec::general(space.m() - i, space.n() - i);
    case Family::Symmetric: return SpaceSpec::symmetric(space.n() - i);
    case Family::Skew: return SpaceSpec::skew(space.n() - 2 * i);
    }
    throw std::logic_error("unknown family");
}

}  // namespace

StrataMatrix micro_indices(const SpaceSpec& space)
{
    StrataMatrix m = StrataMatrix::identity(order_of(space));
    if (space.family() == Family::Symmetric)
        for (int i = 1; i <= space.n(); ++i)
            if ((space.n() - i) % 2 == 1) m.set(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i), 1);
    return m;
}

StrataMatrix signed_micro(const SpaceSpec& space)
{
    StrataMatrix m = micro_indices(space);
    for (std::size_t i = 0; i < m.order(); ++i) {
        const Integer s = sign(stratum_dimension(space, static_cast<int>(i)));
        for (std::size_t j = i; j < m.order(); ++j) m.set(i, j, s * m(i, j));
    }
    return m;
}

StrataMatrix chi_closed(const SpaceSpec& space)
{
    const std::size_t order = order_of(space);
    StrataMatrix chi(order);
    const int n = space.n();
    for (int i = 0; i < static_cast<int>(order); ++i)
        for (int j = i; j < static_cast<int>(order); ++j) {
            Integer magnitude;
            switch (space.family()) {
            case Family::General: magnitude = binomial(n - i, j - i); break;
            case Family::Symmetric: {
                const int eps = ((j - i) % 2 == 0 && (n - i) % 2 == 1) ? 1 : 0;
                magnitude = binomial((n - i) / 2 + eps, (j - i) / 2);
                break;
            }
            case Family::Skew: magnitude = binomial(n / 2 - i, j - i); break;
            }
            chi.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                    sign(stratum_dimension(space, j)) * magnitude);
        }
    return chi;
}

StrataMatrix euler_closed(const SpaceSpec& space)
{
    const std::size_t order = order_of(space);
    StrataMatrix e(order);
    const int n = space.n();
    for (int i = 0; i < static_cast<int>(order); ++i)
        for (int j = i; j < static_cast<int>(order); ++j) {
            Integer value;
            switch (space.family()) {
            case Family::General: value = binomial(n - i, j - i); break;
            case Family::Symmetric:
                if ((n - i) % 2 == 0 && (n - j) % 2 == 1)
                    value = 0;
                else
                    value = binomial((n - i) / 2, (j - i) / 2);
                break;
            case Family::Skew: value = binomial(n / 2 - i, j - i); break;
            }
            e.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), std::move(value));
        }
    return e;
}

StrataMatrix chi_from_enumeration(const SpaceSpec& space, Method method)
{
    const std::size_t order = order_of(space);
    StrataMatrix chi(order);
    for (int j = 0; j < static_cast<int>(order); ++j)
        chi.set(0, static_cast<std::size_t>(j), euler_char_at_origin(space, j, method));
    for (int i = 1; i < static_cast<int>(order); ++i) {
        const Integer s = sign(stratum_dimension(space, i));
        // The slice at the last stratum is a point (it may not even be a valid
        // space of the family): its only stalk Euler characteristic is 1.
        chi.set(static_cast<std::size_t>(i), static_cast<std::size_t>(i), s);
        if (i + 1 == static_cast<int>(order)) continue;
        const SpaceSpec sub = slice(space, i);
        for (int j = i + 1; j < static_cast<int>(order); ++j)
            chi.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                    s * euler_char_at_origin(sub, j - i, method));
    }
    return chi;
}

StrataMatrix solve_euler(const StrataMatrix& chi, const StrataMatrix& signed_micro)
{
    const std::size_t order = chi.order();
    if (signed_micro.order() != order) throw std::invalid_argument("solve_euler: matrix orders differ");
    for (std::size_t k = 0; k < order; ++k) {
        const Integer& d = signed_micro(k, k);
        if (d != 1 && d != -1)
            throw std::invalid_argument("solve_euler: diagonal entry " + std::to_string(k) +
                                        " is not +-1, so the system is not unimodular");
    }
    // chi(i,j) = sum_{k=i..j} E(i,k) M(k,j): column j determines E(i,j) once
    // E(i,i..j-1) are known.
    StrataMatrix e(order);
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = i; j < order; ++j) {
            Integer acc = chi(i, j);
            for (std::size_t k = i; k < j; ++k) acc -= e(i, k) * signed_micro(k, j);
            // dividing by +-1 is multiplying by it
            e.set(i, j, acc * signed_micro(j, j));
        }
    return e;
}

bool verify_index_identity(const SpaceSpec& space)
{
    return chi_closed(space) == euler_closed(space) * signed_micro(space);
}

}  // namespace detstrat
