#include "detstrat/space.hpp"

#include <stdexcept>

namespace detstrat {

std::string_view family_name(Family f)
{
    switch (f) {
    case Family::General: return "general";
    case Family::Symmetric: return "symm";
    case Family::Skew: return "skew";
    }
    throw std::logic_error("unknown family");
}

Family parse_family(std::string_view name)
{
    if (name == "general") return Family::General;
    if (name == "symm" || name == "symmetric") return Family::Symmetric;
    if (name == "skew") return Family::Skew;
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

SpaceSpec SpaceSpec::general(int m, int n)
{
    if (n < 1 || m < n)
        throw std::invalid_argument("General(m,n) needs m >= n >= 1, got m=" + std::to_string(m) +
                                    ", n=" + std::to_string(n));
    return SpaceSpec(Family::General, m, n);
}

SpaceSpec SpaceSpec::symmetric(int n)
{
    if (n < 1) throw std::invalid_argument("Symmetric(n) needs n >= 1, got n=" + std::to_string(n));
    return SpaceSpec(Family::Symmetric, n, n);
}

SpaceSpec SpaceSpec::skew(int n)
{
    if (n < 2) throw std::invalid_argument("Skew(n) needs n >= 2, got n=" + std::to_string(n));
    return SpaceSpec(Family::Skew, n, n);
}

long long SpaceSpec::ambient_dimension() const
{
    const long long n = n_;
    switch (family_) {
    case Family::General: return static_cast<long long>(m_) * n;
    case Family::Symmetric: return n * (n + 1) / 2;
    case Family::Skew: return n * (n - 1) / 2;
    }
    throw std::logic_error("unknown family");
}

int SpaceSpec::max_stratum() const { return family_ == Family::Skew ? n_ / 2 : n_; }

void SpaceSpec::require_stratum(int p) const
{
    if (!valid_stratum(p))
        throw std::invalid_argument("stratum " + std::to_string(p) + " out of range for " + to_string());
}

std::string SpaceSpec::to_string() const
{
    switch (family_) {
    case Family::General: return "General(" + std::to_string(m_) + "," + std::to_string(n_) + ")";
    case Family::Symmetric: return "Symmetric(" + std::to_string(n_) + ")";
    case Family::Skew: return "Skew(" + std::to_string(n_) + ")";
    }
    throw std::logic_error("unknown family");
}

long long stratum_dimension(const SpaceSpec& space, int i)
{
    space.require_stratum(i);
    const long long p = i;
    const long long n = space.n();
    switch (space.family()) {
    case Family::General: return p * (space.m() + n - p);
    case Family::Symmetric: return p * (2 * n - p + 1) / 2;
    case Family::Skew: return p * (2 * n - 2 * p - 1);
    }
    throw std::logic_error("unknown family");
}

}  // namespace detstrat
