#include "detstrat/characters.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace detstrat {

namespace {

constexpr std::int64_t plus_infinity = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t minus_infinity = std::numeric_limits<std::int64_t>::min();

std::int64_t at(const IntegerWeight& w, long long k)
{
    if (k <= 0) return plus_infinity;
    if (k > static_cast<long long>(w.length())) return minus_infinity;
    return w(static_cast<std::size_t>(k));
}

bool is_even(long long x) { return x % 2 == 0; }

void check_range(const char* what, int p, int lo, int hi)
{
    if (p < lo || p > hi)
        throw std::invalid_argument(std::string(what) + ": p=" + std::to_string(p) + " outside [" +
                                    std::to_string(lo) + "," + std::to_string(hi) + "]");
}

}  // namespace

IntegerWeight lambda_extension(const IntegerWeight& w, int s, int m)
{
    const int n = static_cast<int>(w.length());
    if (s < 0 || s > n || n > m)
        throw std::invalid_argument("lambda_extension: need 0 <= s <= n <= m");
    const int shift = m - n;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int k = 1; k <= s; ++k) out.push_back(w(static_cast<std::size_t>(k)) - shift);
    out.insert(out.end(), static_cast<std::size_t>(shift), s);
    for (int k = s + 1; k <= n; ++k) out.push_back(w(static_cast<std::size_t>(k)));
    for (std::size_t k = 0; k + 1 < out.size(); ++k)
        if (out[k] < out[k + 1])
            throw std::invalid_argument("lambda_extension: " + w.to_string() + " at s=" + std::to_string(s) +
                                        " is not dominant");
    return IntegerWeight(std::move(out));
}

bool member_general(const IntegerWeight& w, int m, int p)
{
    const int n = static_cast<int>(w.length());
    if (n > m) throw std::invalid_argument("member_general: weight longer than m");
    check_range("member_general", p, 0, n);
    return at(w, n - p) >= m - p && at(w, n - p + 1) <= n - p;
}

bool member_symmetric(const IntegerWeight& w, int p)
{
    const int n = static_cast<int>(w.length());
    check_range("member_symmetric", p, 0, n);
    const int c = n - p;
    if (c % 2 == 1) {
        for (int v : w.entries())
            if (!is_even(v)) return false;
        return at(w, c) >= c + 1 && c + 1 >= at(w, c + 2);
    }
    for (int k = 1; k <= n; ++k) {
        const bool want_odd = k <= c;
        if (is_even(w(static_cast<std::size_t>(k))) == want_odd) return false;
    }
    return at(w, c) >= c + 1 && at(w, c + 1) <= c;
}

bool member_skew(const IntegerWeight& w, int p)
{
    const int n = static_cast<int>(w.length());
    const int half = n / 2;
    check_range("member_skew", p, 0, half);
    const int c = n - 2 * p;
    if (n % 2 == 0) {
        for (int i = 1; i <= half; ++i)
            if (at(w, 2 * i - 1) != at(w, 2 * i)) return false;
        return at(w, c) >= c - 1 && at(w, c + 1) <= c;
    }
    if (at(w, c) != c - 1) return false;
    for (int i = 1; i <= half; ++i) {
        if (i <= half - p) {
            if (at(w, 2 * i - 1) != at(w, 2 * i)) return false;
        } else if (at(w, 2 * i) != at(w, 2 * i + 1)) {
            return false;
        }
    }
    return true;
}

int multiplicity(const SpaceSpec& space, int p, const IntegerWeight& w)
{
    space.require_stratum(p);
    if (w.length() != static_cast<std::size_t>(space.n()))
        throw std::invalid_argument("multiplicity: weight " + w.to_string() + " must have length " +
                                    std::to_string(space.n()));
    switch (space.family()) {
    case Family::General: return member_general(w, space.m(), p) ? 1 : 0;
    case Family::Symmetric: return member_symmetric(w, p) ? 1 : 0;
    case Family::Skew: return member_skew(w, p) ? 1 : 0;
    }
    throw std::logic_error("unknown family");
}

}  // namespace detstrat
