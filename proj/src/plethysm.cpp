#include "detstrat/plethysm.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace detstrat {

namespace {

// Walks the Durfee sizes r with r^2 + r <= 2i and, for each, the partitions
// alpha of size (2i - r^2 - r)/2 inside the r x width(r) box.
std::vector<Partition> durfee_family(int i, int max_r, const std::function<int(int)>& width,
                                     const std::function<Partition(int, const Partition&)>& assemble)
{
    std::vector<Partition> out;
    const long long twice = 2LL * i;
    for (int r = 0; r <= max_r && static_cast<long long>(r) * r + r <= twice; ++r) {
        const long long rest = twice - static_cast<long long>(r) * r - r;
        if (rest % 2 != 0) continue;
        for (const auto& alpha : enumerate_in_rectangle(r, width(r), static_cast<int>(rest / 2)))
            out.push_back(assemble(r, alpha));
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace

std::vector<Partition> cauchy_exterior(int m, int n, int i)
{
    if (n < 1 || m < n)
        throw std::invalid_argument("cauchy_exterior: need m >= n >= 1");
    if (i < 0 || static_cast<long long>(i) > static_cast<long long>(m) * n)
        throw std::invalid_argument("cauchy_exterior: degree " + std::to_string(i) + " out of range");
    return enumerate_in_rectangle(n, m, i);
}

std::vector<Partition> symmetric_exterior_partitions(int n, int i)
{
    if (n < 1) throw std::invalid_argument("symmetric_exterior_partitions: need n >= 1");
    if (i < 0 || static_cast<long long>(i) > static_cast<long long>(n) * (n + 1) / 2)
        throw std::invalid_argument("symmetric_exterior_partitions: degree " + std::to_string(i) +
                                    " out of range");
    return durfee_family(
        i, n, [n](int r) { return n - r; },
        [](int r, const Partition& alpha) {
            std::vector<int> parts;
            for (int j = 1; j <= r; ++j) parts.push_back(r + 1 + alpha(static_cast<std::size_t>(j)));
            const Partition tail = conjugate(alpha);
            parts.insert(parts.end(), tail.parts().begin(), tail.parts().end());
            return Partition(std::move(parts));
        });
}

std::vector<Partition> skew_exterior_partitions(int n, int i)
{
    if (n < 2) throw std::invalid_argument("skew_exterior_partitions: need n >= 2");
    if (i < 0 || static_cast<long long>(i) > static_cast<long long>(n) * (n - 1) / 2)
        throw std::invalid_argument("skew_exterior_partitions: degree " + std::to_string(i) +
                                    " out of range");
    return durfee_family(
        i, n - 1, [n](int r) { return n - r - 1; },
        [](int r, const Partition& alpha) {
            std::vector<int> parts;
            for (int j = 1; j <= r; ++j) parts.push_back(r + alpha(static_cast<std::size_t>(j)));
            parts.push_back(r);
            const Partition tail = conjugate(alpha);
            parts.insert(parts.end(), tail.parts().begin(), tail.parts().end());
            return Partition(std::move(parts));
        });
}

Integer schur_dimension(const Partition& p, int N)
{
    if (N < 0) throw std::invalid_argument("schur_dimension: N must be nonnegative");
    if (p.length() > static_cast<std::size_t>(N)) return 0;
    const Partition pc = conjugate(p);
    Integer num = 1;
    Integer den = 1;
    for (std::size_t row = 1; row <= p.length(); ++row) {
        for (int col = 1; col <= p(row); ++col) {
            const long long content = col - static_cast<long long>(row);
            const long long arm = p(row) - col;
            const long long leg = pc(static_cast<std::size_t>(col)) - static_cast<long long>(row);
            num *= N + content;
            den *= arm + leg + 1;
        }
    }
    return num / den;
}

}  // namespace detstrat
