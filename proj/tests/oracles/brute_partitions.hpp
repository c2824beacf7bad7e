#pragma once

// Test-only brute force: every weakly decreasing tuple in [0, cols]^rows,
// found by scanning the whole cube. Shares no code with the library.

#include <map>
#include <vector>

namespace oracle {

inline std::vector<std::vector<int>> box_partitions(int rows, int cols)
{
    std::vector<std::vector<int>> out;
    std::vector<int> t(static_cast<std::size_t>(rows), 0);
    while (true) {
        bool decreasing = true;
        for (std::size_t k = 0; k + 1 < t.size(); ++k)
            if (t[k] < t[k + 1]) decreasing = false;
        if (decreasing) {
            std::vector<int> trimmed = t;
            while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
            out.push_back(trimmed);
        }
        // odometer increment
        std::size_t pos = 0;
        while (pos < t.size() && t[pos] == cols) t[pos++] = 0;
        if (pos == t.size()) break;
        ++t[pos];
    }
    return out;
}

inline int tuple_size(const std::vector<int>& t)
{
    int s = 0;
    for (int v : t) s += v;
    return s;
}

// size -> number of partitions of that size in the box
inline std::map<int, long long> box_size_counts(int rows, int cols)
{
    std::map<int, long long> counts;
    for (const auto& t : box_partitions(rows, cols)) ++counts[tuple_size(t)];
    return counts;
}

inline long long brute_binomial(int a, int b)
{
    if (b < 0 || b > a) return 0;
    // Pascal triangle, built independently of the library.
    std::vector<std::vector<long long>> c(static_cast<std::size_t>(a) + 1);
    for (int r = 0; r <= a; ++r) {
        c[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(r) + 1, 1);
        for (int k = 1; k < r; ++k)
            c[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] =
                c[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(k) - 1] +
                c[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(k)];
    }
    return c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

}  // namespace oracle
