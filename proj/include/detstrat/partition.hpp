#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace detstrat {

class IntegerWeight;

// A weakly decreasing sequence of nonnegative integers (a Young diagram).
// Trailing zeros are trimmed on construction, so two partitions are equal
// exactly when their stored parts are equal.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    // 1-based access, zero past the last stored part.
    int operator()(std::size_t i) const;

    // Length-n view with trailing zeros; throws if there are more than n parts.
    IntegerWeight padded(std::size_t n) const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// A dominant GL_n weight: weakly decreasing integers of fixed length n.
class IntegerWeight {
public:
    IntegerWeight() = default;
    explicit IntegerWeight(std::vector<int> entries);
    IntegerWeight(std::initializer_list<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    std::size_t length() const { return entries_.size(); }

    // 1-based access; index must lie in [1, length()].
    int operator()(std::size_t i) const { return entries_.at(i - 1); }

    bool is_partition() const;
    // Drops trailing zeros; throws if some entry is negative.
    Partition to_partition() const;

    std::string to_string() const;

    friend bool operator==(const IntegerWeight&, const IntegerWeight&) = default;
    friend auto operator<=>(const IntegerWeight&, const IntegerWeight&) = default;

private:
    std::vector<int> entries_;
};

Partition conjugate(const Partition& p);

// Largest s with p_s >= s.
int durfee_size(const Partition& p);

long long size(const Partition& p);

bool fits_in_rectangle(const Partition& p, int rows, int cols);

// All partitions of k with at most `rows` parts, each at most `cols`,
// in lexicographically decreasing order.
std::vector<Partition> enumerate_in_rectangle(int rows, int cols, int k);

// Every partition inside the rows x cols box, all sizes, lexicographically
// decreasing.
std::vector<Partition> enumerate_in_rectangle(int rows, int cols);

// (w_1, ..., w_n) -> (-w_n, ..., -w_1)
IntegerWeight dual_weight(const IntegerWeight& w);

}  // namespace detstrat
