#pragma once

#include "detstrat/laurent_poly.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace detstrat {

// Square upper-triangular integer matrix indexed by strata 0..order()-1.
// Writing below the diagonal throws, so triangularity holds by construction.
class StrataMatrix {
public:
    StrataMatrix() = default;
    explicit StrataMatrix(std::size_t order);
    // Rejects non-square or non-upper-triangular input.
    explicit StrataMatrix(const std::vector<std::vector<Integer>>& rows);
    StrataMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static StrataMatrix identity(std::size_t order);

    std::size_t order() const { return order_; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }
    void set(std::size_t i, std::size_t j, Integer value);

    std::vector<std::vector<Integer>> rows() const;

    friend bool operator==(const StrataMatrix&, const StrataMatrix&) = default;

private:
    std::size_t order_ = 0;
    std::vector<Integer> data_;
};

StrataMatrix operator*(const StrataMatrix& a, const StrataMatrix& b);

}  // namespace detstrat
