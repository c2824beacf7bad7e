#include "detstrat/strata_matrix.hpp"

#include <stdexcept>

namespace detstrat {

StrataMatrix::StrataMatrix(std::size_t order) : order_(order), data_(order * order) {}

StrataMatrix::StrataMatrix(const std::vector<std::vector<Integer>>& rows) : StrataMatrix(rows.size())
{
    for (std::size_t i = 0; i < order_; ++i) {
        if (rows[i].size() != order_) throw std::invalid_argument("strata matrix must be square");
        for (std::size_t j = 0; j < order_; ++j) set(i, j, rows[i][j]);
    }
}

StrataMatrix::StrataMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : StrataMatrix(rows.size())
{
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != order_) throw std::invalid_argument("strata matrix must be square");
        std::size_t j = 0;
        for (long long v : row) set(i, j++, v);
        ++i;
    }
}

StrataMatrix StrataMatrix::identity(std::size_t order)
{
    StrataMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m.set(i, i, 1);
    return m;
}

void StrataMatrix::set(std::size_t i, std::size_t j, Integer value)
{
    if (i >= order_ || j >= order_) throw std::out_of_range("strata matrix index out of range");
    if (i > j && value != 0)
        throw std::invalid_argument("strata matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") below the diagonal must be zero");
    data_[i * order_ + j] = std::move(value);
}

std::vector<std::vector<Integer>> StrataMatrix::rows() const
{
    std::vector<std::vector<Integer>> out(order_);
    for (std::size_t i = 0; i < order_; ++i)
        out[i].assign(data_.begin() + static_cast<std::ptrdiff_t>(i * order_),
                      data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * order_));
    return out;
}

StrataMatrix operator*(const StrataMatrix& a, const StrataMatrix& b)
{
    if (a.order() != b.order()) throw std::invalid_argument("strata matrix orders differ");
    StrataMatrix c(a.order());
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = i; j < a.order(); ++j) {
            Integer acc = 0;
            for (std::size_t k = i; k <= j; ++k) acc += a(i, k) * b(k, j);
            c.set(i, j, std::move(acc));
        }
    return c;
}

}  // namespace detstrat
