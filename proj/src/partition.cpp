#include "detstrat/partition.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace detstrat {

namespace {

std::string join(const std::vector<int>& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

void fill_rectangle(int rows, int cols, int remaining, std::vector<int>& prefix,
                    std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (static_cast<int>(prefix.size()) == rows) return;
    const int slots = rows - static_cast<int>(prefix.size());
    const int cap = std::min(cols, prefix.empty() ? cols : prefix.back());
    for (int part = std::min(cap, remaining); part >= 1; --part) {
        // the remaining rows can hold at most slots * part more cells
        if (static_cast<long long>(slots) * part < remaining) break;
        prefix.push_back(part);
        fill_rectangle(rows, cols, remaining - part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("partition has a negative part: " + join(parts_));
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition is not weakly decreasing: " + join(parts_));
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::operator()(std::size_t i) const
{
    if (i == 0) throw std::out_of_range("partition index is 1-based");
    return i <= parts_.size() ? parts_[i - 1] : 0;
}

IntegerWeight Partition::padded(std::size_t n) const
{
    if (parts_.size() > n)
        throw std::invalid_argument("partition " + to_string() + " has more than " +
                                    std::to_string(n) + " parts");
    std::vector<int> entries(parts_);
    entries.resize(n, 0);
    return IntegerWeight(std::move(entries));
}

std::string Partition::to_string() const { return join(parts_); }

IntegerWeight::IntegerWeight(std::vector<int> entries) : entries_(std::move(entries))
{
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
        if (entries_[i] < entries_[i + 1])
            throw std::invalid_argument("weight is not dominant: " + join(entries_));
}

IntegerWeight::IntegerWeight(std::initializer_list<int> entries)
    : IntegerWeight(std::vector<int>(entries))
{
}

bool IntegerWeight::is_partition() const
{
    return entries_.empty() || entries_.back() >= 0;
}

Partition IntegerWeight::to_partition() const
{
    if (!is_partition()) throw std::invalid_argument("weight has negative entries: " + to_string());
    return Partition(entries_);
}

std::string IntegerWeight::to_string() const { return join(entries_); }

Partition conjugate(const Partition& p)
{
    if (p.empty()) return {};
    std::vector<int> out(static_cast<std::size_t>(p.parts().front()), 0);
    for (int part : p.parts())
        for (int c = 0; c < part; ++c) ++out[static_cast<std::size_t>(c)];
    return Partition(std::move(out));
}

int durfee_size(const Partition& p)
{
    int s = 0;
    while (static_cast<std::size_t>(s) < p.length() && p.parts()[static_cast<std::size_t>(s)] >= s + 1)
        ++s;
    return s;
}

long long size(const Partition& p)
{
    long long total = 0;
    for (int part : p.parts()) {
        if (total > std::numeric_limits<long long>::max() - part)
            throw std::overflow_error("partition size overflows");
        total += part;
    }
    return total;
}

bool fits_in_rectangle(const Partition& p, int rows, int cols)
{
    if (rows < 0 || cols < 0) throw std::invalid_argument("rectangle dimensions must be nonnegative");
    if (p.empty()) return true;
    return static_cast<long long>(p.length()) <= rows && p.parts().front() <= cols;
}

std::vector<Partition> enumerate_in_rectangle(int rows, int cols, int k)
{
    if (rows < 0 || cols < 0 || k < 0)
        throw std::invalid_argument("enumerate_in_rectangle: arguments must be nonnegative");
    std::vector<Partition> out;
    if (static_cast<long long>(rows) * cols < k) return out;
    std::vector<int> prefix;
    fill_rectangle(rows, cols, k, prefix, out);
    return out;
}

std::vector<Partition> enumerate_in_rectangle(int rows, int cols)
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("enumerate_in_rectangle: arguments must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    // Lexicographically decreasing over all sizes: walk the box depth-first,
    // emitting each prefix after its extensions.
    auto walk = [&](auto&& self) -> void {
        if (static_cast<int>(prefix.size()) < rows) {
            const int cap = prefix.empty() ? cols : prefix.back();
            for (int part = cap; part >= 1; --part) {
                prefix.push_back(part);
                self(self);
                prefix.pop_back();
            }
        }
        out.emplace_back(prefix);
    };
    walk(walk);
    return out;
}

IntegerWeight dual_weight(const IntegerWeight& w)
{
    std::vector<int> out;
    out.reserve(w.length());
    for (auto it = w.entries().rbegin(); it != w.entries().rend(); ++it) {
        if (*it == std::numeric_limits<int>::min()) throw std::overflow_error("weight entry cannot be negated");
        out.push_back(-*it);
    }
    return IntegerWeight(std::move(out));
}

}  // namespace detstrat
