#include "detstrat/laurent_poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace detstrat {

namespace {

int checked_exponent(long long e)
{
    if (e < std::numeric_limits<int>::min() || e > std::numeric_limits<int>::max())
        throw std::overflow_error("exponent out of range");
    return static_cast<int>(e);
}

}  // namespace

Integer binomial(long long a, long long b)
{
    if (b < 0 || a < 0 || b > a) return 0;
    b = std::min(b, a - b);
    Integer r = 1;
    for (long long k = 1; k <= b; ++k) {
        r *= a - b + k;
        r /= k;
    }
    return r;
}

LaurentPoly::LaurentPoly(int min_exponent, std::vector<Integer> coefficients)
    : min_exp_(min_exponent), coeffs_(std::move(coefficients))
{
    normalize();
}

LaurentPoly::LaurentPoly(int min_exponent, std::initializer_list<long long> coefficients)
    : min_exp_(min_exponent), coeffs_(coefficients.begin(), coefficients.end())
{
    normalize();
}

LaurentPoly LaurentPoly::constant(Integer c) { return LaurentPoly(0, std::vector<Integer>{std::move(c)}); }

LaurentPoly LaurentPoly::monomial(int exponent, Integer c)
{
    return LaurentPoly(exponent, std::vector<Integer>{std::move(c)});
}

void LaurentPoly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; });
    const auto lead = first - coeffs_.begin();
    coeffs_.erase(coeffs_.begin(), first);
    if (coeffs_.empty())
        min_exp_ = 0;
    else
        min_exp_ = checked_exponent(static_cast<long long>(min_exp_) + lead);
}

Integer LaurentPoly::coefficient(int exponent) const
{
    if (is_zero() || exponent < min_exp_ || exponent > max_exponent()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - min_exp_)];
}

std::string LaurentPoly::to_string() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Integer& c = coeffs_[k];
        if (c == 0) continue;
        const int e = min_exp_ + static_cast<int>(k);
        const Integer mag = c < 0 ? Integer(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << '*';
        os << 'q';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs)
{
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    const int lo = std::min(min_exp_, rhs.min_exp_);
    const int hi = std::max(max_exponent(), rhs.max_exponent());
    std::vector<Integer> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[static_cast<std::size_t>(min_exp_ - lo) + k] += coeffs_[k];
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
        out[static_cast<std::size_t>(rhs.min_exp_ - lo) + k] += rhs.coeffs_[k];
    min_exp_ = lo;
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return LaurentPoly(checked_exponent(static_cast<long long>(a.min_exp_) + b.min_exp_), std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly operator-(const LaurentPoly& a)
{
    LaurentPoly r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly shift(const LaurentPoly& a, int k)
{
    if (a.is_zero()) return a;
    return LaurentPoly(checked_exponent(static_cast<long long>(a.min_exponent()) + k), a.coefficients());
}

LaurentPoly substitute_power(const LaurentPoly& a, int k)
{
    if (k <= 0) throw std::invalid_argument("substitute_power: exponent scale must be positive");
    if (a.is_zero() || k == 1) return a;
    const auto& c = a.coefficients();
    std::vector<Integer> out((c.size() - 1) * static_cast<std::size_t>(k) + 1);
    for (std::size_t i = 0; i < c.size(); ++i) out[i * static_cast<std::size_t>(k)] = c[i];
    return LaurentPoly(checked_exponent(static_cast<long long>(a.min_exponent()) * k), std::move(out));
}

Integer evaluate(const LaurentPoly& a, long long x)
{
    if (a.is_zero()) return 0;
    if (a.min_exponent() < 0 && x != 1 && x != -1)
        throw std::invalid_argument("evaluate: Laurent polynomial with negative exponents needs x = +-1");
    // Horner from the top degree down to min_exponent, then scale.
    Integer acc = 0;
    const auto& c = a.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    const int e0 = a.min_exponent();
    if (e0 >= 0) {
        Integer scale = boost::multiprecision::pow(Integer(x), static_cast<unsigned>(e0));
        return acc * scale;
    }
    // |x| == 1 here, so x^e0 == x^(-e0).
    return (x == -1 && (-static_cast<long long>(e0)) % 2 != 0) ? Integer(-acc) : acc;
}

LaurentPoly gauss_binomial(int a, int b)
{
    if (b < 0 || b > a) throw std::invalid_argument("gauss_binomial: need a >= b >= 0");
    // Row r holds [r choose 0..b]_q; extend by
    //   [r choose j] = [r-1 choose j-1] + q^j [r-1 choose j].
    std::vector<LaurentPoly> row(static_cast<std::size_t>(b) + 1);
    row[0] = LaurentPoly::constant(1);
    for (int r = 1; r <= a; ++r) {
        for (int j = std::min(r, b); j >= 1; --j) {
            const auto uj = static_cast<std::size_t>(j);
            row[uj] = row[uj - 1] + shift(row[uj], j);
        }
    }
    return row[static_cast<std::size_t>(b)];
}

}  // namespace detstrat
