#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace detstrat {

using Integer = boost::multiprecision::cpp_int;

Integer binomial(long long a, long long b);

// Finitely supported Z-linear combination of powers q^e, e in Z.
//
// Stored densely: coefficients()[k] multiplies q^(min_exponent() + k). Both
// ends of the coefficient run are nonzero; the zero polynomial has no
// coefficients and min_exponent() == 0.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int min_exponent, std::vector<Integer> coefficients);
    LaurentPoly(int min_exponent, std::initializer_list<long long> coefficients);

    static LaurentPoly constant(Integer c);
    static LaurentPoly monomial(int exponent, Integer c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    int min_exponent() const { return min_exp_; }
    // Meaningless for the zero polynomial.
    int max_exponent() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coefficients() const { return coeffs_; }
    Integer coefficient(int exponent) const;

    // "q^-3 + 2*q^-1 + 1"
    std::string to_string() const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

private:
    void normalize();

    int min_exp_ = 0;
    std::vector<Integer> coeffs_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

// a * q^k
LaurentPoly shift(const LaurentPoly& a, int k);

// a(q^k), k >= 1
LaurentPoly substitute_power(const LaurentPoly& a, int k);

// Exact value at an integer. Genuine Laurent inputs (some negative
// exponent) only admit x = 1 or x = -1.
Integer evaluate(const LaurentPoly& a, long long x);

// The Gaussian binomial coefficient [a choose b]_q, a >= b >= 0.
LaurentPoly gauss_binomial(int a, int b);

}  // namespace detstrat
