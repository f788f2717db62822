#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <map>
#include <string>
#include <utility>

namespace vqc {

using BigInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

// Laurent polynomial in one formal variable with exact integer coefficients.
class LaurentInt {
public:
    LaurentInt() = default;
    LaurentInt(long long constant);  // NOLINT(google-explicit-constructor)
    LaurentInt(BigInt constant);     // NOLINT(google-explicit-constructor)

    static LaurentInt monomial(BigInt coeff, int exponent);

    const std::map<int, BigInt>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    BigInt coeff(int exponent) const;
    int min_degree() const;
    int max_degree() const;
    // True when at most one exponent carries a nonzero coefficient.
    bool is_monomial() const { return c_.size() <= 1; }

    LaurentInt& operator+=(const LaurentInt& other);
    LaurentInt& operator-=(const LaurentInt& other);
    LaurentInt& operator*=(const LaurentInt& other);
    LaurentInt operator-() const;

    // Multiply by x^e.
    LaurentInt shifted(int e) const;
    // x -> x^{-1}; coefficients are integers so no further conjugation is needed.
    LaurentInt conj() const;
    // x -> -x: negates the coefficients of odd exponents.
    LaurentInt twisted() const;
    // Sum of all coefficients (the value at x = 1).
    BigInt at_one() const;

    Complex eval(Complex x) const;

    std::string str(char var = 'q') const;

    friend bool operator==(const LaurentInt&, const LaurentInt&) = default;

    friend LaurentInt operator+(LaurentInt a, const LaurentInt& b) { return a += b; }
    friend LaurentInt operator-(LaurentInt a, const LaurentInt& b) { return a -= b; }
    friend LaurentInt operator*(LaurentInt a, const LaurentInt& b) { return a *= b; }

private:
    void add_term(int exponent, const BigInt& value);
    std::map<int, BigInt> c_;
};

}  // namespace vqc
