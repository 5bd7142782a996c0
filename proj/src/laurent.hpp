#pragma once

// Sparse integer Laurent polynomials in one variable t.
// Coefficients are arbitrary-precision and all arithmetic is exact.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dcover {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

class IntLaurentPoly {
public:
    IntLaurentPoly() = default;  // zero
    explicit IntLaurentPoly(const BigInt& constant);

    static IntLaurentPoly monomial(const BigInt& coeff, int exp);
    static IntLaurentPoly from_terms(const std::vector<std::pair<int, BigInt>>& terms);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const;   // largest exponent; poly must be nonzero
    int min_exp() const;  // smallest exponent; poly must be nonzero
    BigInt coeff(int exp) const;

    // exponent -> coefficient, ascending exponent, no zero coefficients stored
    const std::map<int, BigInt>& terms() const { return coeffs_; }

    // Evaluation at an integer point; requires min_exp() >= 0.
    BigInt eval(const BigInt& x) const;

    // Laurent polynomials are compared exactly; normalized() strips the
    // unit t^k so that the smallest exponent is 0 (Alexander polynomials
    // are defined only up to +-t^k).
    IntLaurentPoly normalized() const;

    IntLaurentPoly operator-() const;
    IntLaurentPoly& operator+=(const IntLaurentPoly& rhs);
    IntLaurentPoly& operator-=(const IntLaurentPoly& rhs);
    friend IntLaurentPoly operator+(IntLaurentPoly lhs, const IntLaurentPoly& rhs) { return lhs += rhs; }
    friend IntLaurentPoly operator-(IntLaurentPoly lhs, const IntLaurentPoly& rhs) { return lhs -= rhs; }
    friend IntLaurentPoly operator*(const IntLaurentPoly& lhs, const IntLaurentPoly& rhs);

    bool operator==(const IntLaurentPoly& rhs) const = default;

    // Exact division over Z; throws std::domain_error if the divisor does
    // not divide exactly (nonzero remainder or fractional coefficient).
    IntLaurentPoly divide_exact(const IntLaurentPoly& divisor) const;

    // Human form, descending exponents: "t^2 - t + 1".
    std::string to_string() const;

private:
    void add_term(int exp, const BigInt& c);

    std::map<int, BigInt> coeffs_;
};

}  // namespace dcover
