/*
 * Integer Laurent polynomials in a single variable v.
 *
 * Coefficients are arbitrary-precision integers; the zero coefficient is
 * never stored.  All arithmetic is exact.
 */
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <boost/multiprecision/cpp_int.hpp>

namespace qring {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class qring_error : public std::runtime_error {
public:
    explicit qring_error(const std::string& what) : std::runtime_error(what) {}
};

class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(Int constant);

    static LaurentPolynomial monomial(Int coeff, int exponent);
    static LaurentPolynomial v(int exponent = 1);
    static LaurentPolynomial one() { return LaurentPolynomial(Int(1)); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    bool is_constant() const;

    const std::map<int, Int>& coefficients() const { return coeffs_; }
    Int coefficient(int exponent) const;
    int min_exponent() const;   // requires nonzero
    int max_exponent() const;   // requires nonzero
    Int leading_coefficient() const;   // coefficient of max_exponent

    // The bar involution v -> v^{-1}.
    LaurentPolynomial bar() const;
    // Multiplication by v^k.
    LaurentPolynomial shifted(int k) const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    LaurentPolynomial& operator*=(const LaurentPolynomial& o);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { a += b; return a; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { a -= b; return a; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

    bool operator==(const LaurentPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

    // Exact division; throws qring_error when the divisor does not divide
    // exactly in Z[v, v^{-1}].
    LaurentPolynomial divide_exact(const LaurentPolynomial& divisor) const;

    // gcd of the coefficients, non-negative; content of 0 is 0.
    Int content() const;
    LaurentPolynomial primitive_part() const;

    std::string str() const;

private:
    std::map<int, Int> coeffs_;   // exponent -> nonzero coefficient

    void add_term(int exponent, const Int& c);
};

// Canonical gcd in Z[v, v^{-1}]: primitive, lowest exponent 0, positive
// leading coefficient, times the gcd of the contents.
LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

} // namespace qring
