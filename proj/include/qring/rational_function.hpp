/*
 * Rational functions in v with exact integer Laurent-polynomial numerator
 * and denominator, kept in a reduced canonical form: the fraction is
 * reduced by the polynomial gcd (content included), the denominator lies
 * in Z[v] with nonzero constant term and positive leading coefficient.
 */
#pragma once

#include "qring/laurent.hpp"

namespace qring {

class RationalFunction {
public:
    RationalFunction() : num_(), den_(LaurentPolynomial::one()) {}
    RationalFunction(int constant) : RationalFunction(LaurentPolynomial(Int(constant))) {}
    explicit RationalFunction(Int constant) : RationalFunction(LaurentPolynomial(std::move(constant))) {}
    explicit RationalFunction(const Rational& r);
    RationalFunction(LaurentPolynomial num);
    RationalFunction(LaurentPolynomial num, LaurentPolynomial den);

    static RationalFunction v(int exponent = 1) { return RationalFunction(LaurentPolynomial::v(exponent)); }
    static RationalFunction one() { return RationalFunction(1); }

    const LaurentPolynomial& num() const { return num_; }
    const LaurentPolynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RationalFunction operator-() const;
    RationalFunction inverse() const;
    RationalFunction bar() const;   // v -> v^{-1}

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { a += b; return a; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { a -= b; return a; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { a *= b; return a; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { a /= b; return a; }

    // Canonical form makes equality componentwise.
    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    std::string str() const;

private:
    LaurentPolynomial num_, den_;

    void normalize();
};

} // namespace qring
