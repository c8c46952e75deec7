/*
 * Exact arithmetic in Q(sqrt(q)) for a prime q: elements a + b*sqrt(q)
 * with rational a, b.  A pure rational (b = 0) carries radicand 0 and
 * combines with any radicand; combining two elements with distinct
 * nonzero radicands is an error.
 */
#pragma once

#include <string>
#include <boost/multiprecision/cpp_int.hpp>

#include "qring/laurent.hpp"

namespace qring {

bool is_prime(long n);

class QuadraticFieldElement {
public:
    QuadraticFieldElement() = default;
    QuadraticFieldElement(int r) : rat_(r) {}
    explicit QuadraticFieldElement(Rational r) : rat_(std::move(r)) {}
    QuadraticFieldElement(Rational rational_part, Rational surd_part, int radicand);

    static QuadraticFieldElement sqrt_of(int q) { return QuadraticFieldElement(Rational(0), Rational(1), q); }
    // (sqrt(q))^k for any integer k, exactly.
    static QuadraticFieldElement sqrt_power(int q, long k);

    const Rational& rational_part() const { return rat_; }
    const Rational& surd_part() const { return surd_; }
    int radicand() const { return radicand_; }

    bool is_zero() const { return rat_ == 0 && surd_ == 0; }
    bool is_rational() const { return surd_ == 0; }

    // Exact sign of the real number a + b*sqrt(q): -1, 0 or +1.
    int sign() const;

    QuadraticFieldElement operator-() const;
    QuadraticFieldElement inverse() const;

    QuadraticFieldElement& operator+=(const QuadraticFieldElement& o);
    QuadraticFieldElement& operator-=(const QuadraticFieldElement& o);
    QuadraticFieldElement& operator*=(const QuadraticFieldElement& o);
    QuadraticFieldElement& operator/=(const QuadraticFieldElement& o);

    friend QuadraticFieldElement operator+(QuadraticFieldElement a, const QuadraticFieldElement& b) { a += b; return a; }
    friend QuadraticFieldElement operator-(QuadraticFieldElement a, const QuadraticFieldElement& b) { a -= b; return a; }
    friend QuadraticFieldElement operator*(QuadraticFieldElement a, const QuadraticFieldElement& b) { a *= b; return a; }
    friend QuadraticFieldElement operator/(QuadraticFieldElement a, const QuadraticFieldElement& b) { a /= b; return a; }

    bool operator==(const QuadraticFieldElement& o) const {
        return rat_ == o.rat_ && surd_ == o.surd_ && radicand_ == o.radicand_;
    }
    bool operator!=(const QuadraticFieldElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    Rational rat_ = 0;
    Rational surd_ = 0;
    int radicand_ = 0;   // 0 iff surd_ == 0

    int combined_radicand(const QuadraticFieldElement& o) const;
    void canonicalize() { if (surd_ == 0) radicand_ = 0; }
};

// Substitute v = +sqrt(q) in a Laurent polynomial; q must be prime.
QuadraticFieldElement evaluate_at_sqrt_q(const LaurentPolynomial& p, int q);

} // namespace qring
