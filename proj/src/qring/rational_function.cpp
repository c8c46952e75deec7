#include "qring/rational_function.hpp"

namespace qring {

RationalFunction::RationalFunction(const Rational& r)
    : num_(LaurentPolynomial(numerator(r))), den_(LaurentPolynomial(denominator(r))) {
    normalize();
}

RationalFunction::RationalFunction(LaurentPolynomial num)
    : num_(std::move(num)), den_(LaurentPolynomial::one()) {}

RationalFunction::RationalFunction(LaurentPolynomial num, LaurentPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw qring_error("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPolynomial::one();
        return;
    }
    LaurentPolynomial g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    // Denominator in Z[v] with nonzero constant term and positive leading
    // coefficient; the unit v^k and the sign go to the numerator.
    const int shift = den_.min_exponent();
    if (shift != 0) {
        num_ = num_.shifted(-shift);
        den_ = den_.shifted(-shift);
    }
    if (den_.leading_coefficient() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw qring_error("inverse of zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::bar() const {
    return RationalFunction(num_.bar(), den_.bar());
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (den_.is_zero()) throw qring_error("rational function with zero denominator");
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw qring_error("division by zero rational function");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

std::string RationalFunction::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace qring
