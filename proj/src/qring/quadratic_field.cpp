#include "qring/quadratic_field.hpp"

#include <sstream>

namespace qring {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

QuadraticFieldElement::QuadraticFieldElement(Rational rational_part, Rational surd_part, int radicand)
    : rat_(std::move(rational_part)), surd_(std::move(surd_part)), radicand_(radicand) {
    if (surd_ != 0 && !is_prime(radicand_))
        throw qring_error("radicand must be a positive prime");
    canonicalize();
}

QuadraticFieldElement QuadraticFieldElement::sqrt_power(int q, long k) {
    if (!is_prime(q)) throw qring_error("radicand must be a positive prime");
    const long half = (k >= 0 ? k : k - 1) / 2;   // floor(k/2)
    Rational scale;
    if (half >= 0) {
        scale = Rational(boost::multiprecision::pow(Int(q), static_cast<unsigned>(half)));
    } else {
        scale = Rational(Int(1), boost::multiprecision::pow(Int(q), static_cast<unsigned>(-half)));
    }
    if (k % 2 == 0) return QuadraticFieldElement(scale);
    return QuadraticFieldElement(Rational(0), scale, q);
}

int QuadraticFieldElement::combined_radicand(const QuadraticFieldElement& o) const {
    if (radicand_ == 0) return o.radicand_;
    if (o.radicand_ == 0 || o.radicand_ == radicand_) return radicand_;
    throw qring_error("mixing distinct radicands: " + std::to_string(radicand_) +
                      " and " + std::to_string(o.radicand_));
}

int QuadraticFieldElement::sign() const {
    const int sa = rat_ == 0 ? 0 : (rat_ > 0 ? 1 : -1);
    const int sb = surd_ == 0 ? 0 : (surd_ > 0 ? 1 : -1);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with q*b^2.
    const Rational a2 = rat_ * rat_;
    const Rational qb2 = Rational(radicand_) * surd_ * surd_;
    if (a2 == qb2) return 0;
    return (a2 > qb2) ? sa : sb;
}

QuadraticFieldElement QuadraticFieldElement::operator-() const {
    QuadraticFieldElement r(*this);
    r.rat_ = -r.rat_;
    r.surd_ = -r.surd_;
    return r;
}

QuadraticFieldElement QuadraticFieldElement::inverse() const {
    if (is_zero()) throw qring_error("inverse of zero");
    // (a + b sqrt(q))^{-1} = (a - b sqrt(q)) / (a^2 - q b^2)
    const Rational norm = rat_ * rat_ - Rational(radicand_) * surd_ * surd_;
    if (norm == 0) throw qring_error("inverse: zero norm");   // impossible for prime radicand
    QuadraticFieldElement r;
    r.rat_ = rat_ / norm;
    r.surd_ = -surd_ / norm;
    r.radicand_ = radicand_;
    r.canonicalize();
    return r;
}

QuadraticFieldElement& QuadraticFieldElement::operator+=(const QuadraticFieldElement& o) {
    radicand_ = combined_radicand(o);
    rat_ += o.rat_;
    surd_ += o.surd_;
    canonicalize();
    return *this;
}

QuadraticFieldElement& QuadraticFieldElement::operator-=(const QuadraticFieldElement& o) {
    radicand_ = combined_radicand(o);
    rat_ -= o.rat_;
    surd_ -= o.surd_;
    canonicalize();
    return *this;
}

QuadraticFieldElement& QuadraticFieldElement::operator*=(const QuadraticFieldElement& o) {
    const int q = combined_radicand(o);
    const Rational a = rat_ * o.rat_ + Rational(q) * surd_ * o.surd_;
    const Rational b = rat_ * o.surd_ + surd_ * o.rat_;
    rat_ = a;
    surd_ = b;
    radicand_ = q;
    canonicalize();
    return *this;
}

QuadraticFieldElement& QuadraticFieldElement::operator/=(const QuadraticFieldElement& o) {
    *this *= o.inverse();
    return *this;
}

std::string QuadraticFieldElement::str() const {
    std::ostringstream os;
    if (surd_ == 0) {
        os << rat_;
    } else {
        os << rat_ << (surd_ > 0 ? "+" : "-");
        const Rational b = surd_ > 0 ? surd_ : Rational(-surd_);
        if (b != 1) os << b << "*";
        os << "sqrt(" << radicand_ << ")";
    }
    return os.str();
}

QuadraticFieldElement evaluate_at_sqrt_q(const LaurentPolynomial& p, int q) {
    if (!is_prime(q)) throw qring_error("evaluate_at_sqrt_q: q must be prime");
    QuadraticFieldElement acc;
    for (const auto& [e, c] : p.coefficients())
        acc += QuadraticFieldElement(Rational(c)) * QuadraticFieldElement::sqrt_power(q, e);
    return acc;
}

} // namespace qring
