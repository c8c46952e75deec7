#include "qring/laurent.hpp"

#include <sstream>
#include <vector>

namespace qring {

LaurentPolynomial::LaurentPolynomial(Int constant) {
    if (constant != 0)
        coeffs_[0] = std::move(constant);
}

LaurentPolynomial LaurentPolynomial::monomial(Int coeff, int exponent) {
    LaurentPolynomial p;
    if (coeff != 0)
        p.coeffs_[exponent] = std::move(coeff);
    return p;
}

LaurentPolynomial LaurentPolynomial::v(int exponent) {
    return monomial(Int(1), exponent);
}

bool LaurentPolynomial::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

bool LaurentPolynomial::is_constant() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

Int LaurentPolynomial::coefficient(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Int(0) : it->second;
}

int LaurentPolynomial::min_exponent() const {
    if (is_zero()) throw qring_error("min_exponent of zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
    if (is_zero()) throw qring_error("max_exponent of zero polynomial");
    return coeffs_.rbegin()->first;
}

Int LaurentPolynomial::leading_coefficient() const {
    if (is_zero()) throw qring_error("leading_coefficient of zero polynomial");
    return coeffs_.rbegin()->second;
}

LaurentPolynomial LaurentPolynomial::bar() const {
    LaurentPolynomial p;
    for (const auto& [e, c] : coeffs_)
        p.coeffs_[-e] = c;
    return p;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
    LaurentPolynomial p;
    for (const auto& [e, c] : coeffs_)
        p.coeffs_[e + k] = c;
    return p;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial p;
    for (const auto& [e, c] : coeffs_)
        p.coeffs_[e] = -c;
    return p;
}

void LaurentPolynomial::add_term(int exponent, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.coeffs_)
        add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.coeffs_)
        add_term(e, -c);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial p;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_)
            p.add_term(ea + eb, ca * cb);
    return p;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
    *this = *this * o;
    return *this;
}

LaurentPolynomial LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
    if (divisor.is_zero()) throw qring_error("division by zero polynomial");
    if (is_zero()) return LaurentPolynomial();

    // Shift both operands into Z[v] and perform long division over Q,
    // checking that the remainder vanishes and the quotient is integral.
    const int sn = min_exponent();
    const int sd = divisor.min_exponent();
    const LaurentPolynomial num = shifted(-sn);
    const LaurentPolynomial den = divisor.shifted(-sd);

    std::vector<Rational> rem(static_cast<size_t>(num.max_exponent()) + 1, Rational(0));
    for (const auto& [e, c] : num.coeffs_)
        rem[static_cast<size_t>(e)] = Rational(c);
    const int dd = den.max_exponent();
    const Int dl = den.leading_coefficient();

    std::map<int, Rational> quot;
    for (int e = static_cast<int>(rem.size()) - 1; e >= dd; --e) {
        if (rem[static_cast<size_t>(e)] == 0) continue;
        Rational q = rem[static_cast<size_t>(e)] / Rational(dl);
        quot[e - dd] = q;
        for (const auto& [ed, cd] : den.coefficients())
            rem[static_cast<size_t>(e - dd + ed)] -= q * Rational(cd);
    }
    for (const auto& r : rem)
        if (r != 0) throw qring_error("divide_exact: nonzero remainder");

    LaurentPolynomial result;
    for (const auto& [e, q] : quot) {
        if (q == 0) continue;
        if (denominator(q) != 1)
            throw qring_error("divide_exact: quotient not integral");
        result.coeffs_[e + sn - sd] = numerator(q);
    }
    return result;
}

Int LaurentPolynomial::content() const {
    Int g = 0;
    for (const auto& [e, c] : coeffs_)
        g = boost::multiprecision::gcd(g, c);
    return g < 0 ? Int(-g) : g;
}

LaurentPolynomial LaurentPolynomial::primitive_part() const {
    if (is_zero()) return *this;
    return divide_exact(LaurentPolynomial(content()));
}

std::string LaurentPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "v";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

// One step of pseudo-division for polynomials with min exponent 0.
LaurentPolynomial pseudo_rem(LaurentPolynomial r, const LaurentPolynomial& d) {
    const int dd = d.max_exponent();
    const Int dl = d.leading_coefficient();
    while (!r.is_zero() && r.max_exponent() >= dd) {
        const int e = r.max_exponent();
        const Int c = r.leading_coefficient();
        r = r * LaurentPolynomial(dl) - d.shifted(e - dd) * LaurentPolynomial(c);
    }
    return r;
}

} // namespace

LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPolynomial();
    const Int cont = boost::multiprecision::gcd(a.content(), b.content());

    LaurentPolynomial f = a.is_zero() ? b : a;
    LaurentPolynomial g = a.is_zero() ? a : b;
    f = f.primitive_part().shifted(-f.min_exponent());
    if (!g.is_zero())
        g = g.primitive_part().shifted(-g.min_exponent());

    // Primitive polynomial remainder sequence.
    while (!g.is_zero()) {
        LaurentPolynomial r = pseudo_rem(f, g);
        f = g;
        if (r.is_zero()) {
            g = r;
        } else {
            r = r.shifted(-r.min_exponent());
            g = r.primitive_part();
        }
    }
    if (f.leading_coefficient() < 0) f = -f;
    return f * LaurentPolynomial(cont);
}

} // namespace qring
