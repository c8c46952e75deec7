#include "qring/qnumbers.hpp"

namespace qring {

LaurentPolynomial quantum_integer(int n) {
    if (n == 0) return LaurentPolynomial();
    if (n < 0) return -quantum_integer(-n);
    LaurentPolynomial p;
    for (int e = n - 1; e >= -(n - 1); e -= 2)
        p += LaurentPolynomial::v(e);
    return p;
}

LaurentPolynomial quantum_factorial(int n) {
    if (n < 0) throw qring_error("quantum_factorial of negative argument");
    LaurentPolynomial p = LaurentPolynomial::one();
    for (int k = 2; k <= n; ++k)
        p *= quantum_integer(k);
    return p;
}

LaurentPolynomial gaussian_binomial(int n, int k) {
    if (k < 0 || k > n) throw qring_error("gaussian_binomial: k out of range");
    return quantum_factorial(n).divide_exact(quantum_factorial(k) * quantum_factorial(n - k));
}

LaurentPolynomial gaussian_multinomial(int n, const std::vector<int>& parts) {
    int total = 0;
    LaurentPolynomial den = LaurentPolynomial::one();
    for (int a : parts) {
        if (a < 0) throw qring_error("gaussian_multinomial: negative part");
        total += a;
        den *= quantum_factorial(a);
    }
    if (total != n) throw qring_error("gaussian_multinomial: parts do not sum to n");
    return quantum_factorial(n).divide_exact(den);
}

Int gaussian_binomial_int(int n, int k, long q) {
    if (k < 0 || k > n) throw qring_error("gaussian_binomial_int: k out of range");
    // prod_{i=0}^{k-1} (q^{n-i} - 1) / (q^{k-i} - 1), exact at every step.
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= boost::multiprecision::pow(Int(q), static_cast<unsigned>(n - i)) - 1;
        den *= boost::multiprecision::pow(Int(q), static_cast<unsigned>(k - i)) - 1;
    }
    Int r = num / den;
    if (r * den != num) throw qring_error("gaussian_binomial_int: inexact division");
    return r;
}

Int flag_count_int(int n, const std::vector<int>& parts, long q) {
    Int count = 1;
    int remaining = n;
    for (int a : parts) {
        count *= gaussian_binomial_int(remaining, a, q);
        remaining -= a;
    }
    if (remaining != 0) throw qring_error("flag_count_int: parts do not sum to n");
    return count;
}

Int gl_order(int n, long q) {
    Int ord = 1;
    const Int qn = boost::multiprecision::pow(Int(q), static_cast<unsigned>(n));
    for (int j = 0; j < n; ++j)
        ord *= qn - boost::multiprecision::pow(Int(q), static_cast<unsigned>(j));
    return ord;
}

} // namespace qring
