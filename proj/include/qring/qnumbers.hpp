/*
 * Quantum combinatorics: balanced quantum integers [n], factorials [n]!,
 * Gaussian binomials and multinomials as symmetric Laurent polynomials,
 * plus classical integer q-binomials used for point counting.
 */
#pragma once

#include <vector>

#include "qring/laurent.hpp"

namespace qring {

// [n] = (v^n - v^{-n}) / (v - v^{-1}); [0] = 0, [-n] = -[n].
LaurentPolynomial quantum_integer(int n);

// [n]! = [n][n-1]...[1]; n < 0 is an error.
LaurentPolynomial quantum_factorial(int n);

// [n]! / ([k]! [n-k]!) for 0 <= k <= n.
LaurentPolynomial gaussian_binomial(int n, int k);

// [n]! / prod [a_i]! where sum a_i = n.
LaurentPolynomial gaussian_multinomial(int n, const std::vector<int>& parts);

// Classical q-binomial as an integer: the number of k-dimensional
// subspaces of an n-dimensional space over F_q.
Int gaussian_binomial_int(int n, int k, long q);

// Number of flags with successive quotient dimensions `parts` in an
// n-dimensional space over F_q.
Int flag_count_int(int n, const std::vector<int>& parts, long q);

// |GL_n(F_q)| = prod_{j<n} (q^n - q^j).
Int gl_order(int n, long q);

} // namespace qring
