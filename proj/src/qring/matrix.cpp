#include "qring/matrix.hpp"

namespace qring {

KernelResult<QuadraticFieldElement> exact_kernel(const Matrix<QuadraticFieldElement>& m) {
    int radicand = 0;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            const int q = m.at(r, c).radicand();
            if (q == 0) continue;
            if (radicand == 0) radicand = q;
            else if (radicand != q)
                throw qring_error("exact_kernel: mixed coefficient fields");
        }
    Matrix<QuadraticFieldElement> work = m;
    const auto pivots = rref(work);
    return kernel_from_rref(work, pivots);
}

KernelResult<RationalFunction> exact_kernel(const Matrix<RationalFunction>& m) {
    // Clear denominators per row (row scaling does not change the kernel),
    // then run fraction-free Bareiss elimination over Z[v, v^{-1}].
    Matrix<LaurentPolynomial> w(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r) {
        LaurentPolynomial lcm = LaurentPolynomial::one();
        for (int c = 0; c < m.cols(); ++c) {
            const auto& den = m.at(r, c).den();
            lcm = (lcm * den).divide_exact(gcd(lcm, den));
        }
        for (int c = 0; c < m.cols(); ++c) {
            const auto& e = m.at(r, c);
            w.at(r, c) = e.num() * lcm.divide_exact(e.den());
        }
    }

    std::vector<int> pivots;
    LaurentPolynomial prev = LaurentPolynomial::one();
    int row = 0;
    for (int col = 0; col < w.cols() && row < w.rows(); ++col) {
        int pr = -1;
        for (int r = row; r < w.rows(); ++r)
            if (!w.at(r, col).is_zero()) { pr = r; break; }
        if (pr < 0) continue;
        w.swap_rows(row, pr);
        const LaurentPolynomial piv = w.at(row, col);
        for (int r = row + 1; r < w.rows(); ++r) {
            const LaurentPolynomial head = w.at(r, col);
            for (int c = col; c < w.cols(); ++c)
                w.at(r, c) = (piv * w.at(r, c) - head * w.at(row, c)).divide_exact(prev);
        }
        prev = piv;
        pivots.push_back(col);
        ++row;
    }

    KernelResult<RationalFunction> res;
    res.rank = static_cast<int>(pivots.size());
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;

    // Back substitution in the echelon form, over the fraction field.
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<RationalFunction> vec(static_cast<size_t>(m.cols()));
        vec[static_cast<size_t>(f)] = RationalFunction(1);
        for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
            const int pc = pivots[static_cast<size_t>(k)];
            RationalFunction s;
            for (int c = pc + 1; c < m.cols(); ++c) {
                if (vec[static_cast<size_t>(c)].is_zero()) continue;
                s += RationalFunction(w.at(k, c)) * vec[static_cast<size_t>(c)];
            }
            vec[static_cast<size_t>(pc)] = -s / RationalFunction(w.at(k, pc));
        }
        res.basis.push_back(std::move(vec));
    }
    return res;
}

} // namespace qring
