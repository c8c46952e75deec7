#include "formalg/primitive.hpp"
#include <algorithm>

namespace formalg {

using qring::Matrix;
using qring::RationalFunction;

PrimitiveSpace primitive_space_symbolic(const Quiver& q, const std::string& i, int m) {
    if (m <= 0) throw formalg_error("primitive_space_symbolic: m must be positive");
    if (!q.is_imaginary(i))
        throw formalg_error("primitive_space_symbolic: vertex '" + i + "' is not imaginary");

    const auto gens = GeneratorSet::extended(q, m);
    const PairingContext ctx(gens, FormTable::from_quiver(q));
    const DimVec nu{{i, m}};
    const auto gram = gram_matrix(ctx, nu);
    const int n = static_cast<int>(gram.words.size());

    // Orthogonality to every product of two lower-degree pieces; those
    // products span exactly the words of length >= 2.
    std::vector<int> product_rows;
    int single = -1;
    for (int w = 0; w < n; ++w) {
        if (gram.words[static_cast<size_t>(w)].size() >= 2) product_rows.push_back(w);
        else single = w;
    }
    if (single < 0) throw formalg_error("primitive_space_symbolic: missing single-step word");

    Matrix<RationalFunction> constraints(static_cast<int>(product_rows.size()), n);
    for (int r = 0; r < constraints.rows(); ++r)
        for (int c = 0; c < n; ++c)
            constraints.at(r, c) = gram.entries.at(product_rows[static_cast<size_t>(r)], c);

    const auto solutions = qring::exact_kernel(constraints);
    const auto radical = qring::exact_kernel(gram.entries);

    PrimitiveSpace out;
    out.dim = static_cast<int>(solutions.basis.size()) - static_cast<int>(radical.basis.size());

    // Normalized representative: solve the constraints together with
    // "coefficient of z_{i,m} equals 1"; free variables are set to zero.
    Matrix<RationalFunction> aug(constraints.rows() + 1, n + 1);
    for (int r = 0; r < constraints.rows(); ++r)
        for (int c = 0; c < n; ++c)
            aug.at(r, c) = constraints.at(r, c);
    aug.at(constraints.rows(), single) = RationalFunction(1);
    aug.at(constraints.rows(), n) = RationalFunction(1);
    const auto pivots = qring::rref(aug);
    const bool consistent = std::find(pivots.begin(), pivots.end(), n) == pivots.end();
    if (consistent && out.dim >= 1) {
        std::vector<RationalFunction> x(static_cast<size_t>(n));
        for (size_t k = 0; k < pivots.size(); ++k)
            x[static_cast<size_t>(pivots[k])] = aug.at(static_cast<int>(k), n);
        AlgebraElement xi(gens);
        for (int w = 0; w < n; ++w)
            xi.add_term(gram.words[static_cast<size_t>(w)], x[static_cast<size_t>(w)]);
        out.xi = std::move(xi);
        out.has_xi = true;
    }
    return out;
}

} // namespace formalg
