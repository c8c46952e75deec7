/*
 * The twisted coproduct r and the bilinear form on the free algebra.
 *
 * r sends each generator to g(x)1 + 1(x)g and extends multiplicatively
 * for the twisted tensor product (x(x)y)(x'(x)y') = v^{(deg y, deg x')}
 * xx'(x)yy'.  The form satisfies (1,1) = 1, (g,g') = delta c_g on
 * generators and (x, yy') = (r(x), y(x)y'); distinct degrees pair to 0.
 */
#pragma once

#include "formalg/algebra.hpp"
#include "qring/matrix.hpp"

namespace formalg {

// Symmetric bilinear form on dimension vectors, tabulated on vertices.
struct FormTable {
    std::vector<std::string> labels;
    std::vector<std::vector<long>> matrix;

    static FormTable from_quiver(const Quiver& q);
    long value(const DimVec& a, const DimVec& b) const;
    int index_of(const std::string& label) const;
};

struct PairingContext {
    std::shared_ptr<const GeneratorSet> gens;
    FormTable form;
    int twist_sign = +1;   // exponent sign in the twisted tensor product

    PairingContext(std::shared_ptr<const GeneratorSet> g, FormTable f, int sign = +1);

    long generator_form(int g, int h) const {
        return gform_[static_cast<size_t>(g)][static_cast<size_t>(h)];
    }

private:
    std::vector<std::vector<long>> gform_;   // form on generator degrees
};

// The coproduct of a homogeneous element.
TensorElement coproduct_r(const PairingContext& ctx, const AlgebraElement& x);

qring::RationalFunction pair(const PairingContext& ctx, const AlgebraElement& x,
                             const AlgebraElement& y);

struct GramMatrix {
    DimVec degree;
    std::vector<Word> words;
    qring::Matrix<qring::RationalFunction> entries;
};

GramMatrix gram_matrix(const PairingContext& ctx, const DimVec& nu);

struct RadicalQuotient {
    int dim = 0;
    std::vector<AlgebraElement> kernel_basis;
};

// Dimension of the degree-nu component modulo the radical of the form.
RadicalQuotient radical_quotient_dim(const PairingContext& ctx, const DimVec& nu);

} // namespace formalg
