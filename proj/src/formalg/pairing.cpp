#include "formalg/pairing.hpp"

#include <map>

namespace formalg {

using qring::LaurentPolynomial;
using qring::RationalFunction;

FormTable FormTable::from_quiver(const Quiver& q) {
    FormTable t;
    t.labels = q.vertices();
    const int n = q.vertex_count();
    t.matrix.assign(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            DimVec ei{{q.vertices()[static_cast<size_t>(i)], 1}};
            DimVec ej{{q.vertices()[static_cast<size_t>(j)], 1}};
            t.matrix[static_cast<size_t>(i)][static_cast<size_t>(j)] = quiverlab::symmetric_form(q, ei, ej);
        }
    return t;
}

int FormTable::index_of(const std::string& label) const {
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
        if (labels[static_cast<size_t>(i)] == label) return i;
    throw formalg_error("form table: unknown vertex '" + label + "'");
}

long FormTable::value(const DimVec& a, const DimVec& b) const {
    long v = 0;
    for (const auto& [la, ma] : a)
        for (const auto& [lb, mb] : b)
            v += static_cast<long>(ma) * mb *
                 matrix[static_cast<size_t>(index_of(la))][static_cast<size_t>(index_of(lb))];
    return v;
}

PairingContext::PairingContext(std::shared_ptr<const GeneratorSet> g, FormTable f, int sign)
    : gens(std::move(g)), form(std::move(f)), twist_sign(sign) {
    const int n = gens->size();
    gform_.assign(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n), 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            gform_[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                form.value(gens->at(a).degree, gens->at(b).degree);
}

namespace {

// r on a single word: sum over subsets S of positions, letters in S to
// the left factor, exponent sum_{l not in S, m in S, l < m} (deg_l, deg_m).
void coproduct_word(const PairingContext& ctx, const Word& w, const RationalFunction& coeff,
                    TensorElement& out) {
    const size_t n = w.size();
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        Word left, right;
        long twist = 0;
        for (size_t m = 0; m < n; ++m) {
            if (mask & (size_t{1} << m)) {
                left.push_back(w[m]);
                for (size_t l = 0; l < m; ++l)
                    if (!(mask & (size_t{1} << l)))
                        twist += ctx.generator_form(w[l], w[m]);
            } else {
                right.push_back(w[m]);
            }
        }
        const auto vpow = RationalFunction::v(static_cast<int>(ctx.twist_sign * twist));
        out.add_term(left, right, coeff * vpow);
    }
}

struct WordPairLess {
    bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
        return a < b;
    }
};

using PairCache = std::map<std::pair<Word, Word>, RationalFunction, WordPairLess>;

RationalFunction pair_words(const PairingContext& ctx, const Word& w, const Word& y,
                            PairCache& cache) {
    if (y.empty()) return w.empty() ? RationalFunction(1) : RationalFunction();
    if (w.empty()) return RationalFunction();
    const auto key = std::make_pair(w, y);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    // Peel the first letter g of y: only the r(w)-terms with a single
    // letter equal to g on the left contribute.
    const int g = y.front();
    const Word rest(y.begin() + 1, y.end());
    RationalFunction acc;
    for (size_t m = 0; m < w.size(); ++m) {
        if (w[m] != g) continue;
        long twist = 0;
        for (size_t l = 0; l < m; ++l) twist += ctx.generator_form(w[l], g);
        Word reduced;
        reduced.reserve(w.size() - 1);
        for (size_t l = 0; l < w.size(); ++l)
            if (l != m) reduced.push_back(w[l]);
        acc += RationalFunction::v(static_cast<int>(ctx.twist_sign * twist)) *
               pair_words(ctx, reduced, rest, cache);
    }
    acc *= ctx.gens->at(g).pairing_constant;
    cache.emplace(key, acc);
    return acc;
}

} // namespace

TensorElement coproduct_r(const PairingContext& ctx, const AlgebraElement& x) {
    if (!x.is_zero() && !(*x.generators() == *ctx.gens))
        throw formalg_error("coproduct_r: generator set mismatch");
    TensorElement out;
    for (const auto& [w, c] : x.terms())
        coproduct_word(ctx, w, c, out);
    return out;
}

RationalFunction pair(const PairingContext& ctx, const AlgebraElement& x, const AlgebraElement& y) {
    if (x.is_zero() || y.is_zero()) return RationalFunction();
    if (!same_generators(x, y) || !(*x.generators() == *ctx.gens))
        throw formalg_error("pair: generator set mismatch");
    if (x.degree() != y.degree()) return RationalFunction();   // distinct degrees pair to zero
    PairCache cache;
    RationalFunction acc;
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms())
            acc += cx * cy * pair_words(ctx, wx, wy, cache);
    return acc;
}

GramMatrix gram_matrix(const PairingContext& ctx, const DimVec& nu) {
    GramMatrix g;
    g.degree = nu;
    g.words = words_of_degree(*ctx.gens, nu);
    const int n = static_cast<int>(g.words.size());
    g.entries = qring::Matrix<RationalFunction>(n, n);
    PairCache cache;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const auto value = pair_words(ctx, g.words[static_cast<size_t>(i)],
                                          g.words[static_cast<size_t>(j)], cache);
            g.entries.at(i, j) = value;
            g.entries.at(j, i) = value;
        }
    }
    return g;
}

RadicalQuotient radical_quotient_dim(const PairingContext& ctx, const DimVec& nu) {
    const auto g = gram_matrix(ctx, nu);
    const auto kernel = qring::exact_kernel(g.entries);
    RadicalQuotient out;
    out.dim = static_cast<int>(g.words.size()) - static_cast<int>(kernel.basis.size());
    for (const auto& vec : kernel.basis) {
        AlgebraElement e(ctx.gens);
        for (size_t w = 0; w < g.words.size(); ++w)
            e.add_term(g.words[w], vec[w]);
        out.kernel_basis.push_back(std::move(e));
    }
    return out;
}

} // namespace formalg
