#include "formalg/serre.hpp"

#include "qring/qnumbers.hpp"

namespace formalg {

using qring::LaurentPolynomial;
using qring::RationalFunction;

AlgebraElement serre_element(std::shared_ptr<const GeneratorSet> gens,
                             const std::string& i, const std::string& j,
                             const quiverlab::CartanMatrix& c) {
    if (i == j) throw formalg_error("serre_element: indices must differ");
    const int ci = c.index_of(i);
    const int cj = c.index_of(j);
    if (!c.real_tag[static_cast<size_t>(ci)])
        throw formalg_error("serre_element: index '" + i + "' is not real");
    const long cij = c.at(ci, cj);
    const int gi = gens->index_of(i);
    const int gj = gens->index_of(j);

    const int top = static_cast<int>(1 - cij);
    AlgebraElement out(gens);
    for (int p = 0; p <= top; ++p) {
        Word w(static_cast<size_t>(p), gi);
        w.push_back(gj);
        w.insert(w.end(), static_cast<size_t>(top - p), gi);
        RationalFunction coeff(LaurentPolynomial::one(),
                               qring::quantum_factorial(p) * qring::quantum_factorial(top - p));
        if (p % 2) coeff = -coeff;
        out.add_term(w, coeff);
    }
    return out;
}

std::vector<AlgebraElement> defining_relations(std::shared_ptr<const GeneratorSet> gens,
                                               const quiverlab::CartanMatrix& c,
                                               const DimVec& nu) {
    std::vector<AlgebraElement> rels;
    for (int i = 0; i < gens->size(); ++i) {
        const auto& gi = gens->at(i);
        const int ci = c.index_of(gi.label);
        if (!c.real_tag[static_cast<size_t>(ci)]) continue;
        for (int j = 0; j < gens->size(); ++j) {
            if (j == i) continue;
            const auto& gj = gens->at(j);
            const auto rel = serre_element(gens, gi.label, gj.label, c);
            if (quiverlab::leq(rel.degree(), nu)) rels.push_back(rel);
        }
    }
    for (int i = 0; i < gens->size(); ++i) {
        for (int j = i + 1; j < gens->size(); ++j) {
            const auto& gi = gens->at(i);
            const auto& gj = gens->at(j);
            if (c.at(c.index_of(gi.label), c.index_of(gj.label)) != 0) continue;
            const DimVec deg = quiverlab::add(gi.degree, gj.degree);
            if (!quiverlab::leq(deg, nu)) continue;
            AlgebraElement rel(gens);
            Word ij{i, j}, ji{j, i};
            rel.add_term(ij, RationalFunction(1));
            rel.add_term(ji, RationalFunction(-1));
            rels.push_back(std::move(rel));
        }
    }
    return rels;
}

namespace {

// All dimension vectors a with a <= rem componentwise.
std::vector<DimVec> sub_vectors(const DimVec& rem) {
    std::vector<DimVec> out{DimVec{}};
    for (const auto& [label, max] : rem) {
        std::vector<DimVec> next;
        for (const auto& base : out)
            for (int m = 0; m <= max; ++m) {
                DimVec d = base;
                if (m) d[label] = m;
                next.push_back(std::move(d));
            }
        out = std::move(next);
    }
    return out;
}

} // namespace

int serre_ideal_dim(std::shared_ptr<const GeneratorSet> gens,
                    const quiverlab::CartanMatrix& c, const DimVec& nu) {
    const auto words = words_of_degree(*gens, nu);
    std::map<Word, int> index;
    for (size_t i = 0; i < words.size(); ++i) index.emplace(words[i], static_cast<int>(i));

    const auto rels = defining_relations(gens, c, nu);

    // Span of u * rel * w over all words u, w with matching degrees.
    std::vector<std::vector<RationalFunction>> rows;
    for (const auto& rel : rels) {
        DimVec rem = nu;
        for (const auto& [label, m] : rel.degree()) {
            rem[label] -= m;
            if (rem[label] == 0) rem.erase(label);
        }
        for (const auto& alpha : sub_vectors(rem)) {
            DimVec beta = rem;
            for (const auto& [label, m] : alpha) {
                beta[label] -= m;
                if (beta[label] == 0) beta.erase(label);
            }
            for (const auto& u : words_of_degree(*gens, alpha)) {
                for (const auto& w : words_of_degree(*gens, beta)) {
                    std::vector<RationalFunction> row(words.size());
                    for (const auto& [mid, coeff] : rel.terms()) {
                        Word full = u;
                        full.insert(full.end(), mid.begin(), mid.end());
                        full.insert(full.end(), w.begin(), w.end());
                        row[static_cast<size_t>(index.at(full))] += coeff;
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
    }

    if (rows.empty()) return static_cast<int>(words.size());
    qring::Matrix<RationalFunction> m(static_cast<int>(rows.size()), static_cast<int>(words.size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int col = 0; col < m.cols(); ++col)
            m.at(r, col) = rows[static_cast<size_t>(r)][static_cast<size_t>(col)];
    const int rank = qring::exact_kernel(m).rank;
    return static_cast<int>(words.size()) - rank;
}

} // namespace formalg
