/*
 * Elements of the free graded algebra: exact Q(v)-linear combinations of
 * words in the generators, homogeneous of a single degree.
 */
#pragma once

#include <map>

#include "formalg/generator_set.hpp"

namespace formalg {

using Word = std::vector<int>;   // generator indices; empty = unit

DimVec word_degree(const GeneratorSet& gens, const Word& w);
std::string word_str(const GeneratorSet& gens, const Word& w);

// All words of the given degree, lexicographic in generator-list order.
std::vector<Word> words_of_degree(const GeneratorSet& gens, const DimVec& nu);

class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(std::shared_ptr<const GeneratorSet> gens) : gens_(std::move(gens)) {}

    static AlgebraElement unit(std::shared_ptr<const GeneratorSet> gens);
    static AlgebraElement generator(std::shared_ptr<const GeneratorSet> gens, int g);
    static AlgebraElement from_word(std::shared_ptr<const GeneratorSet> gens, Word w,
                                    qring::RationalFunction coeff = qring::RationalFunction(1));

    const std::shared_ptr<const GeneratorSet>& generators() const { return gens_; }
    const std::map<Word, qring::RationalFunction>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    DimVec degree() const;   // of the (homogeneous) element; zero element has empty degree
    qring::RationalFunction coefficient(const Word& w) const;

    void add_term(const Word& w, const qring::RationalFunction& c);   // enforces homogeneity

    AlgebraElement operator-() const;
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { a += b; return a; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { a -= b; return a; }

    AlgebraElement scaled(const qring::RationalFunction& c) const;

    bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::shared_ptr<const GeneratorSet> gens_;
    std::map<Word, qring::RationalFunction> terms_;   // no zero coefficients

    friend bool same_generators(const AlgebraElement& a, const AlgebraElement& b);
};

bool same_generators(const AlgebraElement& a, const AlgebraElement& b);

// Bilinear extension of word concatenation.
AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

// F_g^{(n)} = F_g^n / [n]!.
AlgebraElement divided_power(std::shared_ptr<const GeneratorSet> gens, int g, int n);

// Formal linear combination of pairs of words.
class TensorElement {
public:
    TensorElement() = default;

    const std::map<std::pair<Word, Word>, qring::RationalFunction>& terms() const { return terms_; }
    qring::RationalFunction coefficient(const Word& a, const Word& b) const;
    void add_term(const Word& a, const Word& b, const qring::RationalFunction& c);
    bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }

private:
    std::map<std::pair<Word, Word>, qring::RationalFunction> terms_;
};

} // namespace formalg
