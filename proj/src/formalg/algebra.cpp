#include "formalg/algebra.hpp"

#include <sstream>

#include "qring/qnumbers.hpp"

namespace formalg {

using qring::RationalFunction;

DimVec word_degree(const GeneratorSet& gens, const Word& w) {
    DimVec d;
    for (int g : w) d = quiverlab::add(d, gens.at(g).degree);
    return d;
}

std::string word_str(const GeneratorSet& gens, const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ".";
        os << gens.at(w[i]).label;
    }
    return os.str();
}

namespace {

void words_rec(const GeneratorSet& gens, DimVec& remaining, Word& cur, std::vector<Word>& out) {
    if (quiverlab::total(remaining) == 0) {
        out.push_back(cur);
        return;
    }
    for (int g = 0; g < gens.size(); ++g) {
        const auto& deg = gens.at(g).degree;
        if (!quiverlab::leq(deg, remaining)) continue;
        remaining = quiverlab::add(remaining, quiverlab::scaled(deg, -1));
        cur.push_back(g);
        words_rec(gens, remaining, cur, out);
        cur.pop_back();
        remaining = quiverlab::add(remaining, deg);
    }
}

} // namespace

std::vector<Word> words_of_degree(const GeneratorSet& gens, const DimVec& nu) {
    DimVec remaining = nu;
    Word cur;
    std::vector<Word> out;
    words_rec(gens, remaining, cur, out);
    return out;
}

AlgebraElement AlgebraElement::unit(std::shared_ptr<const GeneratorSet> gens) {
    return from_word(std::move(gens), Word{});
}

AlgebraElement AlgebraElement::generator(std::shared_ptr<const GeneratorSet> gens, int g) {
    return from_word(std::move(gens), Word{g});
}

AlgebraElement AlgebraElement::from_word(std::shared_ptr<const GeneratorSet> gens, Word w,
                                         RationalFunction coeff) {
    AlgebraElement e(std::move(gens));
    if (!coeff.is_zero()) e.terms_.emplace(std::move(w), std::move(coeff));
    return e;
}

DimVec AlgebraElement::degree() const {
    if (terms_.empty()) return DimVec{};
    return word_degree(*gens_, terms_.begin()->first);
}

RationalFunction AlgebraElement::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? RationalFunction() : it->second;
}

void AlgebraElement::add_term(const Word& w, const RationalFunction& c) {
    if (c.is_zero()) return;
    if (!terms_.empty() && word_degree(*gens_, w) != degree())
        throw formalg_error("inhomogeneous sum of words");
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement e(gens_);
    for (const auto& [w, c] : terms_) e.terms_.emplace(w, -c);
    return e;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    if (o.is_zero()) return *this;
    if (!gens_) gens_ = o.gens_;
    else if (!o.is_zero() && o.gens_ && !same_generators(*this, o))
        throw formalg_error("generator set mismatch");
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    *this += -o;
    return *this;
}

AlgebraElement AlgebraElement::scaled(const RationalFunction& c) const {
    AlgebraElement e(gens_);
    if (c.is_zero()) return e;
    for (const auto& [w, coeff] : terms_) e.terms_.emplace(w, coeff * c);
    return e;
}

std::string AlgebraElement::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")*" << word_str(*gens_, w);
        first = false;
    }
    return os.str();
}

bool same_generators(const AlgebraElement& a, const AlgebraElement& b) {
    if (!a.gens_ || !b.gens_) return true;   // zero elements are compatible
    return a.gens_ == b.gens_ || *a.gens_ == *b.gens_;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
    if (!same_generators(x, y)) throw formalg_error("generator set mismatch");
    AlgebraElement out(x.generators() ? x.generators() : y.generators());
    for (const auto& [wx, cx] : x.terms()) {
        for (const auto& [wy, cy] : y.terms()) {
            Word w = wx;
            w.insert(w.end(), wy.begin(), wy.end());
            out.add_term(w, cx * cy);
        }
    }
    return out;
}

AlgebraElement divided_power(std::shared_ptr<const GeneratorSet> gens, int g, int n) {
    if (n < 0) throw formalg_error("divided_power: negative exponent");
    Word w(static_cast<size_t>(n), g);
    const RationalFunction coeff =
        RationalFunction(qring::LaurentPolynomial::one(), qring::quantum_factorial(n));
    return AlgebraElement::from_word(std::move(gens), std::move(w), coeff);
}

RationalFunction TensorElement::coefficient(const Word& a, const Word& b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? RationalFunction() : it->second;
}

void TensorElement::add_term(const Word& a, const Word& b, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(std::make_pair(a, b), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

} // namespace formalg
