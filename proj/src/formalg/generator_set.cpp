#include "formalg/generator_set.hpp"

namespace formalg {

using qring::LaurentPolynomial;
using qring::RationalFunction;

GeneratorSet::GeneratorSet(std::vector<Generator> gens) : gens_(std::move(gens)) {
    for (int g = 0; g < size(); ++g) {
        const auto& gen = gens_[static_cast<size_t>(g)];
        if (gen.pairing_constant.is_zero())
            throw formalg_error("generator '" + gen.label + "' has zero pairing constant");
        if (quiverlab::total(gen.degree) == 0)
            throw formalg_error("generator '" + gen.label + "' has zero degree");
        for (int h = 0; h < g; ++h)
            if (gens_[static_cast<size_t>(h)].label == gen.label)
                throw formalg_error("duplicate generator label '" + gen.label + "'");
    }
}

namespace {

RationalFunction real_constant() {
    // (1 - v^{-2})^{-1}
    return RationalFunction(LaurentPolynomial::one(),
                            LaurentPolynomial::one() - LaurentPolynomial::v(-2));
}

} // namespace

std::shared_ptr<const GeneratorSet> GeneratorSet::standard(const Quiver& q) {
    std::vector<Generator> gens;
    for (const auto& v : q.vertices()) {
        gens.push_back({v, DimVec{{v, 1}},
                        q.is_real(v) ? real_constant() : RationalFunction(1)});
    }
    return std::make_shared<GeneratorSet>(std::move(gens));
}

std::shared_ptr<const GeneratorSet> GeneratorSet::extended(const Quiver& q, int cutoff) {
    if (cutoff < 1) throw formalg_error("extended generator set: cutoff must be >= 1");
    std::vector<Generator> gens;
    for (const auto& v : q.vertices())
        if (q.is_real(v))
            gens.push_back({v, DimVec{{v, 1}}, real_constant()});
    for (const auto& v : q.vertices())
        if (q.is_imaginary(v))
            for (int n = 1; n <= cutoff; ++n)
                gens.push_back({v + ":" + std::to_string(n), DimVec{{v, n}}, RationalFunction(1)});
    return std::make_shared<GeneratorSet>(std::move(gens));
}

std::shared_ptr<const GeneratorSet> GeneratorSet::rescaled(const RationalFunction& factor) const {
    if (factor.is_zero()) throw formalg_error("rescaled: zero factor");
    std::vector<Generator> gens = gens_;
    for (auto& g : gens) g.pairing_constant *= factor;
    return std::make_shared<GeneratorSet>(std::move(gens));
}

int GeneratorSet::index_of(const std::string& label) const {
    for (int g = 0; g < size(); ++g)
        if (gens_[static_cast<size_t>(g)].label == label) return g;
    throw formalg_error("unknown generator label '" + label + "'");
}

bool GeneratorSet::operator==(const GeneratorSet& o) const {
    if (size() != o.size()) return false;
    for (int g = 0; g < size(); ++g) {
        const auto& a = gens_[static_cast<size_t>(g)];
        const auto& b = o.gens_[static_cast<size_t>(g)];
        if (a.label != b.label || a.degree != b.degree || a.pairing_constant != b.pairing_constant)
            return false;
    }
    return true;
}

} // namespace formalg
