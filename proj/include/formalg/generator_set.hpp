/*
 * Generator sets for the free graded algebra over Q(v).
 *
 * Two presets: the standard set has one generator per vertex in degree
 * e_i; the extended set keeps the real-vertex generators and replaces
 * each imaginary vertex i by generators z_{i,n} of degree n*e_i up to a
 * cutoff.  Each generator carries the nonzero constant it pairs to
 * against itself.
 */
#pragma once

#include <memory>

#include "qring/rational_function.hpp"
#include "quiverlab/quiver.hpp"

namespace formalg {

using quiverlab::DimVec;
using quiverlab::Quiver;

class formalg_error : public std::runtime_error {
public:
    explicit formalg_error(const std::string& what) : std::runtime_error(what) {}
};

struct Generator {
    std::string label;
    DimVec degree;
    qring::RationalFunction pairing_constant;
};

class GeneratorSet {
public:
    GeneratorSet() = default;
    explicit GeneratorSet(std::vector<Generator> gens);

    // F_i in degree e_i for every vertex; c = (1 - v^{-2})^{-1} at real
    // vertices (Lusztig's convention), c = 1 at imaginary ones.
    static std::shared_ptr<const GeneratorSet> standard(const Quiver& q);

    // F_i for real i plus z_{i,n} (label "i:n") of degree n*e_i for
    // imaginary i and 1 <= n <= cutoff.
    static std::shared_ptr<const GeneratorSet> extended(const Quiver& q, int cutoff);

    // Same generators with every pairing constant multiplied by `factor`.
    std::shared_ptr<const GeneratorSet> rescaled(const qring::RationalFunction& factor) const;

    int size() const { return static_cast<int>(gens_.size()); }
    const Generator& at(int g) const { return gens_[static_cast<size_t>(g)]; }
    int index_of(const std::string& label) const;

    bool operator==(const GeneratorSet& o) const;

private:
    std::vector<Generator> gens_;
};

} // namespace formalg
