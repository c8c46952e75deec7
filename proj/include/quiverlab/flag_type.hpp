/*
 * Flag types (i,a): a sequence of vertices with multiplicities >= 1.
 * A flag type indexes a product of partial flag varieties and, through
 * the stable-flag incidence variety, a monomial of generators.
 */
#pragma once

#include "qring/laurent.hpp"
#include "quiverlab/quiver.hpp"

namespace quiverlab {

struct FlagType {
    std::vector<std::string> vertices;   // i_1, ..., i_n
    std::vector<int> mults;              // a_1, ..., a_n, all >= 1

    int length() const { return static_cast<int>(vertices.size()); }
    bool operator==(const FlagType& o) const { return vertices == o.vertices && mults == o.mults; }
    bool operator!=(const FlagType& o) const { return !(*this == o); }

    std::string str() const;
};

void validate(const Quiver& q, const FlagType& f);
DimVec degree(const FlagType& f);

// All imaginary steps have multiplicity 1.
bool is_full_flag(const Quiver& q, const FlagType& f);

// Expand every imaginary step (i, m) into m steps (i, 1); real steps are
// kept.  The result is a full-flag type of the same degree.
FlagType bridge_type(const Quiver& q, const FlagType& f);

enum class FlagMode { all, full_flag };

// All flag types of degree nu, in a deterministic order: step keys
// (vertex index ascending, multiplicity descending), lexicographically.
std::vector<FlagType> enumerate_flag_types(const Quiver& q, const DimVec& nu, FlagMode mode);

struct FlagDims {
    long dim_flag = 0;    // dimension of the flag variety
    long dim_tilde = 0;   // dimension of the stable-flag incidence variety
    qring::LaurentPolynomial point_count;   // symmetric Gaussian multinomial
};

FlagDims flag_dims(const Quiver& q, const FlagType& f);

struct InductionDims {
    long d1 = 0;
    long d2 = 0;
};

// Fiber dimensions of the induction diagram for quotient degree t and
// subspace degree w.
InductionDims induction_dims(const Quiver& q, const DimVec& t, const DimVec& w);

FlagType concat(const FlagType& a, const FlagType& b);

} // namespace quiverlab
