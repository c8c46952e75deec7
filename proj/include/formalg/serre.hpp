/*
 * Quantum Serre elements and the degreewise dimension of the quotient by
 * the two-sided ideal they generate (together with the commutators of
 * generators whose degrees pair to zero).
 */
#pragma once

#include "formalg/pairing.hpp"

namespace formalg {

// sum_{p=0}^{1-c_ij} (-1)^p F_i^{(p)} F_j F_i^{(1-c_ij-p)} for a real
// index i and any j != i; c_ij is read off the Cartan matrix, whose
// labels must match the generator labels.
AlgebraElement serre_element(std::shared_ptr<const GeneratorSet> gens,
                             const std::string& i, const std::string& j,
                             const quiverlab::CartanMatrix& c);

// The defining relation set: Serre elements for every real index i and
// every j != i, plus gg' - g'g for every generator pair whose degrees
// pair to zero under c.  Only relations of degree <= nu matter for the
// degree-nu quotient.
std::vector<AlgebraElement> defining_relations(std::shared_ptr<const GeneratorSet> gens,
                                               const quiverlab::CartanMatrix& c,
                                               const DimVec& nu);

// Dimension of (free algebra)_nu / (ideal generated by the relations)_nu.
int serre_ideal_dim(std::shared_ptr<const GeneratorSet> gens,
                    const quiverlab::CartanMatrix& c, const DimVec& nu);

} // namespace formalg
