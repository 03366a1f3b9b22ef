#pragma once

#include "rootgrade/coinduce.hpp"

namespace rootgrade {

/// Minimal x_sigma-eigenvalue on V and a basis of its eigenspace.
std::pair<Rational, std::vector<Vec>> lowest_slice(const GradedLieAlgebra &g,
                                                   const ParabolicSubalgebra &par,
                                                   const GModule &V);

/// Quotient E = V / u.V with its induced p-action and the projection beta.
struct QuotientData {
    PModule E;
    Mat beta;                 // E-coordinates of the projection V -> E
    std::vector<Vec> u_image; // basis of u.V inside V
};

QuotientData quotient_E(const GradedLieAlgebra &g,
                        const ParabolicSubalgebra &par, const GModule &V);

/// Matrix of v -> (N = y_1...y_m -> (-1)^m beta(y_m...y_1.v)) from V into
/// the section module's basis coordinates. Throws when the image leaves the
/// computed finite part (never expected for a g-module V).
Mat beta_G(const GradedLieAlgebra &g, const ParabolicSubalgebra &par,
           const GModule &V, const QuotientData &q, const SectionModule &S);

/// Necessary irreducibility test: the orbit closure of every basis vector is
/// the whole module.
bool basis_orbits_full(const GradedLieAlgebra &g, const GModule &V);

/// Sufficient irreducibility test over Q(i): the associative algebra
/// generated by the action matrices has dimension (dim V)^2.
bool irreducibility_certified(const GradedLieAlgebra &g, const GModule &V);

struct RealizationReport {
    bool irreducible_basis_orbits = false;
    bool irreducible_certified = false;
    bool eq51 = false; // V_lambda(x_sigma) contained in the n-invariants
    bool eq53 = false; // u.V equals the strictly-higher eigenspace sum
    bool injective = false;
    bool equivariant = false;
    bool image_is_minimal = false;
    size_t image_dim = 0;
    size_t section_dim = 0;

    bool ok() const {
        return eq51 && eq53 && injective && equivariant && image_is_minimal;
    }
};

RealizationReport verify_realization(const GradedLieAlgebra &g,
                                     const ParabolicSubalgebra &par,
                                     const GModule &V,
                                     const SectionOptions &opts = {});

struct FrobeniusResult {
    size_t d1 = 0; // dim Hom_g(W, sections)
    size_t d2 = 0; // dim Hom_p(W, E)
    bool certified = false; // ev at the empty monomial is a bijection
};

FrobeniusResult frobenius_dims(const GradedLieAlgebra &g,
                               const ParabolicSubalgebra &par, const GModule &W,
                               const PModule &E, const SectionModule &S);

/// True iff beta(U(g).v) = 0 only for v = 0; beta must be p-equivariant.
bool check_cyclic(const GradedLieAlgebra &g, const ParabolicSubalgebra &par,
                  const GModule &V, const PModule &E, const Mat &beta);

} // namespace rootgrade
