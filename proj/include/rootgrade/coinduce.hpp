#pragma once

#include "rootgrade/liealg.hpp"

#include <map>
#include <set>
#include <vector>

namespace rootgrade {

/// Module over the parabolic p, with one action matrix per g-basis index
/// lying in p. Missing indices act as zero.
struct PModule {
    size_t dim = 0;
    std::vector<Weight> weights;
    std::map<size_t, Mat> action;
    bool u_acts_trivially = false;

    Mat act_index(size_t g_index) const;
    Mat act_of(const Vec &x) const; // x restricted to p-supported coordinates
    /// Representation axiom on p-basis pairs, diagonal h-action, and
    /// consistency of the u_acts_trivially flag. Throws with a witness.
    void validate(const GradedLieAlgebra &g,
                  const ParabolicSubalgebra &par) const;
};

/// One-dimensional p-module determined by lambda on the simple coroots,
/// extended to all of l by solving the [l,l]-vanishing constraints
/// (free coordinates of the solution are set to zero), with u acting by 0.
PModule character_pmodule(const GradedLieAlgebra &g,
                          const ParabolicSubalgebra &par,
                          const std::vector<Rational> &lambda);

PModule trivial_pmodule(const GradedLieAlgebra &g,
                        const ParabolicSubalgebra &par);

/// Restriction of a g-module to p. u need not act trivially; the flag
/// records whether it does.
PModule restrict_to_p(const GradedLieAlgebra &g, const ParabolicSubalgebra &par,
                      const GModule &V);

PModule direct_sum(const PModule &a, const PModule &b);

/// Commutative monomial in the n-basis: g-basis indices sorted by the fixed
/// n-order. The empty vector is the unit of U(n).
using Mono = std::vector<size_t>;

/// All monomials in the n-basis of total weight beta. Empty when beta is
/// not a sum of Sigma^- weights.
std::vector<Mono> pbw_basis_of_weight(const GradedLieAlgebra &g,
                                      const ParabolicSubalgebra &par,
                                      const Weight &beta);

/// Rewrites words over the g-basis into normal form: n-letters first (in the
/// fixed n-order), then p-letters (l before u). Memoized across calls.
class Straightener {
public:
    using Word = std::vector<size_t>;
    using LinComb = std::map<Word, Scalar>;

    Straightener(const GradedLieAlgebra &g, const ParabolicSubalgebra &par);

    const LinComb &straighten(const Word &word);

    size_t ord(size_t letter) const { return ord_[letter]; }
    bool in_n(size_t letter) const { return is_n_[letter]; }
    /// Splits a normal word into its n-monomial prefix and p-word suffix.
    std::pair<Mono, Word> split(const Word &normal_word) const;

private:
    const GradedLieAlgebra &g_;
    std::vector<size_t> ord_;
    std::vector<bool> is_n_;
    std::map<Word, LinComb> memo_;
};

/// Finite Weyl-stable superset of the weights of the g_Delta-finite part:
/// {e - gamma} over e in P(E) and gamma a sum of at most B Sigma^- weights,
/// filtered by the condition that every Weyl image stays in
/// P(E) - Span_{N0} Sigma^-.
std::set<Weight> candidate_window(const GradedLieAlgebra &g,
                                  const ParabolicSubalgebra &par,
                                  const PModule &E, const WeylGroup &W,
                                  unsigned long bound);

/// Monomial-count bound B = max(0, ceil(-|W| * min_e e(x_sigma))).
unsigned long window_bound(const ParabolicSubalgebra &par, const PModule &E,
                           size_t weyl_order);

/// Functional on U(n) with values in E, finitely supported on monomials.
struct CoinducedElement {
    std::map<Mono, Vec> support; // monomial -> E-coordinates
};

/// Action of a single g-basis letter on a finitely supported functional:
/// (x.alpha)(M) = -alpha~(x M), with the p-tail of each straightened term
/// folded into E by the sign-and-reversal extension formula.
CoinducedElement act(const GradedLieAlgebra &g, const ParabolicSubalgebra &par,
                     const PModule &E, size_t letter,
                     const CoinducedElement &alpha);

/// The g_Delta-finite part of Hom_p(U(g),E) in a concrete basis.
struct SectionModule {
    size_t dim = 0;
    size_t e_dim = 0;
    /// Ambient coordinate slots: (monomial, E-basis index) pairs spanning
    /// the weight blocks touched by the window and one g-letter beyond.
    std::vector<std::pair<Mono, size_t>> slots;
    std::vector<Vec> coords;     // basis vectors in slot coordinates
    std::vector<Weight> weights; // h-weight per basis vector
    std::vector<Mat> action;     // per g-basis index, in this basis
    std::map<Weight, size_t> character;
    std::vector<size_t> n_indices; // copy of the parabolic's n-order
    bool invariants_certified = false; // set by minimal_submodule

    std::vector<CoinducedElement> basis_functionals() const;
};

struct SectionOptions {
    unsigned long bound_multiplier = 1; // scales the window bound B
    RootSystemConfig rs_config;
};

/// Greatest g_Delta-invariant subspace of the candidate window, with its
/// full g-action tables and character.
SectionModule g_delta_finite_part(const GradedLieAlgebra &g,
                                  const ParabolicSubalgebra &par,
                                  const PModule &E,
                                  const SectionOptions &opts = {});

/// Joint kernel of the n-action matrices, in the module's basis coordinates.
std::vector<Vec> n_invariants(const SectionModule &V);

/// Smallest g-submodule containing the n-invariants: their U(g)-orbit
/// closure. Verifies that its own n-invariants recover the starting space
/// (invariants_certified).
SectionModule minimal_submodule(const GradedLieAlgebra &g,
                                const SectionModule &V);

/// Weight multiplicities, re-derived from the h-action matrices.
std::map<Weight, size_t> character(const GradedLieAlgebra &g,
                                   const SectionModule &V);

} // namespace rootgrade
