#pragma once

#include "rootgrade/rootsys.hpp"

#include <map>
#include <string>
#include <vector>

namespace rootgrade {

/// Finite-dimensional commutative unital associative algebra over Q(i),
/// given by its structure tensor. e_i e_j = sum_k c[i][j][k] e_k.
struct CoordinateAlgebra {
    size_t dim = 0;
    std::vector<std::vector<Vec>> mul; // mul[i][j] = product coordinates
    Vec unit;

    Vec multiply(const Vec &a, const Vec &b) const;

    /// Throws with a witness on a failed axiom (commutativity,
    /// associativity, unit law).
    void validate() const;

    /// Same algebra with the basis changed so that e_0 is the unit.
    CoordinateAlgebra with_unit_first() const;

    static CoordinateAlgebra rationals();            // Q
    static CoordinateAlgebra dual_numbers();         // Q[eps]/(eps^2)
    static CoordinateAlgebra split_pair();           // Q x Q
    static CoordinateAlgebra truncated(size_t k);    // Q[t]/(t^k)
};

/// Finite-dimensional weakly root graded Lie algebra with an exact bracket
/// table; every basis vector is an h-weight vector.
struct GradedLieAlgebra {
    size_t dim = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<Vec>> table; // table[i][j] = [b_i, b_j]
    std::vector<Weight> weights;         // h-weight per basis vector
    std::vector<Weight> R;               // distinct nonzero weights
    RootSystem delta;                    // grading root system
    std::vector<Vec> coroots;            // h_1..h_r of g_Delta, as g-vectors
    std::vector<Vec> chev_e, chev_f;     // Chevalley generators of g_Delta
    std::map<Weight, Vec> gdelta_root_vectors;
    std::vector<Mat> rep_matrices; // defining matrices (Chevalley case only)
    bool is_chevalley = false;

    Vec bracket(const Vec &x, const Vec &y) const;
    Vec bracket_basis(size_t i, size_t j) const { return table[i][j]; }
    /// Matrix of ad(x) in the g-basis.
    Mat ad(const Vec &x) const;
    Rational weight_eval(size_t idx, const CartanElement &x) const {
        return eval(weights[idx], x);
    }
    std::vector<size_t> indices_of_weight(const Weight &w) const;
};

struct ParabolicSubalgebra {
    ParabolicSystem system;
    std::vector<size_t> p_indices, u_indices, l_indices, n_indices;
    size_t k_u = 0, k_n = 0; // nilpotency degrees
};

/// g-module given by basis weights and one action matrix per g-basis vector.
struct GModule {
    size_t dim = 0;
    std::vector<Weight> weights;
    std::vector<Mat> action; // action[i] for g-basis index i

    Mat act_of(const Vec &x) const; // action of an arbitrary element
    /// Throws with a witness pair when the representation axiom fails.
    void validate(const GradedLieAlgebra &g) const;
};

GradedLieAlgebra build_chevalley(const RootSystem &rs);

GradedLieAlgebra build_tensor(const CoordinateAlgebra &A,
                              const GradedLieAlgebra &gd);

GradedLieAlgebra build_gln(const CoordinateAlgebra &A, size_t n,
                           const RootSystemConfig &cfg = {});

/// Trivial abelian extension V x| g with bracket
/// [(v1,x1),(v2,x2)] = (x1.v2 - x2.v1, [x1,x2]).
GradedLieAlgebra build_abelian_extension(const GradedLieAlgebra &gd,
                                         const GModule &V);

ParabolicSubalgebra parabolic_subalgebra(const GradedLieAlgebra &g,
                                         const CartanElement &x);

/// Basis of n_g(E) = {x : [x,E] in E} for the span E of the given vectors.
std::vector<Vec> normalizer(const GradedLieAlgebra &g,
                            const std::vector<Vec> &subspace);

std::vector<Vec> basis_vectors(const GradedLieAlgebra &g,
                               const std::vector<size_t> &indices);

struct ValidationReport {
    bool ok = true;
    bool graded = false; // true: Delta-graded, false: weakly graded (if ok)
    std::vector<std::string> failures;
};

ValidationReport validate(const GradedLieAlgebra &g);

/// Standard module of a Chevalley algebra (its defining matrix realization).
GModule standard_module(const GradedLieAlgebra &g);

/// Adjoint module of any constructed algebra.
GModule adjoint_module(const GradedLieAlgebra &g);

GModule direct_sum(const GModule &a, const GModule &b);

/// Irreducible highest weight module of the grading algebra g_Delta,
/// extended to g only when g is Chevalley (g == g_Delta). Built by orbit
/// closure inside a tensor power; used for small test modules.
GModule highest_weight_module(const GradedLieAlgebra &g_chev,
                              const Weight &lambda);

} // namespace rootgrade
