#pragma once

#include "rootgrade/matrix.hpp"

#include <set>
#include <string>
#include <vector>

namespace rootgrade {

/// Weight coordinates: entry i is the value on the simple coroot h_i.
using Weight = std::vector<Rational>;

/// Element x = sum c_i h_i of the Cartan subalgebra, in the coroot basis.
using CartanElement = std::vector<Rational>;

/// mu(x): dot product of weight coordinates with coroot coefficients.
Rational eval(const Weight &mu, const CartanElement &x);

Weight add(const Weight &a, const Weight &b);
Weight sub(const Weight &a, const Weight &b);
Weight negate(const Weight &a);
bool is_zero_weight(const Weight &w);
std::string weight_key(const Weight &w);

enum class Family { A, B, C, D };

Family parse_family(const std::string &s);
std::string family_name(Family f);

struct RootSystemConfig {
    size_t max_rank = 4;
    size_t max_weyl_order = 1152;
};

struct RootSystem {
    Family family;
    size_t rank;
    std::vector<std::vector<long>> cartan; // a[i][j] = alpha_j(h_i)
    std::vector<Weight> roots;             // full set, closed under negation
    std::vector<Weight> positive_roots;
    std::vector<Weight> simple_roots; // alpha_j = column j of cartan

    bool is_root(const Weight &w) const;
};

RootSystem build_root_system(Family family, size_t rank,
                             const RootSystemConfig &cfg = {});

struct WeylGroup {
    size_t rank;
    std::vector<Mat> generators; // simple reflections on weight coordinates
    std::vector<Mat> elements;   // full group, identity first

    Weight apply(size_t element, const Weight &w) const;
};

WeylGroup build_weyl_group(const RootSystem &rs,
                           const RootSystemConfig &cfg = {});

/// Reflection r_i(w) = w - w_i * alpha_i as a matrix on weight coordinates.
Mat simple_reflection_matrix(const RootSystem &rs, size_t i);

struct ParabolicSystem {
    std::vector<Weight> sigma_plus;
    std::vector<Weight> sigma_zero;
    std::vector<Weight> sigma_minus;
    CartanElement x;       // defining element
    CartanElement x_sigma; // Sigma+(x_sigma) >= 1, Sigma-(x_sigma) <= -1
};

/// Partition of the ambient weight set R by sign of evaluation at x, plus a
/// separating element x_sigma.
ParabolicSystem parabolic_system(const std::vector<Weight> &R,
                                 const CartanElement &x);

/// All sums of at most B elements of sigma_minus (with repetition), as a set.
/// Requires gamma(x0) <= -1 for each gamma.
std::set<Weight> cone_set(const std::vector<Weight> &sigma_minus,
                          const CartanElement &x0, unsigned long B);

/// Membership of w in Span_{N0}(sigma_minus), decided by bounded search.
bool in_cone(const Weight &w, const std::vector<Weight> &sigma_minus,
             const CartanElement &x0);

/// Dimension of the irreducible module of highest weight lambda (dominant
/// integral, coordinates on simple coroots). Test oracle.
unsigned long weyl_dim_oracle(const RootSystem &rs, const Weight &lambda);

} // namespace rootgrade
