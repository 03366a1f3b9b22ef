#pragma once

#include "rootgrade/liealg.hpp"

#include <optional>
#include <vector>

namespace rootgrade {

/// Square matrix with entries in a coordinate algebra A, each entry stored
/// as its A-coordinate vector.
struct AMatrix {
    size_t n = 0;
    std::vector<Vec> entries; // row-major, n*n coordinate vectors

    AMatrix() = default;
    AMatrix(size_t n_, size_t a_dim)
        : n(n_), entries(n_ * n_, Vec(a_dim)) {}

    Vec &at(size_t i, size_t j) { return entries[i * n + j]; }
    const Vec &at(size_t i, size_t j) const { return entries[i * n + j]; }
    bool operator==(const AMatrix &o) const {
        return n == o.n && entries == o.entries;
    }
};

AMatrix amat_identity(const CoordinateAlgebra &A, size_t n);
AMatrix amat_mul(const CoordinateAlgebra &A, const AMatrix &x, const AMatrix &y);
AMatrix amat_add(const AMatrix &x, const AMatrix &y);
AMatrix amat_sub(const AMatrix &x, const AMatrix &y);
AMatrix amat_scale(const Scalar &c, const AMatrix &x);
bool amat_is_zero(const AMatrix &x);

/// Inverse of a in A, decided by invertibility of the left-multiplication
/// operator on A over Q(i).
std::optional<Vec> algebra_inverse(const CoordinateAlgebra &A, const Vec &a);

/// Inverse of an A-matrix, decided by invertibility of the induced Q(i)-
/// linear operator on A^n (determinant-free; A may have zero divisors).
std::optional<AMatrix> amat_inverse(const CoordinateAlgebra &A,
                                    const AMatrix &m);

/// True iff x^k = 0 for some k <= n * dim A (the a-priori nilpotency bound
/// for the induced operator).
bool amat_is_nilpotent(const CoordinateAlgebra &A, const AMatrix &x);

/// Finite exponential sum of a verified-nilpotent matrix. Throws on
/// non-nilpotent input.
AMatrix exp_nilpotent(const CoordinateAlgebra &A, const AMatrix &x);

/// Finite logarithm of a unipotent matrix (x - 1 nilpotent).
AMatrix log_unipotent(const CoordinateAlgebra &A, const AMatrix &x);

/// Ordered partition of n defining the block structure of the parabolic.
using BlockProfile = std::vector<size_t>;

struct NLUFactorization {
    bool in_big_cell = false;
    AMatrix n; // unipotent, strictly lower-block
    AMatrix l; // invertible block-diagonal
    AMatrix u; // unipotent, strictly upper-block
};

/// Unique big-cell factorization g = n * l * u, or in_big_cell = false when
/// a leading principal block operator is not invertible over A.
NLUFactorization nlu_factor(const CoordinateAlgebra &A, const AMatrix &g,
                            const BlockProfile &bp);

} // namespace rootgrade
