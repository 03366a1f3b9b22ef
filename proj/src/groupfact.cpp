#include "rootgrade/groupfact.hpp"

#include <stdexcept>

namespace rootgrade {

AMatrix amat_identity(const CoordinateAlgebra &A, size_t n) {
    AMatrix m(n, A.dim);
    for (size_t i = 0; i < n; ++i)
        m.at(i, i) = A.unit;
    return m;
}

AMatrix amat_mul(const CoordinateAlgebra &A, const AMatrix &x,
                 const AMatrix &y) {
    if (x.n != y.n)
        throw std::invalid_argument("amat_mul: size mismatch");
    AMatrix r(x.n, A.dim);
    for (size_t i = 0; i < x.n; ++i)
        for (size_t j = 0; j < x.n; ++j) {
            Vec acc(A.dim);
            for (size_t k = 0; k < x.n; ++k) {
                if (is_zero(x.at(i, k)) || is_zero(y.at(k, j)))
                    continue;
                acc = acc + A.multiply(x.at(i, k), y.at(k, j));
            }
            r.at(i, j) = acc;
        }
    return r;
}

AMatrix amat_add(const AMatrix &x, const AMatrix &y) {
    AMatrix r = x;
    for (size_t i = 0; i < r.entries.size(); ++i)
        r.entries[i] = r.entries[i] + y.entries[i];
    return r;
}

AMatrix amat_sub(const AMatrix &x, const AMatrix &y) {
    AMatrix r = x;
    for (size_t i = 0; i < r.entries.size(); ++i)
        r.entries[i] = r.entries[i] - y.entries[i];
    return r;
}

AMatrix amat_scale(const Scalar &c, const AMatrix &x) {
    AMatrix r = x;
    for (auto &e : r.entries)
        e = c * e;
    return r;
}

bool amat_is_zero(const AMatrix &x) {
    for (const auto &e : x.entries)
        if (!is_zero(e))
            return false;
    return true;
}

std::optional<Vec> algebra_inverse(const CoordinateAlgebra &A, const Vec &a) {
    // left-multiplication operator on A over Q(i)
    Mat op(A.dim, A.dim);
    for (size_t j = 0; j < A.dim; ++j) {
        Vec img = A.multiply(a, unit_vec(A.dim, j));
        for (size_t i = 0; i < A.dim; ++i)
            op.at(i, j) = img[i];
    }
    return solve(op, A.unit);
}

std::optional<AMatrix> amat_inverse(const CoordinateAlgebra &A,
                                    const AMatrix &m) {
    size_t n = m.n, d = A.dim, N = n * d;
    Mat op(N, N);
    for (size_t j = 0; j < n; ++j)
        for (size_t t = 0; t < d; ++t)
            for (size_t i = 0; i < n; ++i) {
                Vec img = A.multiply(m.at(i, j), unit_vec(d, t));
                for (size_t s = 0; s < d; ++s)
                    op.at(i * d + s, j * d + t) = img[s];
            }
    AMatrix inv(n, d);
    for (size_t c = 0; c < n; ++c) {
        Vec rhs(N);
        for (size_t s = 0; s < d; ++s)
            rhs[c * d + s] = A.unit[s];
        auto x = solve(op, rhs);
        if (!x)
            return std::nullopt;
        for (size_t j = 0; j < n; ++j)
            for (size_t s = 0; s < d; ++s)
                inv.at(j, c)[s] = (*x)[j * d + s];
    }
    return inv;
}

bool amat_is_nilpotent(const CoordinateAlgebra &A, const AMatrix &x) {
    AMatrix p = x;
    for (size_t k = 1; k <= x.n * A.dim; ++k) {
        if (amat_is_zero(p))
            return true;
        p = amat_mul(A, p, x);
    }
    return amat_is_zero(p);
}

AMatrix exp_nilpotent(const CoordinateAlgebra &A, const AMatrix &x) {
    if (!amat_is_nilpotent(A, x))
        throw std::invalid_argument("exp_nilpotent: input is not nilpotent");
    AMatrix sum = amat_identity(A, x.n);
    AMatrix power = x;
    Rational fact(1);
    for (size_t k = 1; !amat_is_zero(power); ++k) {
        fact *= Rational(static_cast<long>(k));
        sum = amat_add(sum, amat_scale(Scalar(Rational(1) / fact), power));
        power = amat_mul(A, power, x);
    }
    return sum;
}

AMatrix log_unipotent(const CoordinateAlgebra &A, const AMatrix &x) {
    AMatrix y = amat_sub(x, amat_identity(A, x.n));
    if (!amat_is_nilpotent(A, y))
        throw std::invalid_argument("log_unipotent: input is not unipotent");
    AMatrix sum(x.n, A.dim);
    AMatrix power = y;
    long sign = 1;
    for (size_t k = 1; !amat_is_zero(power); ++k) {
        sum = amat_add(
            sum, amat_scale(Scalar(Rational(sign, static_cast<long>(k))),
                            power));
        power = amat_mul(A, power, y);
        sign = -sign;
    }
    return sum;
}

namespace {

AMatrix block_of(const AMatrix &m, size_t r0, size_t c0, size_t sz,
                 size_t a_dim) {
    AMatrix b(sz, a_dim);
    for (size_t i = 0; i < sz; ++i)
        for (size_t j = 0; j < sz; ++j)
            b.at(i, j) = m.at(r0 + i, c0 + j);
    return b;
}

} // namespace

NLUFactorization nlu_factor(const CoordinateAlgebra &A, const AMatrix &g,
                            const BlockProfile &bp) {
    size_t total = 0;
    for (size_t s : bp) {
        if (s == 0)
            throw std::invalid_argument("nlu_factor: zero block size");
        total += s;
    }
    if (total != g.n)
        throw std::invalid_argument("nlu_factor: block profile mismatch");
    std::vector<size_t> off{0};
    for (size_t s : bp)
        off.push_back(off.back() + s);
    size_t m = bp.size();

    NLUFactorization res;
    res.n = amat_identity(A, g.n);
    res.l = AMatrix(g.n, A.dim);
    res.u = amat_identity(A, g.n);
    AMatrix s = g; // Schur-complement workspace

    for (size_t k = 0; k < m; ++k) {
        AMatrix pivot = block_of(s, off[k], off[k], bp[k], A.dim);
        auto pinv = amat_inverse(A, pivot);
        if (!pinv) {
            res.in_big_cell = false;
            return res;
        }
        for (size_t i = 0; i < bp[k]; ++i)
            for (size_t j = 0; j < bp[k]; ++j)
                res.l.at(off[k] + i, off[k] + j) = pivot.at(i, j);
        // row factors below and column factors right of the pivot
        for (size_t bi = k + 1; bi < m; ++bi)
            for (size_t i = 0; i < bp[bi]; ++i)
                for (size_t j = 0; j < bp[k]; ++j) {
                    Vec acc(A.dim);
                    for (size_t t = 0; t < bp[k]; ++t)
                        acc = acc + A.multiply(s.at(off[bi] + i, off[k] + t),
                                               pinv->at(t, j));
                    res.n.at(off[bi] + i, off[k] + j) = acc;
                }
        for (size_t bj = k + 1; bj < m; ++bj)
            for (size_t i = 0; i < bp[k]; ++i)
                for (size_t j = 0; j < bp[bj]; ++j) {
                    Vec acc(A.dim);
                    for (size_t t = 0; t < bp[k]; ++t)
                        acc = acc + A.multiply(pinv->at(i, t),
                                               s.at(off[k] + t, off[bj] + j));
                    res.u.at(off[k] + i, off[bj] + j) = acc;
                }
        // Schur update of the trailing blocks: S_ij -= N_ik * S_kj
        for (size_t bi = k + 1; bi < m; ++bi)
            for (size_t bj = k + 1; bj < m; ++bj)
                for (size_t i = 0; i < bp[bi]; ++i)
                    for (size_t j = 0; j < bp[bj]; ++j) {
                        Vec acc(A.dim);
                        for (size_t t = 0; t < bp[k]; ++t)
                            acc = acc +
                                  A.multiply(res.n.at(off[bi] + i, off[k] + t),
                                             s.at(off[k] + t, off[bj] + j));
                        s.at(off[bi] + i, off[bj] + j) =
                            s.at(off[bi] + i, off[bj] + j) - acc;
                    }
    }
    res.in_big_cell = true;
    return res;
}

} // namespace rootgrade
