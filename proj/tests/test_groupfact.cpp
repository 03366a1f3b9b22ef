#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rootgrade/groupfact.hpp"

#include <random>

using namespace rootgrade;

namespace {

Vec scal(const CoordinateAlgebra &A, long v) {
    Vec r(A.dim);
    for (size_t i = 0; i < A.dim; ++i)
        r[i] = Scalar(v) * A.unit[i];
    return r;
}

// deterministic small random A-element
Vec rand_elem(const CoordinateAlgebra &A, std::mt19937 &rng) {
    std::uniform_int_distribution<long> d(-3, 3);
    Vec r(A.dim);
    for (size_t i = 0; i < A.dim; ++i)
        r[i] = Scalar(d(rng));
    return r;
}

} // namespace

TEST_CASE("algebra inverses") {
    auto q = CoordinateAlgebra::rationals();
    auto du = CoordinateAlgebra::dual_numbers();
    CHECK(*algebra_inverse(q, q.unit) == q.unit);
    // eps is a zero divisor
    CHECK(!algebra_inverse(du, unit_vec(2, 1)));
    // (1 + eps)^-1 = 1 - eps
    Vec one_eps{Scalar(1), Scalar(1)};
    auto inv = algebra_inverse(du, one_eps);
    REQUIRE(inv);
    CHECK(*inv == Vec({Scalar(1), Scalar(-1)}));
    CHECK(du.multiply(one_eps, *inv) == du.unit);
    // in Q x Q, (1,0) is a zero divisor and (2,3) is a unit
    auto sp = CoordinateAlgebra::split_pair();
    CHECK(!algebra_inverse(sp, Vec{Scalar(1), Scalar(0)}));
    auto i2 = algebra_inverse(sp, Vec{Scalar(2), Scalar(3)});
    REQUIRE(i2);
    CHECK(*i2 == Vec({Scalar(Rational(1, 2)), Scalar(Rational(1, 3))}));
}

TEST_CASE("nilpotent exponentials") {
    auto q = CoordinateAlgebra::rationals();
    AMatrix zero(2, 1);
    CHECK(exp_nilpotent(q, zero) == amat_identity(q, 2));

    AMatrix e21(2, 1);
    e21.at(1, 0) = scal(q, 1);
    auto ex = exp_nilpotent(q, e21);
    CHECK(ex == amat_add(amat_identity(q, 2), e21));

    // eps E12 + E21 over the dual numbers: not strictly triangular, but
    // x^2 = eps(E11 + E22) != 0 while x^4 = 0
    auto du = CoordinateAlgebra::dual_numbers();
    AMatrix x(2, 2);
    x.at(0, 1) = unit_vec(2, 1); // eps
    x.at(1, 0) = du.unit;
    auto x2 = amat_mul(du, x, x);
    CHECK(!amat_is_zero(x2));
    CHECK(amat_is_zero(amat_mul(du, x2, x2)));
    CHECK(amat_is_nilpotent(du, x));
    auto g = exp_nilpotent(du, x);
    auto ginv = exp_nilpotent(du, amat_scale(Scalar(-1), x));
    CHECK(amat_mul(du, g, ginv) == amat_identity(du, 2));

    // a non-nilpotent matrix is rejected
    CHECK_THROWS(exp_nilpotent(q, amat_identity(q, 2)));
}

TEST_CASE("log is inverse to exp on strictly triangular matrices") {
    std::mt19937 rng(7);
    for (const auto &A : {CoordinateAlgebra::rationals(),
                          CoordinateAlgebra::dual_numbers(),
                          CoordinateAlgebra::split_pair()}) {
        for (int rep = 0; rep < 5; ++rep) {
            AMatrix x(3, A.dim);
            for (size_t i = 0; i < 3; ++i)
                for (size_t j = 0; j < i; ++j)
                    x.at(i, j) = rand_elem(A, rng);
            CHECK(log_unipotent(A, exp_nilpotent(A, x)) == x);
        }
    }
}

TEST_CASE("big cell: basic factorizations") {
    auto q = CoordinateAlgebra::rationals();
    auto id = amat_identity(q, 2);
    auto r = nlu_factor(q, id, {1, 1});
    REQUIRE(r.in_big_cell);
    CHECK(r.n == id);
    CHECK(r.l == id);
    CHECK(r.u == id);

    // upper triangular [[2,3],[0,5]]
    AMatrix t(2, 1);
    t.at(0, 0) = scal(q, 2);
    t.at(0, 1) = scal(q, 3);
    t.at(1, 1) = scal(q, 5);
    auto rt = nlu_factor(q, t, {1, 1});
    REQUIRE(rt.in_big_cell);
    CHECK(rt.n == id);
    CHECK(rt.l.at(0, 0) == scal(q, 2));
    CHECK(rt.l.at(1, 1) == scal(q, 5));
    CHECK(rt.u.at(0, 1) == Vec{Scalar(Rational(3, 2))});

    // the permutation matrix has a zero pivot
    AMatrix perm(2, 1);
    perm.at(0, 1) = scal(q, 1);
    perm.at(1, 0) = scal(q, 1);
    CHECK(!nlu_factor(q, perm, {1, 1}).in_big_cell);
}

TEST_CASE("factor subgroups are recovered unchanged") {
    // uniqueness: an element of one factor subgroup factors as itself
    auto q = CoordinateAlgebra::rationals();
    BlockProfile bp{1, 2};
    auto id = amat_identity(q, 3);

    AMatrix um = id;
    um.at(0, 1) = scal(q, 4);
    um.at(0, 2) = scal(q, -7);
    auto ru = nlu_factor(q, um, bp);
    REQUIRE(ru.in_big_cell);
    CHECK(ru.n == id);
    CHECK(ru.l == id);
    CHECK(ru.u == um);

    AMatrix nm = id;
    nm.at(1, 0) = scal(q, 3);
    nm.at(2, 0) = scal(q, 2);
    auto rn = nlu_factor(q, nm, bp);
    REQUIRE(rn.in_big_cell);
    CHECK(rn.n == nm);
    CHECK(rn.l == id);
    CHECK(rn.u == id);

    AMatrix lm = id;
    lm.at(0, 0) = scal(q, 5);
    lm.at(1, 2) = scal(q, 1);
    lm.at(2, 1) = scal(q, -2);
    auto rl = nlu_factor(q, lm, bp);
    REQUIRE(rl.in_big_cell);
    CHECK(rl.n == id);
    CHECK(rl.l == lm);
    CHECK(rl.u == id);
}

TEST_CASE("randomized round trips recover the factors exactly") {
    std::mt19937 rng(11);
    std::vector<CoordinateAlgebra> algebras{CoordinateAlgebra::rationals(),
                                            CoordinateAlgebra::dual_numbers(),
                                            CoordinateAlgebra::split_pair()};
    std::vector<BlockProfile> profiles{{1, 1}, {1, 2}, {2, 1}, {1, 1, 1}};
    size_t done = 0;
    for (const auto &A : algebras)
        for (const auto &bp : profiles) {
            size_t n = 0;
            for (size_t s : bp)
                n += s;
            for (int rep = 0; rep < 4; ++rep) {
                std::vector<size_t> off{0};
                for (size_t s : bp)
                    off.push_back(off.back() + s);
                // strictly-lower and strictly-upper unipotent factors
                AMatrix nm = amat_identity(A, n), um = amat_identity(A, n);
                for (size_t bi = 0; bi < bp.size(); ++bi)
                    for (size_t bj = 0; bj < bp.size(); ++bj)
                        for (size_t i = off[bi]; i < off[bi + 1]; ++i)
                            for (size_t j = off[bj]; j < off[bj + 1]; ++j) {
                                if (bi > bj)
                                    nm.at(i, j) = rand_elem(A, rng);
                                if (bi < bj)
                                    um.at(i, j) = rand_elem(A, rng);
                            }
                // invertible block diagonal: unipotent-in-block + diagonal
                // units
                AMatrix lm(n, A.dim);
                do {
                    for (size_t b = 0; b < bp.size(); ++b)
                        for (size_t i = off[b]; i < off[b + 1]; ++i)
                            for (size_t j = off[b]; j < off[b + 1]; ++j)
                                lm.at(i, j) = rand_elem(A, rng);
                } while (!amat_inverse(A, lm));
                AMatrix g = amat_mul(A, amat_mul(A, nm, lm), um);
                auto r = nlu_factor(A, g, bp);
                REQUIRE(r.in_big_cell);
                CHECK(r.n == nm);
                CHECK(r.l == lm);
                CHECK(r.u == um);
                CHECK(amat_mul(A, amat_mul(A, r.n, r.l), r.u) == g);
                ++done;
            }
        }
    CHECK(done == algebras.size() * profiles.size() * 4);
}
