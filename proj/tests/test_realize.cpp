#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rootgrade/realize.hpp"

using namespace rootgrade;

namespace {

Weight wt(std::initializer_list<long> cs) {
    Weight w;
    for (long c : cs)
        w.emplace_back(c);
    return w;
}

std::vector<Rational> lam(std::initializer_list<long> cs) {
    std::vector<Rational> l;
    for (long c : cs)
        l.emplace_back(c);
    return l;
}

GradedLieAlgebra sl2() { return build_chevalley(build_root_system(Family::A, 1)); }
GradedLieAlgebra sl3() { return build_chevalley(build_root_system(Family::A, 2)); }

CartanElement borel_x(const GradedLieAlgebra &g) {
    return CartanElement(g.delta.rank, Rational(1));
}

} // namespace

TEST_CASE("lowest slice of small modules") {
    auto g = sl2();
    auto par = parabolic_subalgebra(g, borel_x(g));
    // x_sigma = h/2, so the standard lowest eigenvalue is -1/2
    auto [l1, s1] = lowest_slice(g, par, standard_module(g));
    CHECK(l1 == Rational(-1, 2));
    CHECK(s1.size() == 1);
    auto [l2, s2] = lowest_slice(g, par, adjoint_module(g));
    CHECK(l2 == Rational(-1));
    CHECK(s2.size() == 1);
    auto triv = highest_weight_module(g, wt({0}));
    auto [l3, s3] = lowest_slice(g, par, triv);
    CHECK(l3 == Rational(0));
    CHECK(s3.size() == 1);
}

TEST_CASE("quotient by u.V") {
    auto g = sl2();
    auto par = parabolic_subalgebra(g, borel_x(g));
    auto q = quotient_E(g, par, standard_module(g));
    CHECK(q.E.dim == 1);
    CHECK(q.E.weights[0] == wt({-1}));
    CHECK(q.E.u_acts_trivially);
    q.E.validate(g, par);
    CHECK(q.u_image.size() == 1);

    auto g3 = sl3();
    auto par3 = parabolic_subalgebra(g3, borel_x(g3));
    auto q3 = quotient_E(g3, par3, adjoint_module(g3));
    CHECK(q3.E.dim == 1);
    CHECK(q3.E.weights[0] == wt({-1, -1}));
    CHECK(q3.u_image.size() == 7);

    auto triv = highest_weight_module(g, wt({0}));
    auto qt = quotient_E(g, par, triv);
    CHECK(qt.E.dim == 1);
    CHECK(qt.beta == Mat::identity(1));
}

TEST_CASE("beta_G sends the lowest slice to n-invariants") {
    auto g = sl2();
    auto par = parabolic_subalgebra(g, borel_x(g));
    auto V = standard_module(g);
    auto q = quotient_E(g, par, V);
    auto S = g_delta_finite_part(g, par, q.E);
    REQUIRE(S.dim == 2);
    Mat B = beta_G(g, par, V, q, S);
    CHECK(rank(B) == 2);

    auto [lmin, slice] = lowest_slice(g, par, V);
    for (const auto &v : slice) {
        Vec img = B.apply(v);
        for (size_t i : S.n_indices)
            CHECK(is_zero(S.action[i].apply(img)));
        // ev at the empty monomial recovers beta(v)
        Vec amb(S.slots.size());
        for (size_t r = 0; r < S.dim; ++r)
            if (!img[r].is_zero())
                amb = amb + img[r] * S.coords[r];
        Vec ev(q.E.dim);
        for (size_t s = 0; s < S.slots.size(); ++s)
            if (S.slots[s].first.empty())
                ev[S.slots[s].second] += amb[s];
        CHECK(ev == q.beta.apply(v));
    }
}

TEST_CASE("irreducibility tests") {
    auto g = sl2();
    auto std_mod = standard_module(g);
    CHECK(basis_orbits_full(g, std_mod));
    CHECK(irreducibility_certified(g, std_mod));
    auto sum = direct_sum(std_mod, std_mod);
    CHECK(!basis_orbits_full(g, sum));
    CHECK(!irreducibility_certified(g, sum));
    auto g3 = sl3();
    CHECK(irreducibility_certified(g3, adjoint_module(g3)));
}

TEST_CASE("realization theorem on small irreducibles") {
    struct Case {
        GradedLieAlgebra g;
        GModule V;
        size_t dim;
    };
    std::vector<Case> cases;
    {
        auto g = sl2();
        cases.push_back({g, standard_module(g), 2});
        cases.push_back({g, adjoint_module(g), 3});
    }
    {
        auto g = sl3();
        cases.push_back({g, standard_module(g), 3});
        cases.push_back({g, adjoint_module(g), 8});
    }
    for (auto &c : cases) {
        auto par = parabolic_subalgebra(c.g, borel_x(c.g));
        auto rep = verify_realization(c.g, par, c.V);
        CHECK(rep.ok());
        CHECK(rep.irreducible_basis_orbits);
        CHECK(rep.irreducible_certified);
        CHECK(rep.image_dim == c.dim);
    }
}

TEST_CASE("realization checks on a reducible input raise the flag") {
    auto g = sl2();
    auto par = parabolic_subalgebra(g, borel_x(g));
    auto V = direct_sum(standard_module(g), standard_module(g));
    auto rep = verify_realization(g, par, V);
    CHECK(!rep.irreducible_basis_orbits);
    CHECK(rep.injective);
    CHECK(rep.equivariant);
    CHECK(rep.image_is_minimal);
}

TEST_CASE("Frobenius reciprocity dimensions") {
    auto g = sl2();
    auto par = parabolic_subalgebra(g, borel_x(g));

    auto E1 = character_pmodule(g, par, lam({-1}));
    auto S1 = g_delta_finite_part(g, par, E1);
    auto r1 = frobenius_dims(g, par, standard_module(g), E1, S1);
    CHECK(r1.d1 == 1);
    CHECK(r1.d2 == 1);
    CHECK(r1.certified);

    auto E0 = trivial_pmodule(g, par);
    auto S0 = g_delta_finite_part(g, par, E0);
    auto triv = highest_weight_module(g, wt({0}));
    auto r0 = frobenius_dims(g, par, triv, E0, S0);
    CHECK(r0.d1 == 1);
    CHECK(r0.d2 == 1);
    CHECK(r0.certified);

    auto E2 = character_pmodule(g, par, lam({-2}));
    auto S2 = g_delta_finite_part(g, par, E2);
    auto r2 = frobenius_dims(g, par, standard_module(g), E2, S2);
    CHECK(r2.d1 == 0);
    CHECK(r2.d2 == 0);
    CHECK(r2.certified);
}

TEST_CASE("cyclicity criterion") {
    auto g = sl2();
    auto par = parabolic_subalgebra(g, borel_x(g));
    auto V = standard_module(g);
    auto q = quotient_E(g, par, V);
    CHECK(check_cyclic(g, par, V, q.E, q.beta));

    Mat zero(q.E.dim, V.dim);
    CHECK(!check_cyclic(g, par, V, q.E, zero));

    Mat bad = q.beta;
    bad.at(0, 0) += Scalar(1);
    CHECK_THROWS(check_cyclic(g, par, V, q.E, bad));
}
