#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rootgrade/rootsys.hpp"

using namespace rootgrade;

namespace {

Weight wt(std::initializer_list<long> cs) {
    Weight w;
    for (long c : cs)
        w.emplace_back(c);
    return w;
}

CartanElement ce(std::initializer_list<long> cs) {
    CartanElement x;
    for (long c : cs)
        x.emplace_back(c);
    return x;
}

} // namespace

TEST_CASE("root counts for classical families") {
    CHECK(build_root_system(Family::A, 1).roots.size() == 2);
    CHECK(build_root_system(Family::A, 2).roots.size() == 6);
    CHECK(build_root_system(Family::A, 3).roots.size() == 12);
    CHECK(build_root_system(Family::B, 2).roots.size() == 8);
    CHECK(build_root_system(Family::C, 3).roots.size() == 18);
    CHECK(build_root_system(Family::D, 3).roots.size() == 12);
    RootSystemConfig wide;
    wide.max_rank = 4;
    CHECK(build_root_system(Family::D, 4, wide).roots.size() == 24);
}

TEST_CASE("simple roots are Cartan columns, A1 base case") {
    auto a1 = build_root_system(Family::A, 1);
    CHECK(a1.simple_roots[0] == wt({2}));
    CHECK(a1.roots.size() == 2);
    auto a2 = build_root_system(Family::A, 2);
    for (size_t j = 0; j < 2; ++j)
        for (size_t i = 0; i < 2; ++i)
            CHECK(a2.simple_roots[j][i] == a2.cartan[i][j]);
    CHECK(a2.positive_roots.size() == 3);
}

TEST_CASE("unsupported input rejected") {
    CHECK_THROWS(build_root_system(Family::D, 2));
    CHECK_THROWS(build_root_system(Family::B, 1));
    CHECK_THROWS(build_root_system(Family::A, 9));
    CHECK_THROWS(parse_family("E"));
}

TEST_CASE("Weyl group orders") {
    CHECK(build_weyl_group(build_root_system(Family::A, 1)).elements.size() == 2);
    CHECK(build_weyl_group(build_root_system(Family::A, 2)).elements.size() == 6);
    CHECK(build_weyl_group(build_root_system(Family::B, 2)).elements.size() == 8);
    CHECK(build_weyl_group(build_root_system(Family::A, 3)).elements.size() == 24);
    CHECK(build_weyl_group(build_root_system(Family::C, 3)).elements.size() == 48);

    RootSystemConfig tight;
    tight.max_weyl_order = 5;
    CHECK_THROWS(build_weyl_group(build_root_system(Family::A, 2), tight));
}

TEST_CASE("Weyl elements permute the roots; reflections are involutions") {
    for (auto fam : {Family::A, Family::B}) {
        auto rs = build_root_system(fam, 2);
        auto W = build_weyl_group(rs);
        for (size_t e = 0; e < W.elements.size(); ++e)
            for (const auto &alpha : rs.roots)
                CHECK(rs.is_root(W.apply(e, alpha)));
        for (size_t i = 0; i < rs.rank; ++i) {
            Mat refl = simple_reflection_matrix(rs, i);
            CHECK(refl * refl == Mat::identity(rs.rank));
        }
    }
}

TEST_CASE("only the zero weight is Weyl-fixed") {
    for (auto fam : {Family::A, Family::B}) {
        auto rs = build_root_system(fam, 2);
        auto W = build_weyl_group(rs);
        // stack (w - id) for all elements; kernel must be trivial
        std::vector<Vec> rows;
        for (const auto &m : W.elements) {
            Mat d = m - Mat::identity(rs.rank);
            for (size_t i = 0; i < rs.rank; ++i)
                rows.push_back(d.row(i));
        }
        CHECK(kernel_basis(Mat::from_rows(rows, rs.rank)).empty());
    }
}

TEST_CASE("parabolic partition, A1 Borel") {
    auto ps = parabolic_system({wt({2}), wt({-2})}, ce({1}));
    CHECK(ps.sigma_plus.size() == 1);
    CHECK(ps.sigma_plus[0] == wt({2}));
    CHECK(ps.sigma_zero.empty());
    CHECK(ps.sigma_minus.size() == 1);
    CHECK(eval(ps.sigma_plus[0], ps.x_sigma) >= 1);
    CHECK(eval(ps.sigma_minus[0], ps.x_sigma) <= -1);
}

TEST_CASE("non-reduced ambient set of the sl2 semidirect example") {
    // R = {±α, ±2α} with α(x) = 1
    std::vector<Weight> R{wt({2}), wt({-2}), wt({4}), wt({-4})};
    CartanElement x = ce({1});
    x[0] = Rational(1, 2); // α(x) = 1
    auto ps = parabolic_system(R, x);
    CHECK(ps.sigma_plus.size() == 2);
    for (const auto &a : ps.sigma_plus)
        CHECK(eval(a, ps.x_sigma) >= 1);
    for (const auto &a : ps.sigma_minus)
        CHECK(eval(a, ps.x_sigma) <= -1);
}

TEST_CASE("degenerate x = 0 puts everything in Sigma^0") {
    auto rs = build_root_system(Family::A, 2);
    auto ps = parabolic_system(rs.roots, ce({0, 0}));
    CHECK(ps.sigma_zero.size() == rs.roots.size());
    CHECK(ps.sigma_plus.empty());
}

TEST_CASE("pararel closure relations hold exhaustively") {
    auto rs = build_root_system(Family::B, 2);
    auto ps = parabolic_system(rs.roots, ce({1, 0}));
    auto in = [](const std::vector<Weight> &set, const Weight &w) {
        return std::find(set.begin(), set.end(), w) != set.end();
    };
    for (const auto &a : ps.sigma_plus)
        for (const auto &b : ps.sigma_plus) {
            Weight s = add(a, b);
            if (rs.is_root(s))
                CHECK(in(ps.sigma_plus, s));
        }
    for (const auto &a : ps.sigma_zero)
        for (const auto &b : ps.sigma_plus) {
            Weight s = add(a, b);
            if (rs.is_root(s))
                CHECK(in(ps.sigma_plus, s));
        }
}

TEST_CASE("cone enumeration") {
    std::vector<Weight> gen{wt({-2})};
    CartanElement x0{Rational(1, 2)}; // (-2α/2)... gamma(x0) = -1
    auto cs = cone_set(gen, x0, 3);
    CHECK(cs.size() == 4);
    CHECK(cs.count(wt({0})));
    CHECK(cs.count(wt({-6})));
    CHECK(cone_set(gen, x0, 0).size() == 1);

    auto a2 = build_root_system(Family::A, 2);
    std::vector<Weight> neg;
    for (const auto &r : a2.positive_roots)
        neg.push_back(negate(r));
    auto cs2 = cone_set(neg, ce({1, 1}), 1);
    CHECK(cs2.size() == 4);

    CHECK_THROWS(cone_set({wt({-1})}, ce({0}), 2));
}

TEST_CASE("cone membership") {
    std::vector<Weight> gen{wt({-2})};
    CartanElement x0{Rational(1, 2)};
    CHECK(in_cone(wt({0}), gen, x0));
    CHECK(in_cone(wt({-4}), gen, x0));
    CHECK(!in_cone(wt({-3}), gen, x0));
    CHECK(!in_cone(wt({2}), gen, x0));
}

TEST_CASE("Weyl dimension oracle") {
    auto a1 = build_root_system(Family::A, 1);
    for (long n = 0; n <= 6; ++n)
        CHECK(weyl_dim_oracle(a1, wt({n})) == static_cast<unsigned long>(n + 1));
    auto a2 = build_root_system(Family::A, 2);
    CHECK(weyl_dim_oracle(a2, wt({1, 1})) == 8);
    CHECK(weyl_dim_oracle(a2, wt({1, 0})) == 3);
    CHECK(weyl_dim_oracle(a2, wt({0, 0})) == 1);
    auto b2 = build_root_system(Family::B, 2);
    CHECK(weyl_dim_oracle(b2, wt({0, 1})) == 4);  // spin
    CHECK(weyl_dim_oracle(b2, wt({1, 0})) == 5);  // vector
    CHECK(weyl_dim_oracle(b2, wt({0, 2})) == 10); // adjoint of so5 = sp4
    CHECK_THROWS(weyl_dim_oracle(a1, wt({-1})));
}
