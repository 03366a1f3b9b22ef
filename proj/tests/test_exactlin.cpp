#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rootgrade/matrix.hpp"

#include <cstdlib>

using namespace rootgrade;

namespace {

Scalar sc(long n) { return Scalar(n); }
Scalar sc(long p, long q) { return Scalar(Rational(p, q)); }

Mat mat2(long a, long b, long c, long d) {
    Mat m(2, 2);
    m.at(0, 0) = sc(a);
    m.at(0, 1) = sc(b);
    m.at(1, 0) = sc(c);
    m.at(1, 1) = sc(d);
    return m;
}

// deterministic small PRNG for property checks
unsigned long rng_state = 0x9e3779b97f4a7c15ull;
long rnd_small() {
    rng_state = rng_state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<long>((rng_state >> 33) % 7) - 3;
}

} // namespace

TEST_CASE("scalar arithmetic is exact and canonical") {
    Scalar a = parse_scalar("2/4");
    CHECK(a.str() == "1/2");
    Scalar b(Rational(1, 3), Rational(-2, 5));
    CHECK(((a + b) - b) == a);
    CHECK(parse_scalar(b.str()) == b);
    CHECK(parse_scalar("1/2+3/4 i").str() == "1/2+3/4 i");
    CHECK(parse_scalar("-i") == Scalar(Rational(0), Rational(-1)));
    CHECK((Scalar::i() * Scalar::i()) == sc(-1));
    CHECK((b * b.inverse()) == sc(1));
    CHECK_THROWS(Scalar(0).inverse());
}

TEST_CASE("rank basics") {
    CHECK(rank(Mat::identity(2)) == 2);
    CHECK(rank(Mat(3, 4)) == 0);
    CHECK(rank(mat2(1, 2, 2, 4)) == 1);
}

TEST_CASE("kernel basics") {
    CHECK(kernel_basis(Mat::identity(3)).empty());
    CHECK(kernel_basis(Mat(2, 2)).size() == 2);

    Mat m(1, 2);
    m.at(0, 0) = sc(1);
    m.at(0, 1) = sc(1);
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    // proportional to (1,-1)
    CHECK(ker[0][0] == -ker[0][1]);
    CHECK(!ker[0][0].is_zero());
}

TEST_CASE("solve") {
    Mat m = mat2(1, 1, 0, 1);
    Vec b{sc(3), sc(2)};
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b);

    Mat sing = mat2(1, 1, 1, 1);
    CHECK(!solve(sing, Vec{sc(0), sc(1)}).has_value());
}

TEST_CASE("subspace intersection") {
    Vec e0{sc(1), sc(0)}, e1{sc(0), sc(1)}, diag{sc(1), sc(1)};
    auto same = intersect_subspaces({{e0, e1}, {e1, e0}});
    CHECK(same_span(same, {e0, e1}, 2));

    CHECK(intersect_subspaces({{e0}, {e1}}).empty());

    auto line = intersect_subspaces({{e0, e1}, {diag}});
    REQUIRE(line.size() == 1);
    CHECK(same_span(line, {diag}, 2));
}

TEST_CASE("rank-nullity and exact kernels on random matrices") {
    for (int trial = 0; trial < 30; ++trial) {
        size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 5;
        Mat m(r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j)
                m.at(i, j) = sc(rnd_small());
        auto ker = kernel_basis(m);
        CHECK(rank(m) + ker.size() == c);
        for (const auto &k : ker)
            CHECK(is_zero(m.apply(k)));
    }
}

TEST_CASE("intersection result lies in every input span") {
    for (int trial = 0; trial < 20; ++trial) {
        size_t n = 4;
        std::vector<std::vector<Vec>> spans;
        for (int s = 0; s < 2; ++s) {
            std::vector<Vec> basis;
            for (int v = 0; v < 2 + s; ++v) {
                Vec x(n);
                for (size_t i = 0; i < n; ++i)
                    x[i] = sc(rnd_small());
                basis.push_back(x);
            }
            spans.push_back(basis);
        }
        auto meet = intersect_subspaces(spans);
        for (const auto &span : spans) {
            SpanBuilder sb(n);
            for (const auto &v : span)
                sb.add(v);
            for (const auto &w : meet)
                CHECK(sb.contains(w));
        }
    }
}

TEST_CASE("dimension mismatches are loud") {
    CHECK_THROWS(mat2(1, 0, 0, 1) * Mat(3, 3));
    CHECK_THROWS(mat2(1, 0, 0, 1).apply(Vec{sc(1)}));
    CHECK_THROWS(Mat::from_rows({Vec{sc(1)}, Vec{sc(1), sc(2)}}, 1));
}
