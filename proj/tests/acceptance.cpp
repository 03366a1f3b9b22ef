// Acceptance gate: ten end-to-end criteria, one pass/fail line each.
// Exact arithmetic throughout; any mismatch fails the criterion.

#include "rootgrade/coinduce.hpp"
#include "rootgrade/groupfact.hpp"
#include "rootgrade/realize.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace rootgrade;

namespace {

int failed = 0;

void run_criterion(int num, const std::string &name,
                   const std::function<bool(std::string &)> &body,
                   double time_limit = 0.0) {
    auto t0 = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
        ok = body(note);
    } catch (const std::exception &e) {
        note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    if (ok && time_limit > 0.0 && secs >= time_limit) {
        ok = false;
        note = "exceeded the " + std::to_string(time_limit) + "s budget";
    }
    std::printf("criterion %2d [%s] %s (%.2fs)%s%s\n", num,
                ok ? "PASS" : "FAIL", name.c_str(), secs,
                note.empty() ? "" : " -- ", note.c_str());
    if (!ok)
        ++failed;
}

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

std::vector<Rational> lam(std::initializer_list<long> cs) {
    std::vector<Rational> l;
    for (long c : cs)
        l.emplace_back(c);
    return l;
}

bool weyl_invariant(const RootSystem &rs, const std::map<Weight, size_t> &ch) {
    auto W = build_weyl_group(rs);
    for (size_t w = 0; w < W.elements.size(); ++w)
        for (const auto &[mu, m] : ch) {
            auto it = ch.find(W.apply(w, mu));
            if (it == ch.end() || it->second != m)
                return false;
        }
    return true;
}

bool n_nilpotent(const SectionModule &V) {
    std::vector<Vec> layer;
    for (size_t i = 0; i < V.dim; ++i)
        layer.push_back(unit_vec(V.dim, i));
    for (size_t step = 0; step <= V.dim && !layer.empty(); ++step) {
        SpanBuilder sb(V.dim);
        std::vector<Vec> next;
        for (size_t i : V.n_indices)
            for (const auto &v : layer) {
                Vec img = V.action[i].apply(v);
                if (!is_zero(img) && sb.add(img))
                    next.push_back(img);
            }
        layer = std::move(next);
    }
    return layer.empty();
}

bool rep_axiom(const GradedLieAlgebra &g, const SectionModule &V) {
    for (size_t i = 0; i < g.dim; ++i)
        for (size_t j = 0; j < g.dim; ++j) {
            Mat lhs(V.dim, V.dim);
            for (size_t k = 0; k < g.dim; ++k)
                if (!g.table[i][j][k].is_zero())
                    for (size_t a = 0; a < V.dim; ++a)
                        for (size_t b = 0; b < V.dim; ++b)
                            lhs.at(a, b) +=
                                g.table[i][j][k] * V.action[k].at(a, b);
            if (!(lhs == V.action[i] * V.action[j] -
                             V.action[j] * V.action[i]))
                return false;
        }
    return true;
}

// The parabolic/character suite shared by criteria 4, 7 and 10.
struct SuiteCase {
    std::string name;
    GradedLieAlgebra g;
    CartanElement x;
    std::vector<Rational> lambda;
};

std::vector<SuiteCase> build_suite() {
    std::vector<SuiteCase> cs;
    auto sl2 = build_chevalley(build_root_system(Family::A, 1));
    auto sl3 = build_chevalley(build_root_system(Family::A, 2));
    auto so5 = build_chevalley(build_root_system(Family::B, 2));
    cs.push_back({"sl2 l=-1", sl2, ce({1}), lam({-1})});
    cs.push_back({"sl2 l=-2", sl2, ce({1}), lam({-2})});
    cs.push_back({"sl2 l=-3", sl2, ce({1}), lam({-3})});
    cs.push_back({"sl2 opposite", sl2, ce({-1}), lam({0})});
    cs.push_back({"sl3 (-1,0)", sl3, ce({1, 1}), lam({-1, 0})});
    cs.push_back({"sl3 (0,-1)", sl3, ce({1, 1}), lam({0, -1})});
    cs.push_back({"sl3 (-1,-1)", sl3, ce({1, 1}), lam({-1, -1})});
    cs.push_back({"sl3 maximal parabolic", sl3, ce({1, 0}), lam({-1, 0})});
    cs.push_back({"so5 (-1,0)", so5, ce({3, 1}), lam({-1, 0})});
    cs.push_back({"so5 (0,-1)", so5, ce({3, 1}), lam({0, -1})});
    cs.push_back({"dual x sl2 l=-1",
                  build_tensor(CoordinateAlgebra::dual_numbers(), sl2),
                  ce({1}), lam({-1})});
    cs.push_back({"dual x sl2 l=-2",
                  build_tensor(CoordinateAlgebra::dual_numbers(), sl2),
                  ce({1}), lam({-2})});
    cs.push_back({"split x sl2",
                  build_tensor(CoordinateAlgebra::split_pair(), sl2), ce({1}),
                  lam({-1})});
    cs.push_back({"trunc3 x sl2",
                  build_tensor(CoordinateAlgebra::truncated(3), sl2), ce({1}),
                  lam({-1})});
    cs.push_back({"split x sl3",
                  build_tensor(CoordinateAlgebra::split_pair(), sl3),
                  ce({1, 1}), lam({-1, 0})});
    cs.push_back({"gl2(Q) l=-1", build_gln(CoordinateAlgebra::rationals(), 2),
                  ce({1}), lam({-1})});
    cs.push_back({"gl2(Q) l=-2", build_gln(CoordinateAlgebra::rationals(), 2),
                  ce({1}), lam({-2})});
    cs.push_back({"gl2(dual) l=-1",
                  build_gln(CoordinateAlgebra::dual_numbers(), 2), ce({1}),
                  lam({-1})});
    cs.push_back({"gl2(dual) l=-2",
                  build_gln(CoordinateAlgebra::dual_numbers(), 2), ce({1}),
                  lam({-2})});
    cs.push_back({"gl2(split)", build_gln(CoordinateAlgebra::split_pair(), 2),
                  ce({1}), lam({-1})});
    cs.push_back({"gl3(Q)", build_gln(CoordinateAlgebra::rationals(), 3),
                  ce({1, 1}), lam({-1, 0})});
    cs.push_back({"sl2 |x C^2",
                  build_abelian_extension(sl2, standard_module(sl2)), ce({1}),
                  lam({-2})});
    return cs;
}

bool criterion1(std::string &note) {
    auto g = build_chevalley(build_root_system(Family::A, 1));
    auto par = parabolic_subalgebra(g, ce({1}));
    for (long n = 0; n <= 6; ++n) {
        auto E = character_pmodule(g, par, {Rational(-n)});
        auto S = g_delta_finite_part(g, par, E);
        auto rs = g.delta;
        if (S.dim != weyl_dim_oracle(rs, wt({n})) ||
            S.dim != static_cast<size_t>(n) + 1) {
            note = "wrong dimension at n=" + std::to_string(n);
            return false;
        }
        std::map<Weight, size_t> expect;
        for (long k = -n; k <= n; k += 2)
            expect[{Rational(k)}] = 1;
        if (S.character != expect) {
            note = "wrong character at n=" + std::to_string(n);
            return false;
        }
    }
    for (long p : {1L, 2L}) {
        auto E = character_pmodule(g, par, {Rational(p)});
        if (g_delta_finite_part(g, par, E).dim != 0) {
            note = "dominant-positive character gave sections";
            return false;
        }
    }
    return true;
}

bool criterion2(std::string &note) {
    auto g = build_chevalley(build_root_system(Family::A, 2));
    auto par = parabolic_subalgebra(g, ce({1, 1}));
    auto E = character_pmodule(g, par, lam({-1, -1}));
    auto S = g_delta_finite_part(g, par, E);
    if (S.dim != 8) {
        note = "dim " + std::to_string(S.dim);
        return false;
    }
    if (S.character.at(wt({0, 0})) != 2) {
        note = "zero-weight multiplicity";
        return false;
    }
    if (!weyl_invariant(g.delta, S.character)) {
        note = "character not Weyl-invariant";
        return false;
    }
    std::map<Weight, size_t> adj;
    for (const auto &w : adjoint_module(g).weights)
        ++adj[w];
    if (S.character != adj) {
        note = "character differs from the adjoint weight multiset";
        return false;
    }
    return true;
}

bool criterion3(std::string &note) {
    struct Inst {
        GradedLieAlgebra g;
        std::vector<CartanElement> xs;
    };
    auto sl2 = build_chevalley(build_root_system(Family::A, 1));
    auto sl3 = build_chevalley(build_root_system(Family::A, 2));
    std::vector<Inst> insts;
    insts.push_back({sl2, {ce({1}), ce({-1})}});
    insts.push_back({sl3, {ce({1, 1}), ce({1, 0}), ce({0, 1})}});
    insts.push_back({build_tensor(CoordinateAlgebra::dual_numbers(), sl2),
                     {ce({1}), ce({-1})}});
    insts.push_back({build_tensor(CoordinateAlgebra::split_pair(), sl2),
                     {ce({1}), ce({-1})}});
    for (const auto &inst : insts)
        for (const auto &x : inst.xs) {
            auto par = parabolic_subalgebra(inst.g, x);
            auto S = g_delta_finite_part(inst.g, par,
                                         trivial_pmodule(inst.g, par));
            if (S.dim != 1) {
                note = "constants have dim " + std::to_string(S.dim);
                return false;
            }
            for (const auto &a : S.action)
                if (!a.is_zero()) {
                    note = "nonzero action on the constants";
                    return false;
                }
        }
    return true;
}

bool criterion4(std::string &note) {
    auto suite = build_suite();
    if (suite.size() < 20) {
        note = "suite too small";
        return false;
    }
    for (const auto &c : suite) {
        auto par = parabolic_subalgebra(c.g, c.x);
        auto E = character_pmodule(c.g, par, c.lambda);
        auto V = g_delta_finite_part(c.g, par, E);
        auto W = build_weyl_group(c.g.delta);
        auto cand = candidate_window(c.g, par, E, W,
                                     window_bound(par, E, W.elements.size()));
        for (const auto &mu : V.weights)
            if (!cand.count(mu)) {
                note = c.name + ": weight escaped the window";
                return false;
            }
        if (!weyl_invariant(c.g.delta, V.character)) {
            note = c.name + ": character not Weyl-invariant";
            return false;
        }
        if (!rep_axiom(c.g, V)) {
            note = c.name + ": representation axiom";
            return false;
        }
        if (!n_nilpotent(V)) {
            note = c.name + ": n does not act nilpotently";
            return false;
        }
        // V_{f,e} = E_e for the one-dimensional character input
        if (V.dim > 0 && V.character.at(E.weights[0]) != 1) {
            note = c.name + ": E-weight multiplicity";
            return false;
        }
    }
    return true;
}

bool criterion5(std::string &note) {
    struct Pair {
        GradedLieAlgebra g;
        CartanElement x;
        GModule W;
        std::vector<Rational> lambda;
        size_t expect;
    };
    auto sl2 = build_chevalley(build_root_system(Family::A, 1));
    auto sl3 = build_chevalley(build_root_system(Family::A, 2));
    std::vector<Pair> pairs;
    pairs.push_back({sl2, ce({1}), standard_module(sl2), lam({-1}), 1});
    pairs.push_back({sl2, ce({1}), adjoint_module(sl2), lam({-2}), 1});
    pairs.push_back({sl2, ce({1}), highest_weight_module(sl2, wt({0})),
                     lam({0}), 1});
    pairs.push_back({sl2, ce({1}), standard_module(sl2), lam({-2}), 0});
    pairs.push_back({sl2, ce({1}), highest_weight_module(sl2, wt({3})),
                     lam({-3}), 1});
    pairs.push_back({sl2, ce({1}),
                     direct_sum(standard_module(sl2), standard_module(sl2)),
                     lam({-1}), 2});
    pairs.push_back({sl2, ce({1}),
                     direct_sum(standard_module(sl2), adjoint_module(sl2)),
                     lam({-2}), 1});
    pairs.push_back({sl3, ce({1, 1}), adjoint_module(sl3), lam({-1, -1}), 1});
    pairs.push_back({sl3, ce({1, 1}), standard_module(sl3), lam({-1, -1}), 0});
    pairs.push_back({sl3, ce({1, 1}), standard_module(sl3), lam({0, -1}), 1});
    pairs.push_back({sl3, ce({1, 1}), highest_weight_module(sl3, wt({0, 1})),
                     lam({-1, 0}), 1});
    for (const auto &p : pairs) {
        auto par = parabolic_subalgebra(p.g, p.x);
        auto E = character_pmodule(p.g, par, p.lambda);
        auto S = g_delta_finite_part(p.g, par, E);
        auto r = frobenius_dims(p.g, par, p.W, E, S);
        if (r.d1 != r.d2 || r.d1 != p.expect || !r.certified) {
            note = "pair with expected dim " + std::to_string(p.expect) +
                   " gave (" + std::to_string(r.d1) + "," +
                   std::to_string(r.d2) + ")";
            return false;
        }
    }
    return true;
}

bool criterion6(std::string &note) {
    auto sl2 = build_chevalley(build_root_system(Family::A, 1));
    auto sl3 = build_chevalley(build_root_system(Family::A, 2));
    struct Case {
        GradedLieAlgebra g;
        GModule V;
        size_t dim;
    };
    std::vector<Case> cases{{sl2, standard_module(sl2), 2},
                            {sl2, adjoint_module(sl2), 3},
                            {sl3, standard_module(sl3), 3},
                            {sl3, adjoint_module(sl3), 8}};
    for (auto &c : cases) {
        auto par =
            parabolic_subalgebra(c.g, CartanElement(c.g.delta.rank,
                                                    Rational(1)));
        auto rep = verify_realization(c.g, par, c.V);
        if (!rep.ok() || rep.image_dim != c.dim) {
            note = "module of dim " + std::to_string(c.dim);
            return false;
        }
    }
    return true;
}

bool criterion7(std::string &note) {
    auto suite = build_suite();
    for (const auto &c : suite) {
        auto par = parabolic_subalgebra(c.g, c.x);
        auto p = basis_vectors(c.g, par.p_indices);
        auto l = basis_vectors(c.g, par.l_indices);
        if (!same_span(normalizer(c.g, p), p, c.g.dim)) {
            note = c.name + ": n_g(p) != p";
            return false;
        }
        if (!same_span(normalizer(c.g, l), l, c.g.dim)) {
            note = c.name + ": n_g(l) != l";
            return false;
        }
    }
    // the semidirect-product counterexample: n_g(u) is strictly larger
    auto sl2 = build_chevalley(build_root_system(Family::A, 1));
    auto g = build_abelian_extension(sl2, standard_module(sl2));
    auto par = parabolic_subalgebra(g, ce({1}));
    auto nu = normalizer(g, basis_vectors(g, par.u_indices));
    std::vector<Vec> expect; // weights -1, 0, 1, 2
    for (size_t i = 0; i < g.dim; ++i) {
        Rational w = g.weights[i].empty() ? Rational(0) : g.weights[i][0];
        if (w == -1 || w == 0 || w == 1 || w == 2)
            expect.push_back(unit_vec(g.dim, i));
    }
    if (nu.size() != 4 || !same_span(nu, expect, g.dim)) {
        note = "semidirect normalizer of u";
        return false;
    }
    return true;
}

bool criterion8(std::string &note) {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(2026);
    std::uniform_int_distribution<long> d(-3, 3);
    std::vector<CoordinateAlgebra> algebras{CoordinateAlgebra::rationals(),
                                            CoordinateAlgebra::dual_numbers(),
                                            CoordinateAlgebra::split_pair()};
    std::vector<BlockProfile> profiles{{1, 1}, {1, 2}, {2, 1}};
    size_t done = 0;
    while (done < 200)
        for (const auto &A : algebras)
            for (const auto &bp : profiles) {
                size_t n = 0;
                for (size_t s : bp)
                    n += s;
                std::vector<size_t> off{0};
                for (size_t s : bp)
                    off.push_back(off.back() + s);
                auto rnd = [&] {
                    Vec v(A.dim);
                    for (auto &c : v)
                        c = Scalar(d(rng));
                    return v;
                };
                AMatrix nm = amat_identity(A, n), um = amat_identity(A, n);
                for (size_t bi = 0; bi < bp.size(); ++bi)
                    for (size_t bj = 0; bj < bp.size(); ++bj)
                        for (size_t i = off[bi]; i < off[bi + 1]; ++i)
                            for (size_t j = off[bj]; j < off[bj + 1]; ++j) {
                                if (bi > bj)
                                    nm.at(i, j) = rnd();
                                if (bi < bj)
                                    um.at(i, j) = rnd();
                            }
                AMatrix lm(n, A.dim);
                do {
                    for (size_t b = 0; b < bp.size(); ++b)
                        for (size_t i = off[b]; i < off[b + 1]; ++i)
                            for (size_t j = off[b]; j < off[b + 1]; ++j)
                                lm.at(i, j) = rnd();
                } while (!amat_inverse(A, lm));
                auto gmat = amat_mul(A, amat_mul(A, nm, lm), um);
                auto r = nlu_factor(A, gmat, bp);
                if (!r.in_big_cell || !(r.n == nm) || !(r.l == lm) ||
                    !(r.u == um)) {
                    note = "round trip failed";
                    return false;
                }
                ++done;
            }
    auto q = CoordinateAlgebra::rationals();
    AMatrix perm(2, 1);
    perm.at(0, 1) = q.unit;
    perm.at(1, 0) = q.unit;
    if (nlu_factor(q, perm, {1, 1}).in_big_cell) {
        note = "permutation matrix accepted";
        return false;
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (secs >= 10.0) {
        note = "too slow";
        return false;
    }
    return true;
}

bool criterion9(std::string &note) {
    auto suite = build_suite();
    for (const auto &c : suite) {
        auto rep = validate(c.g);
        if (!rep.ok || !rep.failures.empty()) {
            note = c.name + ": " +
                   (rep.failures.empty() ? "invalid" : rep.failures[0]);
            return false;
        }
    }
    // a corrupted bracket table must be rejected with a witness
    auto bad = build_chevalley(build_root_system(Family::A, 1));
    bad.table[0][1][0] += Scalar(1);
    auto rep = validate(bad);
    if (rep.ok || rep.failures.empty()) {
        note = "corrupted table accepted";
        return false;
    }
    return true;
}

bool criterion10(std::string &note) {
    auto suite = build_suite();
    for (const auto &c : suite) {
        auto par = parabolic_subalgebra(c.g, c.x);
        auto E = character_pmodule(c.g, par, c.lambda);
        auto V1 = g_delta_finite_part(c.g, par, E);
        SectionOptions wide;
        wide.bound_multiplier = 2;
        auto V2 = g_delta_finite_part(c.g, par, E, wide);
        if (V1.dim != V2.dim || V1.character != V2.character) {
            note = c.name + ": finite part changed under a wider window";
            return false;
        }
    }
    return true;
}

} // namespace

int main() {
    run_criterion(1, "rank-1 Borel-Weil dimensions and characters",
                  criterion1, 5.0);
    run_criterion(2, "sl3 adjoint section module", criterion2, 30.0);
    run_criterion(3, "only constants for the trivial module", criterion3);
    run_criterion(4, "finiteness invariants across the randomized suite",
                  criterion4);
    run_criterion(5, "Frobenius reciprocity dimensions", criterion5);
    run_criterion(6, "realization of small irreducibles", criterion6);
    run_criterion(7, "parabolic and Levi self-normalization", criterion7);
    run_criterion(8, "big-cell factorization round trips", criterion8, 10.0);
    run_criterion(9, "constructor validity and corruption witness",
                  criterion9);
    run_criterion(10, "window-bound stabilization", criterion10);
    if (failed) {
        std::printf("%d criterion(s) failed\n", failed);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
