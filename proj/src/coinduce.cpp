#include "rootgrade/coinduce.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootgrade {

// ---------------------------------------------------------------------------
// PModule

Mat PModule::act_index(size_t g_index) const {
    auto it = action.find(g_index);
    if (it != action.end())
        return it->second;
    return Mat(dim, dim);
}

Mat PModule::act_of(const Vec &x) const {
    Mat m(dim, dim);
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero())
            continue;
        auto it = action.find(i);
        if (it == action.end())
            continue;
        for (size_t a = 0; a < dim; ++a)
            for (size_t b = 0; b < dim; ++b)
                m.at(a, b) += x[i] * it->second.at(a, b);
    }
    return m;
}

void PModule::validate(const GradedLieAlgebra &g,
                       const ParabolicSubalgebra &par) const {
    if (weights.size() != dim)
        throw std::invalid_argument("PModule: shape mismatch");
    for (size_t i : par.p_indices)
        for (size_t j : par.p_indices) {
            const Vec &t = g.table[i][j];
            for (size_t k = 0; k < g.dim; ++k)
                if (!t[k].is_zero() &&
                    std::find(par.p_indices.begin(), par.p_indices.end(), k) ==
                        par.p_indices.end())
                    throw std::invalid_argument(
                        "PModule: [p,p] leaves p at pair (" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
            Mat lhs = act_of(t);
            Mat a = act_index(i), b = act_index(j);
            if (!(lhs == a * b - b * a))
                throw std::invalid_argument(
                    "PModule: representation axiom fails on pair (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
        }
    for (size_t hi = 0; hi < g.coroots.size(); ++hi) {
        Mat h = act_of(g.coroots[hi]);
        for (size_t a = 0; a < dim; ++a)
            for (size_t b = 0; b < dim; ++b) {
                Scalar expect = (a == b) ? Scalar(weights[a][hi]) : Scalar(0);
                if (!(h.at(a, b) == expect))
                    throw std::invalid_argument(
                        "PModule: coroot " + std::to_string(hi) +
                        " does not act by the declared weights");
            }
    }
    if (u_acts_trivially)
        for (size_t i : par.u_indices)
            if (!act_index(i).is_zero())
                throw std::invalid_argument(
                    "PModule: u_acts_trivially set but u-index " +
                    std::to_string(i) + " acts nontrivially");
}

PModule character_pmodule(const GradedLieAlgebra &g,
                          const ParabolicSubalgebra &par,
                          const std::vector<Rational> &lambda) {
    if (lambda.size() != g.delta.rank)
        throw std::invalid_argument("character: rank mismatch");
    const auto &L = par.l_indices;
    size_t k = L.size();
    // unknown chi_j per l-basis index; constraints: chi(coroot_i) = lambda_i
    // and chi([l,l]) = 0
    std::vector<Vec> rows;
    Vec rhs;
    auto l_pos = [&](size_t gi) -> std::optional<size_t> {
        auto it = std::find(L.begin(), L.end(), gi);
        if (it == L.end())
            return std::nullopt;
        return static_cast<size_t>(it - L.begin());
    };
    for (size_t i = 0; i < g.coroots.size(); ++i) {
        Vec row(k);
        for (size_t gi = 0; gi < g.dim; ++gi)
            if (!g.coroots[i][gi].is_zero()) {
                auto p = l_pos(gi);
                if (!p)
                    throw std::logic_error("coroot outside the Levi part");
                row[*p] = g.coroots[i][gi];
            }
        rows.push_back(row);
        rhs.push_back(Scalar(lambda[i]));
    }
    for (size_t a : L)
        for (size_t b : L) {
            const Vec &t = g.table[a][b];
            Vec row(k);
            bool nonzero = false;
            for (size_t gi = 0; gi < g.dim; ++gi)
                if (!t[gi].is_zero()) {
                    auto p = l_pos(gi);
                    if (!p)
                        throw std::logic_error("[l,l] leaves the Levi part");
                    row[*p] = t[gi];
                    nonzero = true;
                }
            if (nonzero) {
                rows.push_back(row);
                rhs.push_back(Scalar(0));
            }
        }
    std::optional<Vec> chi;
    if (rows.empty())
        chi = Vec(k);
    else
        chi = solve(Mat::from_rows(rows, k), rhs);
    if (!chi)
        throw std::invalid_argument(
            "character: lambda is incompatible with [l,l] = 0 on this Levi");

    PModule e;
    e.dim = 1;
    Weight w(g.delta.rank);
    for (size_t i = 0; i < g.delta.rank; ++i)
        w[i] = lambda[i];
    e.weights = {w};
    for (size_t j = 0; j < k; ++j) {
        Mat m(1, 1);
        m.at(0, 0) = (*chi)[j];
        e.action[L[j]] = m;
    }
    for (size_t i : par.u_indices)
        e.action[i] = Mat(1, 1);
    e.u_acts_trivially = true;
    e.validate(g, par);
    return e;
}

PModule trivial_pmodule(const GradedLieAlgebra &g,
                        const ParabolicSubalgebra &par) {
    return character_pmodule(g, par,
                             std::vector<Rational>(g.delta.rank, Rational(0)));
}

PModule restrict_to_p(const GradedLieAlgebra &g, const ParabolicSubalgebra &par,
                      const GModule &V) {
    PModule e;
    e.dim = V.dim;
    e.weights = V.weights;
    for (size_t i : par.p_indices)
        e.action[i] = V.action[i];
    e.u_acts_trivially = true;
    for (size_t i : par.u_indices)
        if (!e.act_index(i).is_zero())
            e.u_acts_trivially = false;
    return e;
}

PModule direct_sum(const PModule &a, const PModule &b) {
    PModule e;
    e.dim = a.dim + b.dim;
    e.weights = a.weights;
    e.weights.insert(e.weights.end(), b.weights.begin(), b.weights.end());
    std::set<size_t> keys;
    for (const auto &[k, m] : a.action)
        keys.insert(k);
    for (const auto &[k, m] : b.action)
        keys.insert(k);
    for (size_t k : keys) {
        Mat m(e.dim, e.dim);
        Mat ma = a.act_index(k), mb = b.act_index(k);
        for (size_t p = 0; p < a.dim; ++p)
            for (size_t q = 0; q < a.dim; ++q)
                m.at(p, q) = ma.at(p, q);
        for (size_t p = 0; p < b.dim; ++p)
            for (size_t q = 0; q < b.dim; ++q)
                m.at(a.dim + p, a.dim + q) = mb.at(p, q);
        e.action[k] = m;
    }
    e.u_acts_trivially = a.u_acts_trivially && b.u_acts_trivially;
    return e;
}

// ---------------------------------------------------------------------------
// PBW monomials

namespace {

Weight mono_weight(const GradedLieAlgebra &g, const Mono &m) {
    Weight w(g.delta.rank, Rational(0));
    for (size_t letter : m)
        w = add(w, g.weights[letter]);
    return w;
}

void pbw_dfs(const GradedLieAlgebra &g, const ParabolicSubalgebra &par,
             size_t pos, const Weight &rem, Mono &current,
             std::vector<Mono> &out) {
    if (is_zero_weight(rem)) {
        out.push_back(current);
        return;
    }
    if (eval(rem, par.system.x_sigma) > 0)
        return;
    for (size_t i = pos; i < par.n_indices.size(); ++i) {
        size_t letter = par.n_indices[i];
        Weight next = sub(rem, g.weights[letter]);
        if (eval(next, par.system.x_sigma) > 0)
            continue;
        current.push_back(letter);
        pbw_dfs(g, par, i, next, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Mono> pbw_basis_of_weight(const GradedLieAlgebra &g,
                                      const ParabolicSubalgebra &par,
                                      const Weight &beta) {
    std::vector<Mono> out;
    Mono current;
    pbw_dfs(g, par, 0, beta, current, out);
    return out;
}

// ---------------------------------------------------------------------------
// Straightening

Straightener::Straightener(const GradedLieAlgebra &g,
                           const ParabolicSubalgebra &par)
    : g_(g), ord_(g.dim), is_n_(g.dim, false) {
    for (size_t k = 0; k < par.n_indices.size(); ++k) {
        ord_[par.n_indices[k]] = k;
        is_n_[par.n_indices[k]] = true;
    }
    for (size_t k = 0; k < par.p_indices.size(); ++k)
        ord_[par.p_indices[k]] = par.n_indices.size() + k;
}

const Straightener::LinComb &Straightener::straighten(const Word &word) {
    auto found = memo_.find(word);
    if (found != memo_.end())
        return found->second;

    size_t inv = word.size();
    for (size_t i = 0; i + 1 < word.size(); ++i)
        if (ord_[word[i]] > ord_[word[i + 1]]) {
            inv = i;
            break;
        }

    LinComb result;
    if (inv == word.size()) {
        result[word] = Scalar(1);
    } else {
        Word swapped = word;
        std::swap(swapped[inv], swapped[inv + 1]);
        for (const auto &[w, c] : straighten(swapped))
            result[w] += c;
        const Vec &br = g_.table[word[inv]][word[inv + 1]];
        for (size_t k = 0; k < g_.dim; ++k) {
            if (br[k].is_zero())
                continue;
            Word shorter;
            shorter.reserve(word.size() - 1);
            for (size_t t = 0; t < word.size(); ++t) {
                if (t == inv + 1)
                    continue;
                shorter.push_back(t == inv ? k : word[t]);
            }
            for (const auto &[w, c] : straighten(shorter))
                result[w] += br[k] * c;
        }
        for (auto it = result.begin(); it != result.end();)
            it = it->second.is_zero() ? result.erase(it) : std::next(it);
    }
    return memo_[word] = std::move(result);
}

std::pair<Mono, Straightener::Word>
Straightener::split(const Word &normal_word) const {
    Mono n_part;
    Word p_part;
    for (size_t letter : normal_word)
        (is_n_[letter] ? n_part : p_part).push_back(letter);
    return {n_part, p_part};
}

// ---------------------------------------------------------------------------
// Single-letter action on a functional

namespace {

void depth_dfs(const GradedLieAlgebra &g, const ParabolicSubalgebra &par,
               size_t pos, const Rational &budget, Mono &current,
               std::vector<Mono> &out) {
    out.push_back(current);
    for (size_t i = pos; i < par.n_indices.size(); ++i) {
        size_t letter = par.n_indices[i];
        Rational d = -eval(g.weights[letter], par.system.x_sigma);
        if (d > budget)
            continue;
        current.push_back(letter);
        depth_dfs(g, par, i, budget - d, current, out);
        current.pop_back();
    }
}

} // namespace

CoinducedElement act(const GradedLieAlgebra &g, const ParabolicSubalgebra &par,
                     const PModule &E, size_t letter,
                     const CoinducedElement &alpha) {
    Straightener st(g, par);
    const auto &xs = par.system.x_sigma;
    Rational maxd(0);
    for (const auto &[m, v] : alpha.support) {
        Rational depth = -eval(mono_weight(g, m), xs);
        maxd = std::max(maxd, depth);
    }
    Rational budget = maxd + std::max(Rational(0), eval(g.weights[letter], xs));
    std::vector<Mono> cands;
    Mono cur;
    depth_dfs(g, par, 0, budget, cur, cands);

    CoinducedElement out;
    for (const auto &M : cands) {
        Straightener::Word word;
        word.push_back(letter);
        word.insert(word.end(), M.begin(), M.end());
        Vec value(E.dim);
        for (const auto &[w, c] : st.straighten(word)) {
            auto [n_part, p_part] = st.split(w);
            auto it = alpha.support.find(n_part);
            if (it == alpha.support.end())
                continue;
            Vec v = it->second;
            for (size_t p : p_part)
                v = E.act_index(p).apply(v);
            Scalar sign = (p_part.size() % 2 == 0) ? Scalar(1) : Scalar(-1);
            value = value - (sign * c) * v;
        }
        if (!is_zero(value))
            out.support[M] = value;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Candidate window

unsigned long window_bound(const ParabolicSubalgebra &par, const PModule &E,
                           size_t weyl_order) {
    if (E.dim == 0)
        return 0;
    Rational m = eval(E.weights[0], par.system.x_sigma);
    for (size_t t = 1; t < E.dim; ++t)
        m = std::min(m, eval(E.weights[t], par.system.x_sigma));
    Rational b = -Rational(static_cast<unsigned long>(weyl_order)) * m;
    b.canonicalize();
    if (b <= 0)
        return 0;
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), b.get_num().get_mpz_t(),
               b.get_den().get_mpz_t());
    return q.get_ui();
}

std::set<Weight> candidate_window(const GradedLieAlgebra &g,
                                  const ParabolicSubalgebra &par,
                                  const PModule &E, const WeylGroup &W,
                                  unsigned long bound) {
    std::set<Weight> out;
    if (E.dim == 0)
        return out;
    const auto &ps = par.system;
    std::set<Weight> pe(E.weights.begin(), E.weights.end());
    auto in_shifted_cone = [&](const Weight &nu) {
        for (const auto &e : pe)
            if (in_cone(sub(e, nu), ps.sigma_minus, ps.x_sigma))
                return true;
        return false;
    };
    for (const auto &gamma : cone_set(ps.sigma_minus, ps.x_sigma, bound))
        for (const auto &e : pe) {
            Weight mu = sub(e, gamma);
            if (out.count(mu))
                continue;
            bool ok = true;
            for (size_t w = 0; w < W.elements.size() && ok; ++w)
                ok = in_shifted_cone(W.apply(w, mu));
            if (ok)
                out.insert(mu);
        }
    return out;
}

// ---------------------------------------------------------------------------
// The g_Delta-finite part

namespace {

using Slot = std::pair<Mono, size_t>;

struct SlotSpace {
    std::vector<Slot> slots;
    std::vector<Weight> slot_weights;
    std::vector<bool> in_window;
    std::map<Slot, size_t> index;
    std::vector<Mono> monomials; // deduplicated

    size_t size() const { return slots.size(); }
};

SlotSpace build_slots(const GradedLieAlgebra &g, const ParabolicSubalgebra &par,
                      const PModule &E, const std::set<Weight> &cand) {
    // ambient weights: the window plus one g-letter shift in every direction
    std::set<Weight> ambient;
    std::set<Weight> shifts;
    shifts.insert(Weight(g.delta.rank, Rational(0)));
    for (size_t i = 0; i < g.dim; ++i)
        shifts.insert(g.weights[i]);
    for (const auto &mu : cand)
        for (const auto &s : shifts)
            ambient.insert(add(mu, s));

    SlotSpace sp;
    std::set<Mono> seen;
    for (const auto &mu : ambient)
        for (size_t t = 0; t < E.dim; ++t) {
            Weight gamma = sub(E.weights[t], mu);
            for (const auto &mono : pbw_basis_of_weight(g, par, gamma)) {
                Slot s{mono, t};
                if (sp.index.count(s))
                    continue;
                sp.index[s] = sp.slots.size();
                sp.slots.push_back(s);
                sp.slot_weights.push_back(mu);
                sp.in_window.push_back(cand.count(mu) > 0);
                if (seen.insert(mono).second)
                    sp.monomials.push_back(mono);
            }
        }
    return sp;
}

/// Action matrix of a single g-basis letter on the slot space; columns are
/// filled for window slots only (the invariant subspace never leaves them).
Mat letter_action(const GradedLieAlgebra &g, const PModule &E,
                  Straightener &st, const SlotSpace &sp, size_t letter) {
    size_t S = sp.size();
    Mat A(S, S);
    for (const auto &M : sp.monomials) {
        Straightener::Word word;
        word.push_back(letter);
        word.insert(word.end(), M.begin(), M.end());
        // fold each normal term's p-tail into an E-operator, grouped by the
        // n-prefix
        std::map<Mono, Mat> ops;
        for (const auto &[w, c] : st.straighten(word)) {
            auto [n_part, p_part] = st.split(w);
            Mat op = Mat::identity(E.dim);
            bool dead = false;
            for (size_t p : p_part) {
                auto it = E.action.find(p);
                if (it == E.action.end() || it->second.is_zero()) {
                    dead = true;
                    break;
                }
                op = it->second * op;
            }
            if (dead)
                continue;
            Scalar sign = (p_part.size() % 2 == 0) ? Scalar(1) : Scalar(-1);
            auto ins = ops.try_emplace(n_part, Mat(E.dim, E.dim)).first;
            for (size_t a = 0; a < E.dim; ++a)
                for (size_t b = 0; b < E.dim; ++b)
                    ins->second.at(a, b) += sign * c * op.at(a, b);
        }
        for (const auto &[N, op] : ops)
            for (size_t t = 0; t < E.dim; ++t) {
                auto col_it = sp.index.find({N, t});
                if (col_it == sp.index.end() || !sp.in_window[col_it->second])
                    continue;
                size_t col = col_it->second;
                for (size_t s = 0; s < E.dim; ++s) {
                    Scalar v = -op.at(s, t);
                    if (v.is_zero())
                        continue;
                    auto row_it = sp.index.find({M, s});
                    if (row_it == sp.index.end())
                        throw std::logic_error(
                            "coinduced action left the ambient slot space");
                    A.at(row_it->second, col) += v;
                }
            }
    }
    return A;
}

Mat combine(const std::vector<Mat> &letters, const Vec &x, size_t S) {
    Mat m(S, S);
    for (size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero())
            for (size_t a = 0; a < S; ++a)
                for (size_t b = 0; b < S; ++b)
                    if (!letters[i].at(a, b).is_zero())
                        m.at(a, b) += x[i] * letters[i].at(a, b);
    return m;
}

/// Splits a basis of an h-stable subspace into weight-homogeneous vectors.
/// coord_weights gives the weight of each ambient coordinate.
void homogenize(const std::vector<Vec> &basis,
                const std::vector<Weight> &coord_weights,
                std::vector<Vec> &out_basis, std::vector<Weight> &out_weights) {
    std::set<Weight> distinct(coord_weights.begin(), coord_weights.end());
    size_t total = 0;
    for (const auto &mu : distinct) {
        SpanBuilder sb(coord_weights.size());
        std::vector<Vec> block;
        for (const auto &v : basis) {
            Vec proj(v.size());
            for (size_t i = 0; i < v.size(); ++i)
                if (coord_weights[i] == mu)
                    proj[i] = v[i];
            if (!is_zero(proj) && sb.add(proj))
                block.push_back(proj);
        }
        for (auto &v : block) {
            out_basis.push_back(std::move(v));
            out_weights.push_back(mu);
            ++total;
        }
    }
    if (total != basis.size())
        throw std::logic_error(
            "subspace is not h-stable: homogeneous split changed dimension");
}

} // namespace

SectionModule g_delta_finite_part(const GradedLieAlgebra &g,
                                  const ParabolicSubalgebra &par,
                                  const PModule &E,
                                  const SectionOptions &opts) {
    E.validate(g, par);
    WeylGroup W = build_weyl_group(g.delta, opts.rs_config);
    unsigned long B =
        window_bound(par, E, W.elements.size()) * opts.bound_multiplier;
    std::set<Weight> cand = candidate_window(g, par, E, W, B);

    SectionModule out;
    out.e_dim = E.dim;
    out.n_indices = par.n_indices;
    if (cand.empty()) {
        out.action.assign(g.dim, Mat(0, 0));
        return out;
    }

    SlotSpace sp = build_slots(g, par, E, cand);
    size_t S = sp.size();
    Straightener st(g, par);
    std::vector<Mat> letters;
    for (size_t i = 0; i < g.dim; ++i)
        letters.push_back(letter_action(g, E, st, sp, i));

    // greatest g_Delta-invariant subspace of the window, by fixed-point
    // iteration over the Chevalley generators
    std::vector<Mat> gens;
    for (const auto &x : g.chev_e)
        gens.push_back(combine(letters, x, S));
    for (const auto &x : g.chev_f)
        gens.push_back(combine(letters, x, S));

    std::vector<Vec> basis;
    for (size_t i = 0; i < S; ++i)
        if (sp.in_window[i])
            basis.push_back(unit_vec(S, i));
    while (!basis.empty()) {
        SpanBuilder span(S);
        for (const auto &v : basis)
            span.add(v);
        // constraint matrix: column j stacks reduce(G * b_j) over generators
        std::vector<Vec> cols_data(basis.size());
        for (size_t j = 0; j < basis.size(); ++j) {
            Vec stack;
            for (const auto &G : gens) {
                Vec r = span.reduce(G.apply(basis[j]));
                stack.insert(stack.end(), r.begin(), r.end());
            }
            cols_data[j] = std::move(stack);
        }
        Mat constraint = Mat::from_cols(cols_data, gens.size() * S);
        auto ker = kernel_basis(constraint);
        if (ker.size() == basis.size())
            break; // stable
        std::vector<Vec> next;
        for (const auto &c : ker) {
            Vec v(S);
            for (size_t j = 0; j < basis.size(); ++j)
                if (!c[j].is_zero())
                    v = v + c[j] * basis[j];
            next.push_back(std::move(v));
        }
        basis = std::move(next);
    }

    // weight-homogeneous basis and window cross-check
    std::vector<Vec> hom;
    std::vector<Weight> wts;
    homogenize(basis, sp.slot_weights, hom, wts);
    for (const auto &mu : wts)
        if (!cand.count(mu))
            throw std::logic_error(
                "computed weight escaped the candidate window");

    out.dim = hom.size();
    out.slots = sp.slots;
    out.coords = hom;
    out.weights = wts;
    for (const auto &mu : wts)
        out.character[mu]++;

    if (out.dim == 0) {
        out.action.assign(g.dim, Mat(0, 0));
        return out;
    }
    CoordinateMap cm(hom, S);
    for (size_t i = 0; i < g.dim; ++i) {
        Mat a(out.dim, out.dim);
        for (size_t j = 0; j < out.dim; ++j) {
            auto c = cm.coords(letters[i].apply(hom[j]));
            if (!c)
                throw std::logic_error(
                    "g-action does not preserve the finite part");
            for (size_t r = 0; r < out.dim; ++r)
                a.at(r, j) = (*c)[r];
        }
        out.action.push_back(a);
    }
    return out;
}

std::vector<CoinducedElement> SectionModule::basis_functionals() const {
    std::vector<CoinducedElement> out;
    for (const auto &v : coords) {
        CoinducedElement el;
        for (size_t i = 0; i < slots.size(); ++i) {
            if (v[i].is_zero())
                continue;
            auto ins = el.support.try_emplace(slots[i].first, Vec(e_dim));
            ins.first->second[slots[i].second] = v[i];
        }
        out.push_back(std::move(el));
    }
    return out;
}

std::vector<Vec> n_invariants(const SectionModule &V) {
    if (V.dim == 0)
        return {};
    std::vector<Vec> rows;
    for (size_t i : V.n_indices)
        for (size_t r = 0; r < V.dim; ++r)
            rows.push_back(V.action[i].row(r));
    if (rows.empty()) {
        std::vector<Vec> all;
        for (size_t i = 0; i < V.dim; ++i)
            all.push_back(unit_vec(V.dim, i));
        return all;
    }
    return kernel_basis(Mat::from_rows(rows, V.dim));
}

SectionModule minimal_submodule(const GradedLieAlgebra &g,
                                const SectionModule &V) {
    std::vector<Vec> inv = n_invariants(V);
    SpanBuilder sb(V.dim);
    std::vector<Vec> orbit;
    for (const auto &v : inv)
        if (sb.add(v))
            orbit.push_back(v);
    for (size_t head = 0; head < orbit.size(); ++head)
        for (size_t i = 0; i < g.dim; ++i) {
            Vec img = V.action[i].apply(orbit[head]);
            if (!is_zero(img) && sb.add(img))
                orbit.push_back(img);
        }

    std::vector<Vec> hom;
    std::vector<Weight> wts;
    homogenize(orbit, V.weights, hom, wts);

    SectionModule out;
    out.dim = hom.size();
    out.e_dim = V.e_dim;
    out.n_indices = V.n_indices;
    out.slots = V.slots;
    out.weights = wts;
    for (const auto &mu : wts)
        out.character[mu]++;
    for (const auto &v : hom) {
        Vec amb(V.slots.size());
        for (size_t j = 0; j < V.dim; ++j)
            if (!v[j].is_zero())
                amb = amb + v[j] * V.coords[j];
        out.coords.push_back(amb);
    }
    if (out.dim == 0) {
        out.action.assign(g.dim, Mat(0, 0));
        out.invariants_certified = inv.empty();
        return out;
    }
    CoordinateMap cm(hom, V.dim);
    for (size_t i = 0; i < g.dim; ++i) {
        Mat a(out.dim, out.dim);
        for (size_t j = 0; j < out.dim; ++j) {
            auto c = cm.coords(V.action[i].apply(hom[j]));
            if (!c)
                throw std::logic_error("orbit closure not invariant");
            for (size_t r = 0; r < out.dim; ++r)
                a.at(r, j) = (*c)[r];
        }
        out.action.push_back(a);
    }
    // the submodule's own n-invariants must recover the starting space
    std::vector<Vec> sub_inv = n_invariants(out);
    std::vector<Vec> sub_inv_in_v;
    for (const auto &v : sub_inv) {
        Vec lift(V.dim);
        for (size_t j = 0; j < out.dim; ++j)
            if (!v[j].is_zero())
                lift = lift + v[j] * hom[j];
        sub_inv_in_v.push_back(lift);
    }
    out.invariants_certified = same_span(sub_inv_in_v, inv, V.dim);
    return out;
}

std::map<Weight, size_t> character(const GradedLieAlgebra &g,
                                   const SectionModule &V) {
    std::map<Weight, size_t> out;
    if (V.dim == 0)
        return out;
    std::vector<Mat> hs;
    for (const auto &h : g.coroots) {
        Mat m(V.dim, V.dim);
        for (size_t i = 0; i < h.size(); ++i)
            if (!h[i].is_zero())
                for (size_t a = 0; a < V.dim; ++a)
                    for (size_t b = 0; b < V.dim; ++b)
                        m.at(a, b) += h[i] * V.action[i].at(a, b);
        for (size_t a = 0; a < V.dim; ++a)
            for (size_t b = 0; b < V.dim; ++b)
                if (a != b && !m.at(a, b).is_zero())
                    throw std::logic_error(
                        "h-action is not diagonal in the computed basis");
        hs.push_back(m);
    }
    for (size_t a = 0; a < V.dim; ++a) {
        Weight mu(g.delta.rank);
        for (size_t i = 0; i < g.delta.rank; ++i) {
            if (!hs[i].at(a, a).is_real())
                throw std::logic_error("non-rational h-eigenvalue");
            mu[i] = hs[i].at(a, a).re;
        }
        out[mu]++;
    }
    return out;
}

} // namespace rootgrade
