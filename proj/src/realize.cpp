#include "rootgrade/realize.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootgrade {

std::pair<Rational, std::vector<Vec>>
lowest_slice(const GradedLieAlgebra &g, const ParabolicSubalgebra &par,
             const GModule &V) {
    if (V.dim == 0)
        throw std::invalid_argument("lowest_slice: zero module");
    const auto &xs = par.system.x_sigma;
    Rational lam = eval(V.weights[0], xs);
    for (size_t i = 1; i < V.dim; ++i)
        lam = std::min(lam, eval(V.weights[i], xs));
    std::vector<Vec> slice;
    for (size_t i = 0; i < V.dim; ++i)
        if (eval(V.weights[i], xs) == lam)
            slice.push_back(unit_vec(V.dim, i));
    return {lam, slice};
}

QuotientData quotient_E(const GradedLieAlgebra &g,
                        const ParabolicSubalgebra &par, const GModule &V) {
    QuotientData q;
    SpanBuilder uv(V.dim);
    for (size_t i : par.u_indices)
        for (size_t j = 0; j < V.dim; ++j) {
            Vec img = V.action[i].col(j);
            if (!is_zero(img) && uv.add(img))
                q.u_image.push_back(img);
        }
    // coset representatives among the standard basis vectors
    SpanBuilder probe(V.dim);
    for (const auto &v : q.u_image)
        probe.add(v);
    std::vector<size_t> reps;
    for (size_t j = 0; j < V.dim; ++j)
        if (probe.add(unit_vec(V.dim, j)))
            reps.push_back(j);

    std::vector<Vec> full = q.u_image;
    for (size_t j : reps)
        full.push_back(unit_vec(V.dim, j));
    CoordinateMap cm(full, V.dim);
    size_t k = reps.size(), off = q.u_image.size();

    q.beta = Mat(k, V.dim);
    for (size_t j = 0; j < V.dim; ++j) {
        auto c = cm.coords(unit_vec(V.dim, j));
        for (size_t r = 0; r < k; ++r)
            q.beta.at(r, j) = (*c)[off + r];
    }
    q.E.dim = k;
    for (size_t j : reps)
        q.E.weights.push_back(V.weights[j]);
    for (size_t i : par.p_indices) {
        Mat m(k, k);
        for (size_t c = 0; c < k; ++c) {
            Vec img = V.action[i].col(reps[c]);
            Vec coords = q.beta.apply(img);
            for (size_t r = 0; r < k; ++r)
                m.at(r, c) = coords[r];
        }
        q.E.action[i] = m;
    }
    q.E.u_acts_trivially = true;
    for (size_t i : par.u_indices)
        if (!q.E.act_index(i).is_zero())
            q.E.u_acts_trivially = false;
    return q;
}

Mat beta_G(const GradedLieAlgebra &g, const ParabolicSubalgebra &par,
           const GModule &V, const QuotientData &q, const SectionModule &S) {
    (void)g;
    (void)par;
    size_t amb = S.slots.size();
    CoordinateMap cm(S.coords, amb);
    Mat out(S.dim, V.dim);
    for (size_t j = 0; j < V.dim; ++j) {
        Vec phi(amb);
        for (size_t s = 0; s < amb; ++s) {
            const Mono &mono = S.slots[s].first;
            Vec w = unit_vec(V.dim, j);
            for (size_t letter : mono)
                w = V.action[letter].apply(w);
            Vec val = q.beta.apply(w);
            Scalar sign = (mono.size() % 2 == 0) ? Scalar(1) : Scalar(-1);
            phi[s] = sign * val[S.slots[s].second];
        }
        auto c = cm.coords(phi);
        if (!c)
            throw std::logic_error(
                "beta_G image leaves the computed finite part");
        for (size_t r = 0; r < S.dim; ++r)
            out.at(r, j) = (*c)[r];
    }
    return out;
}

bool basis_orbits_full(const GradedLieAlgebra &g, const GModule &V) {
    for (size_t j = 0; j < V.dim; ++j) {
        SpanBuilder sb(V.dim);
        std::vector<Vec> orbit{unit_vec(V.dim, j)};
        sb.add(orbit[0]);
        for (size_t head = 0; head < orbit.size(); ++head)
            for (size_t i = 0; i < g.dim; ++i) {
                Vec img = V.action[i].apply(orbit[head]);
                if (!is_zero(img) && sb.add(img))
                    orbit.push_back(img);
            }
        if (sb.size() != V.dim)
            return false;
    }
    return true;
}

bool irreducibility_certified(const GradedLieAlgebra &g, const GModule &V) {
    size_t n = V.dim;
    if (n == 0)
        return false;
    auto flatten = [n](const Mat &m) {
        Vec v(n * n);
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b)
                v[a * n + b] = m.at(a, b);
        return v;
    };
    SpanBuilder sb(n * n);
    std::vector<Mat> basis;
    auto push = [&](const Mat &m) {
        if (!m.is_zero() && sb.add(flatten(m)))
            basis.push_back(m);
    };
    push(Mat::identity(n));
    for (const auto &a : V.action)
        push(a);
    for (size_t head = 0; head < basis.size(); ++head)
        for (const auto &a : V.action) {
            if (sb.size() == n * n)
                return true;
            push(a * basis[head]);
        }
    return sb.size() == n * n;
}

RealizationReport verify_realization(const GradedLieAlgebra &g,
                                     const ParabolicSubalgebra &par,
                                     const GModule &V,
                                     const SectionOptions &opts) {
    V.validate(g);
    RealizationReport rep;
    rep.irreducible_basis_orbits = basis_orbits_full(g, V);
    rep.irreducible_certified = irreducibility_certified(g, V);

    auto [lam, slice] = lowest_slice(g, par, V);
    rep.eq51 = true;
    for (const auto &v : slice)
        for (size_t i : par.n_indices)
            if (!is_zero(V.action[i].apply(v)))
                rep.eq51 = false;

    QuotientData q = quotient_E(g, par, V);
    std::vector<Vec> higher;
    for (size_t i = 0; i < V.dim; ++i)
        if (eval(V.weights[i], par.system.x_sigma) > lam)
            higher.push_back(unit_vec(V.dim, i));
    rep.eq53 = same_span(q.u_image, higher, V.dim);

    SectionModule S = g_delta_finite_part(g, par, q.E, opts);
    rep.section_dim = S.dim;
    Mat B = beta_G(g, par, V, q, S);
    rep.injective = (rank(B) == V.dim);

    rep.equivariant = true;
    for (size_t i = 0; i < g.dim; ++i)
        if (!(B * V.action[i] == S.action[i] * B))
            rep.equivariant = false;

    // image of beta_G in ambient slot coordinates vs. the minimal submodule
    std::vector<Vec> image;
    for (size_t j = 0; j < V.dim; ++j) {
        Vec amb(S.slots.size());
        for (size_t r = 0; r < S.dim; ++r)
            if (!B.at(r, j).is_zero())
                amb = amb + B.at(r, j) * S.coords[r];
        image.push_back(amb);
    }
    SectionModule M = minimal_submodule(g, S);
    rep.image_dim = rank(Mat::from_rows(image, S.slots.size()));
    rep.image_is_minimal = same_span(image, M.coords, S.slots.size());
    return rep;
}

namespace {

// kernel of the intertwiner system T rho_W(i) = A_i T over the given index
// set; unknowns are the entries of the rows x cols matrix T
std::vector<Vec> intertwiners(const std::vector<Mat> &A,
                              const std::vector<Mat> &rho,
                              const std::vector<size_t> &indices, size_t rows,
                              size_t cols) {
    size_t unknowns = rows * cols;
    std::vector<Vec> eq_rows;
    for (size_t idx : indices) {
        const Mat &a = A[idx];
        const Mat &r = rho[idx];
        for (size_t p = 0; p < rows; ++p)
            for (size_t q = 0; q < cols; ++q) {
                Vec row(unknowns);
                // (T r)(p,q) - (a T)(p,q) = 0
                for (size_t c = 0; c < cols; ++c)
                    row[p * cols + c] += r.at(c, q);
                for (size_t t = 0; t < rows; ++t)
                    row[t * cols + q] -= a.at(p, t);
                eq_rows.push_back(std::move(row));
            }
    }
    if (eq_rows.empty()) {
        std::vector<Vec> all;
        for (size_t i = 0; i < unknowns; ++i)
            all.push_back(unit_vec(unknowns, i));
        return all;
    }
    return kernel_basis(Mat::from_rows(eq_rows, unknowns));
}

} // namespace

FrobeniusResult frobenius_dims(const GradedLieAlgebra &g,
                               const ParabolicSubalgebra &par, const GModule &W,
                               const PModule &E, const SectionModule &S) {
    FrobeniusResult res;
    std::vector<size_t> all_indices(g.dim);
    for (size_t i = 0; i < g.dim; ++i)
        all_indices[i] = i;
    auto hom_g = intertwiners(S.action, W.action, all_indices, S.dim, W.dim);
    res.d1 = hom_g.size();

    std::vector<Mat> e_action(g.dim, Mat(E.dim, E.dim));
    for (size_t i : par.p_indices)
        e_action[i] = E.act_index(i);
    auto hom_p =
        intertwiners(e_action, W.action, par.p_indices, E.dim, W.dim);
    res.d2 = hom_p.size();

    // evaluation at the empty monomial: S-basis -> E
    Mat ev(E.dim, S.dim);
    for (size_t s = 0; s < S.slots.size(); ++s)
        if (S.slots[s].first.empty())
            for (size_t k = 0; k < S.dim; ++k)
                ev.at(S.slots[s].second, k) += S.coords[k][s];

    // push each g-intertwiner through ev and check the correspondence
    SpanBuilder p_span(E.dim * W.dim);
    for (const auto &v : hom_p)
        p_span.add(v);
    SpanBuilder image_span(E.dim * W.dim);
    size_t rank_count = 0;
    bool all_inside = true;
    for (const auto &tv : hom_g) {
        Mat T(S.dim, W.dim);
        for (size_t p = 0; p < S.dim; ++p)
            for (size_t q = 0; q < W.dim; ++q)
                T.at(p, q) = tv[p * W.dim + q];
        Mat comp = ev * T;
        Vec flat(E.dim * W.dim);
        for (size_t p = 0; p < E.dim; ++p)
            for (size_t q = 0; q < W.dim; ++q)
                flat[p * W.dim + q] = comp.at(p, q);
        if (!p_span.contains(flat))
            all_inside = false;
        if (image_span.add(flat))
            ++rank_count;
    }
    res.certified =
        (res.d1 == res.d2) && all_inside && rank_count == res.d1;
    return res;
}

bool check_cyclic(const GradedLieAlgebra &g, const ParabolicSubalgebra &par,
                  const GModule &V, const PModule &E, const Mat &beta) {
    for (size_t i : par.p_indices)
        if (!(beta * V.action[i] == E.act_index(i) * beta))
            throw std::invalid_argument(
                "check_cyclic: beta is not p-equivariant at index " +
                std::to_string(i));
    // largest g-invariant subspace of ker(beta)
    std::vector<Vec> basis = kernel_basis(beta);
    while (!basis.empty()) {
        SpanBuilder span(V.dim);
        for (const auto &v : basis)
            span.add(v);
        std::vector<Vec> cols(basis.size());
        for (size_t j = 0; j < basis.size(); ++j) {
            Vec stack;
            for (size_t i = 0; i < g.dim; ++i) {
                Vec r = span.reduce(V.action[i].apply(basis[j]));
                stack.insert(stack.end(), r.begin(), r.end());
            }
            cols[j] = std::move(stack);
        }
        auto ker = kernel_basis(Mat::from_cols(cols, g.dim * V.dim));
        if (ker.size() == basis.size())
            break;
        std::vector<Vec> next;
        for (const auto &c : ker) {
            Vec v(V.dim);
            for (size_t j = 0; j < basis.size(); ++j)
                if (!c[j].is_zero())
                    v = v + c[j] * basis[j];
            next.push_back(std::move(v));
        }
        basis = std::move(next);
    }
    return basis.empty();
}

} // namespace rootgrade
