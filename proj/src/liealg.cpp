#include "rootgrade/liealg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rootgrade {

// ---------------------------------------------------------------------------
// CoordinateAlgebra

Vec CoordinateAlgebra::multiply(const Vec &a, const Vec &b) const {
    if (a.size() != dim || b.size() != dim)
        throw std::invalid_argument("CoordinateAlgebra: bad element size");
    Vec r(dim);
    for (size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero())
            continue;
        for (size_t j = 0; j < dim; ++j) {
            if (b[j].is_zero())
                continue;
            Scalar c = a[i] * b[j];
            for (size_t k = 0; k < dim; ++k)
                r[k] += c * mul[i][j][k];
        }
    }
    return r;
}

void CoordinateAlgebra::validate() const {
    if (mul.size() != dim || unit.size() != dim)
        throw std::invalid_argument("CoordinateAlgebra: shape mismatch");
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
            if (mul[i][j].size() != dim)
                throw std::invalid_argument(
                    "CoordinateAlgebra: structure tensor shape");
            if (mul[i][j] != mul[j][i])
                throw std::invalid_argument(
                    "CoordinateAlgebra: not commutative at pair (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
        }
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j)
            for (size_t k = 0; k < dim; ++k) {
                Vec lhs = multiply(multiply(unit_vec(dim, i), unit_vec(dim, j)),
                                   unit_vec(dim, k));
                Vec rhs = multiply(unit_vec(dim, i),
                                   multiply(unit_vec(dim, j), unit_vec(dim, k)));
                if (!(lhs == rhs))
                    throw std::invalid_argument(
                        "CoordinateAlgebra: not associative at (" +
                        std::to_string(i) + "," + std::to_string(j) + "," +
                        std::to_string(k) + ")");
            }
    for (size_t i = 0; i < dim; ++i)
        if (!(multiply(unit, unit_vec(dim, i)) == unit_vec(dim, i)))
            throw std::invalid_argument("CoordinateAlgebra: unit law fails at " +
                                        std::to_string(i));
}

CoordinateAlgebra CoordinateAlgebra::with_unit_first() const {
    // basis change: b_0 = unit, completed greedily by standard vectors
    std::vector<Vec> basis{unit};
    SpanBuilder sb(dim);
    sb.add(unit);
    for (size_t i = 0; i < dim && basis.size() < dim; ++i)
        if (sb.add(unit_vec(dim, i)))
            basis.push_back(unit_vec(dim, i));
    CoordinateMap cm(basis, dim);
    CoordinateAlgebra out;
    out.dim = dim;
    out.unit = unit_vec(dim, 0);
    out.mul.assign(dim, std::vector<Vec>(dim));
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
            Vec prod = multiply(basis[i], basis[j]);
            auto c = cm.coords(prod);
            if (!c)
                throw std::logic_error("with_unit_first: coordinate failure");
            out.mul[i][j] = *c;
        }
    return out;
}

CoordinateAlgebra CoordinateAlgebra::rationals() {
    CoordinateAlgebra a;
    a.dim = 1;
    a.mul = {{Vec{Scalar(1)}}};
    a.unit = Vec{Scalar(1)};
    return a;
}

CoordinateAlgebra CoordinateAlgebra::dual_numbers() { return truncated(2); }

CoordinateAlgebra CoordinateAlgebra::truncated(size_t k) {
    CoordinateAlgebra a;
    a.dim = k;
    a.mul.assign(k, std::vector<Vec>(k, Vec(k)));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            if (i + j < k)
                a.mul[i][j][i + j] = Scalar(1);
    a.unit = unit_vec(k, 0);
    return a;
}

CoordinateAlgebra CoordinateAlgebra::split_pair() {
    CoordinateAlgebra a;
    a.dim = 2;
    a.mul.assign(2, std::vector<Vec>(2, Vec(2)));
    a.mul[0][0][0] = Scalar(1);
    a.mul[1][1][1] = Scalar(1);
    a.unit = Vec{Scalar(1), Scalar(1)};
    return a;
}

// ---------------------------------------------------------------------------
// GradedLieAlgebra basics

Vec GradedLieAlgebra::bracket(const Vec &x, const Vec &y) const {
    if (x.size() != dim || y.size() != dim)
        throw std::invalid_argument("bracket: bad element size");
    Vec r(dim);
    for (size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero())
            continue;
        for (size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero())
                continue;
            Scalar c = x[i] * y[j];
            const Vec &t = table[i][j];
            for (size_t k = 0; k < dim; ++k)
                if (!t[k].is_zero())
                    r[k] += c * t[k];
        }
    }
    return r;
}

Mat GradedLieAlgebra::ad(const Vec &x) const {
    Mat m(dim, dim);
    for (size_t j = 0; j < dim; ++j) {
        Vec col = bracket(x, unit_vec(dim, j));
        for (size_t i = 0; i < dim; ++i)
            m.at(i, j) = col[i];
    }
    return m;
}

std::vector<size_t> GradedLieAlgebra::indices_of_weight(const Weight &w) const {
    std::vector<size_t> out;
    for (size_t i = 0; i < dim; ++i)
        if (weights[i] == w)
            out.push_back(i);
    return out;
}

std::vector<Vec> basis_vectors(const GradedLieAlgebra &g,
                               const std::vector<size_t> &indices) {
    std::vector<Vec> out;
    for (size_t i : indices)
        out.push_back(unit_vec(g.dim, i));
    return out;
}

// ---------------------------------------------------------------------------
// Chevalley construction from the minimal matrix realization

namespace {

Vec flatten(const Mat &m) {
    Vec v(m.rows() * m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            v[i * m.cols() + j] = m.at(i, j);
    return v;
}

Mat unflatten(const Vec &v, size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m.at(i, j) = v[i * n + j];
    return m;
}

Mat commutator(const Mat &a, const Mat &b) { return a * b - b * a; }

// scale so the first nonzero coordinate is 1
Vec normalize_lead(const Vec &v) {
    for (const auto &x : v)
        if (!x.is_zero())
            return x.inverse() * v;
    return v;
}

struct MatrixRealization {
    size_t n = 0;                  // matrix size
    std::vector<Mat> space_basis;  // basis of the matrix Lie algebra
    std::vector<Mat> coroot_mats;  // simple coroots
};

MatrixRealization realize_classical(Family fam, size_t r) {
    MatrixRealization mr;
    size_t n;
    switch (fam) {
    case Family::A:
        n = r + 1;
        break;
    case Family::B:
        n = 2 * r + 1;
        break;
    case Family::C:
        n = 2 * r;
        break;
    case Family::D:
        n = 2 * r;
        break;
    }
    mr.n = n;

    if (fam == Family::A) {
        // sl_n: trace zero
        Mat constraint(1, n * n);
        for (size_t i = 0; i < n; ++i)
            constraint.at(0, i * n + i) = Scalar(1);
        for (const auto &k : kernel_basis(constraint))
            mr.space_basis.push_back(unflatten(k, n));
    } else {
        // X^T J + J X = 0 with J antidiagonal (signed for sp)
        Mat J(n, n);
        for (size_t i = 0; i < n; ++i) {
            long s = 1;
            if (fam == Family::C && i >= r)
                s = -1;
            J.at(i, n - 1 - i) = Scalar(s);
        }
        Mat constraint(n * n, n * n);
        for (size_t p = 0; p < n; ++p)
            for (size_t q = 0; q < n; ++q) {
                Mat E(n, n);
                E.at(p, q) = Scalar(1);
                Mat img = E.transpose() * J + J * E;
                Vec f = flatten(img);
                for (size_t row = 0; row < n * n; ++row)
                    constraint.at(row, p * n + q) = f[row];
            }
        for (const auto &k : kernel_basis(constraint))
            mr.space_basis.push_back(unflatten(k, n));
    }

    // diagonal Cartan elements H_{eps_i} in the J-antidiagonal realization
    auto H = [&](size_t i) {
        Mat m(n, n);
        m.at(i, i) = Scalar(1);
        m.at(n - 1 - i, n - 1 - i) = Scalar(-1);
        return m;
    };
    switch (fam) {
    case Family::A:
        for (size_t i = 0; i + 1 < n; ++i) {
            Mat m(n, n);
            m.at(i, i) = Scalar(1);
            m.at(i + 1, i + 1) = Scalar(-1);
            mr.coroot_mats.push_back(m);
        }
        break;
    case Family::B:
        for (size_t i = 0; i + 1 < r; ++i)
            mr.coroot_mats.push_back(H(i) - H(i + 1));
        mr.coroot_mats.push_back(H(r - 1) + H(r - 1)); // 2 H_{eps_r}
        break;
    case Family::C:
        for (size_t i = 0; i + 1 < r; ++i)
            mr.coroot_mats.push_back(H(i) - H(i + 1));
        mr.coroot_mats.push_back(H(r - 1));
        break;
    case Family::D:
        for (size_t i = 0; i + 1 < r; ++i)
            mr.coroot_mats.push_back(H(i) - H(i + 1));
        mr.coroot_mats.push_back(H(r - 2) + H(r - 1));
        break;
    }
    return mr;
}

} // namespace

GradedLieAlgebra build_chevalley(const RootSystem &rs) {
    MatrixRealization mr = realize_classical(rs.family, rs.rank);
    size_t n = mr.n;
    size_t algdim = mr.space_basis.size();
    if (algdim != rs.rank + rs.roots.size())
        throw std::logic_error("matrix realization has unexpected dimension");

    std::vector<Vec> flat_basis;
    for (const auto &m : mr.space_basis)
        flat_basis.push_back(flatten(m));
    CoordinateMap space_cm(flat_basis, n * n);

    // ad(h_i) in space coordinates
    std::vector<Mat> ad_h;
    for (size_t i = 0; i < rs.rank; ++i) {
        Mat op(algdim, algdim);
        for (size_t j = 0; j < algdim; ++j) {
            Vec img = flatten(commutator(mr.coroot_mats[i], mr.space_basis[j]));
            auto c = space_cm.coords(img);
            if (!c)
                throw std::logic_error("ad(h) leaves the matrix algebra");
            for (size_t k = 0; k < algdim; ++k)
                op.at(k, j) = (*c)[k];
        }
        ad_h.push_back(op);
    }

    // one root vector per root, by joint eigenspace
    std::map<Weight, Mat> root_vec;
    for (const auto &alpha : rs.roots) {
        std::vector<Vec> rows;
        for (size_t i = 0; i < rs.rank; ++i) {
            Mat shifted = ad_h[i];
            for (size_t d = 0; d < algdim; ++d)
                shifted.at(d, d) -= Scalar(alpha[i]);
            for (size_t row = 0; row < algdim; ++row)
                rows.push_back(shifted.row(row));
        }
        auto ker = kernel_basis(Mat::from_rows(rows, algdim));
        if (ker.size() != 1)
            throw std::logic_error("root space of unexpected dimension " +
                                   std::to_string(ker.size()));
        Vec coeffs = normalize_lead(ker[0]);
        Mat X(n, n);
        for (size_t j = 0; j < algdim; ++j)
            if (!coeffs[j].is_zero())
                X = X + unflatten(coeffs[j] * flat_basis[j], n);
        root_vec[alpha] = X;
    }

    // rescale the negative simple vectors so that [e_i, f_i] = h_i
    for (size_t i = 0; i < rs.rank; ++i) {
        const Weight &alpha = rs.simple_roots[i];
        Mat &e = root_vec[alpha];
        Mat &f = root_vec[negate(alpha)];
        Mat h = commutator(e, f);
        // h = c * coroot_mat; read c off a nonzero entry of the coroot
        Scalar c;
        bool found = false;
        for (size_t a = 0; a < n && !found; ++a)
            if (!mr.coroot_mats[i].at(a, a).is_zero()) {
                c = h.at(a, a) / mr.coroot_mats[i].at(a, a);
                found = true;
            }
        if (!found || c.is_zero())
            throw std::logic_error("degenerate simple root pair");
        Scalar inv = c.inverse();
        Mat scaled(n, n);
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b)
                scaled.at(a, b) = inv * f.at(a, b);
        f = scaled;
        if (!(commutator(e, f) == mr.coroot_mats[i]))
            throw std::logic_error("coroot normalization failed");
    }

    GradedLieAlgebra g;
    g.delta = rs;
    g.is_chevalley = true;
    g.dim = algdim;
    for (size_t i = 0; i < rs.rank; ++i) {
        g.rep_matrices.push_back(mr.coroot_mats[i]);
        g.labels.push_back("h" + std::to_string(i + 1));
        g.weights.push_back(Weight(rs.rank, Rational(0)));
        g.coroots.push_back(unit_vec(algdim, i));
    }
    for (size_t k = 0; k < rs.roots.size(); ++k) {
        const Weight &alpha = rs.roots[k];
        g.rep_matrices.push_back(root_vec[alpha]);
        g.labels.push_back("x[" + weight_key(alpha) + "]");
        g.weights.push_back(alpha);
        g.gdelta_root_vectors[alpha] = unit_vec(algdim, rs.rank + k);
        g.R.push_back(alpha);
    }
    for (size_t i = 0; i < rs.rank; ++i) {
        auto pos = std::find(rs.roots.begin(), rs.roots.end(), rs.simple_roots[i]);
        auto neg = std::find(rs.roots.begin(), rs.roots.end(),
                             negate(rs.simple_roots[i]));
        g.chev_e.push_back(
            unit_vec(algdim, rs.rank + (pos - rs.roots.begin())));
        g.chev_f.push_back(
            unit_vec(algdim, rs.rank + (neg - rs.roots.begin())));
    }

    // bracket table in the chosen basis
    std::vector<Vec> flat_new;
    for (const auto &m : g.rep_matrices)
        flat_new.push_back(flatten(m));
    CoordinateMap cm(flat_new, n * n);
    g.table.assign(algdim, std::vector<Vec>(algdim));
    for (size_t i = 0; i < algdim; ++i)
        for (size_t j = 0; j < algdim; ++j) {
            Vec img = flatten(commutator(g.rep_matrices[i], g.rep_matrices[j]));
            auto c = cm.coords(img);
            if (!c)
                throw std::logic_error("bracket fell outside the algebra");
            g.table[i][j] = *c;
        }
    return g;
}

// ---------------------------------------------------------------------------
// Tensor algebra A (x) g_Delta

GradedLieAlgebra build_tensor(const CoordinateAlgebra &A_in,
                              const GradedLieAlgebra &gd) {
    if (!gd.is_chevalley)
        throw std::invalid_argument("build_tensor needs a Chevalley factor");
    A_in.validate();
    CoordinateAlgebra A = A_in.with_unit_first();
    size_t d = A.dim, m = gd.dim;

    GradedLieAlgebra g;
    g.delta = gd.delta;
    g.is_chevalley = (d == 1);
    g.dim = d * m;
    auto idx = [m](size_t k, size_t j) { return k * m + j; };

    for (size_t k = 0; k < d; ++k)
        for (size_t j = 0; j < m; ++j) {
            g.labels.push_back("a" + std::to_string(k) + "*" + gd.labels[j]);
            g.weights.push_back(gd.weights[j]);
        }
    g.R = gd.R;

    g.table.assign(g.dim, std::vector<Vec>(g.dim, Vec(g.dim)));
    for (size_t k = 0; k < d; ++k)
        for (size_t j = 0; j < m; ++j)
            for (size_t l = 0; l < d; ++l)
                for (size_t s = 0; s < m; ++s) {
                    Vec &out = g.table[idx(k, j)][idx(l, s)];
                    const Vec &prod = A.mul[k][l];
                    const Vec &br = gd.table[j][s];
                    for (size_t t = 0; t < d; ++t) {
                        if (prod[t].is_zero())
                            continue;
                        for (size_t u = 0; u < m; ++u)
                            if (!br[u].is_zero())
                                out[idx(t, u)] += prod[t] * br[u];
                    }
                }

    auto embed = [&](const Vec &v) {
        Vec out(g.dim);
        for (size_t j = 0; j < m; ++j)
            out[idx(0, j)] = v[j]; // basis 0 of A is the unit
        return out;
    };
    for (const auto &v : gd.coroots)
        g.coroots.push_back(embed(v));
    for (const auto &v : gd.chev_e)
        g.chev_e.push_back(embed(v));
    for (const auto &v : gd.chev_f)
        g.chev_f.push_back(embed(v));
    for (const auto &[alpha, v] : gd.gdelta_root_vectors)
        g.gdelta_root_vectors[alpha] = embed(v);
    return g;
}

// ---------------------------------------------------------------------------
// gl_n(A)

GradedLieAlgebra build_gln(const CoordinateAlgebra &A_in, size_t n,
                           const RootSystemConfig &cfg) {
    if (n < 2)
        throw std::invalid_argument("build_gln needs n >= 2");
    A_in.validate();
    CoordinateAlgebra A = A_in.with_unit_first();
    size_t d = A.dim;
    size_t r = n - 1;

    GradedLieAlgebra g;
    g.delta = build_root_system(Family::A, r, cfg);
    g.dim = d * n * n;
    auto idx = [n](size_t k, size_t i, size_t j) {
        return k * n * n + i * n + j;
    };

    for (size_t k = 0; k < d; ++k)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                g.labels.push_back("a" + std::to_string(k) + "*E" +
                                   std::to_string(i + 1) + std::to_string(j + 1));
                Weight w(r, Rational(0));
                for (size_t t = 0; t < r; ++t) {
                    long c = 0;
                    if (t == i)
                        c += 1;
                    if (t + 1 == i)
                        c -= 1;
                    if (t == j)
                        c -= 1;
                    if (t + 1 == j)
                        c += 1;
                    w[t] = c;
                }
                g.weights.push_back(w);
            }
    {
        std::set<Weight> rset;
        for (const auto &w : g.weights)
            if (!is_zero_weight(w))
                rset.insert(w);
        g.R.assign(rset.begin(), rset.end());
    }

    g.table.assign(g.dim, std::vector<Vec>(g.dim, Vec(g.dim)));
    for (size_t k = 0; k < d; ++k)
        for (size_t l = 0; l < d; ++l) {
            const Vec &prod = A.mul[k][l];
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    for (size_t p = 0; p < n; ++p)
                        for (size_t q = 0; q < n; ++q) {
                            Vec &out = g.table[idx(k, i, j)][idx(l, p, q)];
                            for (size_t t = 0; t < d; ++t) {
                                if (prod[t].is_zero())
                                    continue;
                                if (j == p)
                                    out[idx(t, i, q)] += prod[t];
                                if (q == i)
                                    out[idx(t, p, j)] -= prod[t];
                            }
                        }
        }

    for (size_t t = 0; t < r; ++t) {
        Vec h(g.dim);
        h[idx(0, t, t)] = Scalar(1);
        h[idx(0, t + 1, t + 1)] = Scalar(-1);
        g.coroots.push_back(h);
        Vec e(g.dim), f(g.dim);
        e[idx(0, t, t + 1)] = Scalar(1);
        f[idx(0, t + 1, t)] = Scalar(1);
        g.chev_e.push_back(e);
        g.chev_f.push_back(f);
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            g.gdelta_root_vectors[g.weights[idx(0, i, j)]] =
                unit_vec(g.dim, idx(0, i, j));
        }
    return g;
}

// ---------------------------------------------------------------------------
// Abelian extension V x| g

GradedLieAlgebra build_abelian_extension(const GradedLieAlgebra &gd,
                                         const GModule &V) {
    V.validate(gd); // exact module or a descriptive failure

    GradedLieAlgebra g;
    g.delta = gd.delta;
    g.is_chevalley = false;
    size_t m = V.dim, d = gd.dim;
    g.dim = m + d;
    for (size_t i = 0; i < m; ++i) {
        g.labels.push_back("v" + std::to_string(i + 1));
        g.weights.push_back(V.weights[i]);
    }
    for (size_t i = 0; i < d; ++i) {
        g.labels.push_back(gd.labels[i]);
        g.weights.push_back(gd.weights[i]);
    }
    {
        std::set<Weight> rset;
        for (const auto &w : g.weights)
            if (!is_zero_weight(w))
                rset.insert(w);
        for (const auto &w : rset)
            if (!rset.count(negate(w)))
                throw std::invalid_argument(
                    "abelian extension: merged weight set not symmetric "
                    "(weight " + weight_key(w) + " lacks its negative)");
        g.R.assign(rset.begin(), rset.end());
    }

    g.table.assign(g.dim, std::vector<Vec>(g.dim, Vec(g.dim)));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            const Vec &br = gd.table[i][j];
            for (size_t k = 0; k < d; ++k)
                g.table[m + i][m + j][m + k] = br[k];
        }
    for (size_t i = 0; i < d; ++i)
        for (size_t v = 0; v < m; ++v) {
            Vec img = V.action[i].col(v);
            for (size_t w = 0; w < m; ++w) {
                g.table[m + i][v][w] = img[w];
                g.table[v][m + i][w] = -img[w];
            }
        }

    auto lift = [m, d](const Vec &x) {
        Vec out(m + d);
        for (size_t i = 0; i < d; ++i)
            out[m + i] = x[i];
        return out;
    };
    for (const auto &v : gd.coroots)
        g.coroots.push_back(lift(v));
    for (const auto &v : gd.chev_e)
        g.chev_e.push_back(lift(v));
    for (const auto &v : gd.chev_f)
        g.chev_f.push_back(lift(v));
    for (const auto &[alpha, v] : gd.gdelta_root_vectors)
        g.gdelta_root_vectors[alpha] = lift(v);
    return g;
}

// ---------------------------------------------------------------------------
// Parabolic decomposition

namespace {

size_t nilpotency_degree(const GradedLieAlgebra &g,
                         const std::vector<size_t> &part) {
    if (part.empty())
        return 1; // zero subalgebra: 1-fold "brackets" (the elements) vanish
    std::vector<Vec> layer = basis_vectors(g, part);
    size_t k = 1;
    while (!layer.empty()) {
        ++k;
        SpanBuilder sb(g.dim);
        std::vector<Vec> next;
        for (size_t i : part)
            for (const auto &y : layer) {
                Vec b = g.bracket(unit_vec(g.dim, i), y);
                if (!is_zero(b) && sb.add(b))
                    next.push_back(b);
            }
        layer = std::move(next);
        if (k > g.dim + 2)
            throw std::logic_error("subalgebra is not nilpotent");
    }
    return k;
}

} // namespace

ParabolicSubalgebra parabolic_subalgebra(const GradedLieAlgebra &g,
                                         const CartanElement &x) {
    ParabolicSubalgebra par;
    par.system = parabolic_system(g.R, x);
    const CartanElement &xs = par.system.x_sigma;
    for (size_t i = 0; i < g.dim; ++i) {
        Rational v = eval(g.weights[i], x);
        if (v > 0)
            par.u_indices.push_back(i);
        else if (v == 0)
            par.l_indices.push_back(i);
        else
            par.n_indices.push_back(i);
    }
    auto by_height = [&](bool flip) {
        return [&, flip](size_t a, size_t b) {
            Rational ea = eval(g.weights[a], xs), eb = eval(g.weights[b], xs);
            if (flip) {
                ea = -ea;
                eb = -eb;
            }
            if (ea != eb)
                return ea < eb;
            return a < b;
        };
    };
    std::sort(par.n_indices.begin(), par.n_indices.end(), by_height(true));
    std::sort(par.u_indices.begin(), par.u_indices.end(), by_height(false));
    par.p_indices = par.l_indices;
    par.p_indices.insert(par.p_indices.end(), par.u_indices.begin(),
                         par.u_indices.end());
    par.k_u = nilpotency_degree(g, par.u_indices);
    par.k_n = nilpotency_degree(g, par.n_indices);
    return par;
}

std::vector<Vec> normalizer(const GradedLieAlgebra &g,
                            const std::vector<Vec> &subspace) {
    SpanBuilder sub(g.dim);
    std::vector<Vec> span;
    for (const auto &v : subspace)
        if (sub.add(v))
            span.push_back(v);
    std::vector<Vec> rows;
    for (const auto &e : span) {
        // constraint: [x, e] reduces to 0 mod the subspace
        std::vector<Vec> cols;
        for (size_t i = 0; i < g.dim; ++i)
            cols.push_back(sub.reduce(g.bracket(unit_vec(g.dim, i), e)));
        Mat m = Mat::from_cols(cols, g.dim);
        for (size_t r = 0; r < g.dim; ++r)
            rows.push_back(m.row(r));
    }
    if (rows.empty())
        return basis_vectors(
            g, [&] {
                std::vector<size_t> all(g.dim);
                std::iota(all.begin(), all.end(), 0);
                return all;
            }());
    return kernel_basis(Mat::from_rows(rows, g.dim));
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate(const GradedLieAlgebra &g) {
    ValidationReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.failures.push_back(std::move(msg));
    };

    for (size_t i = 0; i < g.dim && rep.failures.size() < 8; ++i)
        for (size_t j = 0; j < g.dim; ++j) {
            Vec anti = g.table[i][j] + g.table[j][i];
            if (!is_zero(anti)) {
                fail("antisymmetry fails at (" + std::to_string(i) + "," +
                     std::to_string(j) + ")");
                break;
            }
        }

    for (size_t i = 0; i < g.dim && rep.failures.size() < 8; ++i)
        for (size_t j = i + 1; j < g.dim; ++j)
            for (size_t k = j + 1; k < g.dim; ++k) {
                Vec s = g.bracket(unit_vec(g.dim, i), g.table[j][k]) +
                        g.bracket(unit_vec(g.dim, j), g.table[k][i]) +
                        g.bracket(unit_vec(g.dim, k), g.table[i][j]);
                if (!is_zero(s)) {
                    fail("Jacobi fails at triple (" + std::to_string(i) + "," +
                         std::to_string(j) + "," + std::to_string(k) + ")");
                    j = k = g.dim; // one witness per scan is enough
                }
            }

    for (size_t hi = 0; hi < g.coroots.size(); ++hi)
        for (size_t j = 0; j < g.dim; ++j) {
            Vec img = g.bracket(g.coroots[hi], unit_vec(g.dim, j));
            Vec expect = Scalar(g.weights[j][hi]) * unit_vec(g.dim, j);
            if (!(img == expect)) {
                fail("basis vector " + std::to_string(j) +
                     " is not an h-weight vector for coroot " +
                     std::to_string(hi));
                break;
            }
        }

    for (const auto &w : g.R)
        for (const auto &c : w)
            if (c.get_den() != 1) {
                fail("weight " + weight_key(w) + " is not coroot-integral");
                break;
            }

    // Chevalley relations of the embedded grading subalgebra
    size_t r = g.delta.rank;
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            Vec ef = g.bracket(g.chev_e[i], g.chev_f[j]);
            Vec expect = (i == j) ? g.coroots[i] : Vec(g.dim);
            if (!(ef == expect))
                fail("[e_" + std::to_string(i) + ", f_" + std::to_string(j) +
                     "] violates the Chevalley relation");
            Vec he = g.bracket(g.coroots[i], g.chev_e[j]);
            if (!(he == Scalar(Rational(g.delta.cartan[i][j])) * g.chev_e[j]))
                fail("[h_" + std::to_string(i) + ", e_" + std::to_string(j) +
                     "] violates the Cartan pairing");
        }

    // graded vs weakly graded: does sum [g_a, g_-a] span g_0?
    if (rep.ok) {
        bool r_is_delta = true;
        std::set<Weight> delta_set(g.delta.roots.begin(), g.delta.roots.end());
        for (const auto &w : g.R)
            if (!delta_set.count(w))
                r_is_delta = false;
        SpanBuilder span0(g.dim);
        for (const auto &alpha : g.delta.roots) {
            auto pos = g.indices_of_weight(alpha);
            auto neg = g.indices_of_weight(negate(alpha));
            for (size_t i : pos)
                for (size_t j : neg)
                    span0.add(g.table[i][j]);
        }
        size_t dim_g0 = g.indices_of_weight(Weight(r, Rational(0))).size();
        rep.graded = r_is_delta && span0.size() == dim_g0;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Modules

Mat GModule::act_of(const Vec &x) const {
    Mat m(dim, dim);
    for (size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero())
            for (size_t a = 0; a < dim; ++a)
                for (size_t b = 0; b < dim; ++b)
                    m.at(a, b) += x[i] * action[i].at(a, b);
    return m;
}

void GModule::validate(const GradedLieAlgebra &g) const {
    if (action.size() != g.dim || weights.size() != dim)
        throw std::invalid_argument("GModule: shape mismatch");
    for (size_t i = 0; i < g.dim; ++i)
        for (size_t j = 0; j < g.dim; ++j) {
            Mat lhs = act_of(g.table[i][j]);
            Mat rhs = action[i] * action[j] - action[j] * action[i];
            if (!(lhs == rhs))
                throw std::invalid_argument(
                    "representation axiom fails on basis pair (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
        }
    for (size_t hi = 0; hi < g.coroots.size(); ++hi) {
        Mat h = act_of(g.coroots[hi]);
        for (size_t a = 0; a < dim; ++a)
            for (size_t b = 0; b < dim; ++b) {
                Scalar expect =
                    (a == b) ? Scalar(weights[a][hi]) : Scalar(0);
                if (!(h.at(a, b) == expect))
                    throw std::invalid_argument(
                        "coroot " + std::to_string(hi) +
                        " does not act diagonally with the declared weights");
            }
    }
}

GModule standard_module(const GradedLieAlgebra &g) {
    if (!g.is_chevalley)
        throw std::invalid_argument(
            "standard_module needs a matrix-realized Chevalley algebra");
    size_t n = g.rep_matrices[0].rows();
    GModule v;
    v.dim = n;
    v.action = g.rep_matrices;
    for (size_t a = 0; a < n; ++a) {
        Weight w(g.delta.rank);
        for (size_t i = 0; i < g.delta.rank; ++i) {
            Scalar d = g.rep_matrices[i].at(a, a);
            if (!d.is_real())
                throw std::logic_error("non-real Cartan diagonal");
            w[i] = d.re;
        }
        v.weights.push_back(w);
    }
    return v;
}

GModule adjoint_module(const GradedLieAlgebra &g) {
    GModule v;
    v.dim = g.dim;
    v.weights = g.weights;
    for (size_t i = 0; i < g.dim; ++i)
        v.action.push_back(g.ad(unit_vec(g.dim, i)));
    return v;
}

GModule direct_sum(const GModule &a, const GModule &b) {
    GModule v;
    v.dim = a.dim + b.dim;
    v.weights = a.weights;
    v.weights.insert(v.weights.end(), b.weights.begin(), b.weights.end());
    for (size_t i = 0; i < a.action.size(); ++i) {
        Mat m(v.dim, v.dim);
        for (size_t p = 0; p < a.dim; ++p)
            for (size_t q = 0; q < a.dim; ++q)
                m.at(p, q) = a.action[i].at(p, q);
        for (size_t p = 0; p < b.dim; ++p)
            for (size_t q = 0; q < b.dim; ++q)
                m.at(a.dim + p, a.dim + q) = b.action[i].at(p, q);
        v.action.push_back(m);
    }
    return v;
}

namespace {

GModule tensor_product(const GModule &a, const GModule &b) {
    GModule v;
    v.dim = a.dim * b.dim;
    for (size_t p = 0; p < a.dim; ++p)
        for (size_t q = 0; q < b.dim; ++q)
            v.weights.push_back(add(a.weights[p], b.weights[q]));
    for (size_t i = 0; i < a.action.size(); ++i) {
        Mat m(v.dim, v.dim);
        for (size_t p = 0; p < a.dim; ++p)
            for (size_t q = 0; q < b.dim; ++q) {
                size_t col = p * b.dim + q;
                for (size_t p2 = 0; p2 < a.dim; ++p2)
                    if (!a.action[i].at(p2, p).is_zero())
                        m.at(p2 * b.dim + q, col) += a.action[i].at(p2, p);
                for (size_t q2 = 0; q2 < b.dim; ++q2)
                    if (!b.action[i].at(q2, q).is_zero())
                        m.at(p * b.dim + q2, col) += b.action[i].at(q2, q);
            }
        v.action.push_back(m);
    }
    return v;
}

// orbit closure of a weight-homogeneous start vector; basis stays
// weight-homogeneous throughout
GModule generated_submodule(const GModule &ambient, const Vec &v0,
                            const std::vector<Weight> &start_weight_of,
                            const std::vector<Weight> &op_weights) {
    SpanBuilder sb(ambient.dim);
    std::vector<Vec> basis;
    std::vector<Weight> wts;
    if (sb.add(v0)) {
        basis.push_back(v0);
        wts.push_back(start_weight_of[0]);
    }
    for (size_t head = 0; head < basis.size(); ++head)
        for (size_t i = 0; i < ambient.action.size(); ++i) {
            Vec img = ambient.action[i].apply(basis[head]);
            if (!is_zero(img) && sb.add(img)) {
                basis.push_back(img);
                wts.push_back(add(wts[head], op_weights[i]));
            }
        }
    CoordinateMap cm(basis, ambient.dim);
    GModule v;
    v.dim = basis.size();
    v.weights = wts;
    for (size_t i = 0; i < ambient.action.size(); ++i) {
        Mat m(v.dim, v.dim);
        for (size_t c = 0; c < v.dim; ++c) {
            auto co = cm.coords(ambient.action[i].apply(basis[c]));
            if (!co)
                throw std::logic_error("orbit closure not invariant");
            for (size_t rrow = 0; rrow < v.dim; ++rrow)
                m.at(rrow, c) = (*co)[rrow];
        }
        v.action.push_back(m);
    }
    return v;
}

} // namespace

GModule highest_weight_module(const GradedLieAlgebra &g, const Weight &lambda) {
    if (!g.is_chevalley || g.delta.family != Family::A)
        throw std::invalid_argument(
            "highest_weight_module: implemented for type-A Chevalley algebras");
    if (lambda.size() != g.delta.rank)
        throw std::invalid_argument("highest_weight_module: rank mismatch");

    GModule std_mod = standard_module(g);
    size_t n = std_mod.dim;

    // fundamental module F_k = wedge^k(standard) inside standard^{(x)k},
    // generated from the antisymmetrization of e_1..e_k
    auto fundamental = [&](size_t k) {
        GModule amb = std_mod;
        for (size_t t = 1; t < k; ++t)
            amb = tensor_product(amb, std_mod);
        // antisymmetrized top vector over indices 0..k-1
        std::vector<size_t> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        Vec v0(amb.dim);
        Weight w0(g.delta.rank, Rational(0));
        for (size_t t = 0; t < k; ++t)
            w0 = add(w0, std_mod.weights[t]);
        do {
            long sign = 1;
            for (size_t a = 0; a < k; ++a)
                for (size_t b = a + 1; b < k; ++b)
                    if (perm[a] > perm[b])
                        sign = -sign;
            size_t pos = 0;
            for (size_t t = 0; t < k; ++t)
                pos = pos * n + perm[t];
            v0[pos] += Scalar(sign);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return generated_submodule(amb, v0, {w0}, g.weights);
    };

    GModule acc;
    bool have = false;
    for (size_t k = 1; k <= g.delta.rank; ++k) {
        long mult = lambda[k - 1].get_num().get_si();
        for (long t = 0; t < mult; ++t) {
            GModule f = fundamental(k);
            acc = have ? tensor_product(acc, f) : f;
            have = true;
        }
    }
    if (!have) { // trivial module
        GModule v;
        v.dim = 1;
        v.weights = {Weight(g.delta.rank, Rational(0))};
        for (size_t i = 0; i < g.dim; ++i)
            v.action.push_back(Mat(1, 1));
        return v;
    }
    // the product of the top vectors sits at tensor index 0 of each factor
    Vec v0 = unit_vec(acc.dim, 0);
    return generated_submodule(acc, v0, {acc.weights[0]}, g.weights);
}

} // namespace rootgrade
