#include "rootgrade/rootsys.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rootgrade {

Rational eval(const Weight &mu, const CartanElement &x) {
    if (mu.size() != x.size())
        throw std::invalid_argument("eval: rank mismatch");
    Rational s = 0;
    for (size_t i = 0; i < mu.size(); ++i)
        s += mu[i] * x[i];
    return s;
}

Weight add(const Weight &a, const Weight &b) {
    if (a.size() != b.size())
        throw std::invalid_argument("weight add: rank mismatch");
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

Weight sub(const Weight &a, const Weight &b) {
    if (a.size() != b.size())
        throw std::invalid_argument("weight sub: rank mismatch");
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

Weight negate(const Weight &a) {
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

bool is_zero_weight(const Weight &w) {
    return std::all_of(w.begin(), w.end(),
                       [](const Rational &c) { return c == 0; });
}

std::string weight_key(const Weight &w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ',';
        s += w[i].get_str();
    }
    return s;
}

Family parse_family(const std::string &s) {
    if (s == "A")
        return Family::A;
    if (s == "B")
        return Family::B;
    if (s == "C")
        return Family::C;
    if (s == "D")
        return Family::D;
    throw std::invalid_argument("unsupported root system family: '" + s +
                                "' (expected A, B, C or D)");
}

std::string family_name(Family f) {
    switch (f) {
    case Family::A:
        return "A";
    case Family::B:
        return "B";
    case Family::C:
        return "C";
    case Family::D:
        return "D";
    }
    return "?";
}

namespace {

std::vector<std::vector<long>> cartan_matrix(Family f, size_t r) {
    std::vector<std::vector<long>> a(r, std::vector<long>(r, 0));
    for (size_t i = 0; i < r; ++i)
        a[i][i] = 2;
    auto chain = [&](size_t upto) {
        for (size_t i = 0; i + 1 < upto; ++i) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    };
    switch (f) {
    case Family::A:
        chain(r);
        break;
    case Family::B:
        chain(r);
        a[r - 1][r - 2] = -2; // alpha_{r-1} is long on the short coroot
        break;
    case Family::C:
        chain(r);
        a[r - 2][r - 1] = -2;
        break;
    case Family::D:
        chain(r - 1);
        a[r - 3][r - 1] = -1;
        a[r - 1][r - 3] = -1;
        break;
    }
    return a;
}

size_t classical_root_count(Family f, size_t r) {
    switch (f) {
    case Family::A:
        return r * (r + 1);
    case Family::B:
    case Family::C:
        return 2 * r * r;
    case Family::D:
        return 2 * r * (r - 1);
    }
    return 0;
}

} // namespace

bool RootSystem::is_root(const Weight &w) const {
    return std::find(roots.begin(), roots.end(), w) != roots.end();
}

RootSystem build_root_system(Family family, size_t rank,
                             const RootSystemConfig &cfg) {
    size_t min_rank = family == Family::A   ? 1
                      : family == Family::D ? 3
                                            : 2;
    if (rank < min_rank)
        throw std::invalid_argument("family " + family_name(family) +
                                    " needs rank >= " +
                                    std::to_string(min_rank));
    if (rank > cfg.max_rank)
        throw std::invalid_argument(
            "rank " + std::to_string(rank) + " exceeds configured cap " +
            std::to_string(cfg.max_rank));

    RootSystem rs;
    rs.family = family;
    rs.rank = rank;
    rs.cartan = cartan_matrix(family, rank);
    for (size_t j = 0; j < rank; ++j) {
        Weight alpha(rank);
        for (size_t i = 0; i < rank; ++i)
            alpha[i] = rs.cartan[i][j];
        rs.simple_roots.push_back(alpha);
    }

    // reflection closure of the base
    std::set<Weight> closed(rs.simple_roots.begin(), rs.simple_roots.end());
    std::vector<Weight> frontier(rs.simple_roots);
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto &w : frontier) {
            for (size_t i = 0; i < rank; ++i) {
                Weight rw = w;
                Rational c = w[i];
                for (size_t k = 0; k < rank; ++k)
                    rw[k] -= c * rs.simple_roots[i][k];
                if (closed.insert(rw).second)
                    next.push_back(rw);
            }
        }
        frontier = std::move(next);
    }
    rs.roots.assign(closed.begin(), closed.end());

    if (rs.roots.size() != classical_root_count(family, rank))
        throw std::logic_error("root closure produced " +
                               std::to_string(rs.roots.size()) +
                               " roots, expected " +
                               std::to_string(classical_root_count(family, rank)));

    // positivity: expand in the simple basis and look at the sign
    for (const auto &w : rs.roots) {
        Mat A(rank, rank);
        for (size_t i = 0; i < rank; ++i)
            for (size_t j = 0; j < rank; ++j)
                A.at(i, j) = Scalar(Rational(rs.cartan[i][j]));
        Vec f(rank);
        for (size_t i = 0; i < rank; ++i)
            f[i] = Scalar(w[i]);
        auto c = solve(A, f);
        if (!c)
            throw std::logic_error("singular Cartan matrix");
        bool pos = false;
        for (const auto &x : *c)
            if (!x.is_zero()) {
                pos = x.re > 0;
                break;
            }
        if (pos)
            rs.positive_roots.push_back(w);
    }
    return rs;
}

Mat simple_reflection_matrix(const RootSystem &rs, size_t i) {
    size_t r = rs.rank;
    Mat m = Mat::identity(r);
    for (size_t k = 0; k < r; ++k)
        m.at(k, i) -= Scalar(rs.simple_roots[i][k]);
    return m;
}

Weight WeylGroup::apply(size_t element, const Weight &w) const {
    Vec v(w.size());
    for (size_t i = 0; i < w.size(); ++i)
        v[i] = Scalar(w[i]);
    Vec r = elements[element].apply(v);
    Weight out(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
        if (!r[i].is_real())
            throw std::logic_error("Weyl action produced non-real weight");
        out[i] = r[i].re;
    }
    return out;
}

WeylGroup build_weyl_group(const RootSystem &rs, const RootSystemConfig &cfg) {
    WeylGroup w;
    w.rank = rs.rank;
    for (size_t i = 0; i < rs.rank; ++i)
        w.generators.push_back(simple_reflection_matrix(rs, i));

    auto key = [&](const Mat &m) {
        std::string s;
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j)
                s += m.at(i, j).re.get_str() + ",";
        return s;
    };
    std::map<std::string, size_t> seen;
    w.elements.push_back(Mat::identity(rs.rank));
    seen[key(w.elements[0])] = 0;
    for (size_t head = 0; head < w.elements.size(); ++head) {
        for (const auto &gen : w.generators) {
            Mat prod = gen * w.elements[head];
            std::string k = key(prod);
            if (seen.count(k))
                continue;
            if (w.elements.size() >= cfg.max_weyl_order)
                throw std::runtime_error(
                    "Weyl group order exceeds configured cap " +
                    std::to_string(cfg.max_weyl_order));
            seen[k] = w.elements.size();
            w.elements.push_back(prod);
        }
    }
    return w;
}

ParabolicSystem parabolic_system(const std::vector<Weight> &R,
                                 const CartanElement &x) {
    // R must be closed under negation
    std::set<Weight> set(R.begin(), R.end());
    for (const auto &w : R)
        if (!set.count(negate(w)))
            throw std::invalid_argument("ambient weight set not symmetric");

    ParabolicSystem ps;
    ps.x = x;
    Rational min_abs = 0;
    bool any = false;
    for (const auto &w : set) {
        Rational v = eval(w, x);
        if (v > 0)
            ps.sigma_plus.push_back(w);
        else if (v == 0)
            ps.sigma_zero.push_back(w);
        else
            ps.sigma_minus.push_back(w);
        if (v != 0) {
            Rational a = abs(v);
            if (!any || a < min_abs) {
                min_abs = a;
                any = true;
            }
        }
    }
    // Sigma^0 is exactly the kernel of evaluation at x, so rescaling x by
    // the smallest nonzero |evaluation| already separates at margin 1.
    ps.x_sigma = x;
    if (any)
        for (auto &c : ps.x_sigma)
            c /= min_abs;
    return ps;
}

std::set<Weight> cone_set(const std::vector<Weight> &sigma_minus,
                          const CartanElement &x0, unsigned long B) {
    for (const auto &g : sigma_minus)
        if (eval(g, x0) > -1)
            throw std::invalid_argument(
                "cone_set: generator evaluates > -1 at x0");
    std::set<Weight> out;
    Weight zero(x0.size(), Rational(0));
    out.insert(zero);
    std::set<Weight> layer = out;
    for (unsigned long d = 0; d < B; ++d) {
        std::set<Weight> next;
        for (const auto &s : layer)
            for (const auto &g : sigma_minus) {
                Weight t = add(s, g);
                if (!out.count(t))
                    next.insert(t);
            }
        if (next.empty())
            break;
        out.insert(next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

namespace {

bool in_cone_rec(const Weight &w, const std::vector<Weight> &gens,
                 const CartanElement &x0, std::map<Weight, bool> &memo) {
    if (is_zero_weight(w))
        return true;
    if (eval(w, x0) > -1)
        return false; // any nonzero cone element evaluates <= -1
    auto it = memo.find(w);
    if (it != memo.end())
        return it->second;
    memo[w] = false; // cut cycles (cannot occur, but harmless)
    for (const auto &g : gens)
        if (in_cone_rec(sub(w, g), gens, x0, memo)) {
            memo[w] = true;
            return true;
        }
    return false;
}

} // namespace

bool in_cone(const Weight &w, const std::vector<Weight> &sigma_minus,
             const CartanElement &x0) {
    std::map<Weight, bool> memo;
    return in_cone_rec(w, sigma_minus, x0, memo);
}

unsigned long weyl_dim_oracle(const RootSystem &rs, const Weight &lambda) {
    if (lambda.size() != rs.rank)
        throw std::invalid_argument("weyl_dim_oracle: rank mismatch");
    for (const auto &c : lambda)
        if (c < 0 || c.get_den() != 1)
            throw std::invalid_argument(
                "weyl_dim_oracle: lambda must be dominant integral");

    // symmetrizers d_i with d_i a_ij = d_j a_ji, propagated along the diagram
    std::vector<Rational> d(rs.rank, Rational(0));
    d[0] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < rs.rank; ++i)
            for (size_t j = 0; j < rs.rank; ++j) {
                if (i == j || rs.cartan[i][j] == 0)
                    continue;
                if (d[i] != 0 && d[j] == 0) {
                    d[j] = d[i] * rs.cartan[i][j] / rs.cartan[j][i];
                    changed = true;
                }
            }
    }

    Rational prod = 1;
    Mat A(rs.rank, rs.rank);
    for (size_t i = 0; i < rs.rank; ++i)
        for (size_t j = 0; j < rs.rank; ++j)
            A.at(i, j) = Scalar(Rational(rs.cartan[i][j]));
    for (const auto &alpha : rs.positive_roots) {
        Vec f(rs.rank);
        for (size_t i = 0; i < rs.rank; ++i)
            f[i] = Scalar(alpha[i]);
        auto c = solve(A, f);
        if (!c)
            throw std::logic_error("singular Cartan matrix");
        Rational num = 0, den = 0;
        for (size_t j = 0; j < rs.rank; ++j) {
            Rational cj = (*c)[j].re;
            num += cj * d[j] * (lambda[j] + 1);
            den += cj * d[j];
        }
        prod *= num / den;
    }
    if (prod.get_den() != 1 || prod <= 0)
        throw std::logic_error("Weyl dimension formula gave a non-integer");
    return prod.get_num().get_ui();
}

} // namespace rootgrade
