#include "rootgrade/matrix.hpp"

#include <stdexcept>

namespace rootgrade {

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i)
        m.at(i, i) = Scalar(1);
    return m;
}

Mat Mat::from_rows(const std::vector<Vec> &rows, size_t cols) {
    Mat m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("Mat::from_rows: ragged row");
        for (size_t j = 0; j < cols; ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

Mat Mat::from_cols(const std::vector<Vec> &cols, size_t rows) {
    Mat m(rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw std::invalid_argument("Mat::from_cols: ragged column");
        for (size_t i = 0; i < rows; ++i)
            m.at(i, j) = cols[j][i];
    }
    return m;
}

Vec Mat::row(size_t i) const {
    Vec v(cols_);
    for (size_t j = 0; j < cols_; ++j)
        v[j] = at(i, j);
    return v;
}

Vec Mat::col(size_t j) const {
    Vec v(rows_);
    for (size_t i = 0; i < rows_; ++i)
        v[i] = at(i, j);
    return v;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::operator*(const Mat &o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("Mat::operator*: dimension mismatch");
    Mat r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero())
                continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

Mat Mat::operator+(const Mat &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("Mat::operator+: dimension mismatch");
    Mat r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = data_[i] + o.data_[i];
    return r;
}

Mat Mat::operator-(const Mat &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("Mat::operator-: dimension mismatch");
    Mat r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = data_[i] - o.data_[i];
    return r;
}

Vec Mat::apply(const Vec &v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("Mat::apply: dimension mismatch");
    Vec r(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero())
                r[i] += at(i, j) * v[j];
    return r;
}

bool Mat::is_zero() const {
    for (const auto &x : data_)
        if (!x.is_zero())
            return false;
    return true;
}

Vec operator+(const Vec &a, const Vec &b) {
    if (a.size() != b.size())
        throw std::invalid_argument("Vec +: dimension mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec &a, const Vec &b) {
    if (a.size() != b.size())
        throw std::invalid_argument("Vec -: dimension mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

Vec operator*(const Scalar &c, const Vec &v) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        r[i] = c * v[i];
    return r;
}

bool is_zero(const Vec &v) {
    for (const auto &x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Vec zero_vec(size_t n) { return Vec(n); }

Vec unit_vec(size_t n, size_t k) {
    Vec v(n);
    v.at(k) = Scalar(1);
    return v;
}

namespace {

// Gauss-Jordan on a copy; returns (rref rows, pivot columns).
std::pair<std::vector<Vec>, std::vector<size_t>> rref(const Mat &m) {
    std::vector<Vec> rows;
    rows.reserve(m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        rows.push_back(m.row(i));
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
        size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero())
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[r], rows[p]);
        Scalar inv = rows[r][c].inverse();
        for (size_t j = c; j < m.cols(); ++j)
            rows[r][j] *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero())
                continue;
            Scalar f = rows[i][c];
            for (size_t j = c; j < m.cols(); ++j)
                rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return {rows, pivots};
}

} // namespace

size_t rank(const Mat &m) { return rref(m).second.size(); }

std::vector<Vec> kernel_basis(const Mat &m) {
    auto [rows, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots)
        is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vec v(m.cols());
        v[free] = Scalar(1);
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Mat &m, const Vec &b) {
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: dimension mismatch");
    Mat aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    auto [rows, pivots] = rref(aug);
    Vec x(m.cols());
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == m.cols())
            return std::nullopt; // pivot in augmented column
        x[pivots[i]] = rows[i][m.cols()];
    }
    return x;
}

std::vector<Vec>
intersect_subspaces(const std::vector<std::vector<Vec>> &bases) {
    if (bases.empty())
        throw std::invalid_argument("intersect_subspaces: no inputs");
    size_t n = 0;
    bool have_dim = false;
    for (const auto &basis : bases)
        for (const auto &v : basis) {
            if (!have_dim) {
                n = v.size();
                have_dim = true;
            } else if (v.size() != n) {
                throw std::invalid_argument(
                    "intersect_subspaces: mixed vector lengths");
            }
        }
    std::vector<Vec> current = bases[0];
    for (size_t k = 1; k < bases.size(); ++k) {
        const auto &other = bases[k];
        if (current.empty() || other.empty()) {
            current.clear();
            break;
        }
        // columns: current basis then other basis; kernel rows give the
        // coefficient pairs with A x = B y, intersection vectors = A x
        std::vector<Vec> cols = current;
        for (const auto &v : other) {
            Vec neg(v.size());
            for (size_t i = 0; i < v.size(); ++i)
                neg[i] = -v[i];
            cols.push_back(neg);
        }
        Mat m = Mat::from_cols(cols, n);
        std::vector<Vec> next;
        SpanBuilder sb(n);
        for (const auto &ker : kernel_basis(m)) {
            Vec w(n);
            for (size_t j = 0; j < current.size(); ++j)
                if (!ker[j].is_zero())
                    w = w + ker[j] * current[j];
            if (!is_zero(w) && sb.add(w))
                next.push_back(std::move(w));
        }
        current = std::move(next);
    }
    return current;
}

bool SpanBuilder::add(const Vec &v) {
    Vec r = reduce(v);
    size_t lead = dim_;
    for (size_t j = 0; j < dim_; ++j)
        if (!r[j].is_zero()) {
            lead = j;
            break;
        }
    if (lead == dim_)
        return false;
    Scalar inv = r[lead].inverse();
    for (size_t j = lead; j < dim_; ++j)
        r[j] *= inv;
    // back-reduce existing rows
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][lead].is_zero())
            continue;
        Scalar f = rows_[i][lead];
        for (size_t j = 0; j < dim_; ++j)
            rows_[i][j] -= f * r[j];
    }
    rows_.push_back(std::move(r));
    lead_.push_back(lead);
    return true;
}

Vec SpanBuilder::reduce(const Vec &v) const {
    if (v.size() != dim_)
        throw std::invalid_argument("SpanBuilder: dimension mismatch");
    Vec r = v;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (r[lead_[i]].is_zero())
            continue;
        Scalar f = r[lead_[i]];
        for (size_t j = 0; j < dim_; ++j)
            r[j] -= f * rows_[i][j];
    }
    return r;
}

bool SpanBuilder::contains(const Vec &v) const { return is_zero(reduce(v)); }

CoordinateMap::CoordinateMap(const std::vector<Vec> &basis, size_t ambient_dim)
    : ambient_(ambient_dim), basis_(basis) {
    size_t k = basis.size();
    if (k == 0)
        return;
    // rref of [B | I]; the pivot rows of the right block give a left inverse
    Mat aug(ambient_dim, k + ambient_dim);
    for (size_t j = 0; j < k; ++j) {
        if (basis[j].size() != ambient_dim)
            throw std::invalid_argument("CoordinateMap: bad basis vector size");
        for (size_t i = 0; i < ambient_dim; ++i)
            aug.at(i, j) = basis[j][i];
    }
    for (size_t i = 0; i < ambient_dim; ++i)
        aug.at(i, k + i) = Scalar(1);

    // local elimination (cannot reuse rref(): need pivots restricted to B)
    std::vector<Vec> rows;
    for (size_t i = 0; i < ambient_dim; ++i)
        rows.push_back(aug.row(i));
    left_inv_ = Mat(k, ambient_dim);
    size_t r = 0;
    for (size_t c = 0; c < k; ++c) {
        size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero())
            ++p;
        if (p == rows.size())
            throw std::invalid_argument("CoordinateMap: dependent basis");
        std::swap(rows[r], rows[p]);
        Scalar inv = rows[r][c].inverse();
        for (auto &x : rows[r])
            x *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero())
                continue;
            Scalar f = rows[i][c];
            for (size_t j = 0; j < rows[i].size(); ++j)
                rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < ambient_dim; ++j)
            left_inv_.at(i, j) = rows[i][k + j];
}

std::optional<Vec> CoordinateMap::coords(const Vec &v) const {
    if (v.size() != ambient_)
        throw std::invalid_argument("CoordinateMap: dimension mismatch");
    if (basis_.empty())
        return is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
    Vec x = left_inv_.apply(v);
    // verify membership
    Vec back(ambient_);
    for (size_t j = 0; j < basis_.size(); ++j)
        if (!x[j].is_zero())
            back = back + x[j] * basis_[j];
    if (!(back == v))
        return std::nullopt;
    return x;
}

bool same_span(const std::vector<Vec> &a, const std::vector<Vec> &b,
               size_t ambient_dim) {
    SpanBuilder sa(ambient_dim), sb(ambient_dim);
    for (const auto &v : a)
        sa.add(v);
    for (const auto &v : b)
        sb.add(v);
    if (sa.size() != sb.size())
        return false;
    for (const auto &v : b)
        if (!sa.contains(v))
            return false;
    return true;
}

} // namespace rootgrade
