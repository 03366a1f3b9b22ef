#pragma once

#include "rootgrade/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace rootgrade {

using Vec = std::vector<Scalar>;

/// Dense matrix over Q(i). Row-major, dimensions fixed at construction.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(size_t n);
    static Mat from_rows(const std::vector<Vec> &rows, size_t cols);
    static Mat from_cols(const std::vector<Vec> &cols, size_t rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar &at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Scalar &at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    Vec row(size_t i) const;
    Vec col(size_t j) const;

    Mat transpose() const;
    Mat operator*(const Mat &o) const;
    Mat operator+(const Mat &o) const;
    Mat operator-(const Mat &o) const;
    Vec apply(const Vec &v) const;
    bool operator==(const Mat &o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool is_zero() const;

private:
    size_t rows_, cols_;
    std::vector<Scalar> data_;
};

Vec operator+(const Vec &a, const Vec &b);
Vec operator-(const Vec &a, const Vec &b);
Vec operator*(const Scalar &c, const Vec &v);
bool is_zero(const Vec &v);
Vec zero_vec(size_t n);
Vec unit_vec(size_t n, size_t k);

size_t rank(const Mat &m);

/// Basis of the right null space {v : m v = 0}. Empty iff rank = cols.
std::vector<Vec> kernel_basis(const Mat &m);

/// Basis of the intersection of the spans of the given vector lists.
std::vector<Vec> intersect_subspaces(const std::vector<std::vector<Vec>> &bases);

/// One solution x of m x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Mat &m, const Vec &b);

/// Row-echelon span helper: maintains a reduced basis of a subspace and
/// answers membership queries; used for orbit closures and quotients.
class SpanBuilder {
public:
    explicit SpanBuilder(size_t ambient_dim) : dim_(ambient_dim) {}

    /// Adds v to the span. Returns true if it enlarged the span.
    bool add(const Vec &v);
    bool contains(const Vec &v) const;
    /// Residual of v after reduction mod the current span.
    Vec reduce(const Vec &v) const;
    size_t size() const { return rows_.size(); }
    size_t ambient_dim() const { return dim_; }
    const std::vector<Vec> &basis() const { return rows_; }

private:
    size_t dim_;
    std::vector<Vec> rows_;    // reduced echelon rows
    std::vector<size_t> lead_; // pivot column of each row
};

bool same_span(const std::vector<Vec> &a, const std::vector<Vec> &b,
               size_t ambient_dim);

/// Fixes an independent spanning set once and answers many coordinate
/// queries against it (via a precomputed left inverse).
class CoordinateMap {
public:
    CoordinateMap() : ambient_(0) {}
    CoordinateMap(const std::vector<Vec> &basis, size_t ambient_dim);

    /// Coordinates of v in the fixed basis, or nullopt when v is outside
    /// the span.
    std::optional<Vec> coords(const Vec &v) const;
    size_t basis_size() const { return basis_.size(); }

private:
    size_t ambient_;
    std::vector<Vec> basis_;
    Mat left_inv_; // k x ambient with left_inv * basis = identity
};

} // namespace rootgrade
