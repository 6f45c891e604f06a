#pragma once

#include "strata/scalar.hpp"

#include <cstddef>
#include <vector>

namespace strata {

using Vec = std::vector<Scalar>;

Scalar dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);

// Dense row-major matrix over Scalar. Sizes here are tiny (homology ranks of
// low-genus curves), so everything is straightforward exact Gauss-Jordan.
class Mat {
public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(size_t n);
    static Mat from_rows(std::vector<Vec> rows, size_t cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    Vec row(size_t r) const;
    void append_row(const Vec& v);

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Mat transpose(const Mat& m);
Mat mul(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

// Reduced row echelon form. Zero rows are dropped, so the result has exactly
// rank(m) rows; pivot_cols[k] is the pivot column of row k. When col_order is
// given, pivots are chosen scanning columns in that order and rows come out
// sorted by pivot position in it; the row space is unchanged either way. The
// order must list each column index exactly once.
struct Rref {
    Mat mat;
    std::vector<size_t> pivot_cols;
};

Rref rref(const Mat& m, const std::vector<size_t>& col_order = {});

size_t rank(const Mat& m);

// Canonical representative of v modulo the row space captured by r: pivot
// coordinates are eliminated in the order r's rows provide.
Vec reduce_row_mod(Vec v, const Rref& r);

// Rows spanning { x : m x = 0 }.
Mat right_kernel(const Mat& m);
// Rows spanning { y : y m = 0 }.
Mat left_kernel(const Mat& m);

bool in_row_space(const Vec& v, const Mat& m);
bool row_spaces_equal(const Mat& a, const Mat& b);

// Rows spanning rowspace(a) ∩ rowspace(b), in reduced echelon form.
Mat row_space_intersection(const Mat& a, const Mat& b);

} // namespace strata
