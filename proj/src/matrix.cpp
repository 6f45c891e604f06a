#include "strata/matrix.hpp"

#include "strata/errors.hpp"

#include <numeric>
#include <utility>

namespace strata {

Scalar dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw DomainError(DomainError::Code::DimensionMismatch, "dot: length mismatch");
    Scalar s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const Vec& v) {
    for (const Scalar& s : v)
        if (!s.is_zero()) return false;
    return true;
}

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Mat Mat::from_rows(std::vector<Vec> rows, size_t cols) {
    Mat m(0, cols);
    m.cols_ = cols;
    for (auto& r : rows) m.append_row(r);
    return m;
}

Vec Mat::row(size_t r) const {
    Vec v(cols_);
    for (size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
    return v;
}

void Mat::append_row(const Vec& v) {
    if (v.size() != cols_)
        throw DomainError(DomainError::Code::DimensionMismatch, "append_row: width mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

Mat transpose(const Mat& m) {
    Mat t(m.cols(), m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
    return t;
}

Mat mul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows())
        throw DomainError(DomainError::Code::DimensionMismatch, "mul: inner dimension mismatch");
    Mat c(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (size_t j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

Mat vstack(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols())
        throw DomainError(DomainError::Code::DimensionMismatch, "vstack: width mismatch");
    Mat c = a;
    for (size_t i = 0; i < b.rows(); ++i) c.append_row(b.row(i));
    return c;
}

Rref rref(const Mat& m, const std::vector<size_t>& col_order) {
    std::vector<size_t> order = col_order;
    if (order.empty()) {
        order.resize(m.cols());
        std::iota(order.begin(), order.end(), size_t{0});
    }
    if (order.size() != m.cols())
        throw DomainError(DomainError::Code::DimensionMismatch, "rref: column order size");

    Mat work = m;
    size_t pivot_row = 0;
    std::vector<size_t> pivots;
    for (size_t oc : order) {
        if (pivot_row >= work.rows()) break;
        size_t found = work.rows();
        for (size_t r = pivot_row; r < work.rows(); ++r)
            if (!work.at(r, oc).is_zero()) {
                found = r;
                break;
            }
        if (found == work.rows()) continue;
        if (found != pivot_row)
            for (size_t j = 0; j < work.cols(); ++j)
                std::swap(work.at(found, j), work.at(pivot_row, j));
        Scalar inv = Scalar(1) / work.at(pivot_row, oc);
        for (size_t j = 0; j < work.cols(); ++j) work.at(pivot_row, j) *= inv;
        for (size_t r = 0; r < work.rows(); ++r) {
            if (r == pivot_row) continue;
            Scalar factor = work.at(r, oc);
            if (factor.is_zero()) continue;
            for (size_t j = 0; j < work.cols(); ++j)
                work.at(r, j) -= factor * work.at(pivot_row, j);
        }
        pivots.push_back(oc);
        ++pivot_row;
    }

    Mat trimmed = Mat(pivots.size(), m.cols());
    for (size_t r = 0; r < pivots.size(); ++r)
        for (size_t j = 0; j < m.cols(); ++j) trimmed.at(r, j) = work.at(r, j);
    return Rref{std::move(trimmed), std::move(pivots)};
}

size_t rank(const Mat& m) { return rref(m).mat.rows(); }

Vec reduce_row_mod(Vec v, const Rref& r) {
    if (v.size() != r.mat.cols())
        throw DomainError(DomainError::Code::DimensionMismatch, "reduce_row_mod: width mismatch");
    for (size_t k = 0; k < r.mat.rows(); ++k) {
        Scalar factor = v[r.pivot_cols[k]];
        if (factor.is_zero()) continue;
        for (size_t j = 0; j < v.size(); ++j) v[j] -= factor * r.mat.at(k, j);
    }
    return v;
}

Mat right_kernel(const Mat& m) {
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : r.pivot_cols) is_pivot[p] = true;

    Mat out(0, m.cols());
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = Scalar(1);
        for (size_t k = 0; k < r.mat.rows(); ++k) v[r.pivot_cols[k]] = -r.mat.at(k, f);
        out.append_row(v);
    }
    return out;
}

Mat left_kernel(const Mat& m) { return right_kernel(transpose(m)); }

bool in_row_space(const Vec& v, const Mat& m) {
    return is_zero(reduce_row_mod(v, rref(m)));
}

bool row_spaces_equal(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) return false;
    return rref(a).mat == rref(b).mat;
}

Mat row_space_intersection(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols())
        throw DomainError(DomainError::Code::DimensionMismatch, "intersection: width mismatch");
    // For (u | v) in the left kernel of the stack, u*a = -v*b lies in both
    // row spaces; such products span the intersection.
    Mat stacked = vstack(a, b);
    Mat lk = left_kernel(stacked);
    Mat gens(0, a.cols());
    for (size_t k = 0; k < lk.rows(); ++k) {
        Vec w(a.cols());
        for (size_t i = 0; i < a.rows(); ++i)
            for (size_t j = 0; j < a.cols(); ++j) w[j] += lk.at(k, i) * a.at(i, j);
        if (!is_zero(w)) gens.append_row(w);
    }
    return rref(gens).mat;
}

} // namespace strata
