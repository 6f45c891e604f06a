#include "strata/errors.hpp"
#include "strata/matrix.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace strata;

namespace {

Mat random_matrix(std::uint64_t seed, size_t rows, size_t cols, bool complex_entries) {
    std::mt19937_64 eng(seed);
    auto pick = [&](long lo, long hi) {
        return lo + static_cast<long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    Mat m(rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) {
            Rational re(pick(-4, 4), pick(1, 3));
            Rational im = complex_entries && pick(0, 2) == 0 ? Rational(pick(-2, 2)) : Rational(0);
            m.at(r, c) = Scalar(re, im);
        }
    return m;
}

Vec unit(size_t n, size_t k) {
    Vec v(n);
    v[k] = Scalar(1);
    return v;
}

} // namespace

TEST_CASE("rref echelon structure and idempotence") {
    Mat a = Mat::from_rows({{Scalar(2), Scalar(4), Scalar(-2)},
                            {Scalar(1), Scalar(2), Scalar(0)},
                            {Scalar(3), Scalar(6), Scalar(-2)}},
                           3);
    Rref r = rref(a);
    CHECK(r.mat.rows() == 2);
    REQUIRE(r.pivot_cols.size() == 2);
    CHECK(r.pivot_cols[0] == 0);
    CHECK(r.pivot_cols[1] == 2);
    for (size_t k = 0; k < r.mat.rows(); ++k)
        for (size_t j = 0; j < r.mat.rows(); ++j)
            CHECK(r.mat.at(j, r.pivot_cols[k]) == (j == k ? Scalar(1) : Scalar(0)));
    CHECK(rref(r.mat).mat == r.mat);

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Mat m = random_matrix(seed, 4, 6, true);
        Rref rr = rref(m);
        CHECK(rref(rr.mat).mat == rr.mat);
        CHECK(row_spaces_equal(m, rr.mat));
    }
}

TEST_CASE("rref rank agrees with fraction-free elimination") {
    CHECK(rank(Mat::identity(5)) == 5);
    CHECK(rank(Mat(3, 4)) == 0);
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Mat m = random_matrix(seed, 3 + seed % 4, 5, seed % 2 == 0);
        CHECK(rank(m) == oracles::bareiss_rank(m));
    }
    // Rank-deficient by construction: duplicated and scaled rows.
    Mat m = random_matrix(99, 2, 5, true);
    Mat stacked = vstack(m, m);
    Vec scaled = m.row(0);
    for (Scalar& s : scaled) s *= Scalar(Rational(7, 3));
    stacked.append_row(scaled);
    CHECK(rank(stacked) == oracles::bareiss_rank(stacked));
    CHECK(rank(stacked) <= 2);
}

TEST_CASE("rref honors a custom column order") {
    Mat a = Mat::from_rows({{Scalar(1), Scalar(2)}}, 2);
    Rref r = rref(a, {1, 0});
    REQUIRE(r.pivot_cols.size() == 1);
    CHECK(r.pivot_cols[0] == 1);
    CHECK(r.mat.at(0, 1) == Scalar(1));
    CHECK(r.mat.at(0, 0) == Scalar(Rational(1, 2)));

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Mat m = random_matrix(seed * 31, 3, 5, false);
        std::vector<size_t> order = {4, 2, 0, 3, 1};
        Rref ro = rref(m, order);
        CHECK(row_spaces_equal(ro.mat, m));
        CHECK(ro.mat.rows() == rank(m));
    }
}

TEST_CASE("kernels annihilate and have complementary dimension") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Mat m = random_matrix(seed * 7 + 1, 3, 6, true);
        Mat k = right_kernel(m);
        CHECK(k.rows() == m.cols() - rank(m));
        for (size_t r = 0; r < k.rows(); ++r) {
            for (size_t i = 0; i < m.rows(); ++i)
                CHECK(dot(m.row(i), k.row(r)).is_zero());
        }
        Mat lk = left_kernel(m);
        CHECK(lk.rows() == m.rows() - rank(m));
        Mat prod = mul(lk, m);
        for (size_t r = 0; r < prod.rows(); ++r) CHECK(is_zero(prod.row(r)));
    }
}

TEST_CASE("reduce_row_mod gives a canonical representative") {
    Mat m = Mat::from_rows({{Scalar(1), Scalar(0), Scalar(2)},
                            {Scalar(0), Scalar(1), Scalar(-1)}},
                           3);
    Rref r = rref(m);
    Vec v{Scalar(3), Scalar(-2), Scalar(5)};
    Vec reduced = reduce_row_mod(v, r);
    for (size_t p : r.pivot_cols) CHECK(reduced[p].is_zero());
    // Adding any row-space element leaves the representative unchanged.
    Vec shifted = v;
    for (size_t j = 0; j < 3; ++j) shifted[j] += Scalar(4) * m.at(0, j) - m.at(1, j);
    CHECK(reduce_row_mod(shifted, r) == reduced);
    CHECK(is_zero(reduce_row_mod(m.row(0), r)));
    CHECK_THROWS_AS(reduce_row_mod(Vec{Scalar(1)}, r), DomainError);
}

TEST_CASE("row space membership and equality") {
    Mat m = Mat::from_rows({{Scalar(1), Scalar(1), Scalar(0)},
                            {Scalar(0), Scalar(0), Scalar(1)}},
                           3);
    CHECK(in_row_space({Scalar(2), Scalar(2), Scalar(-3)}, m));
    CHECK(!in_row_space({Scalar(1), Scalar(0), Scalar(0)}, m));
    Mat scaled = Mat::from_rows({{Scalar(0), Scalar(0), Scalar(-5)},
                                 {Scalar(Rational(1, 2)), Scalar(Rational(1, 2)), Scalar(1)}},
                                3);
    CHECK(row_spaces_equal(m, scaled));
    CHECK(!row_spaces_equal(m, Mat::identity(3)));
}

TEST_CASE("row space intersection") {
    Mat a = Mat::from_rows({unit(4, 0), unit(4, 1)}, 4);
    Mat b = Mat::from_rows({unit(4, 1), unit(4, 2)}, 4);
    Mat inter = row_space_intersection(a, b);
    CHECK(inter.rows() == 1);
    CHECK(in_row_space(unit(4, 1), inter));

    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        Mat x = random_matrix(seed * 13, 3, 6, true);
        Mat y = random_matrix(seed * 13 + 5, 3, 6, true);
        Mat xy = row_space_intersection(x, y);
        for (size_t r = 0; r < xy.rows(); ++r) {
            CHECK(in_row_space(xy.row(r), x));
            CHECK(in_row_space(xy.row(r), y));
        }
        CHECK(row_spaces_equal(xy, row_space_intersection(y, x)));
        // Dimension count: dim(x) + dim(y) = dim(x+y) + dim(x cap y).
        CHECK(rank(x) + rank(y) == rank(vstack(x, y)) + xy.rows());
    }
}

TEST_CASE("transpose and multiplication identities") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Mat a = random_matrix(seed, 3, 4, true);
        Mat b = random_matrix(seed + 100, 4, 2, true);
        CHECK(transpose(mul(a, b)) == mul(transpose(b), transpose(a)));
        CHECK(mul(Mat::identity(3), a) == a);
        CHECK(mul(a, Mat::identity(4)) == a);
    }
}
