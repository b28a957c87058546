#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gmak/matrix.hpp"

using namespace gmak;

namespace {

// Independent determinant oracle for cross-checks (n <= 5).
Rat cofactor_det(const Mat& m) {
    int n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Rat d = 0;
    std::vector<int> cols;
    for (int j = 1; j < n; ++j) cols.push_back(j);
    std::vector<int> rows;
    for (int i = 0; i < n; ++i) rows.push_back(i);
    for (int i = 0; i < n; ++i) {
        if (m(i, 0) == 0) continue;
        std::vector<int> sub_rows;
        for (int r = 0; r < n; ++r)
            if (r != i) sub_rows.push_back(r);
        Rat c = cofactor_det(m.submatrix(sub_rows, cols));
        d += (i % 2 == 0 ? m(i, 0) : -m(i, 0)) * c;
    }
    return d;
}

Mat random_mat(std::mt19937& rng, int rows, int cols) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            Rat q(num(rng), den(rng));
            q.canonicalize();
            m(i, j) = q;
        }
    return m;
}

} // namespace

TEST_CASE("rank, kernel, image basics") {
    CHECK(rank(Mat::identity(3)) == 3);
    CHECK(kernel_basis(Mat::identity(3)).cols() == 0);

    Mat z(2, 3);
    CHECK(rank(z) == 0);
    Mat k = kernel_basis(z);
    CHECK(k.cols() == 3);
    CHECK(same_span(k, Mat::identity(3)));

    Mat m{{1, 2}, {2, 4}};
    CHECK(rank(m) == 1);
    Mat km = kernel_basis(m);
    CHECK(km.cols() == 1);
    CHECK((m * km).is_zero());
    CHECK(image_basis(m).cols() == 1);
}

TEST_CASE("kernel of a matrix with zero rows is everything") {
    Mat m(0, 4);
    Mat k = kernel_basis(m);
    CHECK(k.cols() == 4);
    CHECK(same_span(k, Mat::identity(4)));
}

TEST_CASE("determinants and minors") {
    CHECK(det(Mat{{1, 2}, {3, 4}}) == -2);
    CHECK(det(Mat(0, 0)) == 1);
    CHECK(det(Mat{{Rat(1, 2), Rat(1, 3)}, {Rat(1, 5), Rat(1, 7)}}) ==
          Rat(1, 2) * Rat(1, 7) - Rat(1, 3) * Rat(1, 5));

    Mat m{{1, 2}, {3, 4}};
    CHECK(minor_det(m, {0, 1}, {0, 1}) == -2);
    CHECK(minor_det(m, {}, {}) == 1);
    CHECK(minor_det(m, {1}, {0}) == 3);
    CHECK_THROWS_AS(minor_det(m, {0}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(minor_det(m, {2}, {0}), std::out_of_range);
}

TEST_CASE("determinant agrees with cofactor oracle up to 5x5") {
    std::mt19937 rng(20240817);
    for (int n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 20; ++trial) {
            Mat m = random_mat(rng, n, n);
            CHECK(det(m) == cofactor_det(m));
        }
}

TEST_CASE("solve and inverse") {
    Mat m{{2, 1}, {1, 1}};
    Mat b{{3}, {2}};
    Mat x;
    REQUIRE(solve(m, b, x));
    CHECK(m * x == b);

    Mat inv = inverse(m);
    CHECK(m * inv == Mat::identity(2));

    // Inconsistent system.
    Mat bad{{1, 1}, {1, 1}};
    Mat rhs{{1}, {2}};
    CHECK_FALSE(solve(bad, rhs, x));

    // Underdetermined: any particular solution is fine.
    Mat wide{{1, 1, 1}};
    Mat one{{5}};
    REQUIRE(solve(wide, one, x));
    CHECK(wide * x == one);
}

TEST_CASE("orthogonalize keeps span, drops normalization") {
    Mat b{{1, 1}, {1, 0}};
    Mat g = orthogonalize(b);
    CHECK(g == Mat{{1, Rat(1, 2)}, {1, Rat(-1, 2)}});
    CHECK(same_span(b, g));

    // G^T G diagonal with positive diagonal.
    Mat gram = g.transpose() * g;
    for (int i = 0; i < gram.rows(); ++i)
        for (int j = 0; j < gram.cols(); ++j) {
            if (i == j)
                CHECK(gram(i, j) > 0);
            else
                CHECK(gram(i, j) == 0);
        }

    // Already orthogonal input comes back unchanged.
    Mat ortho{{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
    CHECK(orthogonalize(ortho) == ortho);

    Mat dep{{1, 2}, {2, 4}};
    CHECK_THROWS_AS(orthogonalize(dep), std::invalid_argument);
}

TEST_CASE("orthogonalize on random independent columns") {
    std::mt19937 rng(7);
    int done = 0;
    while (done < 25) {
        Mat b = random_mat(rng, 4, 2);
        if (rank(b) != 2) continue;
        ++done;
        Mat g = orthogonalize(b);
        CHECK(same_span(b, g));
        Mat gram = g.transpose() * g;
        CHECK(gram(0, 1) == 0);
        CHECK(gram(0, 0) > 0);
        CHECK(gram(1, 1) > 0);
    }
}

TEST_CASE("span intersection") {
    Mat a{{1, 0}, {0, 1}, {0, 0}};
    Mat b{{0, 0}, {1, 0}, {0, 1}};
    Mat inter = span_intersection(a, b);
    CHECK(inter.cols() == 1);
    CHECK(same_span(inter, Mat{{0}, {1}, {0}}));

    Mat c{{1}, {0}, {0}};
    CHECK(span_intersection(c, b).cols() == 0);
    CHECK(span_intersection(c, Mat(3, 0)).cols() == 0);
}

TEST_CASE("rank-nullity on random matrices") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        Mat m = random_mat(rng, 3, 5);
        Mat k = kernel_basis(m);
        CHECK(rank(m) + k.cols() == m.cols());
        CHECK((m * k).is_zero());
        CHECK(rank(image_basis(m)) == rank(m));
    }
}
