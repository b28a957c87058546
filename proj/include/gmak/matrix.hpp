#pragma once

#include <cassert>
#include <initializer_list>
#include <string>
#include <vector>

#include "gmak/rational.hpp"

namespace gmak {

/// Dense matrix over exact rationals. All operations are exact; there is no
/// floating point anywhere in this class.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
    Mat(std::initializer_list<std::initializer_list<Rat>> rows);

    static Mat identity(int n);
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    Mat transpose() const;
    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat operator*(const Rat& s) const;
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    bool is_zero() const;

    Mat col(int j) const;
    Mat submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
    /// Horizontal concatenation [*this | o].
    Mat hcat(const Mat& o) const;
    /// Vertical concatenation.
    Mat vcat(const Mat& o) const;

    std::string to_string() const;

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

int rank(const Mat& m);

/// Columns form a basis of ker(m); empty (n x 0) if the kernel is trivial.
Mat kernel_basis(const Mat& m);

/// Columns form a basis of the column space of m.
Mat image_basis(const Mat& m);

/// Exact determinant via fraction-free Bareiss elimination on the
/// denominator-cleared integer matrix.
Rat det(const Mat& m);

/// Determinant of the selected square submatrix; det of the empty matrix is 1.
Rat minor_det(const Mat& m, const std::vector<int>& rows, const std::vector<int>& cols);

/// Solve m * x = b; returns false if inconsistent. When the solution is not
/// unique an arbitrary particular solution is returned.
bool solve(const Mat& m, const Mat& b, Mat& x);

/// Inverse of a square nonsingular matrix (asserts nonsingularity).
Mat inverse(const Mat& m);

/// Gram-Schmidt without normalization: columns of the result are pairwise
/// orthogonal with the same span as the (independent) input columns.
Mat orthogonalize(const Mat& basis);

/// Exact span equality by mutual containment of column spaces.
bool same_span(const Mat& a, const Mat& b);

/// Basis of span(a) `intersect` span(b).
Mat span_intersection(const Mat& a, const Mat& b);

} // namespace gmak
