#include "gmak/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace gmak {

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = int(rows.size());
    cols_ = rows_ ? int(rows.begin()->size()) : 0;
    a_.reserve(size_t(rows_) * cols_);
    for (const auto& r : rows) {
        assert(int(r.size()) == cols_);
        for (const auto& v : r) a_.push_back(v);
    }
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Mat Mat::operator*(const Mat& o) const {
    assert(cols_ == o.rows_);
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& v = (*this)(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Mat Mat::operator-() const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

Mat Mat::operator*(const Rat& s) const {
    Mat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

bool Mat::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

Mat Mat::col(int j) const {
    Mat c(rows_, 1);
    for (int i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
}

Mat Mat::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    Mat s(int(rows.size()), int(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) {
            assert(rows[i] >= 0 && rows[i] < rows_ && cols[j] >= 0 && cols[j] < cols_);
            s(int(i), int(j)) = (*this)(rows[i], cols[j]);
        }
    return s;
}

Mat Mat::hcat(const Mat& o) const {
    assert(rows_ == o.rows_);
    Mat r(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
        for (int j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
    }
    return r;
}

Mat Mat::vcat(const Mat& o) const {
    assert(cols_ == o.cols_ || rows_ == 0 || o.rows_ == 0);
    if (rows_ == 0) return o;
    if (o.rows_ == 0) return *this;
    Mat r(rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(rows_ + i, j) = o(i, j);
    return r;
}

std::string Mat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << rat_to_string((*this)(i, j));
    }
    os << "]";
    return os.str();
}

namespace {

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rat inv = 1 / m(r, c);
        for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

int rank(const Mat& m) {
    Mat w = m;
    return int(rref(w).size());
}

Mat kernel_basis(const Mat& m) {
    Mat w = m;
    std::vector<int> pivots = rref(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat k(m.cols(), int(free_cols.size()));
    for (size_t f = 0; f < free_cols.size(); ++f) {
        int fc = free_cols[f];
        k(fc, int(f)) = 1;
        for (size_t r = 0; r < pivots.size(); ++r) k(pivots[r], int(f)) = -w(int(r), fc);
    }
    return k;
}

Mat image_basis(const Mat& m) {
    Mat w = m;
    std::vector<int> pivots = rref(w);
    Mat b(m.rows(), int(pivots.size()));
    for (size_t j = 0; j < pivots.size(); ++j)
        for (int i = 0; i < m.rows(); ++i) b(i, int(j)) = m(i, pivots[j]);
    return b;
}

Rat det(const Mat& m) {
    assert(m.rows() == m.cols());
    int n = m.rows();
    if (n == 0) return 1;
    // Clear denominators row by row, then run fraction-free Bareiss on the
    // integer matrix and divide the scale factors back out.
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Rat scale = 1;
    for (int i = 0; i < n; ++i) {
        Int l = 1;
        for (int j = 0; j < n; ++j) {
            Int d = m(i, j).get_den();
            Int g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
            l = l / g * d;
        }
        for (int j = 0; j < n; ++j) {
            Rat v = m(i, j) * Rat(l);
            a[i][j] = v.get_num();
        }
        scale *= Rat(l);
    }
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { p = i; break; }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rat d(a[n - 1][n - 1] * sign);
    return d / scale;
}

Rat minor_det(const Mat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("minor: index sets differ in size");
    for (int i : rows)
        if (i < 0 || i >= m.rows()) throw std::out_of_range("minor: row index");
    for (int j : cols)
        if (j < 0 || j >= m.cols()) throw std::out_of_range("minor: col index");
    return det(m.submatrix(rows, cols));
}

bool solve(const Mat& m, const Mat& b, Mat& x) {
    assert(m.rows() == b.rows());
    Mat aug = m.hcat(b);
    std::vector<int> pivots = rref(aug);
    // Inconsistent iff a pivot lands in the appended block.
    for (int p : pivots)
        if (p >= m.cols()) return false;
    x = Mat(m.cols(), b.cols());
    for (size_t r = 0; r < pivots.size(); ++r)
        for (int j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(int(r), m.cols() + j);
    return true;
}

Mat inverse(const Mat& m) {
    assert(m.rows() == m.cols());
    Mat x;
    bool ok = solve(m, Mat::identity(m.rows()), x);
    assert(ok && rank(m) == m.rows());
    (void)ok;
    return x;
}

Mat orthogonalize(const Mat& basis) {
    if (rank(basis) != basis.cols()) throw std::invalid_argument("orthogonalize: dependent columns");
    int n = basis.rows(), s = basis.cols();
    Mat g = basis;
    for (int j = 0; j < s; ++j) {
        for (int p = 0; p < j; ++p) {
            Rat num = 0, den = 0;
            for (int i = 0; i < n; ++i) {
                num += g(i, p) * g(i, j);
                den += g(i, p) * g(i, p);
            }
            Rat f = num / den;
            for (int i = 0; i < n; ++i) g(i, j) -= f * g(i, p);
        }
    }
    return g;
}

bool same_span(const Mat& a, const Mat& b) {
    int ra = rank(a), rb = rank(b);
    if (ra != rb) return false;
    return rank(a.hcat(b)) == ra;
}

Mat span_intersection(const Mat& a, const Mat& b) {
    if (a.cols() == 0 || b.cols() == 0) return Mat(a.rows(), 0);
    // x = a*u = b*v  <=>  [a | -b] (u;v) = 0.
    Mat k = kernel_basis(a.hcat(-b));
    Mat u(a.cols(), k.cols());
    for (int i = 0; i < a.cols(); ++i)
        for (int j = 0; j < k.cols(); ++j) u(i, j) = k(i, j);
    return image_basis(a * u);
}

} // namespace gmak
