#include "gmak/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gmak {

Poly Poly::constant(int nvars, const Rat& c) {
    Poly p(nvars);
    p.add_term(std::vector<int>(nvars, 0), c);
    return p;
}

Poly Poly::var(int nvars, int i) {
    Poly p(nvars);
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    p.add_term(e, 1);
    return p;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

Rat Poly::coeff(const std::vector<int>& expo) const {
    auto it = terms_.find(expo);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const std::vector<int>& expo, const Rat& c) {
    if (int(expo.size()) != nvars_) throw std::invalid_argument("exponent arity mismatch");
    auto it = terms_.find(expo);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(expo, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Poly Poly::operator+(const Poly& o) const {
    Poly out = *this;
    out += o;
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable list mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable list mismatch");
    Poly out(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<int> e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    return out;
}

Poly Poly::operator*(const Rat& c) const {
    Poly out(nvars_);
    if (c == 0) return out;
    for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
    return out;
}

Rat Poly::eval(const std::vector<Rat>& x) const {
    if (int(x.size()) != nvars_) throw std::invalid_argument("evaluation arity mismatch");
    Rat out = 0;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int p = 0; p < e[i]; ++p) t *= x[i];
        out += t;
    }
    return out;
}

bool Poly::coeffs_nonneg() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

bool Poly::coeffs_nonpos() const {
    for (const auto& [e, c] : terms_)
        if (c > 0) return false;
    return true;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = false;
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) has_var = true;
        if (a != 1 || !has_var) os << rat_to_string(a);
        bool star = a != 1 || !has_var;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (star) os << "*";
            star = true;
            os << names.at(i);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

PolyMat::PolyMat(int rows, int cols, int nvars)
    : rows_(rows), cols_(cols), nvars_(nvars),
      data_(size_t(rows) * cols, Poly(nvars)) {}

bool PolyMat::operator==(const PolyMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

PolyMat PolyMat::operator+(const PolyMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    PolyMat out(rows_, cols_, nvars_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
    return out;
}

PolyMat PolyMat::operator-() const {
    PolyMat out(rows_, cols_, nvars_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
    return out;
}

PolyMat PolyMat::operator*(const PolyMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
    PolyMat out(rows_, o.cols_, nvars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            Poly acc(nvars_);
            for (int k = 0; k < cols_; ++k) acc += (*this)(i, k) * o(k, j);
            out(i, j) = acc;
        }
    return out;
}

Mat PolyMat::eval(const std::vector<Rat>& x) const {
    Mat out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).eval(x);
    return out;
}

PolyMat PolyMat::lift(const Mat& m, int nvars) {
    PolyMat out(m.rows(), m.cols(), nvars);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) out(i, j) = Poly::constant(nvars, m(i, j));
    return out;
}

namespace {

Poly det_rec(const PolyMat& m, std::vector<int>& rows, const std::vector<int>& cols) {
    int n = int(cols.size());
    if (n == 0) return Poly::constant(m.nvars(), 1);
    if (n == 1) return m(rows[0], cols[0]);
    Poly out(m.nvars());
    for (int i = 0; i < n; ++i) {
        const Poly& pivot = m(rows[i], cols[0]);
        if (pivot.is_zero()) continue;
        std::vector<int> sub;
        for (int r = 0; r < n; ++r)
            if (r != i) sub.push_back(rows[r]);
        std::vector<int> subcols(cols.begin() + 1, cols.end());
        Poly c = det_rec(m, sub, subcols);
        Poly term = pivot * c;
        out += (i % 2 == 0) ? term : -term;
    }
    return out;
}

} // namespace

Poly poly_det(const PolyMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    std::vector<int> rows(m.rows());
    std::vector<int> cols(m.rows());
    for (int i = 0; i < m.rows(); ++i) rows[i] = cols[i] = i;
    return det_rec(m, rows, cols);
}

Poly poly_minor(const PolyMat& m, const std::vector<int>& rows,
                const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("minor index sets differ in size");
    for (int r : rows)
        if (r < 0 || r >= m.rows()) throw std::out_of_range("minor row index");
    for (int c : cols)
        if (c < 0 || c >= m.cols()) throw std::out_of_range("minor column index");
    std::vector<int> rr = rows;
    return det_rec(m, rr, cols);
}

} // namespace gmak
