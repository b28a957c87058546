#pragma once

#include <map>
#include <string>
#include <vector>

#include "gmak/matrix.hpp"

namespace gmak {

/// Sparse multivariate polynomial with rational coefficients over a fixed
/// number of variables. Terms are keyed by exponent vector; zero coefficients
/// are never stored.
class Poly {
public:
    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly constant(int nvars, const Rat& c);
    static Poly var(int nvars, int i);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;

    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

    Rat coeff(const std::vector<int>& expo) const;
    void add_term(const std::vector<int>& expo, const Rat& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    Poly& operator+=(const Poly& o);

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    Rat eval(const std::vector<Rat>& x) const;

    /// True iff every coefficient is >= 0 (then p >= 0 on the open positive
    /// orthant). A sufficient criterion only.
    bool coeffs_nonneg() const;
    /// True iff every coefficient is <= 0.
    bool coeffs_nonpos() const;

    /// Human-readable form like "2*a*b - c^2 + 1"; variable names supplied.
    std::string to_string(const std::vector<std::string>& names) const;

private:
    int nvars_ = 0;
    std::map<std::vector<int>, Rat> terms_;
};

/// Dense matrix of polynomials sharing one variable list.
class PolyMat {
public:
    PolyMat() = default;
    PolyMat(int rows, int cols, int nvars);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const { return nvars_; }

    Poly& operator()(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const Poly& operator()(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    bool operator==(const PolyMat& o) const;

    PolyMat operator+(const PolyMat& o) const;
    PolyMat operator-() const;
    PolyMat operator*(const PolyMat& o) const;

    Mat eval(const std::vector<Rat>& x) const;

    /// Lift a rational matrix to constant polynomials.
    static PolyMat lift(const Mat& m, int nvars);

private:
    int rows_ = 0, cols_ = 0, nvars_ = 0;
    std::vector<Poly> data_;
};

/// Determinant by cofactor expansion (intended for small matrices; the
/// callers never exceed 6x6).
Poly poly_det(const PolyMat& m);

/// Minor with the given row and column index sets (ascending, equal size).
Poly poly_minor(const PolyMat& m, const std::vector<int>& rows,
                const std::vector<int>& cols);

} // namespace gmak
