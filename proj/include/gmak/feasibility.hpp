#pragma once

#include <vector>

#include "gmak/matrix.hpp"

namespace gmak {

/// Homogeneous sign-constrained system over R^d:
///   strict * z > 0  (componentwise),  nonneg * z >= 0,  zero * z = 0.
/// Any block may have zero rows; all blocks share the column count d.
struct SignSystem {
    Mat strict, nonneg, zero;

    explicit SignSystem(int dim)
        : strict(0, dim), nonneg(0, dim), zero(0, dim) {}
    SignSystem(Mat s, Mat n, Mat z)
        : strict(std::move(s)), nonneg(std::move(n)), zero(std::move(z)) {}

    int dim() const { return strict.cols(); }
    void add_strict(const Mat& row) { strict = strict.vcat(row); }
    void add_nonneg(const Mat& row) { nonneg = nonneg.vcat(row); }
    void add_zero(const Mat& row) { zero = zero.vcat(row); }
};

struct Feasibility {
    bool feasible = false;
    /// Exact witness (integer-scaled) when feasible.
    std::vector<Rat> witness;
    /// Optimum of the slack variable t; feasible iff margin > 0.
    Rat margin = 0;
};

/// Decides the system exactly. Open-cone membership is turned into an
/// optimization: maximize t subject to strict rows >= t, |z_j| <= 1, solved
/// by exact rational simplex; feasible iff the optimum is positive.
Feasibility feasible(const SignSystem& sys);

/// Re-evaluate a witness against the system, exactly.
bool satisfies(const SignSystem& sys, const std::vector<Rat>& z);

namespace lp {

enum class Rel { Le, Ge, Eq };

struct Constraint {
    std::vector<Rat> coeff;
    Rel rel;
    Rat rhs;
};

struct Solution {
    bool feasible = false;
    bool unbounded = false;
    Rat objective = 0;
    std::vector<Rat> x;
};

/// maximize c.x subject to constraints, x >= 0. Two-phase dense simplex with
/// Bland's rule (terminates on all inputs).
Solution maximize(const std::vector<Rat>& c, const std::vector<Constraint>& cons);

} // namespace lp

} // namespace gmak
