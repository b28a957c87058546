#pragma once

#include <map>
#include <vector>

#include "gmak/feasibility.hpp"
#include "gmak/matrix.hpp"
#include "gmak/report.hpp"
#include "gmak/signvec.hpp"
#include "gmak/structure.hpp"

namespace gmak {

/// Enumeration limits. Work grows as 3^depth in the worst case, so these are
/// hard errors rather than soft warnings.
struct SignCaps {
    int max_subspace_dim = 10; // ambient dimension for subspace sign sets
    int max_omega = 10;        // columns of I_Omega (rows of the image maps)
    int max_orthant_side = 8;  // (3^side - 1)/2 sign cells enumerated
};

/// All achievable sign vectors of C*z as z ranges over the solutions of
/// `base`. Explores the {-,0,+} prefix tree with one feasibility call per
/// node, so infeasible prefixes are pruned immediately. With `symmetric` set
/// (valid only when the solution set of `base` is closed under negation),
/// only prefixes whose first nonzero entry is + are explored and the mirror
/// images are added afterwards.
SignSet achievable_signs(const Mat& C, const SignSystem& base, bool symmetric = false);

/// True iff sigma is the sign vector of some x in span(columns of B);
/// on success *witness (if given) receives such an x, exactly.
bool realizable_in_subspace(const SignVec& sigma, const Mat& B,
                            std::vector<Rat>* witness = nullptr);

/// sign(span B) = all sign vectors realized in the column span of B.
/// Closed under negation and contains 0. Throws CapExceeded when the ambient
/// dimension exceeds caps.max_subspace_dim.
SignSet sign_set_of_subspace(const Mat& B, const SignCaps& caps = {});

/// A region of the ambient space R^a, described as the image under `basis`
/// (a x s) of a sign-constrained parameter region W of R^s, optionally
/// followed by taking Sigma(.) = sign^{-1}(sign(.)).
///   - orthant empty: W = R^s
///   - orthant of length s with entries in {-1,0,+1}: W = the relatively open
///     (or closed) cell where each coordinate has that sign; zero entries stay
///     pinned in the closed variant
struct Region {
    Mat basis;
    std::vector<int8_t> orthant;
    bool closed = false;
    bool sigma = false;

    int ambient() const { return basis.rows(); }

    static Region full_space(int ambient);
    static Region orthant_image(Mat basis, std::vector<int8_t> eps, bool closed);
    static Region sigma_of_span(Mat basis);
    static Region sigma_of_orthant_image(Mat basis, std::vector<int8_t> eps);
};

/// Sign constraints describing the parameter region W of `region` in R^s.
SignSystem region_parameter_system(const Region& region);

/// Exact set of sign vectors of M^T z as z ranges over the region.
/// For Sigma-regions, the union over each realizable rho = sign(z) of the
/// image signs subject to sign(z) = rho.
SignSet sign_set_of_image_on_region(const Mat& M, const Region& region,
                                    const SignCaps& caps = {});

/// Find z in the (non-Sigma part of the) region with sign(M^T z) = tau;
/// used to produce counterexample witnesses.
bool realize_image_sign(const Mat& M, const Region& region, const SignVec& tau,
                        std::vector<Rat>& z_out);

// Condition checkers. These are exact decisions: no check here ever returns
// Status::Inconclusive.

/// sign(S) intersect sign(Stilde^perp) = {0}; at most one equilibrium per
/// stoichiometric class.
ConditionReport check_uniqueness(const Structure& st, const SignCaps& caps = {});

/// delta_tilde = 0 and weak reversibility; equilibria exist for all rates.
ConditionReport check_existence(const Structure& st, bool weakly_reversible);

/// Weak reversibility, delta = delta_tilde = 0, and
/// sign(S) subset of sign(Stilde)-lower-closure; unique equilibrium depends
/// on the class only, not on the rate constants.
ConditionReport check_robust(const Structure& st, bool weakly_reversible,
                             const SignCaps& caps = {});

enum class NoOtherVariant { Global, PerClass };

/// No steady states besides the complex-balanced ones: global variant tests
/// sign(Ttilde) subset of sign(T) total closure with T = im (Y I_Omega)^T,
/// Ttilde = im (Ytilde I_Omega)^T; per-class restricts the left side to
/// Sigma(S).
ConditionReport check_noother(const Structure& st, NoOtherVariant variant,
                              const SignCaps& caps = {});

/// S = Stilde = R^n and, per relatively open sign cell O of R^n (orthants and
/// their boundary cells alike), sign((Ytilde I_Omega)^T (O)) subset of total
/// closure of sign((Y I_Omega)^T (closure O)); makes the negated Jacobian a
/// P-matrix on the positive orthant. Boundary cells matter: the quadratic-form
/// argument must cover every nonzero direction, and restricting to
/// full-dimensional orthants would accept systems whose Jacobian degenerates
/// on an axis.
ConditionReport check_prop_pmatrix(const Structure& st, const SignCaps& caps = {});

/// Trivial sign intersection plus the per-cell inclusion on an orthogonal
/// basis B of S with Sigma-expanded left regions; makes the negated reduced
/// Jacobian a P-matrix.
ConditionReport check_prop_S(const Structure& st, const SignCaps& caps = {});

} // namespace gmak
