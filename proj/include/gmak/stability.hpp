#pragma once

#include <string>
#include <vector>

#include "gmak/matrix.hpp"
#include "gmak/poly.hpp"
#include "gmak/report.hpp"

namespace gmak {

enum class CertStatus { CertifiedTrue, CertifiedFalse, Inconclusive };

const char* cert_status_name(CertStatus s);

/// Result of a principal-minor test. certified_false always carries a
/// counterexample that re-evaluates to the claimed violation; inconclusive
/// occurs only for parametric matrices, where coefficient certificates are
/// sufficient but not complete.
struct MinorCertificate {
    std::string kind;
    CertStatus status = CertStatus::Inconclusive;
    nlohmann::json evidence = nlohmann::json::object();
    nlohmann::json counterexample = nlohmann::json::object();
};

/// All principal minors positive.
MinorCertificate is_P_matrix(const Mat& M);

/// No pair of symmetrically placed minors with opposite signs:
/// M[a|b] * M[b|a] >= 0 for all equal-size index sets a, b.
MinorCertificate is_sign_symmetric(const Mat& M);

/// All principal minors nonnegative and, for every order up to r, at least
/// one positive.
MinorCertificate is_P0_plus(const Mat& M, int r);

/// Sufficient D-stability test for A = -M on im A: M (equivalently A) is
/// sign-symmetric, some principal r x r submatrix of M is a P-matrix, and
/// every order-r principal minor of M is nonnegative. Requires r = rank M.
MinorCertificate carlson_check(const Mat& M, int r);

enum class CertKind { P, P0Plus, SignSymmetric, Carlson };

/// Options for the falsification search on parametric matrices.
struct ParamSearch {
    std::vector<Rat> grid = {Rat(1, 8), Rat(1, 2), Rat(1), Rat(2), Rat(8)};
    int random_samples = 200;
    unsigned seed = 20240824;
};

/// Certificates over a matrix of polynomials in positive parameters:
/// "p >= 0 for all lambda > 0" is certified when every coefficient of p is
/// >= 0, "p > 0" when additionally p(1) > 0. Claims that cannot be certified
/// are attacked on a deterministic grid plus seeded random positive rational
/// points; a violating point yields certified_false with the offending index
/// sets and the evaluated minor. Otherwise inconclusive.
MinorCertificate parametric_certificate(const PolyMat& M, CertKind kind, int r,
                                        const ParamSearch& search = {});

/// Necessary condition for D-stability of -M on its image, applied
/// contrapositively: a P0+ failure of M certifies instability. Also verifies
/// rank M(lambda) = r at every sampled point and reports drops.
ConditionReport necessary_condition_report(const PolyMat& M, int r,
                                           const ParamSearch& search = {});

} // namespace gmak
