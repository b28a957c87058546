#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "gmak/laplacian.hpp"
#include "gmak/network.hpp"
#include "gmak/structure.hpp"

namespace gmak {

/// Laplacian with floating-point rates, same convention as the exact one.
Eigen::MatrixXd numeric_laplacian(const Network& net, const std::vector<double>& k);

/// Minimum-norm solution of the log-linear equilibrium system
/// (Ytilde I_E)^T ln x = I_E^T ln K over the forest edges. `consistent` is
/// cleared when the system has no solution at the given tolerance (then the
/// returned point is meaningless).
Eigen::VectorXd compute_cbe(const Structure& st, const AuxGraph& aux,
                            const Eigen::VectorXd& lnK, bool& consistent,
                            double tol = 1e-9);

/// Max relative binomial residual of x over the forest edges.
double cbe_residual_numeric(const Structure& st, const AuxGraph& aux,
                            const Eigen::VectorXd& lnK, const Eigen::VectorXd& x);

/// J(x) = Y A_k diag(x^Ytilde) Ytilde^T diag(x^-1), all positive x.
Eigen::MatrixXd jacobian_at(const Network& net, const Structure& st,
                            const std::vector<double>& k, const Eigen::VectorXd& x);

/// Eigenvalues of B^T J B; B must be numerically orthonormal (Gram residual
/// <= 1e-12, else std::invalid_argument).
Eigen::VectorXcd spectrum_on_S(const Eigen::MatrixXd& J, const Eigen::MatrixXd& B);

/// Orthonormal numeric basis of S, from the exact orthogonal basis.
Eigen::MatrixXd numeric_S_basis(const Structure& st);

struct StabilitySummary {
    int trials = 0;
    int stable = 0;
    int unstable = 0;
    int invalid = 0; // no CBE for the sampled rates
    double worst_residual = 0;      // over valid samples
    double worst_max_real = -1e300; // largest max-real-part seen
    std::vector<double> max_reals;  // one per valid sample
    std::vector<double> residuals;  // one per valid sample
};

/// Deterministic sampling harness: log-uniform rates over [1e-2, 1e2]
/// (rationalized so the tree constants stay exact), CBE via the log-linear
/// solve, spectrum on S. Per-trial generators are derived from the seed, so
/// results do not depend on evaluation order.
StabilitySummary sample_stability(const Network& net, int trials, std::uint64_t seed,
                                  double tol_stable = 1e-8);

} // namespace gmak
