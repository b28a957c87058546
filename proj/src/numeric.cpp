#include "gmak/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace gmak {

namespace {

Eigen::MatrixXd to_eigen(const Mat& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
    return out;
}

// splitmix64; decorrelates per-trial streams from one base seed.
std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

Eigen::MatrixXd numeric_laplacian(const Network& net, const std::vector<double>& k) {
    if (int(k.size()) != net.num_edges())
        throw std::invalid_argument("rate assignment size mismatch");
    int m = net.num_vertices();
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, m);
    for (int e = 0; e < net.num_edges(); ++e) {
        if (!(k[e] > 0)) throw std::invalid_argument("rates must be positive");
        const Edge& ed = net.edges[e];
        A(ed.tgt, ed.src) += k[e];
        A(ed.src, ed.src) -= k[e];
    }
    return A;
}

Eigen::VectorXd compute_cbe(const Structure& st, const AuxGraph& aux,
                            const Eigen::VectorXd& lnK, bool& consistent, double tol) {
    Eigen::MatrixXd IE = to_eigen(aux_incidence(aux, st.m));
    Eigen::MatrixXd M = (to_eigen(st.Ytilde) * IE).transpose(); // |E| x n
    Eigen::VectorXd rhs = IE.transpose() * lnK;
    Eigen::VectorXd u = M.completeOrthogonalDecomposition().solve(rhs);
    double scale = 1.0 + rhs.lpNorm<Eigen::Infinity>();
    consistent = (M * u - rhs).lpNorm<Eigen::Infinity>() <= tol * scale;
    return u.array().exp();
}

double cbe_residual_numeric(const Structure& st, const AuxGraph& aux,
                            const Eigen::VectorXd& lnK, const Eigen::VectorXd& x) {
    Eigen::VectorXd lnx = x.array().log();
    Eigen::VectorXd q = to_eigen(st.Ytilde).transpose() * lnx - lnK; // ln(x^y~ / K)
    double worst = 0;
    for (const auto& [src, tgt] : aux.edges) {
        double a = std::exp(q[tgt]), b = std::exp(q[src]);
        double denom = std::max({std::abs(a), std::abs(b), 1e-300});
        worst = std::max(worst, std::abs(a - b) / denom);
    }
    return worst;
}

Eigen::MatrixXd jacobian_at(const Network& net, const Structure& st,
                            const std::vector<double>& k, const Eigen::VectorXd& x) {
    for (int i = 0; i < x.size(); ++i)
        if (!(x[i] > 0)) throw std::invalid_argument("point must be positive");
    Eigen::MatrixXd A = numeric_laplacian(net, k);
    Eigen::MatrixXd Yt = to_eigen(st.Ytilde);
    Eigen::VectorXd lnx = x.array().log();
    Eigen::VectorXd mono = (Yt.transpose() * lnx).array().exp(); // x^{y~(i)} per vertex
    return to_eigen(st.Y) * A * mono.asDiagonal() * Yt.transpose() *
           x.cwiseInverse().asDiagonal();
}

Eigen::VectorXcd spectrum_on_S(const Eigen::MatrixXd& J, const Eigen::MatrixXd& B) {
    if (B.cols() == 0) return Eigen::VectorXcd(0);
    Eigen::MatrixXd gram = B.transpose() * B;
    double resid = (gram - Eigen::MatrixXd::Identity(B.cols(), B.cols()))
                       .lpNorm<Eigen::Infinity>();
    if (resid > 1e-12) throw std::invalid_argument("basis not orthonormal");
    Eigen::EigenSolver<Eigen::MatrixXd> es(B.transpose() * J * B, false);
    return es.eigenvalues();
}

Eigen::MatrixXd numeric_S_basis(const Structure& st) {
    if (st.dim_S() == 0) return Eigen::MatrixXd(st.n, 0);
    Eigen::MatrixXd B = to_eigen(orthogonalize(st.S_basis));
    for (int j = 0; j < B.cols(); ++j) B.col(j).normalize();
    return B;
}

StabilitySummary sample_stability(const Network& net, int trials, std::uint64_t seed,
                                  double tol_stable) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    Structure st = analyze_structure(net);
    AuxGraph aux = chain_forest(st);
    Eigen::MatrixXd B = numeric_S_basis(st);

    StabilitySummary out;
    out.trials = trials;
    for (int t = 0; t < trials; ++t) {
        // Per-trial stream: rates log-uniform over [1e-2, 1e2], rationalized
        // so the tree constants can be computed exactly.
        std::uint64_t s = mix(seed ^ (0x51ed2701ull + std::uint64_t(t) * 0x9e3779b9ull));
        RateAssignment k;
        std::vector<double> kd;
        for (int e = 0; e < net.num_edges(); ++e) {
            s = mix(s);
            double u = -2.0 + 4.0 * (double(s >> 11) / 9007199254740992.0);
            double v = std::pow(10.0, u);
            Rat q(long(std::llround(v * 1e6)), 1000000);
            q.canonicalize();
            if (q <= 0) q = Rat(1, 1000000);
            k.k.push_back(q);
            kd.push_back(q.get_d());
        }
        std::vector<Rat> K = tree_constants(net, st, k);
        Eigen::VectorXd lnK(st.m);
        for (int i = 0; i < st.m; ++i) lnK[i] = std::log(K[i].get_d());

        bool consistent = false;
        Eigen::VectorXd x = compute_cbe(st, aux, lnK, consistent);
        if (!consistent) {
            ++out.invalid;
            continue;
        }
        double resid = cbe_residual_numeric(st, aux, lnK, x);
        Eigen::MatrixXd J = jacobian_at(net, st, kd, x);
        Eigen::VectorXcd ev = spectrum_on_S(J, B);
        double max_re = ev.size() == 0 ? -1.0 : ev.real().maxCoeff();
        double radius = ev.size() == 0 ? 0.0 : ev.cwiseAbs().maxCoeff();
        bool stable = max_re < -tol_stable * (1.0 + radius);
        (stable ? out.stable : out.unstable)++;
        out.max_reals.push_back(max_re);
        out.residuals.push_back(resid);
        out.worst_residual = std::max(out.worst_residual, resid);
        out.worst_max_real = std::max(out.worst_max_real, max_re);
    }
    return out;
}

} // namespace gmak
