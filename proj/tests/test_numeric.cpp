#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gmak/numeric.hpp"
#include "helpers.hpp"

using namespace gmak;
using gmak::test::load_fixture;

namespace {

std::vector<double> random_rates(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    std::vector<double> k;
    for (int i = 0; i < n; ++i) k.push_back(std::pow(10.0, u(rng)));
    return k;
}

// Right-hand side of x' = Y A_k x^Ytilde at a positive point.
Eigen::VectorXd rhs_at(const Network& net, const Structure& st,
                       const std::vector<double>& k, const Eigen::VectorXd& x) {
    Eigen::MatrixXd A = numeric_laplacian(net, k);
    Eigen::VectorXd lnx = x.array().log();
    Eigen::MatrixXd Yt(st.n, st.m), Y(st.n, st.m);
    for (int i = 0; i < st.n; ++i)
        for (int j = 0; j < st.m; ++j) {
            Yt(i, j) = st.Ytilde(i, j).get_d();
            Y(i, j) = st.Y(i, j).get_d();
        }
    Eigen::VectorXd mono = (Yt.transpose() * lnx).array().exp();
    return Y * (A * mono);
}

} // namespace

TEST_CASE("jacobian agrees with finite differences") {
    std::mt19937 rng(4242);
    for (const char* f : {"lotka.gmak", "signaling.gmak", "futile.gmak"}) {
        Network net = load_fixture(f);
        Structure st = analyze_structure(net);
        std::vector<double> k = random_rates(rng, net.num_edges());
        Eigen::VectorXd x(st.n);
        std::uniform_real_distribution<double> u(0.5, 2.0);
        for (int i = 0; i < st.n; ++i) x[i] = u(rng);
        Eigen::MatrixXd J = jacobian_at(net, st, k, x);
        double h = 1e-6;
        for (int j = 0; j < st.n; ++j) {
            Eigen::VectorXd xp = x, xm = x;
            xp[j] += h;
            xm[j] -= h;
            Eigen::VectorXd col =
                (rhs_at(net, st, k, xp) - rhs_at(net, st, k, xm)) / (2 * h);
            for (int i = 0; i < st.n; ++i)
                CHECK(J(i, j) == doctest::Approx(col[i]).epsilon(1e-4));
        }
    }
}

TEST_CASE("scalar birth-death network") {
    // 0 <-> A with rates kf, kb: x* = kf/kb, J = -kb, spectrum on S = {-kb}.
    Network net = parse_network("species A\n"
                                "vertex v1 : 0\nvertex v2 : A\n"
                                "edge v1 -> v2 [kf]\nedge v2 -> v1 [kb]\n");
    Structure st = analyze_structure(net);
    RateAssignment k{{Rat(3), Rat(2)}};
    std::vector<Rat> K = tree_constants(net, st, k);
    AuxGraph aux = chain_forest(st);
    Eigen::VectorXd lnK(2);
    for (int i = 0; i < 2; ++i) lnK[i] = std::log(K[i].get_d());
    bool consistent = false;
    Eigen::VectorXd x = compute_cbe(st, aux, lnK, consistent);
    REQUIRE(consistent);
    CHECK(x[0] == doctest::Approx(1.5).epsilon(1e-12));
    Eigen::MatrixXd J = jacobian_at(net, st, {3.0, 2.0}, x);
    CHECK(J(0, 0) == doctest::Approx(-2.0).epsilon(1e-12));
    Eigen::VectorXcd ev = spectrum_on_S(J, numeric_S_basis(st));
    REQUIRE(ev.size() == 1);
    CHECK(ev[0].real() == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(ev[0].imag() == doctest::Approx(0.0));
}

TEST_CASE("equilibrium residual is tiny across random rates") {
    std::mt19937 rng(9);
    for (const char* f : {"lotka.gmak", "signaling.gmak", "futile.gmak"}) {
        Network net = load_fixture(f);
        Structure st = analyze_structure(net);
        AuxGraph aux = chain_forest(st);
        for (int trial = 0; trial < 20; ++trial) {
            RateAssignment k;
            std::uniform_int_distribution<int> num(1, 40);
            for (int e = 0; e < net.num_edges(); ++e) {
                Rat q(num(rng), num(rng));
                q.canonicalize();
                k.k.push_back(q);
            }
            std::vector<Rat> K = tree_constants(net, st, k);
            Eigen::VectorXd lnK(st.m);
            for (int i = 0; i < st.m; ++i) lnK[i] = std::log(K[i].get_d());
            bool consistent = false;
            Eigen::VectorXd x = compute_cbe(st, aux, lnK, consistent);
            REQUIRE(consistent); // delta~ = 0 fixtures always admit a CBE
            CHECK(cbe_residual_numeric(st, aux, lnK, x) <= 1e-9);
        }
    }
}

TEST_CASE("spectrum rejects non-orthonormal bases") {
    Eigen::MatrixXd J = Eigen::MatrixXd::Identity(2, 2);
    Eigen::MatrixXd B(2, 1);
    B << 1.0, 1.0;
    CHECK_THROWS_AS(spectrum_on_S(J, B), std::invalid_argument);
}

TEST_CASE("sampling is deterministic and seed-sensitive") {
    Network net = load_fixture("lotka.gmak");
    StabilitySummary a = sample_stability(net, 10, 42);
    StabilitySummary b = sample_stability(net, 10, 42);
    CHECK(a.max_reals == b.max_reals);
    CHECK(a.residuals == b.residuals);
    StabilitySummary c = sample_stability(net, 10, 43);
    CHECK(a.max_reals != c.max_reals);
    // Prefix property: the first trials of a longer run match.
    StabilitySummary d = sample_stability(net, 20, 42);
    for (int i = 0; i < 10; ++i) CHECK(a.max_reals[i] == d.max_reals[i]);
}

TEST_CASE("generalized Lotka samples are stable at order one half") {
    Network net = load_fixture("lotka.gmak"); // alpha = beta = 1/2 by default
    StabilitySummary s = sample_stability(net, 100, 1);
    CHECK(s.invalid == 0);
    CHECK(s.worst_residual <= 1e-9);
    CHECK(s.unstable == 0);
    CHECK(s.stable == 100);
}

TEST_CASE("classical Lotka is a center: max real part numerically zero") {
    Network net = load_fixture("lotka.gmak", {{"alpha", Rat(1)}, {"beta", Rat(1)}});
    StabilitySummary s = sample_stability(net, 100, 1);
    CHECK(s.invalid == 0);
    CHECK(s.worst_residual <= 1e-9);
    for (double re : s.max_reals) CHECK(std::abs(re) <= 1e-8);
}
