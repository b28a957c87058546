#include "gmak/analyze.hpp"

#include <chrono>

#include "gmak/numeric.hpp"

namespace gmak {

namespace {

ConditionReport from_certificate(const std::string& name, const std::string& anchor,
                                 MinorCertificate cert) {
    ConditionReport rep;
    rep.name = name;
    rep.anchor = anchor;
    switch (cert.status) {
        case CertStatus::CertifiedTrue: rep.status = Status::Holds; break;
        case CertStatus::CertifiedFalse: rep.status = Status::Fails; break;
        case CertStatus::Inconclusive: rep.status = Status::Inconclusive; break;
    }
    rep.evidence = std::move(cert.evidence);
    rep.evidence["certificate"] = cert.kind;
    rep.counterexample = std::move(cert.counterexample);
    return rep;
}

/// Negated parametric reduced Jacobian and the cycle list behind it.
PolyMat negated_parametric_jacobian(const Network& net, const Structure& st,
                                    int max_cycles, std::vector<Cycle>& cycles) {
    cycles = enumerate_cycles(net, max_cycles);
    return -parametric_reduced_jacobian(st, cycles);
}

ConditionReport check_carlson(const Network& net, const Structure& st,
                              const AnalyzeOptions& opts) {
    std::vector<Cycle> cycles;
    PolyMat mJ = negated_parametric_jacobian(net, st, opts.max_cycles, cycles);
    int r = st.dim_S();
    if (r == 0) {
        ConditionReport rep;
        rep.name = "d-stability-carlson";
        rep.anchor = "carlson";
        rep.status = Status::Holds;
        rep.evidence["reason"] = "S = {0}, nothing to stabilize";
        return rep;
    }
    try {
        ConditionReport rep =
            from_certificate("d-stability-carlson", "carlson",
                             parametric_certificate(mJ, CertKind::Carlson, r));
        rep.evidence["rank"] = r;
        rep.evidence["cycles"] = cycles.size();
        return rep;
    } catch (const std::invalid_argument& e) {
        ConditionReport rep;
        rep.name = "d-stability-carlson";
        rep.anchor = "carlson";
        rep.status = Status::NotApplicable;
        rep.evidence["reason"] = e.what();
        return rep;
    }
}

ConditionReport check_p0plus(const Network& net, const Structure& st,
                             const AnalyzeOptions& opts) {
    std::vector<Cycle> cycles;
    PolyMat mJ = negated_parametric_jacobian(net, st, opts.max_cycles, cycles);
    int r = st.dim_S();
    if (r == 0) {
        ConditionReport rep;
        rep.name = "necessary-stability-condition";
        rep.anchor = "nec";
        rep.status = Status::Holds;
        rep.evidence["reason"] = "S = {0}, nothing to stabilize";
        return rep;
    }
    return necessary_condition_report(mJ, r);
}

ConditionReport check_cycle_stability(const Network& net, const Structure& st,
                                      const AnalyzeOptions& opts) {
    ConditionReport rep;
    rep.name = "cycle-stability";
    rep.anchor = "stab_cycle";
    std::vector<Cycle> cycles = enumerate_cycles(net, opts.max_cycles);
    if (cycles.size() != 1) {
        rep.status = Status::NotApplicable;
        rep.evidence["reason"] = "defined for single-cycle graphs only";
        rep.evidence["cycles"] = cycles.size();
        return rep;
    }
    // One cycle: J(lambda) = lambda * J(1), so all certificates reduce to a
    // single exact evaluation.
    Mat mJ1 = -(st.Y * cycle_laplacian(cycles[0], st.m) * st.Ytilde.transpose());
    int r = st.dim_S();
    if (r == 0) {
        rep.status = Status::Holds;
        rep.evidence["reason"] = "S = {0}, nothing to stabilize";
        return rep;
    }
    if (rank(mJ1) != r) {
        rep.status = Status::NotApplicable;
        rep.evidence["reason"] = "rank of the reduced Jacobian differs from dim S";
        rep.evidence["rank"] = rank(mJ1);
        rep.evidence["dim_S"] = r;
        return rep;
    }
    MinorCertificate nec = is_P0_plus(mJ1, r);
    MinorCertificate suff = carlson_check(mJ1, r);
    rep.evidence["necessary_p0plus"] = cert_status_name(nec.status);
    rep.evidence["sufficient_carlson"] = cert_status_name(suff.status);
    if (suff.status == CertStatus::CertifiedTrue) {
        rep.status = Status::Holds;
        rep.evidence["p_submatrix"] = suff.evidence["p_submatrix"];
    } else if (nec.status == CertStatus::CertifiedFalse) {
        rep.status = Status::Fails;
        rep.counterexample = nec.counterexample;
    } else {
        // Necessary passes, sufficient does not: no decision either way.
        rep.status = Status::Inconclusive;
    }
    return rep;
}

} // namespace

const std::vector<std::string>& condition_names() {
    static const std::vector<std::string> names = {
        "existence", "uniqueness", "robust",   "noother",         "prop-pmatrix",
        "prop-s",    "carlson",    "p0plus",   "cycle-stability",
    };
    return names;
}

ConditionReport run_condition(const Network& net, const std::string& condition,
                              const AnalyzeOptions& opts) {
    Structure st = analyze_structure(net);
    bool wr = is_weakly_reversible(net);
    auto timed = [](auto&& f) {
        auto t0 = std::chrono::steady_clock::now();
        ConditionReport rep = f();
        rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                     .count();
        return rep;
    };
    try {
        if (condition == "existence") return check_existence(st, wr);
        if (condition == "uniqueness") return check_uniqueness(st, opts.caps);
        if (condition == "robust") return check_robust(st, wr, opts.caps);
        if (condition == "noother")
            return check_noother(st, NoOtherVariant::Global, opts.caps);
        if (condition == "prop-pmatrix") return check_prop_pmatrix(st, opts.caps);
        if (condition == "prop-s") return check_prop_S(st, opts.caps);
        if (condition == "carlson") return timed([&] { return check_carlson(net, st, opts); });
        if (condition == "p0plus") return timed([&] { return check_p0plus(net, st, opts); });
        if (condition == "cycle-stability")
            return timed([&] { return check_cycle_stability(net, st, opts); });
    } catch (const CapExceeded& e) {
        ConditionReport rep;
        rep.name = condition;
        rep.status = Status::NotApplicable;
        rep.evidence["reason"] = e.what();
        return rep;
    }
    throw std::invalid_argument("unknown condition: " + condition);
}

nlohmann::json analyze_network(const Network& net, const AnalyzeOptions& opts) {
    Structure st = analyze_structure(net);
    nlohmann::json j;
    j["schema"] = "gmak-report/1";
    j["network"] = {{"m", st.m},
                    {"l", st.l},
                    {"n", st.n},
                    {"delta", st.delta},
                    {"delta_tilde", st.delta_tilde},
                    {"weakly_reversible", is_weakly_reversible(net)}};
    nlohmann::json checks = nlohmann::json::array();
    for (const std::string& name : condition_names())
        checks.push_back(run_condition(net, name, opts).to_json());
    // The per-class variant rides along; it is not separately addressable.
    {
        ConditionReport rep;
        try {
            rep = check_noother(st, NoOtherVariant::PerClass, opts.caps);
        } catch (const CapExceeded& e) {
            rep.name = "no-other-steady-states-per-class";
            rep.status = Status::NotApplicable;
            rep.evidence["reason"] = e.what();
        }
        checks.push_back(rep.to_json());
    }
    j["checks"] = checks;
    if (opts.samples > 0) {
        StabilitySummary s = sample_stability(net, opts.samples, opts.seed, opts.tol_stable);
        j["samples"] = {{"trials", s.trials},
                        {"stable", s.stable},
                        {"unstable", s.unstable},
                        {"invalid", s.invalid},
                        {"worst_residual", s.worst_residual},
                        {"worst_max_real", s.worst_max_real},
                        {"seed", opts.seed}};
    }
    return j;
}

nlohmann::json cbe_report(const Network& net, const RateAssignment& k) {
    Structure st = analyze_structure(net);
    if (!is_weakly_reversible(net))
        throw std::invalid_argument("equilibrium computation needs weak reversibility");
    std::vector<Rat> K = tree_constants(net, st, k);
    AuxGraph aux = chain_forest(st);
    Eigen::VectorXd lnK(st.m);
    for (int i = 0; i < st.m; ++i) lnK[i] = std::log(K[i].get_d());
    bool consistent = false;
    Eigen::VectorXd x = compute_cbe(st, aux, lnK, consistent);
    nlohmann::json j;
    nlohmann::json Kj = nlohmann::json::array();
    for (const auto& q : K) Kj.push_back(rat_to_string(q));
    j["tree_constants"] = Kj;
    if (!consistent) {
        j["found"] = false;
        j["reason"] = "no CBE for these rates";
        return j;
    }
    j["found"] = true;
    nlohmann::json xs = nlohmann::json::array();
    for (int i = 0; i < x.size(); ++i) xs.push_back(x[i]);
    j["x"] = xs;
    j["residual"] = cbe_residual_numeric(st, aux, lnK, x);
    std::vector<double> kd;
    for (const auto& q : k.k) kd.push_back(q.get_d());
    Eigen::MatrixXd J = jacobian_at(net, st, kd, x);
    Eigen::VectorXcd ev = spectrum_on_S(J, numeric_S_basis(st));
    nlohmann::json spec = nlohmann::json::array();
    for (int i = 0; i < ev.size(); ++i)
        spec.push_back({{"re", ev[i].real()}, {"im", ev[i].imag()}});
    j["spectrum_on_S"] = spec;
    return j;
}

} // namespace gmak
