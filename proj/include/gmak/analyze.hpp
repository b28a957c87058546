#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gmak/laplacian.hpp"
#include "gmak/network.hpp"
#include "gmak/report.hpp"
#include "gmak/signgeo.hpp"
#include "gmak/stability.hpp"

namespace gmak {

struct AnalyzeOptions {
    SignCaps caps;
    int max_cycles = 10000;
    int samples = 0; // 0 = skip the numeric sampling section
    std::uint64_t seed = 1;
    double tol_stable = 1e-8;
};

/// Known condition names for single-condition runs:
/// existence, uniqueness, robust, noother, prop-pmatrix, prop-s, carlson,
/// p0plus, cycle-stability.
const std::vector<std::string>& condition_names();

/// Run one named condition. Throws std::invalid_argument for unknown names.
/// Cap overruns surface as NotApplicable with the reason in evidence.
ConditionReport run_condition(const Network& net, const std::string& condition,
                              const AnalyzeOptions& opts = {});

/// Full report: structure summary, every condition in declaration order,
/// and (when opts.samples > 0) the numeric sampling summary.
/// Schema "gmak-report/1".
nlohmann::json analyze_network(const Network& net, const AnalyzeOptions& opts = {});

/// Equilibrium computation for concrete rates: tree constants, the computed
/// point, its residual, and the spectrum on S.
nlohmann::json cbe_report(const Network& net, const RateAssignment& k);

} // namespace gmak
