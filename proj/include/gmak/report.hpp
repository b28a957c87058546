#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

namespace gmak {

enum class Status { Holds, Fails, Inconclusive, NotApplicable };

std::string status_name(Status s);

/// Outcome of a named check, with machine-recheckable evidence on both the
/// positive and negative side.
struct ConditionReport {
    std::string name;
    std::string anchor; // short identifier of the underlying criterion
    Status status = Status::Inconclusive;
    nlohmann::json evidence;
    nlohmann::json counterexample;
    double ms = 0.0;

    nlohmann::json to_json() const;
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace gmak
