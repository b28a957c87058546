#include "gmak/report.hpp"

namespace gmak {

std::string status_name(Status s) {
    switch (s) {
        case Status::Holds: return "holds";
        case Status::Fails: return "fails";
        case Status::Inconclusive: return "inconclusive";
        case Status::NotApplicable: return "not_applicable";
    }
    return "unknown";
}

nlohmann::json ConditionReport::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["anchor"] = anchor;
    j["status"] = status_name(status);
    j["evidence"] = evidence.is_null() ? nlohmann::json::object() : evidence;
    j["counterexample"] = counterexample;
    return j;
}

} // namespace gmak
