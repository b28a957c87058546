#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gmak.h"

namespace {

struct KeyVals {
    std::vector<std::string> names;
    std::vector<std::string> values;
};

// "name=value" pairs from repeated flags.
KeyVals split_pairs(const std::vector<std::string>& raw, const std::string& what) {
    KeyVals kv;
    for (const auto& s : raw) {
        auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0)
            throw CLI::ValidationError(what + " expects name=value, got '" + s + "'");
        kv.names.push_back(s.substr(0, eq));
        kv.values.push_back(s.substr(eq + 1));
    }
    return kv;
}

std::vector<const char*> c_ptrs(const std::vector<std::string>& v) {
    std::vector<const char*> out;
    for (const auto& s : v) out.push_back(s.c_str());
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Options {
    int max_omega = -1;
    int max_cycles = -1;
    int samples = -1;
    long long seed = -1;
    double tol_stable = -1;

    std::string to_json() const {
        nlohmann::json j = nlohmann::json::object();
        if (max_omega >= 0) j["max_omega"] = max_omega;
        if (max_cycles >= 0) j["max_cycles"] = max_cycles;
        if (samples >= 0) j["samples"] = samples;
        if (seed >= 0) j["seed"] = seed;
        if (tol_stable >= 0) j["tol_stable"] = tol_stable;
        return j.dump();
    }
};

class NetworkHandle {
public:
    NetworkHandle(const std::string& path, const std::vector<std::string>& params) {
        std::string text = read_file(path);
        KeyVals kv = split_pairs(params, "--param");
        char err[512] = {0};
        auto names = c_ptrs(kv.names);
        auto values = c_ptrs(kv.values);
        net_ = gmak_parse(text.c_str(), names.data(), values.data(), names.size(), err,
                          sizeof err);
        if (!net_) throw std::runtime_error(std::string("parse error: ") + err);
    }
    ~NetworkHandle() { gmak_network_free(net_); }
    NetworkHandle(const NetworkHandle&) = delete;
    NetworkHandle& operator=(const NetworkHandle&) = delete;
    gmak_network* get() const { return net_; }

private:
    gmak_network* net_ = nullptr;
};

void print_human_report(const nlohmann::json& j) {
    const auto& n = j["network"];
    std::cout << "network: m=" << n["m"] << " l=" << n["l"] << " n=" << n["n"]
              << " delta=" << n["delta"] << " delta_tilde=" << n["delta_tilde"]
              << " weakly_reversible=" << (n["weakly_reversible"].get<bool>() ? "yes" : "no")
              << "\n\n";
    for (const auto& c : j["checks"]) {
        std::cout << "  " << c["name"].get<std::string>() << ": "
                  << c["status"].get<std::string>();
        if (c.contains("counterexample") && c["counterexample"].is_object() &&
            !c["counterexample"].empty())
            std::cout << "  (counterexample: " << c["counterexample"].dump() << ")";
        std::cout << "\n";
    }
    if (j.contains("samples")) {
        const auto& s = j["samples"];
        std::cout << "\nsamples: trials=" << s["trials"] << " stable=" << s["stable"]
                  << " unstable=" << s["unstable"] << " invalid=" << s["invalid"]
                  << " worst_residual=" << s["worst_residual"]
                  << " worst_max_real=" << s["worst_max_real"] << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reaction network analyzer: exact sign-vector and minor "
                 "certificates for complex-balanced equilibria"};
    app.require_subcommand(1);

    std::string file, condition;
    std::vector<std::string> params, rates;
    bool as_json = false;
    Options opts;

    auto add_common = [&](CLI::App* cmd, bool with_samples) {
        cmd->add_option("file", file, "network description file")->required();
        cmd->add_option("--param", params, "override a declared parameter (name=value)");
        cmd->add_flag("--json", as_json, "emit the JSON report");
        cmd->add_option("--max-omega", opts.max_omega, "cap on sign-enumeration width");
        cmd->add_option("--max-cycles", opts.max_cycles, "cap on enumerated cycles");
        if (with_samples) {
            cmd->add_option("--samples", opts.samples, "numeric sampling trials");
            cmd->add_option("--seed", opts.seed, "sampling seed");
            cmd->add_option("--tol-stable", opts.tol_stable, "stability margin factor");
        }
    };

    CLI::App* analyze = app.add_subcommand("analyze", "run every checker");
    add_common(analyze, true);

    CLI::App* check = app.add_subcommand("check", "run one condition");
    check->add_option("condition", condition,
                      "existence | uniqueness | robust | noother | prop-pmatrix | "
                      "prop-s | carlson | p0plus | cycle-stability")
        ->required();
    add_common(check, false);

    CLI::App* cbe = app.add_subcommand("cbe", "compute an equilibrium for given rates");
    cbe->add_option("file", file, "network description file")->required();
    cbe->add_option("--param", params, "override a declared parameter (name=value)");
    cbe->add_option("--rates", rates, "rate per edge (symbol=value)")->required();
    cbe->add_flag("--json", as_json, "emit the JSON report");

    CLI11_PARSE(app, argc, argv);

    try {
        NetworkHandle net(file, params);
        char err[512] = {0};
        std::string options_json = opts.to_json();

        if (analyze->parsed()) {
            char* out = nullptr;
            gmak_status st = gmak_analyze_json(net.get(), options_json.c_str(), &out, err,
                                               sizeof err);
            if (st != GMAK_OK) {
                std::cerr << "error: " << err << "\n";
                return 3;
            }
            if (as_json) {
                std::cout << out << "\n";
            } else {
                print_human_report(nlohmann::json::parse(out));
            }
            gmak_string_free(out);
            return 0;
        }

        if (check->parsed()) {
            char* out = nullptr;
            int verdict = 2;
            gmak_status st = gmak_check_json(net.get(), condition.c_str(),
                                             options_json.c_str(), &verdict, &out, err,
                                             sizeof err);
            if (st != GMAK_OK) {
                std::cerr << "error: " << err << "\n";
                return 3;
            }
            nlohmann::json j = nlohmann::json::parse(out);
            if (as_json)
                std::cout << out << "\n";
            else
                std::cout << j["name"].get<std::string>() << ": "
                          << j["status"].get<std::string>() << "\n";
            gmak_string_free(out);
            return verdict;
        }

        // cbe
        KeyVals kv = split_pairs(rates, "--rates");
        auto names = c_ptrs(kv.names);
        auto values = c_ptrs(kv.values);
        char* out = nullptr;
        gmak_status st = gmak_cbe_json(net.get(), names.data(), values.data(),
                                       names.size(), &out, err, sizeof err);
        if (st != GMAK_OK) {
            std::cerr << "error: " << err << "\n";
            return 3;
        }
        nlohmann::json j = nlohmann::json::parse(out);
        if (as_json) {
            std::cout << out << "\n";
        } else if (!j["found"].get<bool>()) {
            std::cout << "no CBE for these rates\n";
        } else {
            std::cout << "x* =";
            for (const auto& v : j["x"]) std::cout << " " << v.get<double>();
            std::cout << "\nresidual = " << j["residual"].get<double>() << "\n";
            std::cout << "tree constants:";
            for (const auto& v : j["tree_constants"])
                std::cout << " " << v.get<std::string>();
            std::cout << "\nspectrum on S:";
            for (const auto& ev : j["spectrum_on_S"])
                std::cout << " (" << ev["re"].get<double>() << (ev["im"].get<double>() < 0 ? "" : "+")
                          << ev["im"].get<double>() << "i)";
            std::cout << "\n";
        }
        bool found = j["found"].get<bool>();
        gmak_string_free(out);
        return found ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
