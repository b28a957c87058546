#include "gmak.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "gmak/analyze.hpp"
#include "gmak/network.hpp"

using namespace gmak;

struct gmak_network {
    Network net;
};

namespace {

void put_err(char* buf, size_t len, const std::string& msg) {
    if (!buf || len == 0) return;
    std::snprintf(buf, len, "%s", msg.c_str());
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

AnalyzeOptions parse_options(const char* options_json) {
    AnalyzeOptions opts;
    if (!options_json || !*options_json) return opts;
    nlohmann::json j = nlohmann::json::parse(options_json);
    if (j.contains("max_omega")) opts.caps.max_omega = j["max_omega"].get<int>();
    if (j.contains("max_subspace_dim"))
        opts.caps.max_subspace_dim = j["max_subspace_dim"].get<int>();
    if (j.contains("max_cycles")) opts.max_cycles = j["max_cycles"].get<int>();
    if (j.contains("samples")) opts.samples = j["samples"].get<int>();
    if (j.contains("seed")) opts.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("tol_stable")) opts.tol_stable = j["tol_stable"].get<double>();
    return opts;
}

template <typename F>
gmak_status guarded(char* errbuf, size_t errbuf_len, F&& f) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        put_err(errbuf, errbuf_len, std::string("bad options: ") + e.what());
        return GMAK_ERR_INVALID;
    } catch (const std::invalid_argument& e) {
        put_err(errbuf, errbuf_len, e.what());
        return GMAK_ERR_INVALID;
    } catch (const std::exception& e) {
        put_err(errbuf, errbuf_len, e.what());
        return GMAK_ERR_INTERNAL;
    }
}

} // namespace

extern "C" {

gmak_network* gmak_parse(const char* text, const char* const* names,
                         const char* const* values, size_t nparams,
                         char* errbuf, size_t errbuf_len) {
    if (!text) {
        put_err(errbuf, errbuf_len, "null input");
        return nullptr;
    }
    try {
        std::vector<std::pair<std::string, Rat>> overrides;
        for (size_t i = 0; i < nparams; ++i) {
            auto q = parse_rational(values[i]);
            if (!q) {
                put_err(errbuf, errbuf_len,
                        std::string("bad rational for parameter ") + names[i] + ": " +
                            values[i]);
                return nullptr;
            }
            overrides.emplace_back(names[i], *q);
        }
        auto* h = new gmak_network{parse_network(text, overrides)};
        return h;
    } catch (const ParseError& e) {
        put_err(errbuf, errbuf_len,
                std::to_string(e.line) + ":" + std::to_string(e.col) + ": " + e.what());
        return nullptr;
    } catch (const std::exception& e) {
        put_err(errbuf, errbuf_len, e.what());
        return nullptr;
    }
}

void gmak_network_free(gmak_network* net) { delete net; }

gmak_status gmak_analyze_json(const gmak_network* net, const char* options_json,
                              char** out_json, char* errbuf, size_t errbuf_len) {
    if (!net || !out_json) {
        put_err(errbuf, errbuf_len, "null argument");
        return GMAK_ERR_INVALID;
    }
    return guarded(errbuf, errbuf_len, [&] {
        AnalyzeOptions opts = parse_options(options_json);
        nlohmann::json j = analyze_network(net->net, opts);
        *out_json = dup_string(j.dump(2));
        return *out_json ? GMAK_OK : GMAK_ERR_INTERNAL;
    });
}

gmak_status gmak_check_json(const gmak_network* net, const char* condition,
                            const char* options_json, int* out_verdict,
                            char** out_json, char* errbuf, size_t errbuf_len) {
    if (!net || !condition || !out_verdict || !out_json) {
        put_err(errbuf, errbuf_len, "null argument");
        return GMAK_ERR_INVALID;
    }
    return guarded(errbuf, errbuf_len, [&] {
        AnalyzeOptions opts = parse_options(options_json);
        ConditionReport rep = run_condition(net->net, condition, opts);
        switch (rep.status) {
            case Status::Holds: *out_verdict = 0; break;
            case Status::Fails: *out_verdict = 1; break;
            default: *out_verdict = 2; break;
        }
        *out_json = dup_string(rep.to_json().dump(2));
        return *out_json ? GMAK_OK : GMAK_ERR_INTERNAL;
    });
}

gmak_status gmak_cbe_json(const gmak_network* net, const char* const* names,
                          const char* const* values, size_t nrates,
                          char** out_json, char* errbuf, size_t errbuf_len) {
    if (!net || !out_json || (nrates > 0 && (!names || !values))) {
        put_err(errbuf, errbuf_len, "null argument");
        return GMAK_ERR_INVALID;
    }
    return guarded(errbuf, errbuf_len, [&] {
        const Network& n = net->net;
        RateAssignment k;
        k.k.assign(n.num_edges(), Rat(0));
        std::vector<char> seen(n.num_edges(), 0);
        for (size_t i = 0; i < nrates; ++i) {
            std::string sym = names[i];
            int edge = -1;
            for (int e = 0; e < n.num_edges(); ++e)
                if (n.edges[e].rate_symbol == sym) edge = e;
            if (edge < 0) throw std::invalid_argument("unknown rate symbol: " + sym);
            auto q = parse_rational(values[i]);
            if (!q) throw std::invalid_argument("bad rational for rate " + sym);
            k.k[edge] = *q;
            seen[edge] = 1;
        }
        for (int e = 0; e < n.num_edges(); ++e)
            if (!seen[e])
                throw std::invalid_argument(
                    "missing rate for edge " +
                    (n.edges[e].rate_symbol.empty()
                         ? "#" + std::to_string(e)
                         : n.edges[e].rate_symbol));
        nlohmann::json j = cbe_report(n, k);
        *out_json = dup_string(j.dump(2));
        return *out_json ? GMAK_OK : GMAK_ERR_INTERNAL;
    });
}

void gmak_string_free(char* s) { std::free(s); }

const char* gmak_version(void) { return "1.0.0"; }

} // extern "C"
