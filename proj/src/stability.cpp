#include "gmak/stability.hpp"

#include <random>
#include <stdexcept>

namespace gmak {

const char* cert_status_name(CertStatus s) {
    switch (s) {
        case CertStatus::CertifiedTrue: return "certified_true";
        case CertStatus::CertifiedFalse: return "certified_false";
        case CertStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    if (s == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        out.push_back(idx);
        int i = s - 1;
        while (i >= 0 && idx[i] == n - s + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

nlohmann::json index_json(const std::vector<int>& idx) {
    return nlohmann::json(idx);
}

nlohmann::json rat_vec_json(const std::vector<Rat>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& q : v) a.push_back(rat_to_string(q));
    return a;
}

/// Deterministic candidate points for falsification: full grid, then seeded
/// random positive rationals.
std::vector<std::vector<Rat>> candidate_points(int nvars, const ParamSearch& search) {
    std::vector<std::vector<Rat>> pts(1);
    for (int i = 0; i < nvars; ++i) {
        std::vector<std::vector<Rat>> next;
        for (const auto& p : pts)
            for (const auto& g : search.grid) {
                auto q = p;
                q.push_back(g);
                next.push_back(std::move(q));
            }
        pts = std::move(next);
    }
    std::mt19937 rng(search.seed);
    std::uniform_int_distribution<int> num(1, 100);
    for (int t = 0; t < search.random_samples; ++t) {
        std::vector<Rat> p(nvars);
        for (int i = 0; i < nvars; ++i) {
            Rat q(num(rng), num(rng));
            q.canonicalize();
            p[i] = q;
        }
        pts.push_back(std::move(p));
    }
    return pts;
}

} // namespace

MinorCertificate is_P_matrix(const Mat& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("P test needs a square matrix");
    MinorCertificate cert;
    cert.kind = "P";
    int n = M.rows();
    int checked = 0;
    for (int s = 1; s <= n; ++s)
        for (const auto& idx : subsets_of_size(n, s)) {
            Rat v = minor_det(M, idx, idx);
            ++checked;
            if (v <= 0) {
                cert.status = CertStatus::CertifiedFalse;
                cert.counterexample["index_set"] = index_json(idx);
                cert.counterexample["minor"] = rat_to_string(v);
                return cert;
            }
        }
    cert.status = CertStatus::CertifiedTrue;
    cert.evidence["minors_checked"] = checked;
    return cert;
}

MinorCertificate is_sign_symmetric(const Mat& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("sign-symmetry needs a square matrix");
    MinorCertificate cert;
    cert.kind = "sign_symmetric";
    int n = M.rows();
    int checked = 0;
    for (int s = 1; s <= n; ++s) {
        auto sets = subsets_of_size(n, s);
        for (const auto& a : sets)
            for (const auto& b : sets) {
                Rat prod = minor_det(M, a, b) * minor_det(M, b, a);
                ++checked;
                if (prod < 0) {
                    cert.status = CertStatus::CertifiedFalse;
                    cert.counterexample["alpha"] = index_json(a);
                    cert.counterexample["beta"] = index_json(b);
                    cert.counterexample["product"] = rat_to_string(prod);
                    return cert;
                }
            }
    }
    cert.status = CertStatus::CertifiedTrue;
    cert.evidence["pairs_checked"] = checked;
    return cert;
}

MinorCertificate is_P0_plus(const Mat& M, int r) {
    if (M.rows() != M.cols()) throw std::invalid_argument("P0+ test needs a square matrix");
    if (r < 1 || r > M.rows()) throw std::invalid_argument("order out of range");
    MinorCertificate cert;
    cert.kind = "P0plus";
    int n = M.rows();
    for (int s = 1; s <= n; ++s) {
        bool positive_seen = false;
        for (const auto& idx : subsets_of_size(n, s)) {
            Rat v = minor_det(M, idx, idx);
            if (v < 0) {
                cert.status = CertStatus::CertifiedFalse;
                cert.counterexample["index_set"] = index_json(idx);
                cert.counterexample["minor"] = rat_to_string(v);
                return cert;
            }
            if (v > 0) positive_seen = true;
        }
        if (s <= r && !positive_seen) {
            cert.status = CertStatus::CertifiedFalse;
            cert.counterexample["order_without_positive_minor"] = s;
            return cert;
        }
    }
    cert.status = CertStatus::CertifiedTrue;
    cert.evidence["order"] = r;
    return cert;
}

MinorCertificate carlson_check(const Mat& M, int r) {
    if (r != rank(M)) throw std::invalid_argument("order must equal the rank");
    MinorCertificate cert;
    cert.kind = "carlson";
    MinorCertificate ss = is_sign_symmetric(M);
    if (ss.status == CertStatus::CertifiedFalse) {
        cert.status = CertStatus::CertifiedFalse;
        cert.counterexample["sign_symmetry"] = ss.counterexample;
        return cert;
    }
    int n = M.rows();
    for (const auto& idx : subsets_of_size(n, r)) {
        Rat v = minor_det(M, idx, idx);
        if (v < 0) {
            cert.status = CertStatus::CertifiedFalse;
            cert.counterexample["index_set"] = index_json(idx);
            cert.counterexample["minor"] = rat_to_string(v);
            return cert;
        }
    }
    for (const auto& idx : subsets_of_size(n, r)) {
        MinorCertificate sub = is_P_matrix(M.submatrix(idx, idx));
        if (sub.status == CertStatus::CertifiedTrue) {
            cert.status = CertStatus::CertifiedTrue;
            cert.evidence["p_submatrix"] = index_json(idx);
            return cert;
        }
    }
    cert.status = CertStatus::CertifiedFalse;
    cert.counterexample["reason"] = "no principal P-submatrix of the required order";
    return cert;
}

namespace {

struct PolyMinor {
    std::vector<int> idx;
    Poly p;
};

std::vector<std::vector<PolyMinor>> principal_poly_minors(const PolyMat& M, int max_order) {
    int n = M.rows();
    std::vector<std::vector<PolyMinor>> by_order(max_order + 1);
    for (int s = 1; s <= max_order; ++s)
        for (const auto& idx : subsets_of_size(n, s))
            by_order[s].push_back({idx, poly_minor(M, idx, idx)});
    return by_order;
}

/// Certified "p(lambda) > 0 for all lambda > 0".
bool cert_positive(const Poly& p) {
    if (!p.coeffs_nonneg()) return false;
    std::vector<Rat> ones(p.nvars(), Rat(1));
    return p.eval(ones) > 0;
}

MinorCertificate parametric_sign_symmetric(const PolyMat& M, const ParamSearch& search) {
    MinorCertificate cert;
    cert.kind = "sign_symmetric";
    int n = M.rows();
    std::vector<std::pair<std::vector<int>, std::vector<int>>> undecided;
    std::vector<Poly> undecided_polys;
    for (int s = 1; s <= n; ++s) {
        auto sets = subsets_of_size(n, s);
        for (const auto& a : sets)
            for (const auto& b : sets) {
                Poly prod = poly_minor(M, a, b) * poly_minor(M, b, a);
                if (prod.coeffs_nonneg()) continue;
                undecided.emplace_back(a, b);
                undecided_polys.push_back(std::move(prod));
            }
    }
    if (undecided.empty()) {
        cert.status = CertStatus::CertifiedTrue;
        cert.evidence["certified_by"] = "coefficient signs";
        return cert;
    }
    for (const auto& pt : candidate_points(M.nvars(), search))
        for (size_t i = 0; i < undecided.size(); ++i) {
            Rat v = undecided_polys[i].eval(pt);
            if (v < 0) {
                cert.status = CertStatus::CertifiedFalse;
                cert.counterexample["alpha"] = index_json(undecided[i].first);
                cert.counterexample["beta"] = index_json(undecided[i].second);
                cert.counterexample["lambda"] = rat_vec_json(pt);
                cert.counterexample["product"] = rat_to_string(v);
                return cert;
            }
        }
    cert.status = CertStatus::Inconclusive;
    cert.evidence["undecided_pairs"] = undecided.size();
    return cert;
}

MinorCertificate parametric_P(const PolyMat& M, const ParamSearch& search) {
    MinorCertificate cert;
    cert.kind = "P";
    auto minors = principal_poly_minors(M, M.rows());
    std::vector<const PolyMinor*> undecided;
    for (int s = 1; s <= M.rows(); ++s)
        for (const auto& pm : minors[s])
            if (!cert_positive(pm.p)) undecided.push_back(&pm);
    if (undecided.empty()) {
        cert.status = CertStatus::CertifiedTrue;
        cert.evidence["certified_by"] = "coefficient signs";
        return cert;
    }
    for (const auto& pt : candidate_points(M.nvars(), search))
        for (const auto* pm : undecided) {
            Rat v = pm->p.eval(pt);
            if (v <= 0) {
                cert.status = CertStatus::CertifiedFalse;
                cert.counterexample["index_set"] = index_json(pm->idx);
                cert.counterexample["lambda"] = rat_vec_json(pt);
                cert.counterexample["minor"] = rat_to_string(v);
                return cert;
            }
        }
    cert.status = CertStatus::Inconclusive;
    cert.evidence["undecided_minors"] = undecided.size();
    return cert;
}

MinorCertificate parametric_P0_plus(const PolyMat& M, int r, const ParamSearch& search) {
    MinorCertificate cert;
    cert.kind = "P0plus";
    int n = M.rows();
    auto minors = principal_poly_minors(M, n);

    bool all_nonneg_cert = true;
    for (int s = 1; s <= n; ++s)
        for (const auto& pm : minors[s])
            if (!pm.p.coeffs_nonneg()) all_nonneg_cert = false;
    bool coverage_cert = true;
    for (int s = 1; s <= r; ++s) {
        bool some_positive = false;
        for (const auto& pm : minors[s])
            if (cert_positive(pm.p)) some_positive = true;
        if (!some_positive) coverage_cert = false;
    }
    if (all_nonneg_cert && coverage_cert) {
        cert.status = CertStatus::CertifiedTrue;
        cert.evidence["certified_by"] = "coefficient signs";
        cert.evidence["order"] = r;
        return cert;
    }
    // Attack both failure modes at concrete points: a negative minor, or an
    // order <= r whose principal minors all vanish there.
    for (const auto& pt : candidate_points(M.nvars(), search)) {
        for (int s = 1; s <= n; ++s) {
            bool positive_here = false;
            for (const auto& pm : minors[s]) {
                Rat v = pm.p.eval(pt);
                if (v < 0) {
                    cert.status = CertStatus::CertifiedFalse;
                    cert.counterexample["index_set"] = index_json(pm.idx);
                    cert.counterexample["lambda"] = rat_vec_json(pt);
                    cert.counterexample["minor"] = rat_to_string(v);
                    return cert;
                }
                if (v > 0) positive_here = true;
            }
            if (s <= r && !positive_here) {
                cert.status = CertStatus::CertifiedFalse;
                cert.counterexample["order_without_positive_minor"] = s;
                cert.counterexample["lambda"] = rat_vec_json(pt);
                return cert;
            }
        }
    }
    cert.status = CertStatus::Inconclusive;
    return cert;
}

MinorCertificate parametric_carlson(const PolyMat& M, int r, const ParamSearch& search) {
    MinorCertificate cert;
    cert.kind = "carlson";
    std::vector<Rat> ones(M.nvars(), Rat(1));
    if (rank(M.eval(ones)) != r)
        throw std::invalid_argument("order must equal the rank at lambda = 1");

    MinorCertificate ss = parametric_sign_symmetric(M, search);
    if (ss.status == CertStatus::CertifiedFalse) {
        cert.status = CertStatus::CertifiedFalse;
        cert.counterexample["sign_symmetry"] = ss.counterexample;
        return cert;
    }

    int n = M.rows();
    bool order_r_nonneg = true;
    std::vector<PolyMinor> undecided_r;
    for (const auto& idx : subsets_of_size(n, r)) {
        Poly p = poly_minor(M, idx, idx);
        if (!p.coeffs_nonneg()) {
            order_r_nonneg = false;
            undecided_r.push_back({idx, std::move(p)});
        }
    }
    if (!order_r_nonneg)
        for (const auto& pt : candidate_points(M.nvars(), search))
            for (const auto& pm : undecided_r) {
                Rat v = pm.p.eval(pt);
                if (v < 0) {
                    cert.status = CertStatus::CertifiedFalse;
                    cert.counterexample["index_set"] = index_json(pm.idx);
                    cert.counterexample["lambda"] = rat_vec_json(pt);
                    cert.counterexample["minor"] = rat_to_string(v);
                    return cert;
                }
            }

    // Witness search: a principal r-subset whose own principal minors are
    // all certified positive for every lambda > 0.
    std::vector<int> witness;
    for (const auto& idx : subsets_of_size(n, r)) {
        bool all_pos = true;
        for (int s = 1; s <= r && all_pos; ++s)
            for (const auto& sub : subsets_of_size(r, s)) {
                std::vector<int> mapped(sub.size());
                for (size_t i = 0; i < sub.size(); ++i) mapped[i] = idx[sub[i]];
                if (!cert_positive(poly_minor(M, mapped, mapped))) {
                    all_pos = false;
                    break;
                }
            }
        if (all_pos) {
            witness = idx;
            break;
        }
    }

    if (ss.status == CertStatus::CertifiedTrue && order_r_nonneg && !witness.empty()) {
        cert.status = CertStatus::CertifiedTrue;
        cert.evidence["p_submatrix"] = index_json(witness);
        return cert;
    }
    cert.status = CertStatus::Inconclusive;
    cert.evidence["sign_symmetry"] = cert_status_name(ss.status);
    cert.evidence["order_r_minors_certified"] = order_r_nonneg;
    cert.evidence["p_submatrix_found"] = !witness.empty();
    return cert;
}

} // namespace

MinorCertificate parametric_certificate(const PolyMat& M, CertKind kind, int r,
                                        const ParamSearch& search) {
    if (M.rows() != M.cols()) throw std::invalid_argument("square matrix required");
    switch (kind) {
        case CertKind::P: return parametric_P(M, search);
        case CertKind::P0Plus: return parametric_P0_plus(M, r, search);
        case CertKind::SignSymmetric: return parametric_sign_symmetric(M, search);
        case CertKind::Carlson: return parametric_carlson(M, r, search);
    }
    throw std::logic_error("unreachable");
}

ConditionReport necessary_condition_report(const PolyMat& M, int r,
                                           const ParamSearch& search) {
    ConditionReport rep;
    rep.name = "necessary-stability-condition";
    rep.anchor = "nec";

    // Rank stability of the parametric matrix across the sampled points; a
    // drop would make the image-space premise fail there.
    nlohmann::json drops = nlohmann::json::array();
    for (const auto& pt : candidate_points(M.nvars(), search)) {
        int rk = rank(M.eval(pt));
        if (rk != r) {
            nlohmann::json d;
            d["lambda"] = rat_vec_json(pt);
            d["rank"] = rk;
            drops.push_back(d);
        }
    }
    rep.evidence["expected_rank"] = r;
    rep.evidence["rank_drops"] = drops;

    MinorCertificate cert = parametric_certificate(M, CertKind::P0Plus, r, search);
    rep.evidence["p0plus"] = cert_status_name(cert.status);
    switch (cert.status) {
        case CertStatus::CertifiedTrue:
            rep.status = Status::Holds;
            break;
        case CertStatus::CertifiedFalse:
            rep.status = Status::Fails;
            rep.evidence["verdict"] = "not D-stable on the image";
            rep.counterexample = cert.counterexample;
            break;
        case CertStatus::Inconclusive:
            rep.status = Status::Inconclusive;
            break;
    }
    return rep;
}

} // namespace gmak
