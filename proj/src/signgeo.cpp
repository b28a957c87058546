#include "gmak/signgeo.hpp"

#include <chrono>
#include <utility>

namespace gmak {

namespace {

class Timer {
public:
    Timer() : t0_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto dt = std::chrono::steady_clock::now() - t0_;
        return std::chrono::duration<double, std::milli>(dt).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

Mat row_of(const Mat& m, int r) {
    Mat out(1, m.cols());
    for (int j = 0; j < m.cols(); ++j) out(0, j) = m(r, j);
    return out;
}

Mat unit_row(int dim, int i, int sign) {
    Mat out(1, dim);
    out(0, i) = sign;
    return out;
}

/// Adjoin sign(C row r) = s to the system.
void constrain_row(SignSystem& sys, const Mat& C, int r, int8_t s) {
    Mat row = row_of(C, r);
    if (s > 0)
        sys.add_strict(row);
    else if (s < 0)
        sys.add_strict(-row);
    else
        sys.add_zero(row);
}

/// Constraints sign(z) = rho on the ambient coordinates.
SignSystem pattern_system(const SignVec& rho) {
    SignSystem sys(rho.dim());
    for (int i = 0; i < rho.dim(); ++i)
        if (rho[i] > 0)
            sys.add_strict(unit_row(rho.dim(), i, 1));
        else if (rho[i] < 0)
            sys.add_strict(unit_row(rho.dim(), i, -1));
        else
            sys.add_zero(unit_row(rho.dim(), i, 1));
    return sys;
}

void enumerate_rec(const Mat& C, const SignSystem& sys, int depth, bool symmetric,
                   bool seen_nonzero, std::vector<int8_t>& prefix, SignSet& out) {
    if (!feasible(sys).feasible) return;
    if (depth == C.rows()) {
        out.insert(SignVec(prefix));
        return;
    }
    // Order +, 0, -; under symmetry the first nonzero entry is forced to +.
    for (int8_t s : {int8_t(1), int8_t(0), int8_t(-1)}) {
        if (symmetric && !seen_nonzero && s < 0) continue;
        SignSystem next = sys;
        constrain_row(next, C, depth, s);
        prefix.push_back(s);
        enumerate_rec(C, next, depth + 1, symmetric, seen_nonzero || s != 0, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

SignSet achievable_signs(const Mat& C, const SignSystem& base, bool symmetric) {
    SignSet out;
    out.dim = C.rows();
    if (base.dim() == 0) {
        // Only the empty vector; the image is 0 unless a strict row (0 > 0)
        // makes the region empty.
        if (base.strict.rows() == 0) out.insert(SignVec(C.rows()));
        return out;
    }
    std::vector<int8_t> prefix;
    enumerate_rec(C, base, 0, symmetric, false, prefix, out);
    if (symmetric) {
        auto half = out.members;
        for (const auto& v : half) out.insert(v.negate());
    }
    return out;
}

bool realizable_in_subspace(const SignVec& sigma, const Mat& B, std::vector<Rat>* witness) {
    if (sigma.is_zero()) {
        if (witness) witness->assign(sigma.dim(), Rat(0));
        return true;
    }
    if (B.cols() == 0) return false;
    SignSystem sys(B.cols());
    for (int i = 0; i < sigma.dim(); ++i) constrain_row(sys, B, i, sigma[i]);
    auto f = feasible(sys);
    if (!f.feasible) return false;
    if (witness) {
        Mat c(B.cols(), 1);
        for (int j = 0; j < B.cols(); ++j) c(j, 0) = f.witness[j];
        Mat x = B * c;
        witness->resize(B.rows());
        for (int i = 0; i < B.rows(); ++i) (*witness)[i] = x(i, 0);
    }
    return true;
}

SignSet sign_set_of_subspace(const Mat& B, const SignCaps& caps) {
    if (B.rows() > caps.max_subspace_dim)
        throw CapExceeded("enumeration too large: ambient dimension " +
                          std::to_string(B.rows()) + " exceeds cap " +
                          std::to_string(caps.max_subspace_dim));
    return achievable_signs(B, SignSystem(B.cols()), /*symmetric=*/true);
}

Region Region::full_space(int ambient) {
    Region r;
    r.basis = Mat::identity(ambient);
    return r;
}

Region Region::orthant_image(Mat basis, std::vector<int8_t> eps, bool closed) {
    Region r;
    r.basis = std::move(basis);
    r.orthant = std::move(eps);
    r.closed = closed;
    return r;
}

Region Region::sigma_of_span(Mat basis) {
    Region r;
    r.basis = std::move(basis);
    r.sigma = true;
    return r;
}

Region Region::sigma_of_orthant_image(Mat basis, std::vector<int8_t> eps) {
    Region r;
    r.basis = std::move(basis);
    r.orthant = std::move(eps);
    r.sigma = true;
    return r;
}

SignSystem region_parameter_system(const Region& region) {
    int s = region.basis.cols();
    SignSystem sys(s);
    for (size_t i = 0; i < region.orthant.size(); ++i) {
        if (region.orthant[i] == 0) {
            // Zero coordinates stay pinned in the closure of the cell.
            sys.add_zero(unit_row(s, int(i), 1));
            continue;
        }
        Mat row = unit_row(s, int(i), region.orthant[i]);
        if (region.closed)
            sys.add_nonneg(row);
        else
            sys.add_strict(row);
    }
    return sys;
}

SignSet sign_set_of_image_on_region(const Mat& M, const Region& region,
                                    const SignCaps& caps) {
    assert(M.rows() == region.ambient());
    if (M.cols() > caps.max_omega)
        throw CapExceeded("enumeration too large: image dimension " +
                          std::to_string(M.cols()) + " exceeds cap " +
                          std::to_string(caps.max_omega));
    bool symmetric = region.orthant.empty();
    if (!region.sigma) {
        Mat C = M.transpose() * region.basis;
        return achievable_signs(C, region_parameter_system(region), symmetric);
    }
    if (region.ambient() > caps.max_subspace_dim)
        throw CapExceeded("enumeration too large: ambient dimension " +
                          std::to_string(region.ambient()) + " exceeds cap " +
                          std::to_string(caps.max_subspace_dim));
    // Realizable ambient sign patterns of the underlying region, then the
    // image signs per pattern.
    SignSet patterns = achievable_signs(region.basis, region_parameter_system(region), symmetric);
    SignSet out;
    out.dim = M.cols();
    Mat Mt = M.transpose();
    for (const auto& rho : patterns.members) {
        SignSet part = achievable_signs(Mt, pattern_system(rho));
        for (const auto& tau : part.members) out.insert(tau);
    }
    return out;
}

bool realize_image_sign(const Mat& M, const Region& region, const SignVec& tau,
                        std::vector<Rat>& z_out) {
    Mat Mt = M.transpose();
    if (!region.sigma) {
        SignSystem sys = region_parameter_system(region);
        Mat C = Mt * region.basis;
        for (int r = 0; r < C.rows(); ++r) constrain_row(sys, C, r, tau[r]);
        auto f = feasible(sys);
        if (!f.feasible) return false;
        Mat w(region.basis.cols(), 1);
        for (int j = 0; j < w.rows(); ++j) w(j, 0) = f.witness[j];
        Mat z = region.basis * w;
        z_out.resize(z.rows());
        for (int i = 0; i < z.rows(); ++i) z_out[i] = z(i, 0);
        return true;
    }
    SignSet patterns =
        achievable_signs(region.basis, region_parameter_system(region), region.orthant.empty());
    for (const auto& rho : patterns.members) {
        SignSystem sys = pattern_system(rho);
        for (int r = 0; r < Mt.rows(); ++r) constrain_row(sys, Mt, r, tau[r]);
        auto f = feasible(sys);
        if (f.feasible) {
            z_out = f.witness;
            z_out.resize(region.ambient());
            return true;
        }
    }
    return false;
}

namespace {

nlohmann::json rat_vec_json(const std::vector<Rat>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& q : v) a.push_back(rat_to_string(q));
    return a;
}

Mat orthogonal_complement(const Mat& basis) {
    return kernel_basis(basis.transpose());
}

/// First nonzero common sign vector, or nullptr-like empty optional.
bool nonzero_intersection(const SignSet& a, const SignSet& b, SignVec& out) {
    SignSet inter = a.intersect(b);
    for (const auto& v : inter.members)
        if (!v.is_zero()) {
            out = v;
            return true;
        }
    return false;
}

// Every nonzero sign pattern in {-,0,+}^d whose first nonzero coordinate is +.
// These index the relatively open cells of the coordinate arrangement, one per
// antipodal pair; negating a cell negates both image sign sets, so the other
// half carries no extra information.
std::vector<std::vector<int8_t>> half_cells(int d) {
    std::vector<std::vector<int8_t>> out;
    std::vector<int8_t> eps(d, 0);
    auto rec = [&](auto&& self, int i, bool seen_nonzero) -> void {
        if (i == d) {
            if (seen_nonzero) out.push_back(eps);
            return;
        }
        for (int8_t s : {int8_t(1), int8_t(0), int8_t(-1)}) {
            if (!seen_nonzero && s < 0) continue;
            eps[i] = s;
            self(self, i + 1, seen_nonzero || s != 0);
        }
        eps[i] = 0;
    };
    rec(rec, 0, false);
    return out;
}

} // namespace

ConditionReport check_uniqueness(const Structure& st, const SignCaps& caps) {
    Timer timer;
    ConditionReport rep;
    rep.name = "uniqueness";
    rep.anchor = "unique";

    Mat Stp = orthogonal_complement(st.Stilde_basis);
    SignSet signS = sign_set_of_subspace(st.S_basis, caps);
    SignSet signStp = sign_set_of_subspace(Stp, caps);

    rep.evidence["criterion"] = "sign(S) & sign(S~perp) == {0}";
    rep.evidence["dim_S"] = st.dim_S();
    rep.evidence["dim_Stilde_perp"] = Stp.cols();
    rep.evidence["sign_set_size_S"] = signS.size();
    rep.evidence["sign_set_size_Stilde_perp"] = signStp.size();

    SignVec common;
    if (nonzero_intersection(signS, signStp, common)) {
        rep.status = Status::Fails;
        std::vector<Rat> ws, wp;
        realizable_in_subspace(common, st.S_basis, &ws);
        realizable_in_subspace(common, Stp, &wp);
        rep.counterexample["sigma"] = common.to_string();
        rep.counterexample["witness_in_S"] = rat_vec_json(ws);
        rep.counterexample["witness_in_Stilde_perp"] = rat_vec_json(wp);
    } else {
        rep.status = Status::Holds;
    }
    rep.ms = timer.ms();
    return rep;
}

ConditionReport check_existence(const Structure& st, bool weakly_reversible) {
    Timer timer;
    ConditionReport rep;
    rep.name = "existence";
    rep.anchor = "exists";
    rep.evidence["delta_tilde"] = st.delta_tilde;
    rep.evidence["weakly_reversible"] = weakly_reversible;
    rep.status = (st.delta_tilde == 0 && weakly_reversible) ? Status::Holds : Status::Fails;
    rep.ms = timer.ms();
    return rep;
}

ConditionReport check_robust(const Structure& st, bool weakly_reversible,
                             const SignCaps& caps) {
    Timer timer;
    ConditionReport rep;
    rep.name = "robustness";
    rep.anchor = "robust";

    bool deficiencies = st.delta == 0 && st.delta_tilde == 0;
    SignSet signS = sign_set_of_subspace(st.S_basis, caps);
    SignSet lower = closure(sign_set_of_subspace(st.Stilde_basis, caps), ClosureMode::Lower);
    bool inclusion = signS.subset_of(lower);

    rep.evidence["weakly_reversible"] = weakly_reversible;
    rep.evidence["delta"] = st.delta;
    rep.evidence["delta_tilde"] = st.delta_tilde;
    rep.evidence["sign_inclusion"] = inclusion;

    if (weakly_reversible && deficiencies && inclusion) {
        rep.status = Status::Holds;
    } else {
        rep.status = Status::Fails;
        if (!inclusion) {
            for (const auto& sigma : signS.members)
                if (!lower.contains(sigma)) {
                    rep.counterexample["sigma_in_S"] = sigma.to_string();
                    break;
                }
        }
    }
    rep.ms = timer.ms();
    return rep;
}

ConditionReport check_noother(const Structure& st, NoOtherVariant variant,
                              const SignCaps& caps) {
    Timer timer;
    ConditionReport rep;
    rep.name = variant == NoOtherVariant::Global ? "no-other-steady-states"
                                                 : "no-other-steady-states-per-class";
    rep.anchor = "noother";

    Mat YI = st.Y * st.I_Omega;
    Mat YtI = st.Ytilde * st.I_Omega;
    SignSet T = sign_set_of_image_on_region(YI, Region::full_space(st.n), caps);
    SignSet Tclosed = closure(T, ClosureMode::Total);

    Region left = variant == NoOtherVariant::Global
                      ? Region::full_space(st.n)
                      : Region::sigma_of_span(st.S_basis);
    SignSet Ttilde = sign_set_of_image_on_region(YtI, left, caps);

    rep.evidence["variant"] = variant == NoOtherVariant::Global ? "global" : "per-class";
    rep.evidence["sign_set_size_T"] = T.size();
    rep.evidence["sign_set_size_Ttilde"] = Ttilde.size();

    rep.status = Status::Holds;
    for (const auto& tau : Ttilde.members) {
        if (!Tclosed.contains(tau)) {
            rep.status = Status::Fails;
            rep.counterexample["tau_tilde"] = tau.to_string();
            std::vector<Rat> z;
            if (realize_image_sign(YtI, left, tau, z))
                rep.counterexample["witness_z"] = rat_vec_json(z);
            break;
        }
    }
    rep.ms = timer.ms();
    return rep;
}

ConditionReport check_prop_pmatrix(const Structure& st, const SignCaps& caps) {
    Timer timer;
    ConditionReport rep;
    rep.name = "jacobian-p-matrix";
    rep.anchor = "pmatrix";

    if (st.dim_S() != st.n || st.dim_Stilde() != st.n) {
        rep.status = Status::NotApplicable;
        rep.evidence["reason"] = "requires S and S~ of full dimension";
        rep.evidence["dim_S"] = st.dim_S();
        rep.evidence["dim_Stilde"] = st.dim_Stilde();
        rep.ms = timer.ms();
        return rep;
    }
    if (st.n > caps.max_orthant_side)
        throw CapExceeded("enumeration too large: " + std::to_string(st.n) +
                          " orthant coordinates exceed cap " +
                          std::to_string(caps.max_orthant_side));

    Mat YI = st.Y * st.I_Omega;
    Mat YtI = st.Ytilde * st.I_Omega;
    Mat id = Mat::identity(st.n);

    rep.status = Status::Holds;
    // The quadratic-form argument behind this condition must handle every
    // nonzero direction, including those on orthant boundaries, so the
    // enumeration walks all relatively open cells of the coordinate
    // arrangement, not just the full-dimensional orthants.
    auto cells = half_cells(st.n);
    rep.evidence["cells_checked"] = cells.size();
    rep.evidence["symmetry"] = "negation halves the cell count";

    for (const auto& eps : cells) {
        Region open = Region::orthant_image(id, eps, /*closed=*/false);
        Region closed_r = Region::orthant_image(id, eps, /*closed=*/true);
        SignSet left = sign_set_of_image_on_region(YtI, open, caps);
        SignSet right =
            closure(sign_set_of_image_on_region(YI, closed_r, caps), ClosureMode::Total);
        for (const auto& tau : left.members) {
            if (!right.contains(tau)) {
                rep.status = Status::Fails;
                rep.counterexample["orthant"] = SignVec(eps).to_string();
                rep.counterexample["tau_tilde"] = tau.to_string();
                std::vector<Rat> z;
                if (realize_image_sign(YtI, open, tau, z))
                    rep.counterexample["witness_z"] = rat_vec_json(z);
                break;
            }
        }
        if (rep.status == Status::Fails) break;
    }
    rep.ms = timer.ms();
    return rep;
}

ConditionReport check_prop_S(const Structure& st, const SignCaps& caps) {
    Timer timer;
    ConditionReport rep;
    rep.name = "reduced-jacobian-p-matrix";
    rep.anchor = "prop-s";

    Mat Stp = orthogonal_complement(st.Stilde_basis);
    SignSet signS = sign_set_of_subspace(st.S_basis, caps);
    SignSet signStp = sign_set_of_subspace(Stp, caps);
    SignVec common;
    bool trivial_intersection = !nonzero_intersection(signS, signStp, common);
    rep.evidence["sign_intersection_trivial"] = trivial_intersection;
    if (!trivial_intersection) {
        rep.status = Status::Fails;
        rep.counterexample["sigma"] = common.to_string();
        rep.ms = timer.ms();
        return rep;
    }

    int s = st.dim_S();
    rep.evidence["dim_S"] = s;
    if (s == 0) {
        // No orthants of R^0 contain a nonzero vector.
        rep.status = Status::Holds;
        rep.evidence["cells_checked"] = 0;
        rep.ms = timer.ms();
        return rep;
    }
    if (s > caps.max_orthant_side)
        throw CapExceeded("enumeration too large: " + std::to_string(s) +
                          " orthant coordinates exceed cap " +
                          std::to_string(caps.max_orthant_side));

    Mat B = orthogonalize(st.S_basis);
    Mat YI = st.Y * st.I_Omega;
    Mat YtI = st.Ytilde * st.I_Omega;

    rep.status = Status::Holds;
    // Same cell decomposition as the full-dimensional check: boundary
    // directions of the parameter orthants need covering too.
    auto cells = half_cells(s);
    rep.evidence["cells_checked"] = cells.size();
    for (const auto& eps : cells) {
        Region left_region = Region::sigma_of_orthant_image(B, eps);
        Region right_region = Region::orthant_image(B, eps, /*closed=*/true);
        SignSet left = sign_set_of_image_on_region(YtI, left_region, caps);
        SignSet right =
            closure(sign_set_of_image_on_region(YI, right_region, caps), ClosureMode::Total);
        for (const auto& tau : left.members) {
            if (!right.contains(tau)) {
                rep.status = Status::Fails;
                rep.counterexample["orthant"] = SignVec(eps).to_string();
                rep.counterexample["tau_tilde"] = tau.to_string();
                std::vector<Rat> z;
                if (realize_image_sign(YtI, left_region, tau, z))
                    rep.counterexample["witness_z"] = rat_vec_json(z);
                break;
            }
        }
        if (rep.status == Status::Fails) break;
    }
    rep.ms = timer.ms();
    return rep;
}

} // namespace gmak
