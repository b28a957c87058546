#include "gmak/signvec.hpp"

namespace gmak {

SignVec SignVec::of(const std::vector<Rat>& x) {
    std::vector<int8_t> e(x.size());
    for (size_t i = 0; i < x.size(); ++i) e[i] = int8_t(sgn(x[i]));
    return SignVec(std::move(e));
}

bool SignVec::is_zero() const {
    for (auto v : e_)
        if (v) return false;
    return true;
}

SignVec SignVec::negate() const {
    SignVec n(dim());
    for (int i = 0; i < dim(); ++i) n.e_[i] = int8_t(-e_[i]);
    return n;
}

SignVec SignVec::product(const SignVec& o) const {
    SignVec p(dim());
    for (int i = 0; i < dim(); ++i) p.e_[i] = int8_t(e_[i] * o.e_[i]);
    return p;
}

bool SignVec::leq(const SignVec& o) const {
    // sigma <= tau iff sigma_i is 0 or equals tau_i, componentwise.
    for (int i = 0; i < dim(); ++i)
        if (e_[i] != 0 && e_[i] != o.e_[i]) return false;
    return true;
}

bool SignVec::orthogonal(const SignVec& o) const {
    bool pos = false, neg = false;
    for (int i = 0; i < dim(); ++i) {
        int p = e_[i] * o.e_[i];
        if (p > 0) pos = true;
        if (p < 0) neg = true;
    }
    return (!pos && !neg) || (pos && neg);
}

std::string SignVec::to_string() const {
    std::string s = "(";
    for (int i = 0; i < dim(); ++i) {
        if (i) s += ",";
        s += e_[i] > 0 ? "+" : (e_[i] < 0 ? "-" : "0");
    }
    return s + ")";
}

bool SignSet::subset_of(const SignSet& o) const {
    for (const auto& v : members)
        if (!o.contains(v)) return false;
    return true;
}

SignSet SignSet::intersect(const SignSet& o) const {
    SignSet r;
    r.dim = dim;
    for (const auto& v : members)
        if (o.contains(v)) r.members.insert(v);
    return r;
}

namespace {

// All sigma <= tau: every nonzero entry of tau kept or dropped to 0.
void emit_lower(const SignVec& tau, SignSet& out) {
    std::vector<int> nz;
    for (int i = 0; i < tau.dim(); ++i)
        if (tau[i]) nz.push_back(i);
    for (uint64_t mask = 0; mask < (uint64_t(1) << nz.size()); ++mask) {
        SignVec s(tau.dim());
        for (size_t b = 0; b < nz.size(); ++b)
            if (mask & (uint64_t(1) << b)) s[nz[b]] = tau[nz[b]];
        out.insert(s);
    }
}

// All sigma >= tau: zero entries of tau take any sign.
void emit_upper(const SignVec& tau, SignSet& out) {
    std::vector<int> zs;
    for (int i = 0; i < tau.dim(); ++i)
        if (!tau[i]) zs.push_back(i);
    std::vector<int8_t> choice(zs.size(), -1);
    for (;;) {
        SignVec s = tau;
        for (size_t b = 0; b < zs.size(); ++b) s[zs[b]] = choice[b];
        out.insert(s);
        size_t b = 0;
        while (b < choice.size() && choice[b] == 1) choice[b++] = -1;
        if (b == choice.size()) break;
        ++choice[b];
    }
}

} // namespace

SignSet closure(const SignSet& s, ClosureMode mode) {
    SignSet out;
    out.dim = s.dim;
    for (const auto& tau : s.members) {
        if (mode == ClosureMode::Lower || mode == ClosureMode::Total) emit_lower(tau, out);
        if ((mode == ClosureMode::Upper || mode == ClosureMode::Total) && !tau.is_zero())
            emit_upper(tau, out);
    }
    return out;
}

std::vector<SignVec> all_sign_vectors(int dim) {
    std::vector<SignVec> out;
    std::vector<int8_t> e(dim, -1);
    for (;;) {
        out.emplace_back(e);
        int b = 0;
        while (b < dim && e[b] == 1) e[b++] = -1;
        if (b == dim) break;
        ++e[b];
    }
    return out;
}

} // namespace gmak
