#include "gmak/feasibility.hpp"

#include <algorithm>
#include <cassert>

namespace gmak {

namespace lp {

namespace {

// Dense tableau: rows = constraints, columns = structural + slack + artificial
// variables, last column = rhs. Objective kept in an extra row.
class Tableau {
public:
    Tableau(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows + 1) * (cols + 1)) {}

    Rat& at(int i, int j) { return a_[size_t(i) * (cols_ + 1) + j]; }
    Rat& obj(int j) { return at(rows_, j); }

    int rows_, cols_;
    std::vector<Rat> a_;
    std::vector<int> basis; // basic variable per row

    void pivot(int pr, int pc) {
        Rat p = at(pr, pc);
        for (int j = 0; j <= cols_; ++j) at(pr, j) /= p;
        for (int i = 0; i <= rows_; ++i) {
            if (i == pr) continue;
            Rat f = at(i, pc);
            if (f == 0) continue;
            for (int j = 0; j <= cols_; ++j) at(i, j) -= f * at(pr, j);
        }
        basis[pr] = pc;
    }

    // Bland's rule: entering = smallest index with positive reduced profit,
    // leaving = smallest basic index among min-ratio rows.
    bool simplex() {
        for (;;) {
            int pc = -1;
            for (int j = 0; j < cols_; ++j)
                if (obj(j) > 0) { pc = j; break; }
            if (pc < 0) return true;
            int pr = -1;
            Rat best;
            for (int i = 0; i < rows_; ++i) {
                if (at(i, pc) <= 0) continue;
                Rat ratio = at(i, cols_) / at(i, pc);
                if (pr < 0 || ratio < best || (ratio == best && basis[i] < basis[pr])) {
                    pr = i;
                    best = ratio;
                }
            }
            if (pr < 0) return false; // unbounded
            pivot(pr, pc);
        }
    }
};

} // namespace

Solution maximize(const std::vector<Rat>& c, const std::vector<Constraint>& cons) {
    int n = int(c.size());
    int m = int(cons.size());

    // Count auxiliary columns.
    int n_slack = 0, n_art = 0;
    for (const auto& con : cons) {
        if (con.rel != Rel::Eq) ++n_slack;
    }
    // Normalize rhs >= 0 first; artificials needed for Eq rows and Ge rows.
    std::vector<Constraint> rows = cons;
    for (auto& con : rows) {
        assert(int(con.coeff.size()) == n);
        if (con.rhs < 0) {
            for (auto& v : con.coeff) v = -v;
            con.rhs = -con.rhs;
            con.rel = con.rel == Rel::Le ? Rel::Ge : (con.rel == Rel::Ge ? Rel::Le : Rel::Eq);
        }
        if (con.rel != Rel::Le) ++n_art;
    }

    int cols = n + n_slack + n_art;
    Tableau t(m, cols);
    t.basis.assign(m, -1);
    int s = n, a = n + n_slack;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t.at(i, j) = rows[i].coeff[j];
        t.at(i, cols) = rows[i].rhs;
        switch (rows[i].rel) {
            case Rel::Le:
                t.at(i, s) = 1;
                t.basis[i] = s++;
                break;
            case Rel::Ge:
                t.at(i, s) = -1;
                ++s;
                t.at(i, a) = 1;
                t.basis[i] = a++;
                break;
            case Rel::Eq:
                t.at(i, a) = 1;
                t.basis[i] = a++;
                break;
        }
    }

    Solution sol;

    if (n_art > 0) {
        // Phase 1: maximize -(sum of artificials).
        for (int j = n + n_slack; j < cols; ++j) t.obj(j) = -1;
        for (int i = 0; i < m; ++i)
            if (t.basis[i] >= n + n_slack)
                for (int j = 0; j <= cols; ++j) t.obj(j) += t.at(i, j);
        t.simplex();
        if (t.obj(cols) != 0) return sol; // infeasible
        // Drive remaining artificials out of the basis.
        for (int i = 0; i < m; ++i) {
            if (t.basis[i] < n + n_slack) continue;
            int pc = -1;
            for (int j = 0; j < n + n_slack; ++j)
                if (t.at(i, j) != 0) { pc = j; break; }
            if (pc >= 0) t.pivot(i, pc);
            // else: redundant row, artificial stays basic at zero
        }
        for (int j = 0; j <= cols; ++j) t.obj(j) = 0;
        // Artificials are done; blank their columns so they can never re-enter.
        for (int j = n + n_slack; j < cols; ++j)
            for (int i = 0; i < m; ++i) t.at(i, j) = 0;
    }

    // Phase 2 objective, expressed in the current basis.
    for (int j = 0; j < n; ++j) t.obj(j) = c[j];
    for (int i = 0; i < m; ++i) {
        int b = t.basis[i];
        Rat f = t.obj(b);
        if (f != 0)
            for (int j = 0; j <= cols; ++j) t.obj(j) -= f * t.at(i, j);
    }

    if (!t.simplex()) {
        sol.feasible = true;
        sol.unbounded = true;
        return sol;
    }

    sol.feasible = true;
    sol.x.assign(n, 0);
    for (int i = 0; i < m; ++i)
        if (t.basis[i] < n) sol.x[t.basis[i]] = t.at(i, cols);
    sol.objective = 0;
    for (int j = 0; j < n; ++j) sol.objective += c[j] * sol.x[j];
    return sol;
}

} // namespace lp

Feasibility feasible(const SignSystem& sys) {
    int d = sys.dim();
    Feasibility out;

    // Variables: u_0..u_{d-1}, v_0..v_{d-1} (z = u - v), t. All >= 0.
    int nv = 2 * d + 1;
    int tvar = 2 * d;
    std::vector<lp::Constraint> cons;
    auto lin = [&](const Mat& rowsrc, int i, const Rat& tcoef) {
        lp::Constraint c;
        c.coeff.assign(nv, 0);
        for (int j = 0; j < d; ++j) {
            c.coeff[j] = rowsrc(i, j);
            c.coeff[d + j] = -rowsrc(i, j);
        }
        c.coeff[tvar] = tcoef;
        c.rhs = 0;
        return c;
    };
    for (int i = 0; i < sys.strict.rows(); ++i) {
        auto c = lin(sys.strict, i, Rat(-1));
        c.rel = lp::Rel::Ge; // strict row - t >= 0
        cons.push_back(std::move(c));
    }
    for (int i = 0; i < sys.nonneg.rows(); ++i) {
        auto c = lin(sys.nonneg, i, Rat(0));
        c.rel = lp::Rel::Ge;
        cons.push_back(std::move(c));
    }
    for (int i = 0; i < sys.zero.rows(); ++i) {
        auto c = lin(sys.zero, i, Rat(0));
        c.rel = lp::Rel::Eq;
        cons.push_back(std::move(c));
    }
    // Box |z_j| <= 1 and t <= 1 keep the optimum finite.
    for (int j = 0; j < d; ++j) {
        lp::Constraint c;
        c.coeff.assign(nv, 0);
        c.coeff[j] = 1;
        c.coeff[d + j] = -1;
        c.rel = lp::Rel::Le;
        c.rhs = 1;
        cons.push_back(c);
        c.coeff[j] = -1;
        c.coeff[d + j] = 1;
        cons.push_back(c);
    }
    {
        lp::Constraint c;
        c.coeff.assign(nv, 0);
        c.coeff[tvar] = 1;
        c.rel = lp::Rel::Le;
        c.rhs = 1;
        cons.push_back(c);
    }

    std::vector<Rat> obj(nv, 0);
    obj[tvar] = 1;
    lp::Solution sol = lp::maximize(obj, cons);
    assert(sol.feasible && !sol.unbounded); // z = 0, t = 0 is always admissible

    out.margin = sol.objective;
    if (sol.objective <= 0) return out;

    out.feasible = true;
    out.witness.assign(d, 0);
    Int scale = 1;
    for (int j = 0; j < d; ++j) {
        out.witness[j] = sol.x[j] - sol.x[d + j];
        Int den = out.witness[j].get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
        scale = scale / g * den;
    }
    for (auto& w : out.witness) w *= Rat(scale);
    assert(satisfies(sys, out.witness));
    return out;
}

bool satisfies(const SignSystem& sys, const std::vector<Rat>& z) {
    if (int(z.size()) != sys.dim()) return false;
    auto dot = [&](const Mat& m, int i) {
        Rat s = 0;
        for (int j = 0; j < m.cols(); ++j) s += m(i, j) * z[j];
        return s;
    };
    for (int i = 0; i < sys.strict.rows(); ++i)
        if (dot(sys.strict, i) <= 0) return false;
    for (int i = 0; i < sys.nonneg.rows(); ++i)
        if (dot(sys.nonneg, i) < 0) return false;
    for (int i = 0; i < sys.zero.rows(); ++i)
        if (dot(sys.zero, i) != 0) return false;
    return true;
}

} // namespace gmak
