#include "gmak/laplacian.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gmak/feasibility.hpp"

namespace gmak {

Mat laplacian(const Network& net, const RateAssignment& k) {
    if (int(k.k.size()) != net.num_edges())
        throw std::invalid_argument("rate assignment size mismatch");
    int m = net.num_vertices();
    Mat A(m, m);
    for (int e = 0; e < net.num_edges(); ++e) {
        if (k.k[e] <= 0) throw std::invalid_argument("rates must be positive");
        const Edge& ed = net.edges[e];
        A(ed.tgt, ed.src) += k.k[e];
        A(ed.src, ed.src) -= k.k[e];
    }
    return A;
}

std::vector<Rat> tree_constants(const Network& net, const Structure& st,
                                const RateAssignment& k) {
    if (!is_weakly_reversible(net))
        throw std::invalid_argument("tree constants need a weakly reversible network");
    Mat A = laplacian(net, k);
    std::vector<Rat> K(st.m, Rat(0));
    for (const auto& comp : st.components) {
        int c = int(comp.size());
        Mat block = A.submatrix(comp, comp);
        // Signed cofactor: delete the vertex's row and column. The sign
        // (-1)^{c-1} makes the spanning-tree weight sums come out positive.
        for (int i = 0; i < c; ++i) {
            std::vector<int> rest;
            for (int j = 0; j < c; ++j)
                if (j != i) rest.push_back(j);
            Rat v = minor_det(block, rest, rest);
            if ((c - 1) % 2 == 1) v = -v;
            if (v <= 0) throw std::logic_error("tree constant not positive");
            K[comp[i]] = v;
        }
    }
    // Kernel identity, exact.
    Mat Kcol(st.m, 1);
    for (int i = 0; i < st.m; ++i) Kcol(i, 0) = K[i];
    if (!(A * Kcol).is_zero()) throw std::logic_error("A_k * K != 0");
    return K;
}

AuxGraph chain_forest(const Structure& st) {
    AuxGraph aux;
    aux.chain = true;
    for (const auto& comp : st.components) {
        std::vector<int> v = comp;
        std::sort(v.begin(), v.end());
        for (size_t i = 0; i + 1 < v.size(); ++i) aux.edges.emplace_back(v[i], v[i + 1]);
    }
    return aux;
}

Mat aux_incidence(const AuxGraph& aux, int m) {
    Mat I(m, int(aux.edges.size()));
    for (size_t e = 0; e < aux.edges.size(); ++e) {
        I(aux.edges[e].first, int(e)) = -1;
        I(aux.edges[e].second, int(e)) = 1;
    }
    return I;
}

Mat core_laplacian(const Mat& Ak, const std::vector<Rat>& K, const AuxGraph& aux, int m) {
    Mat B = aux_incidence(aux, m);
    Mat M(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) M(i, j) = Ak(i, j) * K[j];
    // Normal-equation recovery of the core matrix: forest columns are
    // independent, so B^T B is invertible.
    Mat G_inv = inverse(B.transpose() * B);
    Mat core = -(G_inv * (B.transpose() * M * B) * G_inv);
    if (!(M + B * core * B.transpose()).is_zero())
        throw std::logic_error("core decomposition residual nonzero");
    if (rank(core) != core.rows()) throw std::logic_error("core matrix not invertible");
    if (aux.chain) {
        for (int i = 0; i < core.rows(); ++i)
            for (int j = 0; j < core.cols(); ++j) {
                if (core(i, j) < 0)
                    throw std::logic_error("chain core matrix has a negative entry");
                if (i == j && core(i, j) <= 0)
                    throw std::logic_error("chain core matrix diagonal not positive");
            }
    }
    return core;
}

namespace {

Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return 1;
    Rat b = e > 0 ? base : Rat(1) / base;
    long n = e > 0 ? e : -e;
    Rat out = 1;
    for (long i = 0; i < n; ++i) out *= b;
    return out;
}

Rat monomial(const Structure& st, const std::vector<Rat>& x, int vertex) {
    Rat out = 1;
    for (int s = 0; s < st.n; ++s) {
        Rat e = st.Ytilde(s, vertex);
        if (e == 0) continue;
        if (e.get_den() != 1)
            throw std::invalid_argument("exact residual needs integer kinetic orders");
        out *= rat_pow(x[s], e.get_num().get_si());
    }
    return out;
}

} // namespace

std::vector<Rat> cbe_residual_exact(const Structure& st, const std::vector<Rat>& K,
                                    const AuxGraph& aux, const std::vector<Rat>& x) {
    for (const auto& xi : x)
        if (xi <= 0) throw std::invalid_argument("point must be positive");
    std::vector<Rat> r;
    r.reserve(aux.edges.size());
    for (const auto& [src, tgt] : aux.edges)
        r.push_back(monomial(st, x, tgt) / K[tgt] - monomial(st, x, src) / K[src]);
    return r;
}

std::vector<Cycle> enumerate_cycles(const Network& net, int cap) {
    int m = net.num_vertices();
    std::vector<std::vector<int>> adj(m);
    for (const Edge& e : net.edges) adj[e.src].push_back(e.tgt);
    for (auto& a : adj) std::sort(a.begin(), a.end());

    std::vector<Cycle> out;
    std::vector<int> path;
    std::vector<char> on_path(m, 0);
    // Start each cycle at its smallest vertex: from start s, explore only
    // vertices > s and close back to s.
    auto dfs = [&](auto&& self, int start, int v) -> void {
        path.push_back(v);
        on_path[v] = 1;
        for (int w : adj[v]) {
            if (w == start && path.size() >= 2) {
                if (int(out.size()) >= cap)
                    throw CapExceeded("cycle count exceeds cap " + std::to_string(cap));
                Cycle c;
                c.vertices = path;
                for (size_t i = 0; i < path.size(); ++i) {
                    if (i) c.name += "->";
                    c.name += net.vertices[path[i]].name;
                }
                out.push_back(std::move(c));
            } else if (w > start && !on_path[w]) {
                self(self, start, w);
            }
        }
        on_path[v] = 0;
        path.pop_back();
    };
    for (int s = 0; s < m; ++s) dfs(dfs, s, s);
    return out;
}

Mat cycle_laplacian(const Cycle& c, int m) {
    Mat A(m, m);
    int len = int(c.vertices.size());
    for (int i = 0; i < len; ++i) {
        int u = c.vertices[i], v = c.vertices[(i + 1) % len];
        A(v, u) += 1;
        A(u, u) -= 1;
    }
    return A;
}

bool cycle_decomposition(const Mat& Ak_diagK, const std::vector<Mat>& cycle_laplacians,
                         std::vector<Rat>& lambda_out) {
    int nc = int(cycle_laplacians.size());
    int m = Ak_diagK.rows();
    // Homogenize with a scale variable t: sum lambda_C A_C = t * M, all
    // variables strictly positive. Any witness rescales to t = 1.
    SignSystem sys(nc + 1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Mat row(1, nc + 1);
            bool any = false;
            for (int c = 0; c < nc; ++c) {
                row(0, c) = cycle_laplacians[c](i, j);
                if (row(0, c) != 0) any = true;
            }
            row(0, nc) = -Ak_diagK(i, j);
            if (row(0, nc) != 0) any = true;
            if (any) sys.add_zero(row);
        }
    for (int c = 0; c <= nc; ++c) {
        Mat row(1, nc + 1);
        row(0, c) = 1;
        sys.add_strict(row);
    }
    auto f = feasible(sys);
    if (!f.feasible) return false;
    lambda_out.resize(nc);
    for (int c = 0; c < nc; ++c) lambda_out[c] = f.witness[c] / f.witness[nc];
    return true;
}

PolyMat parametric_reduced_jacobian(const Structure& st, const std::vector<Cycle>& cycles) {
    int nv = int(cycles.size());
    PolyMat A(st.m, st.m, nv);
    for (int c = 0; c < nv; ++c) {
        Mat Ac = cycle_laplacian(cycles[c], st.m);
        Poly lam = Poly::var(nv, c);
        for (int i = 0; i < st.m; ++i)
            for (int j = 0; j < st.m; ++j)
                if (Ac(i, j) != 0) A(i, j) += lam * Ac(i, j);
    }
    return PolyMat::lift(st.Y, nv) * A * PolyMat::lift(st.Ytilde.transpose(), nv);
}

std::vector<int> chain_graph_from_preorders(const std::vector<int>& p1,
                                            const std::vector<int>& p2) {
    if (p1.size() != p2.size()) throw std::invalid_argument("preorder size mismatch");
    int n = int(p1.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (p1[i] < p1[j] && !(p2[i] <= p2[j]))
                throw std::invalid_argument("preorders not harmonious");
            if (p2[i] < p2[j] && !(p1[i] <= p1[j]))
                throw std::invalid_argument("preorders not harmonious");
        }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (p1[a] != p1[b]) return p1[a] < p1[b];
        return p2[a] < p2[b];
    });
    return order;
}

} // namespace gmak
