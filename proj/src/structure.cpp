#include "gmak/structure.hpp"

#include <algorithm>
#include <functional>

namespace gmak {

namespace {

std::vector<std::vector<int>> connected_components(int m, const std::vector<Edge>& edges,
                                                   std::vector<int>& comp_of) {
    std::vector<int> parent(m);
    for (int i = 0; i < m; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : edges) parent[find(e.src)] = find(e.tgt);

    comp_of.assign(m, -1);
    std::vector<std::vector<int>> comps;
    for (int i = 0; i < m; ++i) {
        int r = find(i);
        if (comp_of[r] < 0) {
            comp_of[r] = int(comps.size());
            comps.emplace_back();
        }
        comp_of[i] = comp_of[r];
        comps[comp_of[i]].push_back(i);
    }
    return comps;
}

// Tarjan SCC.
std::vector<std::vector<int>> strongly_connected(int m, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> adj(m);
    for (const auto& e : edges) adj[e.src].push_back(e.tgt);
    std::vector<int> index(m, -1), low(m, 0), stk;
    std::vector<bool> on_stack(m, false);
    std::vector<std::vector<int>> sccs;
    int counter = 0;
    std::function<void(int)> dfs = [&](int v) {
        index[v] = low[v] = counter++;
        stk.push_back(v);
        on_stack[v] = true;
        for (int w : adj[v]) {
            if (index[w] < 0) {
                dfs(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<int> scc;
            int w;
            do {
                w = stk.back();
                stk.pop_back();
                on_stack[w] = false;
                scc.push_back(w);
            } while (w != v);
            std::sort(scc.begin(), scc.end());
            sccs.push_back(std::move(scc));
        }
    };
    for (int v = 0; v < m; ++v)
        if (index[v] < 0) dfs(v);
    return sccs;
}

} // namespace

Structure analyze_structure(const Network& net) {
    Structure st;
    st.n = net.num_species();
    st.m = net.num_vertices();
    int ne = net.num_edges();

    st.Y = Mat(st.n, st.m);
    st.Ytilde = Mat(st.n, st.m);
    for (int j = 0; j < st.m; ++j) {
        for (const auto& [sp, c] : net.vertices[j].stoich.coeffs()) st.Y(sp, j) = c;
        for (const auto& [sp, c] : net.vertices[j].kinetic.coeffs()) st.Ytilde(sp, j) = c;
    }

    st.I_E = Mat(st.m, ne);
    st.I_E_source = Mat(st.m, ne);
    for (int j = 0; j < ne; ++j) {
        st.I_E(net.edges[j].src, j) = -1;
        st.I_E(net.edges[j].tgt, j) = 1;
        st.I_E_source(net.edges[j].src, j) = 1;
    }

    st.components = connected_components(st.m, net.edges, st.component_of);
    st.l = int(st.components.size());
    st.strong_components = strongly_connected(st.m, net.edges);

    // One orientation per unordered within-component pair, i < i', column e_i' - e_i.
    for (int i = 0; i < st.m; ++i)
        for (int j = i + 1; j < st.m; ++j)
            if (st.component_of[i] == st.component_of[j]) st.omega_pairs.emplace_back(i, j);
    st.I_Omega = Mat(st.m, int(st.omega_pairs.size()));
    for (size_t c = 0; c < st.omega_pairs.size(); ++c) {
        st.I_Omega(st.omega_pairs[c].first, int(c)) = -1;
        st.I_Omega(st.omega_pairs[c].second, int(c)) = 1;
    }

    st.S_basis = image_basis(st.Y * st.I_E);
    st.Stilde_basis = image_basis(st.Ytilde * st.I_E);
    st.delta = st.m - st.l - st.S_basis.cols();
    st.delta_tilde = st.m - st.l - st.Stilde_basis.cols();
    return st;
}

bool is_weakly_reversible(const Network& net) {
    std::vector<int> comp_of;
    auto comps = connected_components(net.num_vertices(), net.edges, comp_of);
    auto sccs = strongly_connected(net.num_vertices(), net.edges);
    // Weakly reversible iff the two partitions coincide.
    return comps.size() == sccs.size();
}

} // namespace gmak
