#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gmak/matrix.hpp"
#include "gmak/network.hpp"
#include "gmak/poly.hpp"
#include "gmak/report.hpp"
#include "gmak/structure.hpp"

namespace gmak {

/// One positive rate per edge, in the order of net.edges.
struct RateAssignment {
    std::vector<Rat> k;
};

/// Laplacian of the labeled graph: (A_k)_{i,j} = k_{j->i} for edges j->i,
/// diagonal makes column sums zero.
Mat laplacian(const Network& net, const RateAssignment& k);

/// Tree constants: per vertex, the sum over spanning trees directed toward
/// that vertex of the product of edge labels, computed as signed cofactors of
/// the component block of A_k. Positive on strongly connected components;
/// the kernel identity A_k * K = 0 is verified exactly before returning.
/// Requires weak reversibility.
std::vector<Rat> tree_constants(const Network& net, const Structure& st,
                                const RateAssignment& k);

/// Directed forest on the vertices with |V_c|-1 edges per connected
/// component. `chain` marks that every component is a path in edge order.
struct AuxGraph {
    std::vector<std::pair<int, int>> edges;
    bool chain = false;
};

/// The canonical chain: each component's vertices in ascending order,
/// consecutive ones joined.
AuxGraph chain_forest(const Structure& st);

/// Vertex-by-edge incidence matrix of the forest (column = e_tgt - e_src).
Mat aux_incidence(const AuxGraph& aux, int m);

/// The core matrix A with A_k diag(K) = -I_E A I_E^T, recovered by the exact
/// normal-equation solve and re-verified against that identity (hard error on
/// nonzero residual). For a chain forest, additionally verified entrywise
/// nonnegative with positive diagonal.
Mat core_laplacian(const Mat& Ak, const std::vector<Rat>& K, const AuxGraph& aux, int m);

/// Binomial residuals x^{y~(tgt)}/K_tgt - x^{y~(src)}/K_src per forest edge,
/// exact. Requires every kinetic-order exponent to be an integer; use the
/// floating-point variant in the numeric module otherwise.
std::vector<Rat> cbe_residual_exact(const Structure& st, const std::vector<Rat>& K,
                                    const AuxGraph& aux, const std::vector<Rat>& x);

/// A simple directed cycle, stored with its smallest vertex first.
struct Cycle {
    std::vector<int> vertices; // v0 -> v1 -> ... -> v_{c-1} -> v0
    std::string name;          // vertex names joined by "->"
};

/// Every simple directed cycle of the graph exactly once, deterministic
/// order (ascending start vertex, then lexicographic). Throws CapExceeded
/// beyond `cap` cycles.
std::vector<Cycle> enumerate_cycles(const Network& net, int cap = 10000);

/// Laplacian of the cycle with all edge labels 1, embedded in m vertices.
Mat cycle_laplacian(const Cycle& c, int m);

/// Solve A_k diag(K) = sum_C lambda_C A_C with all lambda_C > 0, exactly.
/// Returns false when no positive solution exists.
bool cycle_decomposition(const Mat& Ak_diagK, const std::vector<Mat>& cycle_laplacians,
                         std::vector<Rat>& lambda_out);

/// J(lambda) = Y (sum_C lambda_C A_C) Ytilde^T, one variable per cycle.
PolyMat parametric_reduced_jacobian(const Structure& st, const std::vector<Cycle>& cycles);

/// Common strict refinement of two harmonious total preorders, given as rank
/// vectors (smaller rank = earlier; equal rank = tied). Returns the vertex
/// order of the chain. Throws std::invalid_argument when the preorders are
/// not harmonious (i <1 j must imply i <=2 j and vice versa).
std::vector<int> chain_graph_from_preorders(const std::vector<int>& p1,
                                            const std::vector<int>& p2);

} // namespace gmak
