#pragma once

#include <utility>
#include <vector>

#include "gmak/matrix.hpp"
#include "gmak/network.hpp"

namespace gmak {

/// Derived graph/matrix structure of a network. All fields exact.
struct Structure {
    int n = 0; // species
    int m = 0; // vertices
    int l = 0; // connected components

    Mat Y;            // n x m stoichiometric complexes
    Mat Ytilde;       // n x m kinetic-order complexes
    Mat I_E;          // m x |E| incidence
    Mat I_E_source;   // m x |E| source indicator
    Mat I_Omega;      // m x |Omega| within-component complete graph (one
                      // orientation per unordered pair, i < i')
    std::vector<std::pair<int, int>> omega_pairs;

    std::vector<int> component_of;          // connected component index per vertex
    std::vector<std::vector<int>> components;        // connected, vertex lists
    std::vector<std::vector<int>> strong_components; // SCC vertex lists

    Mat S_basis, Stilde_basis;
    int delta = 0, delta_tilde = 0;

    int dim_S() const { return S_basis.cols(); }
    int dim_Stilde() const { return Stilde_basis.cols(); }
};

Structure analyze_structure(const Network& net);

/// True iff every connected component is strongly connected.
bool is_weakly_reversible(const Network& net);

} // namespace gmak
