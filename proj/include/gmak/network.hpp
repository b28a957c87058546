#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmak/rational.hpp"

namespace gmak {

/// Sparse species -> coefficient map; zero coefficients are never stored.
class Complex {
public:
    void set(int species, const Rat& c);
    Rat get(int species) const;
    const std::map<int, Rat>& coeffs() const { return c_; }
    bool operator==(const Complex& o) const { return c_ == o.c_; }

private:
    std::map<int, Rat> c_;
};

struct Vertex {
    std::string name;
    Complex stoich;
    Complex kinetic;     // defaults to stoich when not given in the source
    bool kinetic_given = false;
};

struct Edge {
    int src = -1, tgt = -1;
    std::string rate_symbol; // optional, may be empty
};

struct ParseError : std::runtime_error {
    ParseError(int line, int col, const std::string& msg);
    int line, col;
};

/// A generalized reaction network: simple digraph, per-vertex stoichiometric
/// and kinetic-order complexes, named rational parameters.
struct Network {
    std::vector<std::string> species;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<std::pair<std::string, Rat>> params; // declaration order

    int num_species() const { return int(species.size()); }
    int num_vertices() const { return int(vertices.size()); }
    int num_edges() const { return int(edges.size()); }

    int vertex_index(const std::string& name) const; // -1 if absent
    int species_index(const std::string& name) const;
};

/// Parse the line-oriented network DSL. `overrides` rebinds declared
/// parameters (unknown names are an error). Throws ParseError.
Network parse_network(const std::string& text,
                      const std::vector<std::pair<std::string, Rat>>& overrides = {});

/// Canonical serialization; parse(print(net)) is structurally identical.
std::string print_network(const Network& net);

} // namespace gmak
