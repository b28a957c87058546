#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace gmak;
using gmak::test::load_fixture;

TEST_CASE("lotka fixture parses") {
    Network net = load_fixture("lotka.gmak");
    CHECK(net.num_species() == 2);
    CHECK(net.num_vertices() == 3);
    CHECK(net.num_edges() == 3);
    CHECK(net.params.size() == 2);

    // v1: stoich 0, kinetic alpha X.
    CHECK(net.vertices[0].stoich.coeffs().empty());
    CHECK(net.vertices[0].kinetic.get(net.species_index("X")) == Rat(1, 2));
    CHECK(net.vertices[1].kinetic.get(net.species_index("Y")) == Rat(1, 2));
    // v3: kinetic defaults to stoich.
    CHECK_FALSE(net.vertices[2].kinetic_given);
    CHECK(net.vertices[2].kinetic.get(net.species_index("Y")) == 1);
    CHECK(net.edges[0].rate_symbol == "k12");
}

TEST_CASE("parameter overrides") {
    Network net = load_fixture("lotka.gmak", {{"alpha", Rat(1)}, {"beta", Rat(1)}});
    CHECK(net.vertices[0].kinetic.get(0) == 1);
    CHECK(net.vertices[1].kinetic.get(1) == 1);

    CHECK_THROWS_AS(load_fixture("lotka.gmak", {{"gamma", Rat(1)}}), ParseError);
}

TEST_CASE("degenerate one-vertex network") {
    Network net = parse_network("vertex v : 0\n");
    CHECK(net.num_vertices() == 1);
    CHECK(net.num_edges() == 0);
    CHECK(is_weakly_reversible(net));
}

TEST_CASE("parse errors carry position") {
    CHECK_THROWS_AS(parse_network("vertex v : 0\nedge v -> v\n"), ParseError);
    try {
        parse_network("vertex v : 0\nedge v -> v\n");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    // duplicates
    CHECK_THROWS_AS(parse_network("species X X\n"), ParseError);
    CHECK_THROWS_AS(parse_network("species X\nvertex v : X\nvertex v : X\n"), ParseError);
    // parallel edge
    CHECK_THROWS_AS(parse_network("vertex a : 0\nvertex b : 0\n"
                                  "edge a -> b\nedge a -> b\n"),
                    ParseError);
    // unresolved parameter used as coefficient
    CHECK_THROWS_AS(parse_network("species X\nvertex v : q X\n"), ParseError);
    // unknown species
    CHECK_THROWS_AS(parse_network("species X\nvertex v : Z\n"), ParseError);
    // bad keyword
    CHECK_THROWS_AS(parse_network("vertices v : X\n"), ParseError);
    // empty input
    CHECK_THROWS_AS(parse_network(""), ParseError);
}

TEST_CASE("print-parse round trip on all fixtures") {
    for (const char* name :
         {"lotka.gmak", "sir.gmak", "signaling.gmak", "futile.gmak", "futile-reversed.gmak"}) {
        CAPTURE(name);
        Network net = load_fixture(name);
        Network again = parse_network(print_network(net));
        CHECK(again.species == net.species);
        CHECK(again.params == net.params);
        REQUIRE(again.num_vertices() == net.num_vertices());
        for (int i = 0; i < net.num_vertices(); ++i) {
            CHECK(again.vertices[i].name == net.vertices[i].name);
            CHECK(again.vertices[i].stoich == net.vertices[i].stoich);
            CHECK(again.vertices[i].kinetic == net.vertices[i].kinetic);
        }
        REQUIRE(again.num_edges() == net.num_edges());
        for (int i = 0; i < net.num_edges(); ++i) {
            CHECK(again.edges[i].src == net.edges[i].src);
            CHECK(again.edges[i].tgt == net.edges[i].tgt);
            CHECK(again.edges[i].rate_symbol == net.edges[i].rate_symbol);
        }
    }
}

TEST_CASE("structure regression on the fixtures") {
    struct Expect {
        const char* file;
        int m, l, delta, delta_tilde;
        bool wr;
    };
    for (const Expect& e : {Expect{"lotka.gmak", 3, 1, 0, 0, true},
                            Expect{"signaling.gmak", 4, 1, 1, 0, true},
                            Expect{"futile.gmak", 4, 1, 0, 0, true},
                            Expect{"sir.gmak", 4, 1, 1, 1, true}}) {
        CAPTURE(e.file);
        Network net = load_fixture(e.file);
        Structure st = analyze_structure(net);
        CHECK(st.m == e.m);
        CHECK(st.l == e.l);
        CHECK(st.delta == e.delta);
        CHECK(st.delta_tilde == e.delta_tilde);
        CHECK(is_weakly_reversible(net) == e.wr);
    }
}

TEST_CASE("structure invariants") {
    for (const char* name : {"lotka.gmak", "sir.gmak", "signaling.gmak", "futile.gmak"}) {
        CAPTURE(name);
        Network net = load_fixture(name);
        Structure st = analyze_structure(net);

        // Columns of I_E sum to zero; I_E_source columns have one 1.
        for (int j = 0; j < st.I_E.cols(); ++j) {
            Rat sum = 0;
            int ones = 0;
            for (int i = 0; i < st.m; ++i) {
                sum += st.I_E(i, j);
                if (st.I_E_source(i, j) == 1) ++ones;
                else CHECK(st.I_E_source(i, j) == 0);
            }
            CHECK(sum == 0);
            CHECK(ones == 1);
        }

        // Omega column count per component.
        size_t expect = 0;
        for (const auto& comp : st.components) expect += comp.size() * (comp.size() - 1) / 2;
        CHECK(st.omega_pairs.size() == expect);
        for (size_t c = 0; c < st.omega_pairs.size(); ++c) {
            auto [i, j] = st.omega_pairs[c];
            CHECK(i < j);
            CHECK(st.component_of[i] == st.component_of[j]);
            CHECK(st.I_Omega(i, int(c)) == -1);
            CHECK(st.I_Omega(j, int(c)) == 1);
        }

        // Deficiency cross-check: delta = dim(ker Y meet im I_E).
        Mat inter = span_intersection(kernel_basis(st.Y), image_basis(st.I_E));
        CHECK(st.delta == inter.cols());
        Mat inter_t = span_intersection(kernel_basis(st.Ytilde), image_basis(st.I_E));
        CHECK(st.delta_tilde == inter_t.cols());

        CHECK(same_span(st.S_basis, st.Y * st.I_E));
        CHECK(same_span(st.Stilde_basis, st.Ytilde * st.I_E));
        CHECK(st.delta >= 0);
        CHECK(st.delta_tilde >= 0);
    }
}

TEST_CASE("classical mass-action lotka encoding is not weakly reversible") {
    const char* text =
        "species X Y\n"
        "vertex a1 : X | X\n"
        "vertex a2 : 2 X\n"
        "vertex b1 : X + Y\n"
        "vertex b2 : 2 Y\n"
        "vertex c1 : Y\n"
        "vertex c2 : 0\n"
        "edge a1 -> a2\nedge b1 -> b2\nedge c1 -> c2\n";
    Network net = parse_network(text);
    CHECK_FALSE(is_weakly_reversible(net));
    Structure st = analyze_structure(net);
    CHECK(st.m == 6);
    CHECK(st.l == 3);
    CHECK(st.delta == 1);
}

TEST_CASE("paper matrices for the fixtures") {
    Structure sig = analyze_structure(load_fixture("signaling.gmak"));
    CHECK(sig.Y == Mat{{1, 0, 1, 1}, {0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}});
    CHECK(sig.Ytilde == Mat{{1, 0, 1, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}});
    CHECK(same_span(sig.S_basis, Mat{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}));
    CHECK(same_span(kernel_basis(sig.Stilde_basis.transpose()), Mat{{0}, {-1}, {1}, {0}}));

    Structure fut = analyze_structure(load_fixture("futile.gmak"));
    CHECK(fut.Y == Mat{{1, 0, 1, 1},
                       {0, 1, 0, 0},
                       {1, 1, 1, 0},
                       {0, 0, 0, 1},
                       {1, 0, 0, 0},
                       {0, 0, 1, 0}});
    CHECK(fut.Ytilde == Mat{{1, 0, 0, 0},
                            {0, 1, 0, 0},
                            {0, 0, 1, 0},
                            {0, 0, 0, 1},
                            {1, 0, 0, 0},
                            {0, 0, 1, 0}});
    CHECK(same_span(fut.S_basis, Mat{{-1, 0, 0},
                                     {1, 0, 0},
                                     {0, -1, 0},
                                     {0, 1, 0},
                                     {-1, 0, -1},
                                     {0, -1, 1}}));

    Structure lot = analyze_structure(load_fixture("lotka.gmak"));
    CHECK(lot.Y == Mat{{0, 1, 0}, {0, 0, 1}});
    CHECK(lot.Ytilde == Mat{{Rat(1, 2), 1, 0}, {0, Rat(1, 2), 1}});
    CHECK(lot.I_Omega == Mat{{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}});
}
