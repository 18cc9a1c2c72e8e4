#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperdual/hypergraph.hpp"
#include "hyperdual/oracle.hpp"

using namespace hyperdual;

namespace {

Hypergraph no_three_way_shape() {
    return Hypergraph{3, {{0, 1}, {0, 2}, {1, 2}}};
}

IncidenceMatrix matrix(int rows, int cols, std::vector<int> flat) {
    IncidenceMatrix m(rows, cols);
    for (int u = 0; u < rows; ++u)
        for (int c = 0; c < cols; ++c) m.at(u, c) = static_cast<std::uint8_t>(flat[static_cast<std::size_t>(u * cols + c)]);
    return m;
}

} // namespace

TEST_CASE("from_incidence") {
    auto h = from_incidence(matrix(3, 3, {1, 1, 0, 1, 0, 1, 0, 1, 1}));
    CHECK(h == no_three_way_shape());

    auto empty_col = from_incidence(matrix(2, 1, {0, 0}));
    CHECK(empty_col.vertex_count == 2);
    CHECK(empty_col.edges == std::vector<VertexSet>{{}});

    CHECK(from_incidence(IncidenceMatrix(0, 0)) == Hypergraph{});
}

TEST_CASE("to_incidence") {
    Hypergraph h{3, {{0, 1}, {1, 2}}};
    CHECK(to_incidence(h) == matrix(3, 2, {1, 0, 1, 1, 0, 1}));
    CHECK(to_incidence(Hypergraph{}) == IncidenceMatrix(0, 0));

    Hypergraph repeated{2, {{0, 1}, {0, 1}}};
    auto m = to_incidence(repeated);
    CHECK(m.cols == 2);
    for (int u = 0; u < 2; ++u) CHECK(m.at(u, 0) == m.at(u, 1));
    CHECK(from_incidence(m) == repeated);
}

TEST_CASE("dual") {
    auto triangle = no_three_way_shape();
    CHECK(dual(triangle) == triangle); // symmetric incidence matrix

    Hypergraph h{3, {{0, 1}, {1, 2}}};
    Hypergraph expected{2, {{0}, {0, 1}, {1}}};
    CHECK(dual(h) == expected);
    CHECK(dual(dual(h)) == h);
}

TEST_CASE("two_section") {
    Hypergraph h{3, {{0, 1, 2}}};
    auto g = two_section(h);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(0, 2));

    auto path = two_section(Hypergraph{3, {{0, 1}, {1, 2}}});
    CHECK(path.has_edge(0, 1));
    CHECK(path.has_edge(1, 2));
    CHECK_FALSE(path.has_edge(0, 2));

    auto singletons = two_section(Hypergraph{3, {{0}, {1}, {2}}});
    CHECK(singletons.edge_count() == 0);
}

TEST_CASE("uniformity and regularity") {
    auto triangle = no_three_way_shape();
    CHECK(is_k_uniform(triangle, 2));
    CHECK(is_k_regular(triangle, 2));

    Hypergraph path{3, {{0, 1}, {1, 2}}};
    CHECK(is_k_uniform(path, 2));
    CHECK(is_at_most_k_regular(path, 2));
    CHECK_FALSE(is_k_regular(path, 2));

    CHECK(is_k_regular(dual(path), 2)); // dual of 2-uniform is 2-regular
}

TEST_CASE("is_berge_acyclic") {
    CHECK(is_berge_acyclic(Hypergraph{3, {{0, 1}, {1, 2}}}));
    CHECK_FALSE(is_berge_acyclic(no_three_way_shape()));
    CHECK_FALSE(is_berge_acyclic(Hypergraph{2, {{0, 1}, {0, 1}}}));
    CHECK(is_berge_acyclic(Hypergraph{1, {{0}, {0}}})); // needs two distinct vertices for a cycle
}

TEST_CASE("has_helly_property") {
    CHECK_FALSE(has_helly_property(no_three_way_shape()));
    CHECK(has_helly_property(Hypergraph{3, {{0, 1, 2}}}));

    // Dual of a maximal-clique hypergraph satisfies the property: cliques of
    // a 4-cycle are its edges.
    Hypergraph cliques{4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}};
    CHECK(has_helly_property(dual(cliques)));
}

TEST_CASE("simplicial_complex") {
    auto nested = simplicial_complex(Hypergraph{3, {{0, 1, 2}, {0, 1}}});
    CHECK(nested.maximal_faces == std::vector<VertexSet>{{0, 1, 2}});

    auto hollow = simplicial_complex(no_three_way_shape());
    CHECK(hollow.maximal_faces.size() == 3);

    CHECK(simplicial_complex(Hypergraph{}).maximal_faces.empty());
    CHECK(simplicial_complex(Hypergraph{2, {{}, {}}}).maximal_faces.empty());
}

TEST_CASE("nerve") {
    auto n = nerve(Hypergraph{3, {{0, 1}, {1, 2}}});
    CHECK(n.maximal_faces == std::vector<VertexSet>{{0, 1}}); // only vertex 1 in both

    CHECK(nerve(Hypergraph{3, {{0, 1, 2}}}).maximal_faces == std::vector<VertexSet>{{0}});
}

TEST_CASE("euler_characteristic") {
    SimplicialComplex full{3, {{0, 1, 2}}};
    CHECK(euler_characteristic(full) == 1);

    SimplicialComplex hollow{3, {{0, 1}, {0, 2}, {1, 2}}};
    CHECK(euler_characteristic(hollow) == 0);

    SimplicialComplex points{2, {{0}, {1}}};
    CHECK(euler_characteristic(points) == 2);

    SimplicialComplex big{30, {std::vector<int>(30)}};
    std::iota(big.maximal_faces[0].begin(), big.maximal_faces[0].end(), 0);
    CHECK_THROWS_AS(euler_characteristic(big), size_error);
}

TEST_CASE("connected_components") {
    CHECK(connected_components(SimplicialComplex{3, {{0, 1}, {0, 2}, {1, 2}}}) == 1);
    CHECK(connected_components(SimplicialComplex{4, {{0, 1}, {2, 3}}}) == 2);
    CHECK(connected_components(SimplicialComplex{}) == 0);
}

TEST_CASE("duality properties on random hypergraphs") {
    oracle::RandomInstanceSpec spec;
    spec.max_vars = 8;
    spec.max_edges = 8;
    RandomSource rng(20240817);
    for (int trial = 0; trial < 300; ++trial) {
        Hypergraph h = oracle::random_hypergraph(spec, rng);
        Hypergraph d = dual(h);
        CHECK(dual(d) == h);
        CHECK(to_incidence(d) == to_incidence(h).transposed());
        CHECK(nerve(h) == simplicial_complex(d));
        CHECK(is_berge_acyclic(h) == is_berge_acyclic(d));
        CHECK(euler_characteristic(simplicial_complex(h)) == euler_characteristic(simplicial_complex(d)));
        CHECK(connected_components(simplicial_complex(h)) == connected_components(simplicial_complex(d)));
        CHECK(is_k_uniform(h, 2) == is_k_regular(d, 2));
    }
}
