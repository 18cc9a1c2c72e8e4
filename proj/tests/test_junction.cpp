#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperdual/junction.hpp"
#include "hyperdual/oracle.hpp"

using namespace hyperdual;

namespace {

GraphicalModel<double> chain_fixture() {
    GraphicalModel<double> gm;
    gm.h = Hypergraph{3, {{0, 1}, {1, 2}}};
    gm.sizes = {2, 2, 2};
    gm.potentials.push_back(LabeledTensor<double>({0, 1}, {2, 2}, {1, 2, 3, 4}));
    gm.potentials.push_back(LabeledTensor<double>({1, 2}, {2, 2}, {1, 0, 0, 1}));
    gm.validate();
    return gm;
}

Graph cycle4() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(0, 3);
    return g;
}

} // namespace

TEST_CASE("fill_in and perfect elimination orders") {
    Graph g = cycle4();
    EliminationOrder eo{{0, 1, 2, 3}};
    std::vector<std::pair<int, int>> fill;
    Graph chordal = fill_in(g, eo, &fill);
    CHECK(fill == std::vector<std::pair<int, int>>{{1, 3}});
    CHECK(chordal.has_edge(1, 3));
    CHECK_FALSE(is_perfect_elimination_order(g, eo));
    CHECK(is_perfect_elimination_order(chordal, eo));

    CHECK_THROWS_AS(fill_in(g, EliminationOrder{{0, 1, 2}}, nullptr), domain_error);
    CHECK_THROWS_AS(fill_in(g, EliminationOrder{{0, 1, 2, 2}}, nullptr), domain_error);
}

TEST_CASE("min_fill_order prefers zero-fill vertices") {
    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    auto eo = min_fill_order(path);
    CHECK(eo.order == std::vector<int>{0, 1, 2}); // ties break toward lower ids
    CHECK(is_perfect_elimination_order(path, eo));

    auto [chordal, order] = triangulate(cycle4());
    CHECK(is_perfect_elimination_order(chordal, order));
}

TEST_CASE("maximal cliques of a chordal graph") {
    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    auto cliques = maximal_cliques_chordal(path, EliminationOrder{{0, 1, 2}});
    CHECK(cliques == std::vector<VertexSet>{{0, 1}, {1, 2}});

    Graph tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(0, 2);
    CHECK(maximal_cliques_chordal(tri, EliminationOrder{{0, 1, 2}}) == std::vector<VertexSet>{{0, 1, 2}});

    CHECK_THROWS_AS(maximal_cliques_chordal(cycle4(), EliminationOrder{{0, 1, 2, 3}}), domain_error);
}

TEST_CASE("build_junction_tree") {
    auto jt = build_junction_tree<double>({{0, 1}, {1, 2}}, {2, 2, 2});
    REQUIRE(jt.edges.size() == 1);
    CHECK(jt.edges[0].separator == VertexSet{1});
    CHECK(has_running_intersection(jt));

    // Disconnected cliques are joined by an empty separator.
    auto forest = build_junction_tree<double>({{0}, {1}}, {2, 2});
    REQUIRE(forest.edges.size() == 1);
    CHECK(forest.edges[0].separator.empty());
    CHECK(has_running_intersection(forest));
}

TEST_CASE("message passing on the chain fixture") {
    auto gm = chain_fixture();
    auto jt = build_tree_for(gm);
    REQUIRE(jt.nodes.size() == 2);
    REQUIRE(jt.nodes[0].clique == VertexSet{0, 1});
    REQUIRE(jt.nodes[1].clique == VertexSet{1, 2});

    pass_message(jt, 0, 1);
    CHECK(jt.edges[0].potential.data == std::vector<double>{4, 6});
    CHECK(jt.nodes[1].potential.data == std::vector<double>{4, 0, 0, 6});

    // A repeated identical message is absorbed by the separator division.
    pass_message(jt, 0, 1);
    CHECK(jt.nodes[1].potential.data == std::vector<double>{4, 0, 0, 6});

    CHECK_THROWS_AS(pass_message(jt, 0, 0), domain_error);
}

TEST_CASE("separator division rejects nonzero over zero") {
    auto jt = build_junction_tree<double>({{0, 1}, {1, 2}}, {2, 2, 2});
    jt.nodes[0].potential = LabeledTensor<double>({0, 1}, {2, 2}, {1, 2, 3, 4});
    jt.edges[0].potential = LabeledTensor<double>({1}, {2}, {0, 1});
    CHECK_THROWS_AS(pass_message(jt, 0, 1), numerical_error);
}

TEST_CASE("calibrate yields clique marginals") {
    auto gm = chain_fixture();
    auto jt = calibrate(build_tree_for(gm));
    CHECK(jt.nodes[1].potential.data == std::vector<double>{4, 0, 0, 6});
    CHECK(jt.nodes[0].potential.total() == doctest::Approx(10.0));
    CHECK(jt.nodes[1].potential.total() == doctest::Approx(10.0));
    CHECK(jt.edges[0].potential.data == std::vector<double>{4, 6});
}

TEST_CASE("calibrate tolerates structural zeros") {
    auto gm = chain_fixture();
    gm.potentials[1] = LabeledTensor<double>({1, 2}, {2, 2}, {1, 0, 0, 0});
    auto jt = calibrate(build_tree_for(gm));
    for (std::size_t i = 0; i < jt.nodes.size(); ++i) {
        auto expect = marginal_bruteforce(gm, jt.nodes[i].clique);
        REQUIRE(jt.nodes[i].potential.labels == expect.labels);
        for (std::size_t k = 0; k < expect.data.size(); ++k)
            CHECK(jt.nodes[i].potential.data[k] == doctest::Approx(expect.data[k]).epsilon(1e-12));
    }
}

TEST_CASE("calibrated cliques match brute force on random models") {
    oracle::RandomInstanceSpec spec;
    RandomSource rng(314);
    for (int trial = 0; trial < 60; ++trial) {
        auto gm = oracle::random_gm<double>(spec, rng);
        if (gm.h.vertex_count == 0) continue;
        auto jt = calibrate(build_tree_for(gm));
        for (const auto& node : jt.nodes) {
            auto expect = marginal_bruteforce(gm, node.clique);
            REQUIRE(node.potential.labels == expect.labels);
            for (std::size_t k = 0; k < expect.data.size(); ++k)
                CHECK(node.potential.data[k] == doctest::Approx(expect.data[k]).epsilon(1e-9));
        }
    }
}

TEST_CASE("total_sum") {
    CHECK(total_sum(chain_fixture()) == doctest::Approx(10.0));

    GraphicalModel<double> empty;
    empty.h = Hypergraph{0, {{}}};
    empty.potentials.push_back(LabeledTensor<double>::scalar(5.0));
    empty.validate();
    CHECK(total_sum(empty) == doctest::Approx(5.0));

    oracle::RandomInstanceSpec spec;
    RandomSource rng(2718);
    for (int trial = 0; trial < 60; ++trial) {
        auto gm = oracle::random_gm<double>(spec, rng);
        double expect = 1.0;
        if (gm.h.vertex_count > 0) {
            auto joint = oracle::enumerate_joint(gm);
            expect = joint.total();
        } else {
            for (const auto& pot : gm.potentials) expect *= pot.data[0];
        }
        CHECK(total_sum(gm) == doctest::Approx(expect).epsilon(1e-9));
    }
}

TEST_CASE("marginal_set") {
    auto gm = chain_fixture();
    auto m1 = marginal_set(gm, {1});
    CHECK(m1.data[0] == doctest::Approx(0.4));
    CHECK(m1.data[1] == doctest::Approx(0.6));

    // Variables in different cliques still work: the set is forced into the
    // triangulation.
    auto m02 = marginal_set(gm, {0, 2}, false);
    CHECK(m02.labels == std::vector<int>{0, 2});
    CHECK(m02.data[0] == doctest::Approx(1.0));
    CHECK(m02.data[3] == doctest::Approx(4.0));

    auto z = marginal_set(gm, {}, false);
    CHECK(z.data[0] == doctest::Approx(10.0));

    CHECK(marginal(gm, 0, false).data[3] == doctest::Approx(4.0));
    CHECK_THROWS_AS(marginal(gm, 9), domain_error);
    CHECK_THROWS_AS(marginal_set(gm, {1, 0}), domain_error);
    CHECK_THROWS_AS(marginal_set(gm, {5}), domain_error);

    GraphicalModel<double> zero = gm;
    zero.potentials[0] = LabeledTensor<double>({0, 1}, {2, 2}, {0, 0, 0, 0});
    CHECK_THROWS_AS(marginal_set(zero, {1}), degenerate_error);
}

TEST_CASE("results do not depend on the elimination order or root") {
    oracle::RandomInstanceSpec spec;
    RandomSource rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        auto gm = oracle::random_gm<double>(spec, rng);
        if (gm.h.vertex_count == 0) continue;
        double reference = total_sum(gm);
        for (int rep = 0; rep < 3; ++rep) {
            JunctionOptions opts;
            EliminationOrder eo;
            eo.order.resize(static_cast<std::size_t>(gm.h.vertex_count));
            std::iota(eo.order.begin(), eo.order.end(), 0);
            for (std::size_t i = eo.order.size(); i > 1; --i)
                std::swap(eo.order[i - 1], eo.order[static_cast<std::size_t>(rng.uniform_index(0, static_cast<int>(i) - 1))]);
            opts.elimination_order = eo;
            CHECK(total_sum(gm, opts) == doctest::Approx(reference).epsilon(1e-9));
            auto m = marginal_set(gm, {0}, false, opts);
            auto expect = marginal_bruteforce(gm, {0});
            for (std::size_t k = 0; k < expect.data.size(); ++k)
                CHECK(m.data[k] == doctest::Approx(expect.data[k]).epsilon(1e-9));
        }
    }
}

TEST_CASE("treewidth_estimate") {
    Graph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    CHECK(treewidth_estimate(path) == 1);
    CHECK(treewidth_estimate(cycle4()) == 2);
    CHECK(treewidth_estimate(Graph(1)) == 0);
    CHECK(treewidth_estimate(Graph(0)) == -1);

    auto gm = chain_fixture();
    CHECK(treewidth_estimate(gm) == 1);
    CHECK(treewidth_estimate(gm_to_tn(gm)) == 1);
}
