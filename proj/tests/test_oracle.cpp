#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>

#include "hyperdual/model.hpp"
#include "hyperdual/oracle.hpp"

using namespace hyperdual;
using Complex = std::complex<double>;

namespace {

GraphicalModel<double> chain_fixture() {
    GraphicalModel<double> gm;
    gm.h = Hypergraph{3, {{0, 1}, {1, 2}}};
    gm.sizes = {2, 2, 2};
    gm.potentials.push_back(LabeledTensor<double>({0, 1}, {2, 2}, {1, 2, 3, 4}));
    gm.potentials.push_back(LabeledTensor<double>({1, 2}, {2, 2}, {1, 0, 0, 1}));
    return gm;
}

} // namespace

TEST_CASE("enumerate_joint on the chain fixture") {
    auto joint = oracle::enumerate_joint(chain_fixture());
    CHECK(joint.labels == std::vector<int>{0, 1, 2});
    CHECK(joint.data == std::vector<double>{1, 0, 0, 2, 3, 0, 0, 4});
    CHECK(joint.total() == 10.0);
}

TEST_CASE("enumerate_joint agrees with joint_tensor") {
    oracle::RandomInstanceSpec spec;
    RandomSource rng(64);
    for (int trial = 0; trial < 60; ++trial) {
        auto gm = oracle::random_gm<Complex>(spec, rng);
        auto a = oracle::enumerate_joint(gm);
        auto b = joint_tensor(gm);
        REQUIRE(a.labels == b.labels);
        for (std::size_t i = 0; i < a.data.size(); ++i) CHECK(std::abs(a.data[i] - b.data[i]) < 1e-12);
    }
}

TEST_CASE("enumerate_contraction") {
    auto tn = gm_to_tn(chain_fixture());
    auto state = oracle::enumerate_contraction(tn);
    CHECK(state.labels == std::vector<int>{0, 2});
    CHECK(state.data == std::vector<double>{1, 2, 3, 4});

    auto z = oracle::enumerate_contraction(tn, std::vector<int>{});
    CHECK(z.rank() == 0);
    CHECK(z.data[0] == 10.0);

    // Free-edge list in any order; result axes come out sorted.
    auto swapped = oracle::enumerate_contraction(tn, std::vector<int>{2, 0});
    CHECK(swapped == state);

    CHECK_THROWS_AS(oracle::enumerate_contraction(tn, std::vector<int>{9}), label_error);
}

TEST_CASE("enumerate_contraction handles vertex-free edges") {
    TensorHypernetwork<double> tn;
    tn.g = Hypergraph{1, {{0}, {}}};
    tn.edge_sizes = {2, 3};
    tn.tensors.push_back(LabeledTensor<double>({0}, {2}, {5, 7}));
    auto summed = oracle::enumerate_contraction(tn, std::vector<int>{0});
    CHECK(summed.data == std::vector<double>{15, 21});
    auto kept = oracle::enumerate_contraction(tn, std::vector<int>{0, 1});
    CHECK(kept.data == std::vector<double>{5, 5, 5, 7, 7, 7});
}

TEST_CASE("oracles match the production routines on random instances") {
    oracle::RandomInstanceSpec spec;
    RandomSource rng(128);
    for (int trial = 0; trial < 60; ++trial) {
        auto tn = oracle::random_tn<double>(spec, rng);
        auto a = oracle::enumerate_contraction(tn);
        auto b = tn_state_bruteforce(tn);
        REQUIRE(a.labels == b.labels);
        for (std::size_t i = 0; i < a.data.size(); ++i)
            CHECK(a.data[i] == doctest::Approx(b.data[i]).epsilon(1e-10));
    }
}

TEST_CASE("random_hypergraph respects its bounds and is seed-deterministic") {
    oracle::RandomInstanceSpec spec;
    spec.max_vars = 5;
    spec.max_edges = 4;
    spec.seed = 31337;
    auto a = oracle::random_hypergraph(spec);
    auto b = oracle::random_hypergraph(spec);
    CHECK(a == b);

    RandomSource rng(1);
    for (int trial = 0; trial < 500; ++trial) {
        auto h = oracle::random_hypergraph(spec, rng);
        CHECK(h.vertex_count >= 1);
        CHECK(h.vertex_count <= 5);
        CHECK(h.edge_count() <= 4 + 3); // base edges plus degenerate injections
        h.validate();
    }

    CHECK_THROWS_AS(oracle::random_hypergraph(oracle::RandomInstanceSpec{0, 1, 1, 0}), domain_error);
}

TEST_CASE("degenerate hyperedges appear at the intended rate") {
    oracle::RandomInstanceSpec spec;
    RandomSource rng(555);
    int trials = 2000, empties = 0, singletons = 0, duplicates = 0;
    for (int t = 0; t < trials; ++t) {
        auto h = oracle::random_hypergraph(spec, rng);
        std::set<VertexSet> seen;
        bool dup = false;
        for (const auto& e : h.edges) {
            if (e.empty()) ++empties;
            if (e.size() == 1) ++singletons;
            if (!seen.insert(e).second) dup = true;
        }
        if (dup) ++duplicates;
    }
    double empty_rate = empties / static_cast<double>(trials);
    double singleton_rate = singletons / static_cast<double>(trials);
    double duplicate_rate = duplicates / static_cast<double>(trials);
    CHECK(empty_rate >= 0.07);
    CHECK(empty_rate <= 0.13);
    CHECK(singleton_rate >= 0.07); // only the injection produces singletons
    CHECK(singleton_rate <= 0.13);
    CHECK(duplicate_rate >= 0.05); // injection is skipped when no edge exists yet
    CHECK(duplicate_rate <= 0.13);
}

TEST_CASE("random models validate and are seed-deterministic") {
    oracle::RandomInstanceSpec spec;
    spec.seed = 2024;
    CHECK(oracle::random_gm<double>(spec) == oracle::random_gm<double>(spec));
    CHECK(oracle::random_tn<Complex>(spec) == oracle::random_tn<Complex>(spec));

    RandomSource rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        auto gm = oracle::random_gm<double>(spec, rng);
        gm.validate();
        for (int s : gm.sizes) {
            CHECK(s >= 1);
            CHECK(s <= spec.max_size);
        }
        auto tn = oracle::random_tn<Complex>(spec, rng);
        tn.validate();
    }
}
