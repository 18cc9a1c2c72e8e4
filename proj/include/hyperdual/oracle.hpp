#pragma once

// Deliberately naive reference implementations used to verify the production
// paths. These enumerate assignments with plain index arithmetic and share
// none of the tensor algebra.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "hyperdual/model.hpp"
#include "hyperdual/rng.hpp"

namespace hyperdual {
namespace oracle {

namespace detail {

// Row-major flat index of the sub-assignment given by `labels` inside the
// global assignment `x`.
inline std::size_t flat_index(const std::vector<int>& labels, const std::vector<int>& sizes_by_label,
                              const std::vector<int>& x) {
    std::size_t off = 0;
    for (int l : labels)
        off = off * static_cast<std::size_t>(sizes_by_label[static_cast<std::size_t>(l)]) +
              static_cast<std::size_t>(x[static_cast<std::size_t>(l)]);
    return off;
}

inline bool advance(std::vector<int>& x, const std::vector<int>& sizes) {
    for (std::size_t i = x.size(); i-- > 0;) {
        if (++x[i] < sizes[i]) return true;
        x[i] = 0;
    }
    return false;
}

} // namespace detail

// Unnormalized joint of a graphical model, assignment by assignment.
template <class T>
LabeledTensor<T> enumerate_joint(const GraphicalModel<T>& gm, std::size_t cap = kDefaultStateCap) {
    gm.validate();
    std::size_t states = 1;
    for (int s : gm.sizes) {
        states *= static_cast<std::size_t>(s);
        if (states > cap) throw size_error("enumerate_joint: state space exceeds cap of " + std::to_string(cap));
    }
    std::vector<T> data;
    data.reserve(states);
    std::vector<int> x(static_cast<std::size_t>(gm.h.vertex_count), 0);
    do {
        T value = T(1);
        for (std::size_t c = 0; c < gm.potentials.size(); ++c)
            value = value * gm.potentials[c].data[detail::flat_index(gm.h.edges[c], gm.sizes, x)];
        data.push_back(value);
    } while (detail::advance(x, gm.sizes));
    std::vector<int> labels(static_cast<std::size_t>(gm.h.vertex_count));
    std::iota(labels.begin(), labels.end(), 0);
    return LabeledTensor<T>(labels, gm.sizes, std::move(data));
}

// Contraction of a tensor hypernetwork, keeping the listed edges free, by
// looping over every full edge assignment.
template <class T>
LabeledTensor<T> enumerate_contraction(const TensorHypernetwork<T>& tn, const std::vector<int>& free_edges,
                                       std::size_t cap = kDefaultStateCap) {
    tn.validate();
    std::size_t states = 1;
    for (int s : tn.edge_sizes) {
        states *= static_cast<std::size_t>(s);
        if (states > cap) throw size_error("enumerate_contraction: edge space exceeds cap of " + std::to_string(cap));
    }
    std::vector<int> sorted_free = free_edges;
    std::sort(sorted_free.begin(), sorted_free.end());
    std::vector<int> free_sizes;
    std::size_t out_count = 1;
    for (int e : sorted_free) {
        if (e < 0 || e >= tn.g.edge_count()) throw label_error("enumerate_contraction: unknown edge");
        free_sizes.push_back(tn.edge_sizes[static_cast<std::size_t>(e)]);
        out_count *= static_cast<std::size_t>(tn.edge_sizes[static_cast<std::size_t>(e)]);
    }
    Hypergraph incident = dual(tn.g); // incident[v] = edges touching vertex v
    std::vector<T> data(out_count, T{});
    std::vector<int> x(static_cast<std::size_t>(tn.g.edge_count()), 0);
    do {
        T value = T(1);
        for (int v = 0; v < tn.g.vertex_count; ++v)
            value = value *
                    tn.tensors[static_cast<std::size_t>(v)]
                        .data[detail::flat_index(incident.edges[static_cast<std::size_t>(v)], tn.edge_sizes, x)];
        data[detail::flat_index(sorted_free, tn.edge_sizes, x)] += value;
    } while (detail::advance(x, tn.edge_sizes));
    return LabeledTensor<T>(sorted_free, std::move(free_sizes), std::move(data));
}

// Default contraction: dangling edges free, everything else summed.
template <class T>
LabeledTensor<T> enumerate_contraction(const TensorHypernetwork<T>& tn, std::size_t cap = kDefaultStateCap) {
    return enumerate_contraction(tn, tn.dangling_edges(), cap);
}

// Bounds for random instance generation.
struct RandomInstanceSpec {
    int max_vars = 6;
    int max_edges = 6;
    int max_size = 3;
    std::uint64_t seed = 0;

    void validate() const {
        if (max_vars < 1 || max_edges < 1 || max_size < 1)
            throw domain_error("random instance spec: all bounds must be >= 1");
    }
};

// Random hypergraph whose base edges are distinct and have two or more
// vertices; with probability 0.1 each, an empty edge, a singleton edge, or a
// duplicate of an existing edge is injected.
inline Hypergraph random_hypergraph(const RandomInstanceSpec& spec, RandomSource& rng) {
    spec.validate();
    int d = rng.uniform_index(1, spec.max_vars);
    Hypergraph h;
    h.vertex_count = d;
    int base = rng.uniform_index(0, spec.max_edges);
    std::set<VertexSet> seen;
    if (d >= 2) {
        for (int c = 0; c < base; ++c) {
            for (int attempt = 0; attempt < 30; ++attempt) {
                int size = rng.uniform_index(2, d);
                std::vector<int> pool(static_cast<std::size_t>(d));
                std::iota(pool.begin(), pool.end(), 0);
                VertexSet edge;
                for (int k = 0; k < size; ++k) {
                    int pick = rng.uniform_index(0, static_cast<int>(pool.size()) - 1);
                    edge.push_back(pool[static_cast<std::size_t>(pick)]);
                    pool.erase(pool.begin() + pick);
                }
                std::sort(edge.begin(), edge.end());
                if (seen.insert(edge).second) {
                    h.edges.push_back(std::move(edge));
                    break;
                }
            }
        }
    }
    if (rng.bernoulli(0.1)) h.edges.push_back({});
    if (rng.bernoulli(0.1)) h.edges.push_back({rng.uniform_index(0, d - 1)});
    if (rng.bernoulli(0.1) && !h.edges.empty())
        h.edges.push_back(h.edges[static_cast<std::size_t>(rng.uniform_index(0, static_cast<int>(h.edges.size()) - 1))]);
    h.validate();
    return h;
}

inline Hypergraph random_hypergraph(const RandomInstanceSpec& spec) {
    RandomSource rng(spec.seed);
    return random_hypergraph(spec, rng);
}

template <class T>
GraphicalModel<T> random_gm(const RandomInstanceSpec& spec, RandomSource& rng) {
    GraphicalModel<T> gm;
    gm.h = random_hypergraph(spec, rng);
    for (int u = 0; u < gm.h.vertex_count; ++u) gm.sizes.push_back(rng.uniform_index(1, spec.max_size));
    for (const auto& edge : gm.h.edges) {
        std::vector<int> axis_sizes;
        std::size_t count = 1;
        for (int u : edge) {
            axis_sizes.push_back(gm.sizes[static_cast<std::size_t>(u)]);
            count *= static_cast<std::size_t>(gm.sizes[static_cast<std::size_t>(u)]);
        }
        std::vector<T> data(count);
        for (auto& v : data) v = rng.draw<T>();
        gm.potentials.emplace_back(edge, std::move(axis_sizes), std::move(data));
    }
    gm.validate();
    return gm;
}

template <class T>
GraphicalModel<T> random_gm(const RandomInstanceSpec& spec) {
    RandomSource rng(spec.seed);
    return random_gm<T>(spec, rng);
}

template <class T>
TensorHypernetwork<T> random_tn(const RandomInstanceSpec& spec, RandomSource& rng) {
    TensorHypernetwork<T> tn;
    tn.g = random_hypergraph(spec, rng);
    for (int e = 0; e < tn.g.edge_count(); ++e) tn.edge_sizes.push_back(rng.uniform_index(1, spec.max_size));
    Hypergraph incident = dual(tn.g);
    for (int v = 0; v < tn.g.vertex_count; ++v) {
        std::vector<int> labels = incident.edges[static_cast<std::size_t>(v)];
        std::vector<int> axis_sizes;
        std::size_t count = 1;
        for (int e : labels) {
            axis_sizes.push_back(tn.edge_sizes[static_cast<std::size_t>(e)]);
            count *= static_cast<std::size_t>(tn.edge_sizes[static_cast<std::size_t>(e)]);
        }
        std::vector<T> data(count);
        for (auto& v2 : data) v2 = rng.draw<T>();
        tn.tensors.emplace_back(std::move(labels), std::move(axis_sizes), std::move(data));
    }
    tn.validate();
    return tn;
}

template <class T>
TensorHypernetwork<T> random_tn(const RandomInstanceSpec& spec) {
    RandomSource rng(spec.seed);
    return random_tn<T>(spec, rng);
}

} // namespace oracle
} // namespace hyperdual
