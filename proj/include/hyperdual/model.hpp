#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "hyperdual/hypergraph.hpp"
#include "hyperdual/tensor.hpp"

namespace hyperdual {

inline constexpr std::size_t kDefaultStateCap = std::size_t{1} << 20;

// Discrete graphical model: hypergraph over variables, a cardinality per
// variable, and one potential per hyperedge with labels equal to the edge.
template <class T>
struct GraphicalModel {
    Hypergraph h;
    std::vector<int> sizes;
    std::vector<LabeledTensor<T>> potentials;

    void validate() const {
        h.validate();
        if (static_cast<int>(sizes.size()) != h.vertex_count)
            throw shape_error("gm: one cardinality per variable required");
        for (int s : sizes)
            if (s < 1) throw shape_error("gm: cardinalities must be >= 1");
        if (potentials.size() != h.edges.size())
            throw shape_error("gm: one potential per hyperedge required");
        for (std::size_t c = 0; c < potentials.size(); ++c) {
            const auto& pot = potentials[c];
            if (pot.labels != h.edges[c])
                throw shape_error("gm: potential " + std::to_string(c) + " labels differ from its hyperedge");
            for (std::size_t i = 0; i < pot.labels.size(); ++i)
                if (pot.sizes[i] != sizes[static_cast<std::size_t>(pot.labels[i])])
                    throw shape_error("gm: potential " + std::to_string(c) + " axis size differs from variable cardinality");
        }
    }

    bool operator==(const GraphicalModel& other) const = default;
};

// Tensor hypernetwork: hypergraph over tensor sites, a size per hyperedge,
// and one tensor per site with labels equal to the incident edge ids.
template <class T>
struct TensorHypernetwork {
    Hypergraph g;
    std::vector<int> edge_sizes;
    std::vector<LabeledTensor<T>> tensors;

    void validate() const {
        g.validate();
        if (static_cast<int>(edge_sizes.size()) != g.edge_count())
            throw shape_error("tn: one size per hyperedge required");
        for (int s : edge_sizes)
            if (s < 1) throw shape_error("tn: hyperedge sizes must be >= 1");
        if (static_cast<int>(tensors.size()) != g.vertex_count)
            throw shape_error("tn: one tensor per vertex required");
        Hypergraph d = dual(g);
        for (int v = 0; v < g.vertex_count; ++v) {
            const auto& ten = tensors[static_cast<std::size_t>(v)];
            if (ten.labels != d.edges[static_cast<std::size_t>(v)])
                throw shape_error("tn: tensor " + std::to_string(v) + " labels differ from its incident edges");
            for (std::size_t i = 0; i < ten.labels.size(); ++i)
                if (ten.sizes[i] != edge_sizes[static_cast<std::size_t>(ten.labels[i])])
                    throw shape_error("tn: tensor " + std::to_string(v) + " axis size differs from edge size");
        }
    }

    // Edges with exactly one vertex; their labels survive contraction.
    std::vector<int> dangling_edges() const {
        std::vector<int> out;
        for (int e = 0; e < g.edge_count(); ++e)
            if (g.edges[static_cast<std::size_t>(e)].size() == 1) out.push_back(e);
        return out;
    }

    bool operator==(const TensorHypernetwork& other) const = default;
};

// Duality map: variables become edges (same ids), hyperedges become tensor
// sites, potentials are reused unchanged as site tensors.
template <class T>
TensorHypernetwork<T> gm_to_tn(const GraphicalModel<T>& gm) {
    gm.validate();
    TensorHypernetwork<T> tn;
    tn.g = dual(gm.h);
    tn.edge_sizes = gm.sizes;
    tn.tensors = gm.potentials;
    return tn;
}

template <class T>
GraphicalModel<T> tn_to_gm(const TensorHypernetwork<T>& tn) {
    tn.validate();
    GraphicalModel<T> gm;
    gm.h = dual(tn.g);
    gm.sizes = tn.edge_sizes;
    gm.potentials = tn.tensors;
    return gm;
}

// Full joint tensor over all variables, entry = product of potential values,
// optionally scaled by 1/Z. Desk-scale oracle semantics.
template <class T>
LabeledTensor<T> joint_tensor(const GraphicalModel<T>& gm, bool normalized = false,
                              std::size_t cap = kDefaultStateCap) {
    gm.validate();
    std::size_t states = 1;
    for (int s : gm.sizes) {
        states *= static_cast<std::size_t>(s);
        if (states > cap) throw size_error("joint_tensor: state space exceeds cap of " + std::to_string(cap));
    }
    std::vector<int> all_vars(static_cast<std::size_t>(gm.h.vertex_count));
    std::iota(all_vars.begin(), all_vars.end(), 0);
    LabeledTensor<T> joint = LabeledTensor<T>::ones(all_vars, gm.sizes);
    for (const auto& pot : gm.potentials) joint = multiply(joint, pot);
    if (normalized) return normalize(joint).first;
    return joint;
}

// Contract the network along every hyperedge not listed in free_edges by
// forming the full product and summing. A summed edge with no vertices
// contributes a factor of its size; a free edge with no vertices broadcasts.
template <class T>
LabeledTensor<T> contract_all_except(const TensorHypernetwork<T>& tn, const std::vector<int>& free_edges,
                                     std::size_t cap = kDefaultStateCap) {
    tn.validate();
    std::size_t states = 1;
    for (int s : tn.edge_sizes) {
        states *= static_cast<std::size_t>(s);
        if (states > cap) throw size_error("contract_all_except: edge space exceeds cap of " + std::to_string(cap));
    }
    std::set<int> free;
    for (int e : free_edges) {
        if (e < 0 || e >= tn.g.edge_count()) throw label_error("contract_all_except: unknown edge " + std::to_string(e));
        free.insert(e);
    }
    LabeledTensor<T> state = LabeledTensor<T>::scalar(T(1));
    for (const auto& ten : tn.tensors) state = multiply(state, ten);
    for (int e = 0; e < tn.g.edge_count(); ++e) {
        std::size_t arity = tn.g.edges[static_cast<std::size_t>(e)].size();
        int n = tn.edge_sizes[static_cast<std::size_t>(e)];
        if (free.count(e)) {
            if (arity == 0)
                state = multiply(state, LabeledTensor<T>::ones({e}, {n}));
        } else if (arity == 0) {
            state = multiply(state, LabeledTensor<T>::scalar(T(n)));
        } else if (state.axis_of(e) >= 0) {
            state = sum_out(state, e);
        }
    }
    return state;
}

// Tensor hypernetwork state: contract along every hyperedge with two or more
// vertices. The labels of the result are the dangling edges.
template <class T>
LabeledTensor<T> tn_state_bruteforce(const TensorHypernetwork<T>& tn, std::size_t cap = kDefaultStateCap) {
    return contract_all_except(tn, tn.dangling_edges(), cap);
}

// Unnormalized marginal of the variable subset w by direct summation.
template <class T>
LabeledTensor<T> marginal_bruteforce(const GraphicalModel<T>& gm, const std::vector<int>& w,
                                     std::size_t cap = kDefaultStateCap) {
    std::set<int> keep(w.begin(), w.end());
    LabeledTensor<T> joint = joint_tensor(gm, false, cap);
    for (int u = 0; u < gm.h.vertex_count; ++u)
        if (!keep.count(u)) joint = sum_out(joint, u);
    return joint;
}

// Condition variable u on an index subset: slice every potential whose
// hyperedge contains u; the cardinality of u shrinks to |keep|.
template <class T>
GraphicalModel<T> condition(const GraphicalModel<T>& gm, int u, const std::vector<int>& keep) {
    gm.validate();
    if (u < 0 || u >= gm.h.vertex_count) throw domain_error("condition: unknown variable " + std::to_string(u));
    if (keep.empty()) throw domain_error("condition: keep set must be non-empty");
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= gm.sizes[static_cast<std::size_t>(u)])
            throw domain_error("condition: index out of range");
        if (i > 0 && keep[i - 1] >= keep[i]) throw domain_error("condition: keep set must be strictly increasing");
    }
    GraphicalModel<T> out = gm;
    out.sizes[static_cast<std::size_t>(u)] = static_cast<int>(keep.size());
    for (std::size_t c = 0; c < out.potentials.size(); ++c)
        if (out.potentials[c].axis_of(u) >= 0) out.potentials[c] = slice(out.potentials[c], u, keep);
    return out;
}

} // namespace hyperdual
