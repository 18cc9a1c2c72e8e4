#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hyperdual/junction.hpp"
#include "hyperdual/model.hpp"
#include "hyperdual/zoo.hpp"

namespace hyperdual {

// One contraction step: either sum out a bound hyperedge after fusing the
// tensors that carry it, or merge two tensors pairwise.
struct PlanStep {
    enum class Kind { SumEdge, MergePair };
    Kind kind = Kind::SumEdge;
    int edge = -1;  // SumEdge
    int a = -1, b = -1; // MergePair: original vertex ids

    static PlanStep sum_edge(int e) { return {Kind::SumEdge, e, -1, -1}; }
    static PlanStep merge(int a, int b) { return {Kind::MergePair, -1, a, b}; }
};

struct ContractionPlan {
    std::vector<PlanStep> steps;
};

struct CostReport {
    long long mults = 0;
    long long adds = 0;
    std::size_t peak_entries = 0;
    std::vector<std::pair<long long, long long>> per_step; // (mults, adds)
};

// Contract the network by dualizing to a graphical model, forcing the
// dangling-edge variables into the triangulation as one clique, and reading
// off that clique's unnormalized marginal. A network without dangling edges
// contracts to a scalar via a single message sweep.
template <class T>
LabeledTensor<T> contract(const TensorHypernetwork<T>& tn, std::size_t output_cap = kDefaultStateCap) {
    GraphicalModel<T> gm = tn_to_gm(tn);
    std::vector<int> dangling = tn.dangling_edges();
    if (dangling.empty()) return LabeledTensor<T>::scalar(total_sum(gm));
    std::size_t out = 1;
    for (int e : dangling) {
        out *= static_cast<std::size_t>(tn.edge_sizes[static_cast<std::size_t>(e)]);
        if (out > output_cap)
            throw size_error("contract: output tensor exceeds cap of " + std::to_string(output_cap));
    }
    return marginal_set(gm, dangling, /*normalized=*/false);
}

// Derive a bound-edge elimination order from the junction tree of the dual
// graphical model: each message sums the variables of its source clique not
// in the separator, walking toward the clique of the dangling edges.
template <class T>
ContractionPlan plan_from_junction_tree(const TensorHypernetwork<T>& tn) {
    GraphicalModel<T> gm = tn_to_gm(tn);
    ContractionPlan plan;
    if (gm.h.vertex_count == 0) return plan;
    std::vector<int> dangling = tn.dangling_edges();
    auto jt = build_tree_for(gm, {}, dangling);
    int terminal = -1;
    if (!dangling.empty()) {
        for (std::size_t i = 0; i < jt.nodes.size() && terminal < 0; ++i)
            if (std::includes(jt.nodes[i].clique.begin(), jt.nodes[i].clique.end(), dangling.begin(), dangling.end()))
                terminal = static_cast<int>(i);
    }
    if (terminal < 0) {
        auto [order_from_root, parent_unused] = jt.bfs(jt.root);
        (void)parent_unused;
        terminal = order_from_root.back();
    }
    auto [order, parent] = jt.bfs(terminal);
    for (std::size_t i = order.size(); i-- > 0;) {
        int v = order[i];
        int p = parent[static_cast<std::size_t>(v)];
        if (p < 0) continue;
        const auto& clique = jt.nodes[static_cast<std::size_t>(v)].clique;
        const auto& up = jt.nodes[static_cast<std::size_t>(p)].clique;
        VertexSet sep;
        std::set_intersection(clique.begin(), clique.end(), up.begin(), up.end(), std::back_inserter(sep));
        for (int var : clique)
            if (!std::binary_search(sep.begin(), sep.end(), var))
                plan.steps.push_back(PlanStep::sum_edge(var));
    }
    // Remaining bound edges live in the terminal clique.
    std::set<int> free(dangling.begin(), dangling.end());
    for (int var : jt.nodes[static_cast<std::size_t>(terminal)].clique)
        if (!free.count(var)) plan.steps.push_back(PlanStep::sum_edge(var));
    return plan;
}

// Execute a plan by variable elimination over the network's edges, counting
// scalar multiplications and additions exactly. Peak entries is the largest
// total of live tensor entries, counting a fused intermediate together with
// its inputs.
template <class T>
std::pair<LabeledTensor<T>, CostReport> execute_plan(const TensorHypernetwork<T>& tn, const ContractionPlan& plan) {
    tn.validate();
    struct Live {
        std::set<int> vertices;
        LabeledTensor<T> tensor;
    };
    std::vector<Live> live;
    for (int v = 0; v < tn.g.vertex_count; ++v)
        live.push_back({{v}, tn.tensors[static_cast<std::size_t>(v)]});
    CostReport cost;
    std::size_t live_total = 0;
    for (const auto& item : live) live_total += item.tensor.entry_count();
    cost.peak_entries = live_total;
    T scalar_factor = T(1);
    bool have_scalar_factor = false;
    std::set<int> summed;

    auto fuse = [&](std::vector<std::size_t> indices, long long& mults) -> LabeledTensor<T> {
        // indices sorted ascending; removes them from live
        LabeledTensor<T> acc = live[indices[0]].tensor;
        std::set<int> verts = live[indices[0]].vertices;
        for (std::size_t i = 1; i < indices.size(); ++i) {
            acc = multiply(acc, live[indices[i]].tensor);
            verts.insert(live[indices[i]].vertices.begin(), live[indices[i]].vertices.end());
        }
        if (indices.size() >= 2)
            mults += static_cast<long long>(indices.size() - 1) * static_cast<long long>(acc.entry_count());
        cost.peak_entries = std::max(cost.peak_entries, live_total + acc.entry_count());
        for (std::size_t i = indices.size(); i-- > 0;) {
            live_total -= live[indices[i]].tensor.entry_count();
            live.erase(live.begin() + static_cast<std::ptrdiff_t>(indices[i]));
        }
        live.push_back({std::move(verts), std::move(acc)});
        live_total += live.back().tensor.entry_count();
        return live.back().tensor;
    };

    for (const auto& step : plan.steps) {
        long long mults = 0, adds = 0;
        if (step.kind == PlanStep::Kind::SumEdge) {
            int e = step.edge;
            if (e < 0 || e >= tn.g.edge_count()) throw plan_error("plan references absent edge " + std::to_string(e));
            if (summed.count(e)) throw plan_error("plan sums edge " + std::to_string(e) + " twice");
            summed.insert(e);
            std::size_t arity = tn.g.edges[static_cast<std::size_t>(e)].size();
            int size = tn.edge_sizes[static_cast<std::size_t>(e)];
            if (arity == 0) {
                scalar_factor = scalar_factor * T(size);
                have_scalar_factor = true;
                adds += size - 1;
            } else {
                std::vector<std::size_t> carriers;
                for (std::size_t i = 0; i < live.size(); ++i)
                    if (live[i].tensor.axis_of(e) >= 0) carriers.push_back(i);
                if (carriers.empty()) throw plan_error("plan references absent edge " + std::to_string(e));
                fuse(carriers, mults);
                auto& target = live.back();
                std::size_t before = target.tensor.entry_count();
                target.tensor = sum_out(target.tensor, e);
                live_total -= before - target.tensor.entry_count();
                adds += static_cast<long long>(target.tensor.entry_count()) * (size - 1);
            }
        } else {
            auto locate = [&](int vertex) -> std::size_t {
                for (std::size_t i = 0; i < live.size(); ++i)
                    if (live[i].vertices.count(vertex)) return i;
                throw plan_error("plan merges unknown vertex " + std::to_string(vertex));
            };
            std::size_t ia = locate(step.a), ib = locate(step.b);
            if (ia == ib) throw plan_error("plan merges tensors already fused");
            fuse({std::min(ia, ib), std::max(ia, ib)}, mults);
        }
        cost.mults += mults;
        cost.adds += adds;
        cost.per_step.emplace_back(mults, adds);
    }

    for (int e = 0; e < tn.g.edge_count(); ++e)
        if (tn.g.edges[static_cast<std::size_t>(e)].size() != 1 && !summed.count(e))
            throw plan_error("plan leaves bound edge " + std::to_string(e) + " uncontracted");

    long long mults = 0;
    if (live.empty()) live.push_back({{}, LabeledTensor<T>::scalar(T(1))});
    if (live.size() > 1) {
        std::vector<std::size_t> all(live.size());
        std::iota(all.begin(), all.end(), 0);
        fuse(all, mults);
    }
    LabeledTensor<T> result = live.back().tensor;
    if (have_scalar_factor) {
        for (auto& v : result.data) v = v * scalar_factor;
        mults += static_cast<long long>(result.entry_count());
    }
    cost.mults += mults;
    return {std::move(result), std::move(cost)};
}

// Expectation value <psi| A |psi> of an MPS under block-diagonal A, computed
// by contracting the sandwich network through the dual graphical model.
template <class T>
T expectation_value(const TensorHypernetwork<T>& psi, const std::vector<zoo::OperatorBlock<T>>& blocks) {
    auto sandwich = zoo::mps_sandwich(psi, blocks);
    return total_sum(tn_to_gm(sandwich));
}

} // namespace hyperdual
