#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hyperdual/model.hpp"

namespace hyperdual {

struct EliminationOrder {
    std::vector<int> order; // permutation of the primal-graph vertices

    void validate(int n) const {
        if (static_cast<int>(order.size()) != n) throw domain_error("elimination order: wrong length");
        std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
        for (int v : order) {
            if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
                throw domain_error("elimination order: not a permutation");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
};

// Eliminate vertices in the given order, connecting the remaining neighbors
// of each eliminated vertex. Returns original + fill edges.
inline Graph fill_in(const Graph& g, const EliminationOrder& eo, std::vector<std::pair<int, int>>* fill_edges = nullptr) {
    eo.validate(g.n);
    Graph work = g;
    Graph result = g;
    std::vector<std::uint8_t> gone(static_cast<std::size_t>(g.n), 0);
    for (int v : eo.order) {
        std::vector<int> nb;
        for (int u = 0; u < g.n; ++u)
            if (!gone[static_cast<std::size_t>(u)] && work.has_edge(v, u)) nb.push_back(u);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!work.has_edge(nb[i], nb[j])) {
                    work.add_edge(nb[i], nb[j]);
                    result.add_edge(nb[i], nb[j]);
                    if (fill_edges) fill_edges->emplace_back(nb[i], nb[j]);
                }
        gone[static_cast<std::size_t>(v)] = 1;
    }
    return result;
}

// Min-fill heuristic, lexicographic tie-break.
inline EliminationOrder min_fill_order(const Graph& g) {
    Graph work = g;
    std::vector<std::uint8_t> gone(static_cast<std::size_t>(g.n), 0);
    EliminationOrder eo;
    for (int step = 0; step < g.n; ++step) {
        int best = -1;
        long long best_fill = 0;
        for (int v = 0; v < g.n; ++v) {
            if (gone[static_cast<std::size_t>(v)]) continue;
            std::vector<int> nb;
            for (int u = 0; u < g.n; ++u)
                if (!gone[static_cast<std::size_t>(u)] && work.has_edge(v, u)) nb.push_back(u);
            long long fill = 0;
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j)
                    if (!work.has_edge(nb[i], nb[j])) ++fill;
            if (best == -1 || fill < best_fill) {
                best = v;
                best_fill = fill;
            }
        }
        eo.order.push_back(best);
        std::vector<int> nb;
        for (int u = 0; u < g.n; ++u)
            if (!gone[static_cast<std::size_t>(u)] && work.has_edge(best, u)) nb.push_back(u);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) work.add_edge(nb[i], nb[j]);
        gone[static_cast<std::size_t>(best)] = 1;
    }
    return eo;
}

inline bool is_perfect_elimination_order(const Graph& g, const EliminationOrder& eo) {
    eo.validate(g.n);
    std::vector<int> pos(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) pos[static_cast<std::size_t>(eo.order[static_cast<std::size_t>(i)])] = i;
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> later;
        for (int u = 0; u < g.n; ++u)
            if (g.has_edge(v, u) && pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)]) later.push_back(u);
        for (std::size_t i = 0; i < later.size(); ++i)
            for (std::size_t j = i + 1; j < later.size(); ++j)
                if (!g.has_edge(later[i], later[j])) return false;
    }
    return true;
}

// Min-fill triangulation; the returned graph is chordal with the returned
// order as a perfect elimination order.
inline std::pair<Graph, EliminationOrder> triangulate(const Graph& g, std::vector<std::pair<int, int>>* fill_edges = nullptr) {
    EliminationOrder eo = min_fill_order(g);
    Graph chordal = fill_in(g, eo, fill_edges);
    return {std::move(chordal), std::move(eo)};
}

// Maximal cliques of a chordal graph from a perfect elimination order: each
// vertex plus its later neighbors, with non-maximal sets removed.
inline std::vector<VertexSet> maximal_cliques_chordal(const Graph& g, const EliminationOrder& eo) {
    if (!is_perfect_elimination_order(g, eo))
        throw domain_error("maximal_cliques_chordal: order is not a perfect elimination order");
    std::vector<int> pos(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) pos[static_cast<std::size_t>(eo.order[static_cast<std::size_t>(i)])] = i;
    std::vector<VertexSet> candidates;
    for (int v : eo.order) {
        VertexSet clique{v};
        for (int u = 0; u < g.n; ++u)
            if (g.has_edge(v, u) && pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)]) clique.push_back(u);
        std::sort(clique.begin(), clique.end());
        candidates.push_back(std::move(clique));
    }
    std::vector<VertexSet> cliques;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
            if (i == j) continue;
            bool subset = std::includes(candidates[j].begin(), candidates[j].end(),
                                        candidates[i].begin(), candidates[i].end());
            if (subset && (candidates[j].size() > candidates[i].size() || j < i)) dominated = true;
        }
        if (!dominated) cliques.push_back(candidates[i]);
    }
    return cliques;
}

// Junction tree over clique nodes; tree edges carry separators.
template <class T>
struct JunctionTree {
    struct Node {
        VertexSet clique;
        LabeledTensor<T> potential;
    };
    struct TreeEdge {
        int a = 0, b = 0;
        VertexSet separator;
        LabeledTensor<T> potential;
    };

    std::vector<Node> nodes;
    std::vector<TreeEdge> edges;
    int root = 0;

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(nodes.size());
        for (std::size_t e = 0; e < edges.size(); ++e) {
            adj[static_cast<std::size_t>(edges[e].a)].push_back(static_cast<int>(e));
            adj[static_cast<std::size_t>(edges[e].b)].push_back(static_cast<int>(e));
        }
        return adj;
    }

    // Nodes in breadth-first order from start plus the parent of each node.
    std::pair<std::vector<int>, std::vector<int>> bfs(int start) const {
        std::vector<int> order, parent(nodes.size(), -1);
        std::vector<std::uint8_t> seen(nodes.size(), 0);
        std::queue<int> q;
        q.push(start);
        seen[static_cast<std::size_t>(start)] = 1;
        auto adj = adjacency();
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            order.push_back(v);
            for (int e : adj[static_cast<std::size_t>(v)]) {
                int w = edges[static_cast<std::size_t>(e)].a == v ? edges[static_cast<std::size_t>(e)].b
                                                                  : edges[static_cast<std::size_t>(e)].a;
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    parent[static_cast<std::size_t>(w)] = v;
                    q.push(w);
                }
            }
        }
        return {std::move(order), std::move(parent)};
    }
};

// Running intersection property: the nodes containing any given variable
// induce a connected subtree.
template <class T>
bool has_running_intersection(const JunctionTree<T>& jt) {
    std::set<int> vars;
    for (const auto& node : jt.nodes) vars.insert(node.clique.begin(), node.clique.end());
    for (int v : vars) {
        std::vector<int> holders;
        for (std::size_t i = 0; i < jt.nodes.size(); ++i)
            if (std::binary_search(jt.nodes[i].clique.begin(), jt.nodes[i].clique.end(), v))
                holders.push_back(static_cast<int>(i));
        // connectivity of the induced subgraph
        std::set<int> holder_set(holders.begin(), holders.end());
        std::set<int> reached{holders.front()};
        std::queue<int> q;
        q.push(holders.front());
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            for (const auto& edge : jt.edges) {
                int other = -1;
                if (edge.a == a) other = edge.b;
                if (edge.b == a) other = edge.a;
                if (other >= 0 && holder_set.count(other) && !reached.count(other)) {
                    reached.insert(other);
                    q.push(other);
                }
            }
        }
        if (reached.size() != holders.size()) return false;
    }
    return true;
}

// Maximum-weight spanning tree of the clique graph under separator size,
// ties broken lexicographically; zero-weight edges connect components.
// Node and separator potentials start as all-ones.
template <class T>
JunctionTree<T> build_junction_tree(const std::vector<VertexSet>& cliques, const std::vector<int>& sizes, int root = 0) {
    JunctionTree<T> jt;
    jt.root = root;
    for (const auto& clique : cliques) {
        std::vector<int> axis_sizes;
        for (int v : clique) axis_sizes.push_back(sizes[static_cast<std::size_t>(v)]);
        jt.nodes.push_back({clique, LabeledTensor<T>::ones(clique, axis_sizes)});
    }
    struct Candidate {
        int weight, a, b;
    };
    std::vector<Candidate> candidates;
    for (std::size_t i = 0; i < cliques.size(); ++i)
        for (std::size_t j = i + 1; j < cliques.size(); ++j) {
            VertexSet common;
            std::set_intersection(cliques[i].begin(), cliques[i].end(), cliques[j].begin(), cliques[j].end(),
                                  std::back_inserter(common));
            candidates.push_back({static_cast<int>(common.size()), static_cast<int>(i), static_cast<int>(j)});
        }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& x, const Candidate& y) {
        if (x.weight != y.weight) return x.weight > y.weight;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    std::vector<int> parent(cliques.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const auto& cand : candidates) {
        int ra = find(cand.a), rb = find(cand.b);
        if (ra == rb) continue;
        parent[static_cast<std::size_t>(ra)] = rb;
        VertexSet sep;
        std::set_intersection(cliques[static_cast<std::size_t>(cand.a)].begin(), cliques[static_cast<std::size_t>(cand.a)].end(),
                              cliques[static_cast<std::size_t>(cand.b)].begin(), cliques[static_cast<std::size_t>(cand.b)].end(),
                              std::back_inserter(sep));
        std::vector<int> sep_sizes;
        for (int v : sep) sep_sizes.push_back(sizes[static_cast<std::size_t>(v)]);
        jt.edges.push_back({cand.a, cand.b, sep, LabeledTensor<T>::ones(sep, sep_sizes)});
    }
    if (!jt.nodes.empty() && !has_running_intersection(jt))
        throw error("build_junction_tree: running intersection property violated (non-chordal input?)");
    return jt;
}

// Multiply each hyperedge potential into the lowest-index node whose clique
// contains the hyperedge.
template <class T>
JunctionTree<T> assign_potentials(const GraphicalModel<T>& gm, JunctionTree<T> jt) {
    for (std::size_t c = 0; c < gm.potentials.size(); ++c) {
        const auto& edge = gm.h.edges[c];
        int target = -1;
        for (std::size_t i = 0; i < jt.nodes.size() && target < 0; ++i)
            if (std::includes(jt.nodes[i].clique.begin(), jt.nodes[i].clique.end(), edge.begin(), edge.end()))
                target = static_cast<int>(i);
        if (target < 0)
            throw error("assign_potentials: hyperedge " + std::to_string(c) + " not covered by any clique");
        jt.nodes[static_cast<std::size_t>(target)].potential =
            multiply(jt.nodes[static_cast<std::size_t>(target)].potential, gm.potentials[c]);
    }
    return jt;
}

namespace detail {

// Elementwise new/old with the 0/0 := 0 convention.
template <class T>
LabeledTensor<T> separator_ratio(const LabeledTensor<T>& fresh, const LabeledTensor<T>& old) {
    LabeledTensor<T> ratio = fresh;
    for (std::size_t i = 0; i < ratio.data.size(); ++i) {
        if (old.data[i] == T{}) {
            if (ratio.data[i] == T{})
                ratio.data[i] = T{};
            else
                throw numerical_error("pass_message: nonzero separator update against zero old separator");
        } else {
            ratio.data[i] = ratio.data[i] / old.data[i];
        }
    }
    return ratio;
}

} // namespace detail

// Basic message passing operation from node `from` to adjacent node `to`.
template <class T>
void pass_message(JunctionTree<T>& jt, int from, int to) {
    int edge_index = -1;
    for (std::size_t e = 0; e < jt.edges.size(); ++e)
        if ((jt.edges[e].a == from && jt.edges[e].b == to) || (jt.edges[e].a == to && jt.edges[e].b == from))
            edge_index = static_cast<int>(e);
    if (edge_index < 0) throw domain_error("pass_message: nodes are not adjacent");
    auto& edge = jt.edges[static_cast<std::size_t>(edge_index)];
    LabeledTensor<T> fresh = jt.nodes[static_cast<std::size_t>(from)].potential;
    for (int v : jt.nodes[static_cast<std::size_t>(from)].clique)
        if (!std::binary_search(edge.separator.begin(), edge.separator.end(), v)) fresh = sum_out(fresh, v);
    LabeledTensor<T> ratio = detail::separator_ratio(fresh, edge.potential);
    edge.potential = std::move(fresh);
    jt.nodes[static_cast<std::size_t>(to)].potential =
        multiply(jt.nodes[static_cast<std::size_t>(to)].potential, ratio);
}

// Two-sweep calibration: collect toward the root, then distribute back out.
// Afterwards each node potential is the unnormalized marginal of its clique.
template <class T>
JunctionTree<T> calibrate(JunctionTree<T> jt) {
    if (jt.nodes.size() <= 1) return jt;
    auto [order, parent] = jt.bfs(jt.root);
    for (std::size_t i = order.size(); i-- > 0;) {
        int v = order[i];
        if (parent[static_cast<std::size_t>(v)] >= 0) pass_message(jt, v, parent[static_cast<std::size_t>(v)]);
    }
    for (int v : order)
        if (parent[static_cast<std::size_t>(v)] >= 0) pass_message(jt, parent[static_cast<std::size_t>(v)], v);
    return jt;
}

struct JunctionOptions {
    std::optional<EliminationOrder> elimination_order; // default: min-fill
    int root = 0;
};

struct JunctionDiagnostics {
    EliminationOrder elimination_order;
    std::vector<std::pair<int, int>> fill_edges;
    std::vector<VertexSet> cliques;
    std::vector<std::pair<std::pair<int, int>, VertexSet>> tree_edges; // (a,b) -> separator
};

// Build an assigned junction tree for a model, optionally forcing an extra
// clique into the triangulation.
template <class T>
JunctionTree<T> build_tree_for(const GraphicalModel<T>& gm, const JunctionOptions& opts = {},
                               const VertexSet& extra_clique = {}, JunctionDiagnostics* diag = nullptr) {
    gm.validate();
    if (gm.h.vertex_count == 0) {
        JunctionTree<T> jt;
        jt.nodes.push_back({{}, LabeledTensor<T>::scalar(T(1))});
        return assign_potentials(gm, std::move(jt));
    }
    Graph primal = two_section(gm.h);
    for (std::size_t i = 0; i < extra_clique.size(); ++i)
        for (std::size_t j = i + 1; j < extra_clique.size(); ++j) primal.add_edge(extra_clique[i], extra_clique[j]);
    EliminationOrder eo = opts.elimination_order ? *opts.elimination_order : min_fill_order(primal);
    std::vector<std::pair<int, int>> fill;
    Graph chordal = fill_in(primal, eo, &fill);
    auto cliques = maximal_cliques_chordal(chordal, eo);
    int root = opts.root;
    if (root < 0 || root >= static_cast<int>(cliques.size())) throw domain_error("junction: root out of range");
    auto jt = build_junction_tree<T>(cliques, gm.sizes, root);
    if (diag) {
        diag->elimination_order = eo;
        diag->fill_edges = fill;
        diag->cliques = cliques;
        diag->tree_edges.clear();
        for (const auto& edge : jt.edges) diag->tree_edges.push_back({{edge.a, edge.b}, edge.separator});
    }
    return assign_potentials(gm, std::move(jt));
}

// Partition function by a single sweep of messages toward a terminal node
// (the last node in breadth-first order from the root), then summing there.
template <class T>
T total_sum(const GraphicalModel<T>& gm, const JunctionOptions& opts = {}) {
    auto jt = build_tree_for(gm, opts);
    auto [order_from_root, parent_unused] = jt.bfs(jt.root);
    (void)parent_unused;
    int terminal = order_from_root.back();
    auto [order, parent] = jt.bfs(terminal);
    for (std::size_t i = order.size(); i-- > 0;) {
        int v = order[i];
        if (parent[static_cast<std::size_t>(v)] >= 0) pass_message(jt, v, parent[static_cast<std::size_t>(v)]);
    }
    return jt.nodes[static_cast<std::size_t>(terminal)].potential.total();
}

// Marginal of an arbitrary variable set, computed by forcing the set into
// the triangulation as a clique and calibrating.
template <class T>
LabeledTensor<T> marginal_set(const GraphicalModel<T>& gm, const VertexSet& w, bool normalized = true,
                              const JunctionOptions& opts = {}) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0 || w[i] >= gm.h.vertex_count) throw domain_error("marginal: unknown variable");
        if (i > 0 && w[i - 1] >= w[i]) throw domain_error("marginal: variable set must be strictly increasing");
    }
    if (w.empty()) {
        T z = total_sum(gm, opts);
        if (normalized) {
            if (z == T{}) throw degenerate_error("marginal: partition function is zero");
            return LabeledTensor<T>::scalar(T(1));
        }
        return LabeledTensor<T>::scalar(z);
    }
    auto jt = calibrate(build_tree_for(gm, opts, w));
    int holder = -1;
    for (std::size_t i = 0; i < jt.nodes.size() && holder < 0; ++i)
        if (std::includes(jt.nodes[i].clique.begin(), jt.nodes[i].clique.end(), w.begin(), w.end()))
            holder = static_cast<int>(i);
    if (holder < 0) throw error("marginal: forced clique missing from junction tree");
    LabeledTensor<T> marg = jt.nodes[static_cast<std::size_t>(holder)].potential;
    for (int v : jt.nodes[static_cast<std::size_t>(holder)].clique)
        if (!std::binary_search(w.begin(), w.end(), v)) marg = sum_out(marg, v);
    if (normalized) {
        T z = marg.total();
        if (z == T{}) throw degenerate_error("marginal: partition function is zero");
        for (auto& v : marg.data) v = v / z;
    }
    return marg;
}

// Marginal at hyperedge c of the model.
template <class T>
LabeledTensor<T> marginal(const GraphicalModel<T>& gm, int hyperedge, bool normalized = true,
                          const JunctionOptions& opts = {}) {
    if (hyperedge < 0 || hyperedge >= gm.h.edge_count()) throw domain_error("marginal: unknown hyperedge");
    return marginal_set(gm, gm.h.edges[static_cast<std::size_t>(hyperedge)], normalized, opts);
}

// Upper bound on treewidth: largest clique of the min-fill triangulation,
// minus one.
inline int treewidth_estimate(const Graph& g) {
    if (g.n == 0) return -1;
    auto [chordal, eo] = triangulate(g);
    auto cliques = maximal_cliques_chordal(chordal, eo);
    std::size_t largest = 0;
    for (const auto& clique : cliques) largest = std::max(largest, clique.size());
    return static_cast<int>(largest) - 1;
}

template <class T>
int treewidth_estimate(const GraphicalModel<T>& gm) {
    return treewidth_estimate(two_section(gm.h));
}

template <class T>
int treewidth_estimate(const TensorHypernetwork<T>& tn) {
    return treewidth_estimate(two_section(dual(tn.g)));
}

} // namespace hyperdual
