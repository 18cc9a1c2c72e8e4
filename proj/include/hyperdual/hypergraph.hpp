#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "hyperdual/error.hpp"

namespace hyperdual {

// Vertex subsets are stored as strictly increasing index sequences.
using VertexSet = std::vector<int>;

// Hypergraph with ordered hyperedges. Repeated, nested, singleton and empty
// hyperedges are all allowed; hyperedge identity is positional.
struct Hypergraph {
    int vertex_count = 0;
    std::vector<VertexSet> edges;

    Hypergraph() = default;
    Hypergraph(int d, std::vector<VertexSet> e) : vertex_count(d), edges(std::move(e)) {
        validate();
    }

    void validate() const {
        if (vertex_count < 0) throw domain_error("hypergraph: negative vertex count");
        for (const auto& edge : edges) {
            for (std::size_t i = 0; i < edge.size(); ++i) {
                if (edge[i] < 0 || edge[i] >= vertex_count)
                    throw domain_error("hypergraph: vertex index out of range");
                if (i > 0 && edge[i - 1] >= edge[i])
                    throw domain_error("hypergraph: hyperedge not strictly increasing");
            }
        }
    }

    int edge_count() const { return static_cast<int>(edges.size()); }

    bool operator==(const Hypergraph& other) const = default;
};

// Dense 0/1 incidence matrix, rows = vertices, columns = hyperedges.
struct IncidenceMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> entries; // row-major

    IncidenceMatrix() = default;
    IncidenceMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c, 0) {}

    std::uint8_t& at(int u, int c) { return entries[static_cast<std::size_t>(u) * cols + c]; }
    std::uint8_t at(int u, int c) const { return entries[static_cast<std::size_t>(u) * cols + c]; }

    IncidenceMatrix transposed() const {
        IncidenceMatrix t(cols, rows);
        for (int u = 0; u < rows; ++u)
            for (int c = 0; c < cols; ++c) t.at(c, u) = at(u, c);
        return t;
    }

    bool operator==(const IncidenceMatrix& other) const = default;
};

inline Hypergraph from_incidence(const IncidenceMatrix& m) {
    Hypergraph h;
    h.vertex_count = m.rows;
    h.edges.resize(static_cast<std::size_t>(m.cols));
    for (int c = 0; c < m.cols; ++c)
        for (int u = 0; u < m.rows; ++u)
            if (m.at(u, c)) h.edges[static_cast<std::size_t>(c)].push_back(u);
    return h;
}

inline IncidenceMatrix to_incidence(const Hypergraph& h) {
    IncidenceMatrix m(h.vertex_count, h.edge_count());
    for (int c = 0; c < h.edge_count(); ++c)
        for (int u : h.edges[static_cast<std::size_t>(c)]) m.at(u, c) = 1;
    return m;
}

// Dual hypergraph: incidence matrix transposed. Dual vertex j corresponds to
// hyperedge j of h, dual hyperedge u to vertex u of h.
inline Hypergraph dual(const Hypergraph& h) {
    Hypergraph d;
    d.vertex_count = h.edge_count();
    d.edges.resize(static_cast<std::size_t>(h.vertex_count));
    for (int c = 0; c < h.edge_count(); ++c)
        for (int u : h.edges[static_cast<std::size_t>(c)])
            d.edges[static_cast<std::size_t>(u)].push_back(c);
    return d;
}

// Simple undirected graph with a dense adjacency matrix.
struct Graph {
    int n = 0;
    std::vector<std::uint8_t> adj; // n*n, symmetric, zero diagonal

    Graph() = default;
    explicit Graph(int vertices) : n(vertices), adj(static_cast<std::size_t>(vertices) * vertices, 0) {}

    bool has_edge(int i, int j) const { return adj[static_cast<std::size_t>(i) * n + j] != 0; }

    void add_edge(int i, int j) {
        if (i == j) return;
        adj[static_cast<std::size_t>(i) * n + j] = 1;
        adj[static_cast<std::size_t>(j) * n + i] = 1;
    }

    int edge_count() const {
        int total = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (has_edge(i, j)) ++total;
        return total;
    }

    std::vector<int> neighbors(int i) const {
        std::vector<int> out;
        for (int j = 0; j < n; ++j)
            if (has_edge(i, j)) out.push_back(j);
        return out;
    }

    bool operator==(const Graph& other) const = default;
};

// Primal (two-section) graph: vertices adjacent iff they share a hyperedge.
inline Graph two_section(const Hypergraph& h) {
    Graph g(h.vertex_count);
    for (const auto& edge : h.edges)
        for (std::size_t i = 0; i < edge.size(); ++i)
            for (std::size_t j = i + 1; j < edge.size(); ++j) g.add_edge(edge[i], edge[j]);
    return g;
}

inline bool is_k_uniform(const Hypergraph& h, int k) {
    if (k < 0) throw domain_error("is_k_uniform: k must be nonnegative");
    return std::all_of(h.edges.begin(), h.edges.end(),
                       [k](const VertexSet& e) { return static_cast<int>(e.size()) == k; });
}

inline std::vector<int> vertex_degrees(const Hypergraph& h) {
    std::vector<int> deg(static_cast<std::size_t>(h.vertex_count), 0);
    for (const auto& edge : h.edges)
        for (int u : edge) ++deg[static_cast<std::size_t>(u)];
    return deg;
}

inline bool is_k_regular(const Hypergraph& h, int k) {
    if (k < 0) throw domain_error("is_k_regular: k must be nonnegative");
    auto deg = vertex_degrees(h);
    return std::all_of(deg.begin(), deg.end(), [k](int d) { return d == k; });
}

inline bool is_at_most_k_regular(const Hypergraph& h, int k) {
    if (k < 0) throw domain_error("is_at_most_k_regular: k must be nonnegative");
    auto deg = vertex_degrees(h);
    return std::all_of(deg.begin(), deg.end(), [k](int d) { return d <= k; });
}

// A hypergraph is Berge-acyclic iff its bipartite incidence graph (vertices
// on one side, hyperedges on the other, adjacency by membership) is a forest.
inline bool is_berge_acyclic(const Hypergraph& h) {
    int nodes = h.vertex_count + h.edge_count();
    std::vector<int> parent(static_cast<std::size_t>(nodes));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (int c = 0; c < h.edge_count(); ++c) {
        int edge_node = h.vertex_count + c;
        for (int u : h.edges[static_cast<std::size_t>(c)]) {
            int ru = find(u), re = find(edge_node);
            if (ru == re) return false;
            parent[static_cast<std::size_t>(ru)] = re;
        }
    }
    return true;
}

namespace detail {

// Bron-Kerbosch with pivoting over an adjacency matrix; invokes visit on each
// maximal clique. Aborts with size_error past the clique cap.
inline void bron_kerbosch(const Graph& g, std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                          std::size_t cap, std::size_t& count,
                          const std::function<void(const std::vector<int>&)>& visit) {
    if (p.empty() && x.empty()) {
        if (++count > cap) throw size_error("maximal clique enumeration exceeded cap of " + std::to_string(cap));
        visit(r);
        return;
    }
    int pivot = -1;
    std::size_t best = 0;
    for (const auto* candidates : {&p, &x}) {
        for (int v : *candidates) {
            std::size_t deg = 0;
            for (int u : p)
                if (g.has_edge(v, u)) ++deg;
            if (pivot == -1 || deg > best) {
                pivot = v;
                best = deg;
            }
        }
    }
    std::vector<int> ext;
    for (int v : p)
        if (pivot == -1 || !g.has_edge(pivot, v)) ext.push_back(v);
    for (int v : ext) {
        std::vector<int> p2, x2;
        for (int u : p)
            if (g.has_edge(v, u)) p2.push_back(u);
        for (int u : x)
            if (g.has_edge(v, u)) x2.push_back(u);
        r.push_back(v);
        bron_kerbosch(g, r, std::move(p2), std::move(x2), cap, count, visit);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

} // namespace detail

inline std::vector<std::vector<int>> maximal_cliques(const Graph& g, std::size_t cap = 1000000) {
    std::vector<std::vector<int>> out;
    std::vector<int> r, p(static_cast<std::size_t>(g.n));
    std::iota(p.begin(), p.end(), 0);
    std::size_t count = 0;
    detail::bron_kerbosch(g, r, std::move(p), {}, cap, count, [&](const std::vector<int>& clique) {
        auto c = clique;
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
    });
    std::sort(out.begin(), out.end());
    return out;
}

// Helly property of the hyperedge family: every pairwise-intersecting
// sub-family has a common vertex. Checked on the maximal cliques of the
// hyperedge intersection graph.
inline bool has_helly_property(const Hypergraph& h, std::size_t clique_cap = 1000000) {
    Graph inter(h.edge_count());
    for (int a = 0; a < h.edge_count(); ++a)
        for (int b = a + 1; b < h.edge_count(); ++b) {
            const auto& ea = h.edges[static_cast<std::size_t>(a)];
            const auto& eb = h.edges[static_cast<std::size_t>(b)];
            std::vector<int> common;
            std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(common));
            if (!common.empty()) inter.add_edge(a, b);
        }
    for (const auto& clique : maximal_cliques(inter, clique_cap)) {
        if (clique.size() < 2) continue;
        VertexSet common = h.edges[static_cast<std::size_t>(clique[0])];
        for (std::size_t i = 1; i < clique.size() && !common.empty(); ++i) {
            const auto& e = h.edges[static_cast<std::size_t>(clique[i])];
            VertexSet next;
            std::set_intersection(common.begin(), common.end(), e.begin(), e.end(), std::back_inserter(next));
            common = std::move(next);
        }
        if (common.empty()) return false;
    }
    return true;
}

// Simplicial complex given by its inclusion-maximal faces.
struct SimplicialComplex {
    int vertex_count = 0;
    std::vector<VertexSet> maximal_faces; // sorted, no face contains another

    bool operator==(const SimplicialComplex& other) const = default;
};

namespace detail {

inline std::vector<VertexSet> inclusion_maximal(std::vector<VertexSet> sets) {
    // Drop empties, dedupe, then drop sets contained in another.
    sets.erase(std::remove_if(sets.begin(), sets.end(), [](const VertexSet& s) { return s.empty(); }), sets.end());
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        bool contained = false;
        for (std::size_t j = 0; j < sets.size() && !contained; ++j) {
            if (i == j || sets[j].size() <= sets[i].size()) continue;
            contained = std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end());
        }
        if (!contained) out.push_back(sets[i]);
    }
    return out;
}

} // namespace detail

// Maximal faces are the inclusion-maximal hyperedges. Empty hyperedges carry
// no topology and are dropped.
inline SimplicialComplex simplicial_complex(const Hypergraph& h) {
    SimplicialComplex k;
    k.vertex_count = h.vertex_count;
    k.maximal_faces = detail::inclusion_maximal(h.edges);
    return k;
}

// Nerve of the hyperedge family: one nerve vertex per hyperedge, a face for
// each sub-family with common intersection. Maximal faces are the maximal
// vertex stars. Equals simplicial_complex(dual(h)).
inline SimplicialComplex nerve(const Hypergraph& h) {
    std::vector<VertexSet> stars(static_cast<std::size_t>(h.vertex_count));
    for (int c = 0; c < h.edge_count(); ++c)
        for (int u : h.edges[static_cast<std::size_t>(c)]) stars[static_cast<std::size_t>(u)].push_back(c);
    SimplicialComplex k;
    k.vertex_count = h.edge_count();
    k.maximal_faces = detail::inclusion_maximal(std::move(stars));
    return k;
}

// Alternating sum of nonempty face counts. Faces are enumerated as the union
// of the power sets of the maximal faces.
inline long long euler_characteristic(const SimplicialComplex& k, std::size_t face_cap = std::size_t{1} << 20) {
    std::set<VertexSet> faces;
    for (const auto& maximal : k.maximal_faces) {
        std::size_t m = maximal.size();
        if (m >= 63 || (std::size_t{1} << m) > face_cap + 1)
            throw size_error("euler_characteristic: face enumeration exceeds cap of " + std::to_string(face_cap));
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
            VertexSet face;
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (std::uint64_t{1} << i)) face.push_back(maximal[i]);
            faces.insert(std::move(face));
            if (faces.size() > face_cap)
                throw size_error("euler_characteristic: face enumeration exceeds cap of " + std::to_string(face_cap));
        }
    }
    long long chi = 0;
    for (const auto& face : faces) chi += (face.size() % 2 == 1) ? 1 : -1;
    return chi;
}

// Connected components of the union of the maximal faces. Vertices in no
// face do not count.
inline int connected_components(const SimplicialComplex& k) {
    std::vector<int> parent(static_cast<std::size_t>(k.vertex_count));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    std::vector<std::uint8_t> used(static_cast<std::size_t>(k.vertex_count), 0);
    for (const auto& face : k.maximal_faces)
        for (int v : face) {
            used[static_cast<std::size_t>(v)] = 1;
            parent[static_cast<std::size_t>(find(v))] = find(face[0]);
        }
    std::set<int> roots;
    for (int v = 0; v < k.vertex_count; ++v)
        if (used[static_cast<std::size_t>(v)]) roots.insert(find(v));
    return static_cast<int>(roots.size());
}

} // namespace hyperdual
