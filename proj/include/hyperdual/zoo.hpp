#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperdual/model.hpp"
#include "hyperdual/rng.hpp"

namespace hyperdual {
namespace zoo {

// How to fill tensor entries: all ones, or seeded uniform draws ([-1,1] for
// reals, unit disk for complex).
struct FillSpec {
    enum class Mode { Ones, Random } mode = Mode::Ones;
    std::uint64_t seed = 0;

    static FillSpec ones() { return {}; }
    static FillSpec random(std::uint64_t seed) { return {Mode::Random, seed}; }
};

namespace detail {

template <class T>
std::vector<LabeledTensor<T>> fill_tensors(const Hypergraph& g, const std::vector<int>& edge_sizes,
                                           const FillSpec& fill) {
    Hypergraph incidence = dual(g);
    RandomSource rng(fill.seed);
    std::vector<LabeledTensor<T>> tensors;
    for (int v = 0; v < g.vertex_count; ++v) {
        std::vector<int> labels = incidence.edges[static_cast<std::size_t>(v)];
        std::vector<int> sizes;
        std::size_t count = 1;
        for (int e : labels) {
            sizes.push_back(edge_sizes[static_cast<std::size_t>(e)]);
            count *= static_cast<std::size_t>(edge_sizes[static_cast<std::size_t>(e)]);
        }
        std::vector<T> data(count, T(1));
        if (fill.mode == FillSpec::Mode::Random)
            for (auto& x : data) x = rng.draw<T>();
        tensors.emplace_back(std::move(labels), std::move(sizes), std::move(data));
    }
    return tensors;
}

} // namespace detail

// Matrix product state on d sites: dangling physical edge 2i (size n) per
// site, bond edge 2i+1 (size r) between sites i and i+1.
template <class T = double>
TensorHypernetwork<T> mps(int d, int n, int r, const FillSpec& fill = {}) {
    if (d < 1 || n < 1 || r < 1) throw domain_error("mps: all parameters must be >= 1");
    Hypergraph g;
    g.vertex_count = d;
    std::vector<int> edge_sizes;
    for (int i = 0; i < d; ++i) {
        g.edges.push_back({i});
        edge_sizes.push_back(n);
        if (i + 1 < d) {
            g.edges.push_back({i, i + 1});
            edge_sizes.push_back(r);
        }
    }
    TensorHypernetwork<T> tn{g, edge_sizes, detail::fill_tensors<T>(g, edge_sizes, fill)};
    tn.validate();
    return tn;
}

// Per-site operator block: an n x n matrix, entry(row, col) with the row
// index on the conjugate side.
template <class T>
struct OperatorBlock {
    int size = 1;
    std::vector<T> data; // row-major

    T at(int row, int col) const { return data[static_cast<std::size_t>(row) * size + col]; }

    static OperatorBlock identity(int n) {
        OperatorBlock b{n, std::vector<T>(static_cast<std::size_t>(n) * n, T{})};
        for (int i = 0; i < n; ++i) b.data[static_cast<std::size_t>(i) * n + i] = T(1);
        return b;
    }
};

namespace detail {

template <class T>
T conjugate(T v) {
    return v;
}
template <class U>
std::complex<U> conjugate(std::complex<U> v) {
    return std::conj(v);
}

// Checks that tn has the edge layout produced by mps() and returns d.
template <class T>
int mps_site_count(const TensorHypernetwork<T>& tn) {
    int d = tn.g.vertex_count;
    if (d < 1 || tn.g.edge_count() != 2 * d - 1) throw shape_error("expected an mps-shaped network");
    for (int i = 0; i < d; ++i) {
        if (tn.g.edges[static_cast<std::size_t>(2 * i)] != VertexSet{i})
            throw shape_error("expected an mps-shaped network");
        if (i + 1 < d && tn.g.edges[static_cast<std::size_t>(2 * i + 1)] != VertexSet{i, i + 1})
            throw shape_error("expected an mps-shaped network");
    }
    return d;
}

} // namespace detail

// The sandwich network for <psi| A |psi>: psi row, operator blocks, and the
// conjugated psi row, with every edge bound. Site i of the sandwich uses
// edges 4i (psi-block), 4i+1 (block-conj), and for interior sites 4i+2 /
// 4i+3 for the psi / conj bonds.
template <class T>
TensorHypernetwork<T> mps_sandwich(const TensorHypernetwork<T>& psi, const std::vector<OperatorBlock<T>>& blocks) {
    psi.validate();
    int d = detail::mps_site_count(psi);
    if (static_cast<int>(blocks.size()) != d) throw shape_error("mps_sandwich: one block per site required");
    Hypergraph g;
    g.vertex_count = 3 * d; // psi sites, then blocks, then conj sites
    std::vector<int> edge_sizes;
    for (int i = 0; i < d; ++i) {
        int n = psi.edge_sizes[static_cast<std::size_t>(2 * i)];
        if (blocks[static_cast<std::size_t>(i)].size != n ||
            blocks[static_cast<std::size_t>(i)].data.size() != static_cast<std::size_t>(n) * n)
            throw shape_error("mps_sandwich: block " + std::to_string(i) + " does not match physical size");
        g.edges.push_back({i, d + i});         // psi_i -- block_i
        edge_sizes.push_back(n);
        g.edges.push_back({d + i, 2 * d + i}); // block_i -- conj_i
        edge_sizes.push_back(n);
        if (i + 1 < d) {
            int r = psi.edge_sizes[static_cast<std::size_t>(2 * i + 1)];
            g.edges.push_back({i, i + 1});                 // psi bond
            edge_sizes.push_back(r);
            g.edges.push_back({2 * d + i, 2 * d + i + 1}); // conj bond
            edge_sizes.push_back(r);
        }
    }
    auto relabel = [](const LabeledTensor<T>& t, const std::vector<int>& new_labels) {
        return LabeledTensor<T>(new_labels, t.sizes, t.data);
    };
    std::vector<LabeledTensor<T>> tensors(static_cast<std::size_t>(3 * d));
    for (int i = 0; i < d; ++i) {
        const auto& site = psi.tensors[static_cast<std::size_t>(i)];
        // psi site labels (old, ascending): [bond i-1,] physical, [bond i]
        std::vector<int> psi_labels, conj_labels;
        if (i > 0) {
            psi_labels.push_back(4 * (i - 1) + 2);
            conj_labels.push_back(4 * (i - 1) + 3);
        }
        psi_labels.push_back(4 * i);
        conj_labels.push_back(4 * i + 1);
        if (i + 1 < d) {
            psi_labels.push_back(4 * i + 2);
            conj_labels.push_back(4 * i + 3);
        }
        tensors[static_cast<std::size_t>(i)] = relabel(site, psi_labels);
        LabeledTensor<T> conj_site = relabel(site, conj_labels);
        for (auto& v : conj_site.data) v = detail::conjugate(v);
        tensors[static_cast<std::size_t>(2 * d + i)] = conj_site;
        int n = psi.edge_sizes[static_cast<std::size_t>(2 * i)];
        // block tensor over (psi edge, conj edge); conj side indexes rows
        std::vector<T> data(static_cast<std::size_t>(n) * n);
        for (int t = 0; t < n; ++t)
            for (int s = 0; s < n; ++s)
                data[static_cast<std::size_t>(t) * n + s] = blocks[static_cast<std::size_t>(i)].at(s, t);
        tensors[static_cast<std::size_t>(d + i)] = LabeledTensor<T>({4 * i, 4 * i + 1}, {n, n}, std::move(data));
    }
    TensorHypernetwork<T> tn{g, edge_sizes, std::move(tensors)};
    tn.validate();
    return tn;
}

// Tucker network: core vertex 0 with a bond edge to one matrix vertex per
// mode. Edge 2j is the dangling edge of matrix j (size n_j), edge 2j+1 the
// core bond (size m_j).
template <class T = double>
TensorHypernetwork<T> tucker(const std::vector<int>& n, const std::vector<int>& m, const FillSpec& fill = {}) {
    if (n.empty() || n.size() != m.size()) throw domain_error("tucker: need matching mode and weight lists");
    int d = static_cast<int>(n.size());
    Hypergraph g;
    g.vertex_count = d + 1;
    std::vector<int> edge_sizes;
    for (int j = 0; j < d; ++j) {
        if (n[static_cast<std::size_t>(j)] < 1 || m[static_cast<std::size_t>(j)] < 1)
            throw domain_error("tucker: sizes must be >= 1");
        g.edges.push_back({j + 1});
        edge_sizes.push_back(n[static_cast<std::size_t>(j)]);
        g.edges.push_back({0, j + 1});
        edge_sizes.push_back(m[static_cast<std::size_t>(j)]);
    }
    TensorHypernetwork<T> tn{g, edge_sizes, detail::fill_tensors<T>(g, edge_sizes, fill)};
    tn.validate();
    return tn;
}

// CP network: one dangling edge per vertex plus a single size-r hyperedge
// shared by all vertices.
template <class T = double>
TensorHypernetwork<T> cp(const std::vector<int>& n, int r, const FillSpec& fill = {}) {
    if (n.size() < 2) throw domain_error("cp: need at least two modes");
    if (r < 1) throw domain_error("cp: rank must be >= 1");
    int d = static_cast<int>(n.size());
    Hypergraph g;
    g.vertex_count = d;
    std::vector<int> edge_sizes;
    for (int v = 0; v < d; ++v) {
        if (n[static_cast<std::size_t>(v)] < 1) throw domain_error("cp: sizes must be >= 1");
        g.edges.push_back({v});
        edge_sizes.push_back(n[static_cast<std::size_t>(v)]);
    }
    VertexSet all(static_cast<std::size_t>(d));
    std::iota(all.begin(), all.end(), 0);
    g.edges.push_back(all);
    edge_sizes.push_back(r);
    TensorHypernetwork<T> tn{g, edge_sizes, detail::fill_tensors<T>(g, edge_sizes, fill)};
    tn.validate();
    return tn;
}

// No-three-way-interaction model: p_ijk proportional to A_ij B_ik C_jk.
template <class T = double>
GraphicalModel<T> no_three_way(const std::vector<int>& sizes, const FillSpec& fill = {}) {
    if (sizes.size() != 3) throw domain_error("no_three_way: exactly three variable sizes required");
    for (int s : sizes)
        if (s < 1) throw domain_error("no_three_way: sizes must be >= 1");
    Hypergraph h{3, {{0, 1}, {0, 2}, {1, 2}}};
    GraphicalModel<T> gm{h, sizes, detail::fill_tensors<T>(dual(h), sizes, fill)};
    gm.validate();
    return gm;
}

// Ising-style grid model: one variable per grid node, one pairwise hyperedge
// per lattice edge (horizontal edges first, row-major, then vertical).
template <class T = double>
GraphicalModel<T> ising_grid(int rows, int cols, int cardinality, const FillSpec& fill = {}) {
    if (rows < 1 || cols < 1 || cardinality < 1) throw domain_error("ising_grid: all parameters must be >= 1");
    Hypergraph h;
    h.vertex_count = rows * cols;
    auto id = [cols](int i, int j) { return i * cols + j; };
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j + 1 < cols; ++j) h.edges.push_back({id(i, j), id(i, j + 1)});
    for (int i = 0; i + 1 < rows; ++i)
        for (int j = 0; j < cols; ++j) h.edges.push_back({id(i, j), id(i + 1, j)});
    std::vector<int> sizes(static_cast<std::size_t>(h.vertex_count), cardinality);
    GraphicalModel<T> gm{h, sizes, detail::fill_tensors<T>(dual(h), sizes, fill)};
    gm.validate();
    return gm;
}

// PEPS grid network: one tensor per node with a dangling physical edge
// (size n), bond edges (size r) along lattice edges. Dangling edges come
// first (row-major), then horizontal bonds, then vertical bonds.
template <class T = double>
TensorHypernetwork<T> peps_grid(int rows, int cols, int n, int r, const FillSpec& fill = {}) {
    if (rows < 1 || cols < 1 || n < 1 || r < 1) throw domain_error("peps_grid: all parameters must be >= 1");
    Hypergraph g;
    g.vertex_count = rows * cols;
    std::vector<int> edge_sizes;
    auto id = [cols](int i, int j) { return i * cols + j; };
    for (int v = 0; v < g.vertex_count; ++v) {
        g.edges.push_back({v});
        edge_sizes.push_back(n);
    }
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j + 1 < cols; ++j) {
            g.edges.push_back({id(i, j), id(i, j + 1)});
            edge_sizes.push_back(r);
        }
    for (int i = 0; i + 1 < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            g.edges.push_back({id(i, j), id(i + 1, j)});
            edge_sizes.push_back(r);
        }
    TensorHypernetwork<T> tn{g, edge_sizes, detail::fill_tensors<T>(g, edge_sizes, fill)};
    tn.validate();
    return tn;
}

} // namespace zoo
} // namespace hyperdual
