#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hyperdual/error.hpp"

namespace hyperdual {

namespace detail {

template <class T>
struct is_complex : std::false_type {};
template <class U>
struct is_complex<std::complex<U>> : std::true_type {};

inline std::vector<std::size_t> row_major_strides(const std::vector<int>& sizes) {
    std::vector<std::size_t> strides(sizes.size());
    std::size_t acc = 1;
    for (std::size_t i = sizes.size(); i-- > 0;) {
        strides[i] = acc;
        acc *= static_cast<std::size_t>(sizes[i]);
    }
    return strides;
}

} // namespace detail

// Dense multiway array whose axes carry integer labels. Labels are kept
// sorted ascending, so equal tensors have identical representations.
template <class T>
struct LabeledTensor {
    std::vector<int> labels;
    std::vector<int> sizes;
    std::vector<T> data; // row-major over ascending labels

    LabeledTensor() : data(1, T{}) {}

    LabeledTensor(std::vector<int> lbls, std::vector<int> szs, std::vector<T> values)
        : labels(std::move(lbls)), sizes(std::move(szs)), data(std::move(values)) {
        if (labels.size() != sizes.size())
            throw shape_error("tensor: label/size count mismatch");
        std::size_t expect = 1;
        for (int s : sizes) {
            if (s <= 0) throw shape_error("tensor: axis sizes must be positive");
            expect *= static_cast<std::size_t>(s);
        }
        if (data.size() != expect) throw shape_error("tensor: data length does not match sizes");
        canonicalize();
    }

    static LabeledTensor scalar(T v) {
        LabeledTensor t;
        t.data[0] = v;
        return t;
    }

    static LabeledTensor ones(std::vector<int> lbls, std::vector<int> szs) {
        std::size_t total = 1;
        for (int s : szs) total *= static_cast<std::size_t>(s);
        return LabeledTensor(std::move(lbls), std::move(szs), std::vector<T>(total, T(1)));
    }

    std::size_t entry_count() const { return data.size(); }
    int rank() const { return static_cast<int>(labels.size()); }

    int axis_of(int label) const {
        auto it = std::lower_bound(labels.begin(), labels.end(), label);
        if (it == labels.end() || *it != label) return -1;
        return static_cast<int>(it - labels.begin());
    }

    int size_of(int label) const {
        int ax = axis_of(label);
        if (ax < 0) throw label_error("tensor: unknown label " + std::to_string(label));
        return sizes[static_cast<std::size_t>(ax)];
    }

    T total() const { return std::accumulate(data.begin(), data.end(), T{}); }

    bool operator==(const LabeledTensor& other) const = default;

private:
    void canonicalize() {
        if (std::is_sorted(labels.begin(), labels.end()) &&
            std::adjacent_find(labels.begin(), labels.end()) == labels.end()) {
            return;
        }
        std::vector<std::size_t> perm(labels.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
        for (std::size_t i = 1; i < perm.size(); ++i)
            if (labels[perm[i - 1]] == labels[perm[i]])
                throw shape_error("tensor: duplicate label " + std::to_string(labels[perm[i]]));
        auto old_strides = detail::row_major_strides(sizes);
        std::vector<int> new_labels(labels.size()), new_sizes(sizes.size());
        std::vector<std::size_t> axis_stride(labels.size());
        for (std::size_t i = 0; i < perm.size(); ++i) {
            new_labels[i] = labels[perm[i]];
            new_sizes[i] = sizes[perm[i]];
            axis_stride[i] = old_strides[perm[i]];
        }
        std::vector<T> new_data(data.size());
        std::vector<std::size_t> idx(labels.size(), 0);
        std::size_t off = 0;
        for (std::size_t flat = 0; flat < new_data.size(); ++flat) {
            new_data[flat] = data[off];
            for (std::size_t ax = labels.size(); ax-- > 0;) {
                ++idx[ax];
                off += axis_stride[ax];
                if (idx[ax] < static_cast<std::size_t>(new_sizes[ax])) break;
                off -= axis_stride[ax] * static_cast<std::size_t>(new_sizes[ax]);
                idx[ax] = 0;
            }
        }
        labels = std::move(new_labels);
        sizes = std::move(new_sizes);
        data = std::move(new_data);
    }
};

// Aligned product: result axes are the union of the label sets, shared labels
// must agree in size, entries multiply pointwise on the common assignment.
template <class T>
LabeledTensor<T> multiply(const LabeledTensor<T>& a, const LabeledTensor<T>& b) {
    std::vector<int> labels;
    std::vector<int> sizes;
    std::size_t ia = 0, ib = 0;
    while (ia < a.labels.size() || ib < b.labels.size()) {
        if (ib == b.labels.size() || (ia < a.labels.size() && a.labels[ia] < b.labels[ib])) {
            labels.push_back(a.labels[ia]);
            sizes.push_back(a.sizes[ia]);
            ++ia;
        } else if (ia == a.labels.size() || b.labels[ib] < a.labels[ia]) {
            labels.push_back(b.labels[ib]);
            sizes.push_back(b.sizes[ib]);
            ++ib;
        } else {
            if (a.sizes[ia] != b.sizes[ib])
                throw shape_error("multiply: size mismatch on shared label " + std::to_string(a.labels[ia]));
            labels.push_back(a.labels[ia]);
            sizes.push_back(a.sizes[ia]);
            ++ia;
            ++ib;
        }
    }
    auto sa = detail::row_major_strides(a.sizes);
    auto sb = detail::row_major_strides(b.sizes);
    std::vector<std::size_t> stride_a(labels.size(), 0), stride_b(labels.size(), 0);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        int axa = a.axis_of(labels[i]);
        int axb = b.axis_of(labels[i]);
        if (axa >= 0) stride_a[i] = sa[static_cast<std::size_t>(axa)];
        if (axb >= 0) stride_b[i] = sb[static_cast<std::size_t>(axb)];
    }
    std::size_t total = 1;
    for (int s : sizes) total *= static_cast<std::size_t>(s);
    std::vector<T> out(total);
    std::vector<std::size_t> idx(labels.size(), 0);
    std::size_t offa = 0, offb = 0;
    for (std::size_t flat = 0; flat < total; ++flat) {
        out[flat] = a.data[offa] * b.data[offb];
        for (std::size_t ax = labels.size(); ax-- > 0;) {
            ++idx[ax];
            offa += stride_a[ax];
            offb += stride_b[ax];
            if (idx[ax] < static_cast<std::size_t>(sizes[ax])) break;
            offa -= stride_a[ax] * static_cast<std::size_t>(sizes[ax]);
            offb -= stride_b[ax] * static_cast<std::size_t>(sizes[ax]);
            idx[ax] = 0;
        }
    }
    return LabeledTensor<T>(std::move(labels), std::move(sizes), std::move(out));
}

// Sum over one axis; the label disappears.
template <class T>
LabeledTensor<T> sum_out(const LabeledTensor<T>& t, int label) {
    int ax = t.axis_of(label);
    if (ax < 0) throw label_error("sum_out: unknown label " + std::to_string(label));
    std::vector<int> labels, sizes;
    for (std::size_t i = 0; i < t.labels.size(); ++i) {
        if (static_cast<int>(i) == ax) continue;
        labels.push_back(t.labels[i]);
        sizes.push_back(t.sizes[i]);
    }
    std::size_t total = 1;
    for (int s : sizes) total *= static_cast<std::size_t>(s);
    std::vector<T> out(total, T{});
    auto st = detail::row_major_strides(t.sizes);
    std::size_t axis_size = static_cast<std::size_t>(t.sizes[static_cast<std::size_t>(ax)]);
    std::size_t axis_stride = st[static_cast<std::size_t>(ax)];
    // Walk the kept axes with an odometer; sum the removed axis innermost so
    // the summation order is deterministic.
    std::vector<std::size_t> kept_stride;
    for (std::size_t i = 0; i < t.labels.size(); ++i)
        if (static_cast<int>(i) != ax) kept_stride.push_back(st[i]);
    std::vector<std::size_t> idx(labels.size(), 0);
    std::size_t base = 0;
    for (std::size_t flat = 0; flat < total; ++flat) {
        T acc{};
        for (std::size_t k = 0; k < axis_size; ++k) acc += t.data[base + k * axis_stride];
        out[flat] = acc;
        for (std::size_t a2 = labels.size(); a2-- > 0;) {
            ++idx[a2];
            base += kept_stride[a2];
            if (idx[a2] < static_cast<std::size_t>(sizes[a2])) break;
            base -= kept_stride[a2] * static_cast<std::size_t>(sizes[a2]);
            idx[a2] = 0;
        }
    }
    return LabeledTensor<T>(std::move(labels), std::move(sizes), std::move(out));
}

// Restrict one axis to the given strictly increasing index subset.
template <class T>
LabeledTensor<T> slice(const LabeledTensor<T>& t, int label, const std::vector<int>& keep) {
    int ax = t.axis_of(label);
    if (ax < 0) throw label_error("slice: unknown label " + std::to_string(label));
    if (keep.empty()) throw domain_error("slice: keep set must be non-empty");
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= t.sizes[static_cast<std::size_t>(ax)])
            throw domain_error("slice: index " + std::to_string(keep[i]) + " out of range");
        if (i > 0 && keep[i - 1] >= keep[i])
            throw domain_error("slice: keep set must be strictly increasing");
    }
    std::vector<int> sizes = t.sizes;
    sizes[static_cast<std::size_t>(ax)] = static_cast<int>(keep.size());
    std::size_t total = 1;
    for (int s : sizes) total *= static_cast<std::size_t>(s);
    auto st = detail::row_major_strides(t.sizes);
    std::vector<T> out(total);
    std::vector<std::size_t> idx(sizes.size(), 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t off = 0;
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            std::size_t coord = (static_cast<int>(i) == ax) ? static_cast<std::size_t>(keep[idx[i]]) : idx[i];
            off += coord * st[i];
        }
        out[flat] = t.data[off];
        for (std::size_t a2 = sizes.size(); a2-- > 0;) {
            ++idx[a2];
            if (idx[a2] < static_cast<std::size_t>(sizes[a2])) break;
            idx[a2] = 0;
        }
    }
    return LabeledTensor<T>(t.labels, std::move(sizes), std::move(out));
}

// Scale to total sum one; returns the scaled tensor and the original total.
// With probability=true the entries must be nonnegative reals summing to a
// positive value.
template <class T>
std::pair<LabeledTensor<T>, T> normalize(const LabeledTensor<T>& t, bool probability = false) {
    T z = t.total();
    if (z == T{}) throw degenerate_error("normalize: total sum is zero");
    if (probability) {
        if constexpr (detail::is_complex<T>::value) {
            throw domain_error("normalize: probability mode requires the real field");
        } else {
            for (T v : t.data)
                if (v < T{}) throw domain_error("normalize: negative entry in probability mode");
            if (z <= T{}) throw domain_error("normalize: total must be positive in probability mode");
        }
    }
    LabeledTensor<T> scaled = t;
    for (T& v : scaled.data) v = v / z;
    return {std::move(scaled), z};
}

// Shannon entropy -sum t log t (natural log, 0 log 0 := 0) of a normalized
// nonnegative real tensor.
inline double shannon_entropy(const LabeledTensor<double>& t, double sum_tolerance = 1e-9) {
    double total = 0.0;
    for (double v : t.data) {
        if (v < 0.0) throw domain_error("entropy: negative entry");
        total += v;
    }
    if (std::abs(total - 1.0) > sum_tolerance)
        throw domain_error("entropy: entries sum to " + std::to_string(total) + ", not 1");
    double h = 0.0;
    for (double v : t.data)
        if (v > 0.0) h -= v * std::log(v);
    return h;
}

// Entanglement entropy -tr(T log T) read entrywise, which coincides with the
// Shannon entropy of the same data.
inline double entanglement_entropy(const LabeledTensor<double>& t, double sum_tolerance = 1e-9) {
    return shannon_entropy(t, sum_tolerance);
}

} // namespace hyperdual
