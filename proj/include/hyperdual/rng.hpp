#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace hyperdual {

// Seeded random source with a fixed bit-to-double mapping so that fixtures
// are reproducible across platforms and standard library versions.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t bits() { return eng_(); }

    // Uniform on [0, 1).
    double uniform01() {
        return static_cast<double>(bits() >> 11) * 0x1p-53;
    }

    // Uniform on [-1, 1).
    double uniform_symmetric() {
        return 2.0 * uniform01() - 1.0;
    }

    // Uniform integer in [lo, hi] by rejection.
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t span = hi - lo + 1;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = bits();
        } while (x >= limit);
        return lo + x % span;
    }

    int uniform_index(int lo, int hi) {
        return static_cast<int>(uniform_int(static_cast<std::uint64_t>(lo),
                                            static_cast<std::uint64_t>(hi)));
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // Uniform on the closed unit disk by rejection.
    std::complex<double> unit_disk() {
        double re, im;
        do {
            re = uniform_symmetric();
            im = uniform_symmetric();
        } while (re * re + im * im > 1.0);
        return {re, im};
    }

    template <class Scalar>
    Scalar draw();

private:
    std::mt19937_64 eng_;
};

template <>
inline double RandomSource::draw<double>() {
    return uniform_symmetric();
}

template <>
inline std::complex<double> RandomSource::draw<std::complex<double>>() {
    return unit_disk();
}

} // namespace hyperdual
