#ifndef FRAMESPLIT_RNG_HPP
#define FRAMESPLIT_RNG_HPP

#include <complex>
#include <cstdint>

namespace framesplit {

// Counter-based deterministic random stream: value k of stream `seed` is a
// pure function of (seed, k). No hidden state, safe to share, reproducible
// across runs and threads.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed), counter_(0) {}

    // splitmix64 output function over seed + k * golden gamma.
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Independent child stream, e.g. one per trial or per retry.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        return mix(seed ^ mix(stream + 0x517cc1b727220a95ull));
    }

    std::uint64_t next_u64() {
        return mix(seed_ + (counter_++) * 0x9e3779b97f4a7c15ull);
    }

    // Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    bool coin() { return (next_u64() & 1ull) != 0; }

    // Standard normal via Box-Muller.
    double gaussian() {
        double u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log1p(-u1));   // u1 in [0,1) -> r finite
        return r * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Standard complex normal: (x + iy)/sqrt(2) with x, y ~ N(0,1).
    std::complex<double> complex_gaussian() {
        const double x = gaussian();
        const double y = gaussian();
        return {x * 0.70710678118654752440, y * 0.70710678118654752440};
    }

private:
    std::uint64_t seed_;
    std::uint64_t counter_;
};

} // namespace framesplit

#endif
