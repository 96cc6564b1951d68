#ifndef BIHOLE_RNG_HPP
#define BIHOLE_RNG_HPP

#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace bihole {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seeded random stream. Bounded draws use masked rejection instead of
/// std::uniform_int_distribution so the stream is identical across standard
/// library implementations; that is what makes seeded runs byte-reproducible.
class RandomEngine {
public:
    explicit RandomEngine(std::uint64_t seed) : eng_(splitmix64(seed)) {}

    /// Counter-based derivation of per-trial seeds from a master seed;
    /// trials drawn from derived streams are independent of execution order.
    static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
        return splitmix64(master ^ splitmix64(index + 0x9e3779b97f4a7c15ULL));
    }

    std::uint64_t next() { return eng_(); }

    /// Uniform in [0, bound), bound >= 1.
    std::uint64_t uniform_below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("uniform_below: zero bound");
        if (bound == 1) return 0;
        std::uint64_t mask = ~std::uint64_t{0} >> __builtin_clzll(bound - 1 | 1);
        for (;;) {
            std::uint64_t r = eng_() & mask;
            if (r < bound) return r;
        }
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[uniform_below(i)]);
    }

    /// Sorted uniform k-subset of {0,...,n-1} via partial Fisher-Yates.
    std::vector<int> sample_sorted(int n, int k);

private:
    std::mt19937_64 eng_;
};

inline std::vector<int> RandomEngine::sample_sorted(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("sample_sorted: k out of range");
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        std::size_t j = static_cast<std::size_t>(i) +
                        uniform_below(static_cast<std::uint64_t>(n - i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
        out.push_back(pool[static_cast<std::size_t>(i)]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bihole

#endif
