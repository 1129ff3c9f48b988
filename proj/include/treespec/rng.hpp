#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace treespec {

// Deterministic RNG utilities. std::mt19937_64 output is specified by the
// standard and distributions are hand-rolled, so identical seeds give
// identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Unbiased uniform draw from [0, m), m >= 1, by rejection.
    std::uint64_t below(std::uint64_t m) {
        const std::uint64_t rem = (UINT64_MAX % m + 1) % m;
        const std::uint64_t bound = UINT64_MAX - rem;
        std::uint64_t r;
        do {
            r = engine_();
        } while (r > bound);
        return r % m;
    }

    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double unit() {  // [0, 1)
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return unit() < p; }

    // Random k-subset of {0,...,n-1}, returned sorted.
    std::vector<int> subset(int n, int k) {
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i;
        for (int i = 0; i < k; ++i) {
            int j = i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)));
            std::swap(pool[i], pool[j]);
        }
        std::vector<int> out(pool.begin(), pool.begin() + k);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::mt19937_64 engine_;
};

// splitmix64; used to derive independent per-item seeds from a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace treespec
