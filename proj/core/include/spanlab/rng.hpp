#pragma once

#include <cstdint>
#include <vector>

namespace spanlab {

// splitmix64; used instead of std::uniform_*_distribution so that streams are
// reproducible across standard library implementations.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), unbiased via rejection
    uint64_t uniform(uint64_t n) {
        if (n == 0) return 0;
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    // uniform double in [0, 1) with 53 bits of precision
    double uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = size_t(uniform(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    uint64_t state_;
};

}  // namespace spanlab
