#pragma once

#include <cstdint>
#include <vector>

namespace ecg {

// xorshift64* generator. Fixed here (rather than std::mt19937) so that
// instances are reproducible bit-for-bit from (params, seed) in any port
// of the generators; test vectors live in tests/test_gen.cpp and README.
//
//   state <- seed, or 0x9E3779B97F4A7C15 when seed == 0
//   next: x ^= x >> 12; x ^= x << 25; x ^= x >> 27; return x * 0x2545F4914F6CDD1D
//   range(k) = next() % k
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed)
        : state_(seed == 0 ? 0x9E3779B97F4A7C15ULL : seed) {}

    std::uint64_t next() {
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545F4914F6CDD1DULL;
    }

    // Uniform-ish value in [0, k). Modulo bias is irrelevant at the scales
    // used here and keeps the algorithm trivially portable.
    std::uint64_t range(std::uint64_t k) { return next() % k; }

    int range_int(int k) { return static_cast<int>(range(static_cast<std::uint64_t>(k))); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(range(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

} // namespace ecg
