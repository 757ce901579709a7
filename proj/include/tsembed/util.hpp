#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace tsembed {

// Deterministic RNG used everywhere. Wraps mt19937_64 but derives uniform
// doubles and bounded integers by hand so the bit stream does not depend on
// the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    Rng(std::uint64_t seed, std::uint64_t stream) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
        engine_.seed(seq);
    }

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1)
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, n), rejection sampled to avoid modulo bias
    std::uint64_t next_index(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
        std::uint64_t x = engine_();
        while (x > limit) x = engine_();
        return x % n;
    }

private:
    std::mt19937_64 engine_;
};

// FNV-1a, used for content-addressed pipeline stage keys.
inline std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t h = 14695981039346656037ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t fnv1a64(const std::string& s, std::uint64_t h = 14695981039346656037ull) {
    return fnv1a64(s.data(), s.size(), h);
}

std::uint64_t hash_file(const std::string& path);

std::string hex64(std::uint64_t v);

// Shortest decimal form that round-trips a double exactly.
std::string format_double(double v);

// Splits on whitespace or commas; empty tokens dropped.
std::vector<std::string> split_fields(const std::string& line);

}  // namespace tsembed
