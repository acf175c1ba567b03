#ifndef GRAPHRES_COMMON_HPP
#define GRAPHRES_COMMON_HPP

#include <cstdint>
#include <cstddef>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphres {

// Thrown when a requested construction would exceed a configured size limit.
// Carries the predicted size so callers can renegotiate parameters.
class feasibility_error : public std::runtime_error {
public:
    feasibility_error(const std::string& what, double predicted, double limit)
        : std::runtime_error(what), predicted_size(predicted), size_limit(limit) {}
    double predicted_size;
    double size_limit;
};

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Pairwise (tree) summation. Fixed association order, independent of the
// platform's FMA/vectorization choices, so results are reproducible.
double pairwise_sum(std::span<const double> xs);

// SplitMix64 step; used for seed derivation and content hashing.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value) {
    return splitmix64(seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2)));
}

// Deterministic RNG wrapper. mt19937_64 output is pinned by the standard and
// the helpers below avoid the implementation-defined std distributions, so
// streams are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    // Derive an independent stream, e.g. per sample or per experiment cell.
    static Rng derive(std::uint64_t root, std::uint64_t stream) {
        return Rng(hash_combine(root, stream));
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, n). n must be positive.
    std::uint64_t next_below(std::uint64_t n) {
        // Rejection sampling on the top bits; unbiased and deterministic.
        const std::uint64_t threshold = (~n + 1) % n;  // 2^64 mod n
        for (;;) {
            std::uint64_t x = engine_();
            if (x >= threshold) return x % n;
        }
    }

    int next_int(int lo, int hi) {  // inclusive range
        return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool next_bool() { return (engine_() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

std::string base64_encode(std::span<const unsigned char> data);
std::vector<unsigned char> base64_decode(const std::string& text);

constexpr const char* kVersion = "0.1.0";

}  // namespace graphres

#endif
