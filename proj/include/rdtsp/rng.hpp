#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace rdtsp {

// Engine: std::mt19937_64, whose output sequence is fixed by the standard.
// Stream keys: splitmix64 fold over (master seed, path...). Variate
// conversions are implemented here rather than with <random> distributions,
// whose algorithms differ between standard libraries.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64/splitmix64-v1";

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t value);
std::uint64_t hash_string(std::string_view text);  // FNV-1a, 64-bit

class RngStream {
public:
    explicit RngStream(std::uint64_t master_seed, std::vector<std::uint64_t> path = {});

    RngStream substream(std::uint64_t index) const;

    std::uint64_t master_seed() const { return master_seed_; }
    std::span<const std::uint64_t> path() const { return path_; }
    std::uint64_t key() const { return key_; }

    std::uint64_t next_u64() { return engine_(); }
    // [0, 1) with 53 random bits.
    double uniform01();
    double uniform(double lo, double hi);
    // [0, bound), unbiased.
    std::uint64_t below(std::uint64_t bound);
    // [lo, hi], inclusive.
    int uniform_int(int lo, int hi);
    bool coin() { return (next_u64() >> 63) != 0; }
    double normal(double mean, double sd);

private:
    std::uint64_t master_seed_;
    std::vector<std::uint64_t> path_;
    std::uint64_t key_;
    std::mt19937_64 engine_;
};

}  // namespace rdtsp
