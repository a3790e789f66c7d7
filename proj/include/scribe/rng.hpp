#ifndef SCRIBE_RNG_HPP
#define SCRIBE_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace scribe::rng {

/// Derive a sub-stream seed from (seed, salt). Used so per-label and
/// per-tree streams stay stable when unrelated inputs change.
std::uint64_t mix(std::uint64_t seed, std::string_view salt);
std::uint64_t mix(std::uint64_t seed, std::uint64_t salt);

/// mt19937_64 with portable distribution helpers. The std distributions
/// are implementation-defined, so reproducible outputs roll their own.
class Engine {
public:
    explicit Engine(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_unit() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n), unbiased via rejection. n must be > 0.
    std::uint64_t below(std::uint64_t n);

    /// Standard normal via Box-Muller (pairs cached).
    double normal();

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// k distinct indices drawn uniformly from [0, n), in ascending order.
std::vector<std::size_t> sample_without_replacement(Engine& eng, std::size_t n,
                                                    std::size_t k);

} // namespace scribe::rng

#endif
