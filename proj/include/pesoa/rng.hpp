#ifndef PESOA_RNG_HPP
#define PESOA_RNG_HPP

#include <bit>
#include <cstdint>
#include <random>

namespace pesoa {

namespace detail {

// Finalizer from the splitmix64 generator; used for seed scrambling so
// that nearby seeds produce unrelated engine states.
inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace detail

/// Seeded random stream with cross-platform stable output.
///
/// Backed by std::mt19937_64, whose output sequence is fully specified by
/// the standard; all mappings to doubles and bounded integers are done here
/// rather than through the (implementation-defined) distribution classes.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed)
        : seed_(seed), engine_(detail::splitmix64(seed)) {}

    std::uint64_t seed() const { return seed_; }

    /// Uniform draw from the open interval (0, 1).
    double uniform01()
    {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Uniform draw from [a, b].
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t uniform_int(std::uint64_t n)
    {
        const std::uint64_t mask = std::bit_ceil(n) - 1;
        for (;;) {
            const std::uint64_t v = engine_() & mask;
            if (v < n)
                return v;
        }
    }

    /// Derive an independent stream by index. Equal (seed, index) pairs
    /// always yield the same child stream, so parallel multi-seed runs
    /// stay reproducible.
    RngStream child(std::uint64_t index) const
    {
        return RngStream(detail::splitmix64(seed_ ^ detail::splitmix64(index + 1)));
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace pesoa

#endif
