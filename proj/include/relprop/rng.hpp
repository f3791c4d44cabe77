#ifndef RELPROP_RNG_HPP
#define RELPROP_RNG_HPP

#include <cstdint>
#include <random>

namespace relprop {

/// Mixes a seed into a well-distributed 64-bit value (splitmix64 finalizer).
/// Used to derive independent stream seeds from a base seed.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic random source. All stochastic code in the library draws from
/// this class so that a run is reproducible from its seed alone.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform double in [0, 1): top 53 bits of one draw.
    double unit() { return (next() >> 11) * (1.0 / 9007199254740992.0); }

    /// Uniform index in [0, n). Uses modulo reduction; the bias is negligible
    /// for the small n used here and keeps the draw count at exactly one.
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }

private:
    std::mt19937_64 engine_;
};

}  // namespace relprop

#endif
