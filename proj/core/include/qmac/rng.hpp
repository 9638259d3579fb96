#ifndef QMAC_RNG_HPP
#define QMAC_RNG_HPP

#include <cstdint>

namespace qmac {

// Counter-based pseudorandom generator. Every draw is a pure function of
// (seed, slot, node, stream, index): the coordinates are folded through the
// SplitMix64 finalizer, one round per coordinate. Draws are therefore
// order-independent, which is what makes replay and the common-random-number
// scheduler comparisons work: the arrival stream of a run depends only on
// (seed, slot, node), never on how many decision draws preceded it.
class CounterRng {
public:
    // Stream tags. Decision draws and arrival draws must never share a tag.
    enum Stream : std::uint64_t {
        kAttempt = 1,  // per-node MAC / scheduler decision
        kArrival = 2,  // per-node Bernoulli arrival
        kGeneric = 3,  // misc (graph generation, test distributions)
    };

    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t bits(std::uint64_t slot, std::uint64_t node, Stream stream,
                       std::uint64_t index = 0) const {
        std::uint64_t h = mix(seed_ + 0x9e3779b97f4a7c15ULL);
        h = mix(h ^ (slot + 0x9e3779b97f4a7c15ULL));
        h = mix(h ^ (node + 0xbf58476d1ce4e5b9ULL));
        h = mix(h ^ (static_cast<std::uint64_t>(stream) + 0x94d049bb133111ebULL));
        h = mix(h ^ (index + 0x2545f4914f6cdd1dULL));
        return h;
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform(std::uint64_t slot, std::uint64_t node, Stream stream,
                   std::uint64_t index = 0) const {
        return static_cast<double>(bits(slot, node, stream, index) >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p, std::uint64_t slot, std::uint64_t node, Stream stream,
                   std::uint64_t index = 0) const {
        return uniform(slot, node, stream, index) < p;
    }

    std::uint64_t seed() const { return seed_; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t seed_;
};

}  // namespace qmac

#endif  // QMAC_RNG_HPP
