#pragma once

#include <cstdint>

namespace polydisc {

/// Counter-based random stream: each draw is the splitmix64 finalizer
/// applied to key + golden*counter, and child streams rekey by hashing
/// (key, index). Draws therefore depend only on the (seed, substream
/// path, draw index) tuple, never on execution order or thread
/// schedule, which is what makes Monte Carlo runs reproducible under
/// any worker count. Plain value type; copy freely.
class RandomStream {
  public:
    static RandomStream from_seed(uint64_t seed) {
        return RandomStream(mix(seed + kGolden));
    }

    /// Independent child stream for the given index (trial number,
    /// coefficient index, ...).
    RandomStream substream(uint64_t index) const {
        return RandomStream(mix(key_ ^ mix(index + kLaneSalt)));
    }

    uint64_t next_u64() { return mix(key_ + kGolden * ++counter_); }

    /// Uniform in [0, 1).
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in (0, 1); safe under log and negative powers.
    double next_open_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

  private:
    explicit RandomStream(uint64_t key) : key_(key) {}

    static constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;
    static constexpr uint64_t kLaneSalt = 0x0DDB1A5E5BAD5EEDull;

    static uint64_t mix(uint64_t x) {
        x ^= x >> 30;
        x *= 0xBF58476D1CE4E5B9ull;
        x ^= x >> 27;
        x *= 0x94D049BB133111EBull;
        x ^= x >> 31;
        return x;
    }

    uint64_t key_ = 0;
    uint64_t counter_ = 0;
};

}  // namespace polydisc
