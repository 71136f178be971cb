#pragma once

#include <array>
#include <cstdint>
#include <utility>

namespace erwlab {

/// Keyed, forkable random stream.
///
/// The generator is xoshiro256++ seeded from a key via splitmix64. A stream
/// is a pure function of its key, and `fork(tag)` derives a child key from
/// the parent *key* (never from drawn state), so any tree of streams is
/// reproducible regardless of draw order or thread count. Replications use
/// keys (master, replication); roles within a replication fork again.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : key_{seed, 0} { reset_state(); }
  RngStream(std::uint64_t seed, std::uint64_t tag) : key_{seed, mix(tag)} {
    reset_state();
  }

  /// Child stream keyed by (this stream's key, tag). Independent of state.
  RngStream fork(std::uint64_t tag) const {
    RngStream child(*this);
    child.key_[1] = mix(child.key_[1] ^ mix(tag + 0x9e3779b97f4a7c15ULL));
    child.reset_state();
    return child;
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return next_unit() < p; }

 private:
  std::array<std::uint64_t, 2> key_{};
  std::array<std::uint64_t, 4> state_{};

  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  static std::uint64_t mix(std::uint64_t z) {  // splitmix64 finalizer
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  void reset_state() {
    std::uint64_t s = key_[0];
    std::uint64_t t = key_[1];
    state_[0] = mix(s ^ mix(t));
    state_[1] = mix(state_[0]);
    state_[2] = mix(state_[1]);
    state_[3] = mix(state_[2]);
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
  }
};

/// Exact Binomial(n, p) draw by CDF inversion.
///
/// Inversion is run over blocks of at most 512 trials so the starting mass
/// (1-p)^block never underflows; the block sums are still exactly binomial.
/// p > 1/2 is handled by sampling failures. Cost O(n) worst case.
std::int64_t binomial_draw(RngStream& rng, std::int64_t n, double p);

struct TrinomialCounts {
  std::int64_t up = 0;
  std::int64_t down = 0;
  std::int64_t stay = 0;
};

/// Exact trinomial draw: up ~ Bin(n, p_up), then down ~ Bin(n - up,
/// p_down / (1 - p_up)). Requires p_up + p_down <= 1.
TrinomialCounts trinomial_draw(RngStream& rng, std::int64_t n, double p_up,
                               double p_down);

}  // namespace erwlab
