#pragma once

#include <array>
#include <cstdint>

namespace rbm {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// xoshiro256++ (Blackman & Vigna, public domain). 32 bytes of state per
// instance, so every Markov chain can own an independent stream and a run
// stays deterministic under any worker count.
class Xoshiro256 {
 public:
  Xoshiro256() : Xoshiro256(0) {}

  explicit Xoshiro256(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
  }

  // Stream `stream` of a base seed; distinct streams are decorrelated by the
  // splitmix avalanche.
  static Xoshiro256 for_stream(std::uint64_t seed, std::uint64_t stream) {
    return Xoshiro256(seed + 0x9E3779B97F4A7C15ull * (stream + 1));
  }

  std::uint64_t next() {
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

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n). Multiply-shift; the bias is O(n / 2^64).
  std::uint32_t below(std::uint32_t n) {
    return std::uint32_t((unsigned __int128)next() * n >> 64);
  }

  bool bernoulli(double p) { return uniform01() < p; }

  const std::array<std::uint64_t, 4>& state() const { return state_; }
  void set_state(const std::array<std::uint64_t, 4>& s) { state_ = s; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

}  // namespace rbm
