#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace resir {

/// Seedable uniform random stream backed by the Philox4x64-10 counter-based
/// generator (Salmon et al., "Parallel random numbers: as easy as 1, 2, 3").
///
/// The generator key is (seed, stream_id). Distinct keys produce unrelated
/// sequences, so child streams derived through child() never overlap their
/// parent or siblings. Sequences are bit-exact across platforms: the same
/// (seed, stream_id) always yields the same uniforms.
///
/// A stream is single-owner mutable state; hand each parallel worker its own
/// child rather than sharing one instance.
class RngStream {
public:
  RngStream() : RngStream(0) {}
  explicit RngStream(std::uint64_t seed) : key_{seed, 0} {}
  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : key_{seed, stream_id} {}

  /// Next uniform in [0, 1), 53-bit resolution.
  double next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Next raw 64-bit output.
  std::uint64_t next_u64() {
    if (block_pos_ == 4) refill();
    return block_[block_pos_++];
  }

  /// Child stream for replicate `index`. The derivation
  ///   stream_id' = mix64(stream_id ^ mix64(index + 1))
  /// with mix64 the SplitMix64 finalizer is injective in `index` for a fixed
  /// parent, so replicates get non-overlapping sequences and each replicate
  /// is individually re-runnable.
  RngStream child(std::uint64_t index) const {
    return RngStream(key_[0], mix64(key_[1] ^ mix64(index + 1)));
  }

  std::uint64_t seed() const { return key_[0]; }
  std::uint64_t stream_id() const { return key_[1]; }

  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

private:
  void refill();

  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> counter_{0, 0, 0, 0};
  std::array<std::uint64_t, 4> block_{};
  unsigned block_pos_ = 4;
};

/// 2m uniforms ordered (u_1..u_m, 1-u_1..1-u_m): the second half mirrors the
/// first elementwise, giving m antithetic pairs. m = 0 yields an empty list.
std::vector<double> antithetic_uniforms(RngStream& stream, std::size_t pairs);

/// One uniform per stratum of the n-fold equidistant partition of [0, 1):
/// v_i in [(i-1)/n, i/n), emitted in stratum order (already nondecreasing).
/// n = 0 is an error (no strata).
std::vector<double> stratified_uniforms(RngStream& stream, std::size_t strata);

} // namespace resir
