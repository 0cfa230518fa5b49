#include "resir/rng.hpp"

#include <cmath>
#include <limits>

#include "resir/error.hpp"

namespace resir {
namespace {

// Philox4x64 round constants (Random123 reference values).
constexpr std::uint64_t kPhiloxM0 = 0xD2E7470EE14C6C93ull;
constexpr std::uint64_t kPhiloxM1 = 0xCA5A826395121157ull;
constexpr std::uint64_t kPhiloxW0 = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kPhiloxW1 = 0xBB67AE8584CAA73Bull;

inline std::uint64_t mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi) {
  const unsigned __int128 product = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<std::uint64_t>(product >> 64);
  return static_cast<std::uint64_t>(product);
}

inline void philox_round(std::array<std::uint64_t, 4>& ctr,
                         const std::array<std::uint64_t, 2>& key) {
  std::uint64_t hi0 = 0;
  std::uint64_t hi1 = 0;
  const std::uint64_t lo0 = mulhilo(kPhiloxM0, ctr[0], hi0);
  const std::uint64_t lo1 = mulhilo(kPhiloxM1, ctr[2], hi1);
  ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

std::array<std::uint64_t, 4> philox4x64_10(std::array<std::uint64_t, 4> ctr,
                                           std::array<std::uint64_t, 2> key) {
  for (int round = 0; round < 9; ++round) {
    philox_round(ctr, key);
    key[0] += kPhiloxW0;
    key[1] += kPhiloxW1;
  }
  philox_round(ctr, key);
  return ctr;
}

} // namespace

void RngStream::refill() {
  for (auto& word : counter_) {
    if (++word != 0) break; // 256-bit little-endian increment, first block at 1
  }
  block_ = philox4x64_10(counter_, key_);
  block_pos_ = 0;
}

std::vector<double> antithetic_uniforms(RngStream& stream, std::size_t pairs) {
  std::vector<double> values(2 * pairs);
  for (std::size_t i = 0; i < pairs; ++i) {
    const double u = stream.next_uniform();
    values[i] = u;
    values[pairs + i] = 1.0 - u;
  }
  return values;
}

std::vector<double> stratified_uniforms(RngStream& stream, std::size_t strata) {
  if (strata == 0) throw_bad_parameter("stratified_uniforms: need at least one stratum");
  const double n = static_cast<double>(strata);
  std::vector<double> values(strata);
  for (std::size_t i = 0; i < strata; ++i) {
    double v = (static_cast<double>(i) + stream.next_uniform()) / n;
    const double upper = static_cast<double>(i + 1) / n;
    if (v >= upper) v = std::nextafter(upper, 0.0); // keep v inside its stratum
    values[i] = v;
  }
  return values;
}

} // namespace resir
