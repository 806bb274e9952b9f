#pragma once

#include <array>
#include <cstdint>

// Counter-based RNG (Philox 4x32-10, Salmon et al. SC 2011) with one substream
// per Monte Carlo draw: the key is the batch seed, the counter carries
// (draw index, block index). Draw i produces the same bits no matter how the
// batch is scheduled across threads.

namespace tcue::rng {

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

class Substream {
 public:
  Substream(std::uint64_t seed, std::uint64_t draw_index);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // Uniform on the open interval (0, 1); safe inside log().
  double next_unit();

  // Standard normal, Box-Muller with the spare cached.
  double next_normal();

  // Gamma(shape, 1) by the Marsaglia-Tsang squeeze/rejection method
  // (shape >= 1), boosted via Gamma(shape+1) U^{1/shape} for shape < 1.
  double next_gamma(double shape);

  // Beta(a, b) as G_a / (G_a + G_b).
  double next_beta(double a, double b);

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::uint64_t draw_index_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int pos_ = 4;
  double spare_ = 0;
  bool have_spare_ = false;
};

}  // namespace tcue::rng
