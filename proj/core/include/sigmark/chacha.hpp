#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace sigmark {

using Key256 = std::array<std::uint8_t, 32>;
using Nonce96 = std::array<std::uint8_t, 12>;

// One 64-byte ChaCha20 block (RFC 8439 quarter-round schedule, 20 rounds).
void chacha20_block(const Key256& key, std::uint32_t counter, const Nonce96& nonce,
                    std::uint8_t out[64]);

// Deterministic byte stream keyed by (key, nonce); the block counter advances as
// bytes are drawn. All randomness in the toolkit flows through these streams so
// that every result is reproducible bit-for-bit from the seeds.
class ChaChaStream {
 public:
  ChaChaStream(const Key256& key, const Nonce96& nonce);

  // Stream for a purpose tag plus two 32-bit lane ids, keyed by a full 256-bit key.
  static ChaChaStream keyed(const Key256& key, std::string_view tag4,
                            std::uint32_t a = 0, std::uint32_t b = 0);
  // Stream derived from a bare u64 seed (user-facing seeds: latents, noise, ...).
  static ChaChaStream seeded(std::uint64_t seed, std::string_view tag4,
                             std::uint32_t a = 0, std::uint32_t b = 0);

  void fill(std::span<std::uint8_t> out);
  std::uint8_t u8();
  std::uint32_t u32();
  std::uint64_t u64();
  // Uniform integer in [0, bound) by rejection (bound > 0).
  std::uint64_t below(std::uint64_t bound);
  bool bit();
  // Uniform double in (0, 1].
  double uniform_pos();
  // Standard normal via Box-Muller.
  double normal();

 private:
  void refill();

  Key256 key_;
  Nonce96 nonce_;
  std::uint32_t counter_ = 0;
  std::array<std::uint8_t, 64> buf_{};
  std::size_t pos_ = 64;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Fill a vector with n pseudorandom bits packed little-endian into bytes.
std::vector<std::uint8_t> stream_bytes(ChaChaStream& s, std::size_t n);

}  // namespace sigmark
