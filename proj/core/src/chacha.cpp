#include "sigmark/chacha.hpp"

#include <cmath>
#include <cstring>
#include <numbers>
#include <stdexcept>

namespace sigmark {

namespace {

inline std::uint32_t rotl(std::uint32_t x, int n) { return (x << n) | (x >> (32 - n)); }

inline void quarter_round(std::uint32_t& a, std::uint32_t& b, std::uint32_t& c, std::uint32_t& d) {
  a += b; d ^= a; d = rotl(d, 16);
  c += d; b ^= c; b = rotl(b, 12);
  a += b; d ^= a; d = rotl(d, 8);
  c += d; b ^= c; b = rotl(b, 7);
}

inline std::uint32_t load_le32(const std::uint8_t* p) {
  return std::uint32_t(p[0]) | std::uint32_t(p[1]) << 8 | std::uint32_t(p[2]) << 16 |
         std::uint32_t(p[3]) << 24;
}

inline void store_le32(std::uint8_t* p, std::uint32_t v) {
  p[0] = std::uint8_t(v);
  p[1] = std::uint8_t(v >> 8);
  p[2] = std::uint8_t(v >> 16);
  p[3] = std::uint8_t(v >> 24);
}

}  // namespace

void chacha20_block(const Key256& key, std::uint32_t counter, const Nonce96& nonce,
                    std::uint8_t out[64]) {
  std::uint32_t st[16];
  st[0] = 0x61707865; st[1] = 0x3320646e; st[2] = 0x79622d32; st[3] = 0x6b206574;
  for (int i = 0; i < 8; ++i) st[4 + i] = load_le32(key.data() + 4 * i);
  st[12] = counter;
  for (int i = 0; i < 3; ++i) st[13 + i] = load_le32(nonce.data() + 4 * i);

  std::uint32_t w[16];
  std::memcpy(w, st, sizeof(w));
  for (int round = 0; round < 10; ++round) {
    quarter_round(w[0], w[4], w[8], w[12]);
    quarter_round(w[1], w[5], w[9], w[13]);
    quarter_round(w[2], w[6], w[10], w[14]);
    quarter_round(w[3], w[7], w[11], w[15]);
    quarter_round(w[0], w[5], w[10], w[15]);
    quarter_round(w[1], w[6], w[11], w[12]);
    quarter_round(w[2], w[7], w[8], w[13]);
    quarter_round(w[3], w[4], w[9], w[14]);
  }
  for (int i = 0; i < 16; ++i) store_le32(out + 4 * i, w[i] + st[i]);
}

ChaChaStream::ChaChaStream(const Key256& key, const Nonce96& nonce)
    : key_(key), nonce_(nonce) {}

ChaChaStream ChaChaStream::keyed(const Key256& key, std::string_view tag4,
                                 std::uint32_t a, std::uint32_t b) {
  if (tag4.size() != 4) throw std::invalid_argument("stream tag must be 4 bytes");
  Nonce96 nonce{};
  std::memcpy(nonce.data(), tag4.data(), 4);
  store_le32(nonce.data() + 4, a);
  store_le32(nonce.data() + 8, b);
  return ChaChaStream(key, nonce);
}

ChaChaStream ChaChaStream::seeded(std::uint64_t seed, std::string_view tag4,
                                  std::uint32_t a, std::uint32_t b) {
  Key256 key{};
  for (int i = 0; i < 8; ++i) key[i] = std::uint8_t(seed >> (8 * i));
  return keyed(key, tag4, a, b);
}

void ChaChaStream::refill() {
  chacha20_block(key_, counter_++, nonce_, buf_.data());
  pos_ = 0;
}

void ChaChaStream::fill(std::span<std::uint8_t> out) {
  std::size_t i = 0;
  while (i < out.size()) {
    if (pos_ == 64) refill();
    std::size_t take = std::min(out.size() - i, std::size_t(64) - pos_);
    std::memcpy(out.data() + i, buf_.data() + pos_, take);
    pos_ += take;
    i += take;
  }
}

std::uint8_t ChaChaStream::u8() {
  if (pos_ == 64) refill();
  return buf_[pos_++];
}

std::uint32_t ChaChaStream::u32() {
  std::uint8_t b[4];
  fill(b);
  return load_le32(b);
}

std::uint64_t ChaChaStream::u64() {
  std::uint8_t b[8];
  fill(b);
  return std::uint64_t(load_le32(b)) | (std::uint64_t(load_le32(b + 4)) << 32);
}

std::uint64_t ChaChaStream::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint64_t v = u64();
    if (v < limit) return v % bound;
  }
}

bool ChaChaStream::bit() { return (u8() & 1) != 0; }

double ChaChaStream::uniform_pos() {
  return double((u64() >> 11) + 1) * 0x1.0p-53;
}

double ChaChaStream::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform_pos();
  double u2 = uniform_pos();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

std::vector<std::uint8_t> stream_bytes(ChaChaStream& s, std::size_t n) {
  std::vector<std::uint8_t> out(n);
  s.fill(out);
  return out;
}

}  // namespace sigmark
