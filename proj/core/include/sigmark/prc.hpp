#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sigmark/bitvec.hpp"
#include "sigmark/chacha.hpp"
#include "sigmark/gf2.hpp"

namespace sigmark {

// Code parameters for one frame-group key. num_checks = n - msg_len - rand_len - slack.
struct PrcParams {
  std::uint32_t n = 1024;        // codeword length (= c_l * h_l * w_l)
  std::uint32_t msg_len = 64;    // message bits per frame group (M)
  std::uint32_t rand_len = 32;   // fresh-randomness bits per encode (r)
  std::uint32_t sparsity = 3;    // ones per parity-check row (t)
  std::uint32_t slack = 8;       // extra null-space dimensions
  std::uint32_t bp_iters = 8;    // max belief-propagation iterations
  float channel_p = 0.2f;        // assumed bit-flip rate for decoder initialization
  float detect_z = 5.0f;         // acceptance threshold on the detection z-score

  std::uint32_t num_checks() const { return n - msg_len - rand_len - slack; }
  void validate() const;  // throws std::invalid_argument
};

// Elimination data mapping any codeword (after otp removal) back to its k info bits:
// u = mix_inv * codeword[free_cols].
struct PrcSolver {
  std::vector<std::uint32_t> free_cols;
  SquareBits mix_inv;
};

struct PrcKey {
  std::uint32_t frame_index = 0;
  PrcParams params;
  SparseRows checks;               // num_checks rows, t sorted distinct columns each
  std::vector<BitVec> generator;   // k columns of n bits; P*G = 0, columns independent
  BitVec otp;                      // n key-derived pad bits
  PrcSolver solver;

  std::uint32_t k() const { return std::uint32_t(generator.size()); }
};

struct KeySet {
  PrcParams params;
  Key256 master_seed{};
  std::uint32_t f_max = 16;  // maximum number of latent frame groups

  bool operator==(const KeySet&) const = default;
};

// Derive the key for frame group i. Fully deterministic in (master_seed, i, params);
// resamples with a retry counter if the sampled rows leave k < msg_len + rand_len,
// failing after 8 retries.
PrcKey derive_key(const KeySet& ks, std::uint32_t frame_index);
std::vector<PrcKey> derive_all(const KeySet& ks);

// codeword = G * (randomness || msg || 0-pad) xor otp.
BitVec prc_encode(const PrcKey& key, const BitVec& msg, const BitVec& randomness);

// z-score of the satisfied-parity-check count over bits xor otp.
double prc_detect(const PrcKey& key, const BitVec& bits);

struct PrcDecodeResult {
  bool ok = false;   // belief propagation reached a codeword within bp_iters
  BitVec msg;        // decoded message, best-effort from the final hard decision if !ok
};

PrcDecodeResult prc_decode(const PrcKey& key, const BitVec& bits);

struct DetectIndexResult {
  std::uint32_t best_index = 0;
  double best_z = 0.0;
  bool accepted = false;
};

// argmax of prc_detect over the key set; ties resolved to the smallest index.
DetectIndexResult detect_index(std::span<const PrcKey> keys, const BitVec& bits);

}  // namespace sigmark
