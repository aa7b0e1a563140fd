// Copyright 2026 The estream-portfolio Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "common.hpp"

namespace estream::salsa20 {

using Words = std::array<Word32, 16>;
using Block = std::array<std::uint8_t, 64>;

inline constexpr std::size_t kBlockBytes = 64;

constexpr std::array<Word32, 4> quarter_round(Word32 a, Word32 b, Word32 c, Word32 d) noexcept {
  b ^= rotl(a + d, 7);
  c ^= rotl(b + a, 9);
  d ^= rotl(c + b, 13);
  a ^= rotl(d + c, 18);
  return {a, b, c, d};
}

/// Column round over (0,4,8,12) (5,9,13,1) (10,14,2,6) (15,3,7,11), then
/// row round over (0,1,2,3) (5,6,7,4) (10,11,8,9) (15,12,13,14).
constexpr Words double_round(Words x) noexcept {
  constexpr int kLanes[8][4] = {{0, 4, 8, 12},  {5, 9, 13, 1},   {10, 14, 2, 6},
                                {15, 3, 7, 11}, {0, 1, 2, 3},    {5, 6, 7, 4},
                                {10, 11, 8, 9}, {15, 12, 13, 14}};
  for (const auto& l : kLanes) {
    const auto r = quarter_round(x[l[0]], x[l[1]], x[l[2]], x[l[3]]);
    x[l[0]] = r[0];
    x[l[1]] = r[1];
    x[l[2]] = r[2];
    x[l[3]] = r[3];
  }
  return x;
}

/// The 4x4 input matrix: constants on the diagonal, key at 1-4 and 11-14,
/// nonce at 6-7, 64-bit little-endian block counter at 8-9.
struct SalsaState {
  Words words{};
  int rounds = 12;

  /// `key` must be 16 or 32 bytes and `nonce` 8 bytes.
  static SalsaState make(std::span<const std::uint8_t> key, std::span<const std::uint8_t> nonce,
                         int rounds) noexcept;

  void set_nonce(std::span<const std::uint8_t> nonce) noexcept;
  std::uint64_t counter() const noexcept {
    return static_cast<std::uint64_t>(words[8]) | (static_cast<std::uint64_t>(words[9]) << 32);
  }
  void set_counter(std::uint64_t c) noexcept {
    words[8] = static_cast<Word32>(c);
    words[9] = static_cast<Word32>(c >> 32);
  }
};

/// Pure: rounds/2 double rounds, feed-forward addition, little-endian output.
void salsa_block(const SalsaState& state, std::uint8_t* out) noexcept;
Block salsa_block(const SalsaState& state) noexcept;

int rounds_for(CipherId id) noexcept;

/// Keystream engine; the block counter advances once per 64-byte block and
/// wraps mod 2^64.
class Engine {
 public:
  static constexpr std::size_t kBlockBytes = salsa20::kBlockBytes;
  static constexpr bool kSeekable = true;

  Engine(int rounds, std::span<const std::uint8_t> key, std::span<const std::uint8_t> nonce) noexcept
      : state_(SalsaState::make(key, nonce, rounds)) {}
  Engine(const Engine&) = default;
  Engine& operator=(const Engine&) = default;
  ~Engine() { secure_wipe_object(state_); }

  void next_blocks(std::uint8_t* out, std::size_t blocks) noexcept;
  void reset(std::span<const std::uint8_t> nonce) noexcept {
    state_.set_nonce(nonce);
    state_.set_counter(0);
  }
  void seek_block(std::uint64_t block) noexcept { state_.set_counter(block); }
  const SalsaState& state() const noexcept { return state_; }

 private:
  SalsaState state_;
};

}  // namespace estream::salsa20
