// Copyright 2026 The estream-portfolio Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "common.hpp"

namespace estream::sosemanuk {

inline constexpr std::size_t kBlockBytes = 16;
inline constexpr std::size_t kSubkeyWords = 100;

using Quad = std::array<Word32, 4>;
using Subkeys = std::array<Word32, kSubkeyWords>;

/// Trans multiplier.
inline constexpr Word32 kTransMultiplier = 0x54655307;

constexpr Word32 trans(Word32 z) noexcept { return rotl(z * kTransMultiplier, 7); }

/// Byte-indexed multiplication tables for alpha and 1/alpha in GF(2^32).
struct AlphaTables {
  std::array<Word32, 256> mul_a{};
  std::array<Word32, 256> div_a{};
};

const AlphaTables& alpha_tables() noexcept;

inline Word32 mul_alpha(Word32 x) noexcept { return (x << 8) ^ alpha_tables().mul_a[x >> 24]; }
inline Word32 div_alpha(Word32 x) noexcept { return (x >> 8) ^ alpha_tables().div_a[x & 0xFF]; }

/// Serpent S-box `index` (0..7) in bitslice mode: bit k of the input nibble
/// comes from word k.
Quad serpent_sbox(int index, Quad x) noexcept;
Quad serpent_lt(Quad x) noexcept;

/// Key must be 16..32 bytes; shorter keys are padded with a single 1 bit
/// then zeros to 256 bits.
Subkeys key_schedule(std::span<const std::uint8_t> key) noexcept;

struct Serpent24Output {
  Quad out12;
  Quad out18;
  Quad out24;
};

/// 24 Serpent rounds, each with key addition, S-box and linear transform,
/// plus a final addition of the 25th subkey. Snapshots are taken after the
/// linear transform of rounds 12 and 18.
Serpent24Output serpent24_apply(const Subkeys& subkeys, Quad block) noexcept;

struct SosemanukState {
  std::array<Word32, 10> s{};  // s[0] is the oldest cell
  Word32 r1 = 0;
  Word32 r2 = 0;
  Subkeys subkeys{};

  /// Clocks only the LFSR and returns the dropped cell.
  Word32 lfsr_step() noexcept {
    const Word32 dropped = s[0];
    const Word32 fresh = s[9] ^ div_alpha(s[3]) ^ mul_alpha(s[0]);
    for (int i = 0; i < 9; ++i) s[i] = s[i + 1];
    s[9] = fresh;
    return dropped;
  }
};

/// Loads LFSR and FSM from the Serpent24 image of the IV (16 bytes).
void iv_setup(SosemanukState& st, std::span<const std::uint8_t> iv) noexcept;

/// Four steps plus the Serpent S2 output transform; 16 keystream bytes.
void step_group(SosemanukState& st, std::uint8_t* out) noexcept;

class Engine {
 public:
  static constexpr std::size_t kBlockBytes = sosemanuk::kBlockBytes;
  static constexpr bool kSeekable = false;

  Engine(std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv) noexcept {
    state_.subkeys = key_schedule(key);
    iv_setup(state_, iv);
  }
  Engine(const Engine&) = default;
  Engine& operator=(const Engine&) = default;
  ~Engine() { secure_wipe_object(state_); }

  void next_blocks(std::uint8_t* out, std::size_t blocks) noexcept {
    for (std::size_t b = 0; b < blocks; ++b) step_group(state_, out + b * kBlockBytes);
  }
  void reset(std::span<const std::uint8_t> iv) noexcept { iv_setup(state_, iv); }
  const SosemanukState& state() const noexcept { return state_; }

 private:
  SosemanukState state_;
};

}  // namespace estream::sosemanuk
