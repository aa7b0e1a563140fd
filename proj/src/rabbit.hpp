// Copyright 2026 The estream-portfolio Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "common.hpp"

namespace estream::rabbit {

inline constexpr std::size_t kBlockBytes = 16;

/// Counter increments A_0..A_7.
inline constexpr std::array<Word32, 8> kCounterIncrements = {
    0x4D34D34D, 0xD34D34D3, 0x34D34D34, 0x4D34D34D,
    0xD34D34D3, 0x34D34D34, 0x4D34D34D, 0xD34D34D3};

/// 513 bits: eight state words, eight counters and the counter carry bit.
struct RabbitState {
  std::array<Word32, 8> x{};
  std::array<Word32, 8> c{};
  Word32 carry = 0;

  friend bool operator==(const RabbitState&, const RabbitState&) = default;
};

/// Low word XOR high word of the 64-bit square of (u + v mod 2^32).
constexpr Word32 g_function(Word32 u, Word32 v) noexcept {
  const std::uint64_t s = static_cast<Word32>(u + v);
  const std::uint64_t sq = s * s;
  return static_cast<Word32>(sq) ^ static_cast<Word32>(sq >> 32);
}

/// c_j += A_j + carry, carry chained from j = 0 to 7 and the final carry kept.
RabbitState counter_update(RabbitState s) noexcept;

RabbitState next_state(RabbitState s) noexcept;

/// Loads the key into x and c without iterating the system.
RabbitState key_expand(std::span<const std::uint8_t> key) noexcept;

/// Full key setup: expansion, four iterations, counter re-derivation.
/// `key` must be 16 bytes.
RabbitState key_setup(std::span<const std::uint8_t> key) noexcept;

/// Derives the working state from the post-key-setup master state.
/// `iv` must be 8 bytes.
RabbitState iv_setup(const RabbitState& master, std::span<const std::uint8_t> iv) noexcept;

std::array<std::uint8_t, kBlockBytes> extract(const RabbitState& s) noexcept;

class Engine {
 public:
  static constexpr std::size_t kBlockBytes = rabbit::kBlockBytes;
  static constexpr bool kSeekable = false;

  Engine(std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv) noexcept
      : master_(key_setup(key)), state_(iv_setup(master_, iv)) {}
  Engine(const Engine&) = default;
  Engine& operator=(const Engine&) = default;
  ~Engine() {
    secure_wipe_object(master_);
    secure_wipe_object(state_);
  }

  void next_blocks(std::uint8_t* out, std::size_t blocks) noexcept;
  void reset(std::span<const std::uint8_t> iv) noexcept { state_ = iv_setup(master_, iv); }

  const RabbitState& master() const noexcept { return master_; }
  const RabbitState& state() const noexcept { return state_; }

 private:
  RabbitState master_;
  RabbitState state_;
};

}  // namespace estream::rabbit
