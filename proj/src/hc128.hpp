// Copyright 2026 The estream-portfolio Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "common.hpp"

namespace estream::hc128 {

inline constexpr std::size_t kBlockBytes = 4;
inline constexpr std::size_t kTableSize = 512;
inline constexpr std::size_t kWindow = 2 * kTableSize;

constexpr Word32 f1(Word32 x) noexcept { return rotr(x, 7) ^ rotr(x, 18) ^ (x >> 3); }
constexpr Word32 f2(Word32 x) noexcept { return rotr(x, 17) ^ rotr(x, 19) ^ (x >> 10); }

constexpr Word32 g1(Word32 x, Word32 y, Word32 z) noexcept {
  return (rotr(x, 10) ^ rotr(z, 23)) + rotr(y, 8);
}
constexpr Word32 g2(Word32 x, Word32 y, Word32 z) noexcept {
  return (rotl(x, 10) ^ rotl(z, 23)) + rotl(y, 8);
}

enum class Table { kP, kQ };

struct HcState {
  std::array<Word32, kTableSize> p{};
  std::array<Word32, kTableSize> q{};
  std::uint64_t step_counter = 0;
};

/// Sum of two Q entries selected by bytes 0 and 2 of x.
constexpr Word32 h1(const HcState& s, Word32 x) noexcept {
  return s.q[x & 0xFF] + s.q[256 + ((x >> 16) & 0xFF)];
}
/// Same selection over P.
constexpr Word32 h2(const HcState& s, Word32 x) noexcept {
  return s.p[x & 0xFF] + s.p[256 + ((x >> 16) & 0xFF)];
}

struct NoWriteObserver {
  constexpr void operator()(Table, std::size_t) const noexcept {}
};

/// One step: updates P[j] (first half of each 1024-step window) or Q[j]
/// (second half) and returns the filtered output word. `on_write` sees
/// the slot that was modified.
template <class OnWrite = NoWriteObserver>
Word32 step(HcState& s, OnWrite&& on_write = {}) noexcept {
  constexpr std::size_t kMask = kTableSize - 1;
  const std::size_t i = static_cast<std::size_t>(s.step_counter % kWindow);
  const std::size_t j = i & kMask;
  Word32 out;
  if (i < kTableSize) {
    auto& t = s.p;
    t[j] += g1(t[(j - 3) & kMask], t[(j - 10) & kMask], t[(j - 511) & kMask]);
    on_write(Table::kP, j);
    out = h1(s, t[(j - 12) & kMask]) ^ t[j];
  } else {
    auto& t = s.q;
    t[j] += g2(t[(j - 3) & kMask], t[(j - 10) & kMask], t[(j - 511) & kMask]);
    on_write(Table::kQ, j);
    out = h2(s, t[(j - 12) & kMask]) ^ t[j];
  }
  ++s.step_counter;
  return out;
}

/// Key and IV must both be 16 bytes. Expands them through the f1/f2
/// recurrence, loads P and Q, then runs 1024 steps whose outputs replace
/// the updated entries. The returned state has step_counter 0.
HcState init(std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv) noexcept;

class Engine {
 public:
  static constexpr std::size_t kBlockBytes = hc128::kBlockBytes;
  static constexpr bool kSeekable = false;

  Engine(std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv) noexcept
      : state_(init(key, iv)) {
    std::copy(key.begin(), key.end(), key_.begin());
  }
  Engine(const Engine&) = default;
  Engine& operator=(const Engine&) = default;
  ~Engine() {
    secure_wipe_object(key_);
    secure_wipe_object(state_);
  }

  void next_blocks(std::uint8_t* out, std::size_t blocks) noexcept {
    for (std::size_t b = 0; b < blocks; ++b) store_le32(out + 4 * b, step(state_));
  }
  void reset(std::span<const std::uint8_t> iv) noexcept { state_ = init(key_, iv); }
  const HcState& state() const noexcept { return state_; }

 private:
  std::array<std::uint8_t, 16> key_{};
  HcState state_;
};

}  // namespace estream::hc128
