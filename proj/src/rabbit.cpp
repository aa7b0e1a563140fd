// Copyright 2026 The estream-portfolio Authors
// SPDX-License-Identifier: Apache-2.0

#include "rabbit.hpp"

#include <algorithm>

namespace estream::rabbit {

RabbitState counter_update(RabbitState s) noexcept {
  std::uint64_t carry = s.carry;
  for (int j = 0; j < 8; ++j) {
    const std::uint64_t t = static_cast<std::uint64_t>(s.c[j]) + kCounterIncrements[j] + carry;
    s.c[j] = static_cast<Word32>(t);
    carry = t >> 32;
  }
  s.carry = static_cast<Word32>(carry);
  return s;
}

RabbitState next_state(RabbitState s) noexcept {
  s = counter_update(s);
  std::array<Word32, 8> g;
  for (int j = 0; j < 8; ++j) g[j] = g_function(s.x[j], s.c[j]);
  s.x[0] = g[0] + rotl(g[7], 16) + rotl(g[6], 16);
  s.x[1] = g[1] + rotl(g[0], 8) + g[7];
  s.x[2] = g[2] + rotl(g[1], 16) + rotl(g[0], 16);
  s.x[3] = g[3] + rotl(g[2], 8) + g[1];
  s.x[4] = g[4] + rotl(g[3], 16) + rotl(g[2], 16);
  s.x[5] = g[5] + rotl(g[4], 8) + g[3];
  s.x[6] = g[6] + rotl(g[5], 16) + rotl(g[4], 16);
  s.x[7] = g[7] + rotl(g[6], 8) + g[5];
  return s;
}

RabbitState key_expand(std::span<const std::uint8_t> key) noexcept {
  // Sixteen-bit subkeys, k[0] holding key bytes 0 and 1.
  std::array<Word32, 8> k;
  for (int i = 0; i < 8; ++i) {
    k[i] = static_cast<Word32>(key[2 * i]) | (static_cast<Word32>(key[2 * i + 1]) << 8);
  }
  auto cat = [](Word32 hi, Word32 lo) { return (hi << 16) | lo; };
  RabbitState s;
  for (int j = 0; j < 8; ++j) {
    if (j % 2 == 0) {
      s.x[j] = cat(k[(j + 1) % 8], k[j]);
      s.c[j] = cat(k[(j + 4) % 8], k[(j + 5) % 8]);
    } else {
      s.x[j] = cat(k[(j + 5) % 8], k[(j + 4) % 8]);
      s.c[j] = cat(k[j], k[(j + 1) % 8]);
    }
  }
  secure_wipe_object(k);
  return s;
}

RabbitState key_setup(std::span<const std::uint8_t> key) noexcept {
  RabbitState s = key_expand(key);
  for (int i = 0; i < 4; ++i) s = next_state(s);
  for (int j = 0; j < 8; ++j) s.c[j] ^= s.x[(j + 4) % 8];
  return s;
}

RabbitState iv_setup(const RabbitState& master, std::span<const std::uint8_t> iv) noexcept {
  const Word32 i0 = load_le32(iv.data());
  const Word32 i2 = load_le32(iv.data() + 4);
  const Word32 i1 = (i2 & 0xFFFF0000u) | (i0 >> 16);
  const Word32 i3 = (i2 << 16) | (i0 & 0x0000FFFFu);
  const std::array<Word32, 4> mix = {i0, i1, i2, i3};
  RabbitState s = master;
  for (int j = 0; j < 8; ++j) s.c[j] ^= mix[j % 4];
  for (int i = 0; i < 4; ++i) s = next_state(s);
  return s;
}

std::array<std::uint8_t, kBlockBytes> extract(const RabbitState& s) noexcept {
  const auto& x = s.x;
  const std::array<Word32, 4> w = {
      x[0] ^ (x[5] >> 16) ^ (x[3] << 16),
      x[2] ^ (x[7] >> 16) ^ (x[5] << 16),
      x[4] ^ (x[1] >> 16) ^ (x[7] << 16),
      x[6] ^ (x[3] >> 16) ^ (x[1] << 16),
  };
  std::array<std::uint8_t, kBlockBytes> out;
  for (int i = 0; i < 4; ++i) store_le32(out.data() + 4 * i, w[i]);
  return out;
}

void Engine::next_blocks(std::uint8_t* out, std::size_t blocks) noexcept {
  for (std::size_t b = 0; b < blocks; ++b) {
    state_ = next_state(state_);
    const auto blk = extract(state_);
    std::copy(blk.begin(), blk.end(), out + b * kBlockBytes);
  }
}

}  // namespace estream::rabbit
