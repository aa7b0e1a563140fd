// Copyright 2026 The estream-portfolio Authors
// SPDX-License-Identifier: Apache-2.0

#include "salsa20.hpp"

namespace estream::salsa20 {

namespace {

// "expand 32-byte k" and "expand 16-byte k" as little-endian words.
constexpr std::array<Word32, 4> kSigma = {0x61707865, 0x3320646e, 0x79622d32, 0x6b206574};
constexpr std::array<Word32, 4> kTau = {0x61707865, 0x3120646e, 0x79622d36, 0x6b206574};

}  // namespace

SalsaState SalsaState::make(std::span<const std::uint8_t> key, std::span<const std::uint8_t> nonce,
                            int rounds) noexcept {
  SalsaState s;
  s.rounds = rounds;
  const bool wide = key.size() == 32;
  const auto& c = wide ? kSigma : kTau;
  const std::uint8_t* k2 = wide ? key.data() + 16 : key.data();
  s.words[0] = c[0];
  s.words[5] = c[1];
  s.words[10] = c[2];
  s.words[15] = c[3];
  for (int i = 0; i < 4; ++i) {
    s.words[1 + i] = load_le32(key.data() + 4 * i);
    s.words[11 + i] = load_le32(k2 + 4 * i);
  }
  s.set_nonce(nonce);
  s.set_counter(0);
  return s;
}

void SalsaState::set_nonce(std::span<const std::uint8_t> nonce) noexcept {
  words[6] = load_le32(nonce.data());
  words[7] = load_le32(nonce.data() + 4);
}

void salsa_block(const SalsaState& state, std::uint8_t* out) noexcept {
  Words x = state.words;
  for (int i = 0; i < state.rounds; i += 2) x = double_round(x);
  for (int i = 0; i < 16; ++i) store_le32(out + 4 * i, x[i] + state.words[i]);
}

Block salsa_block(const SalsaState& state) noexcept {
  Block b;
  salsa_block(state, b.data());
  return b;
}

int rounds_for(CipherId id) noexcept {
  switch (id) {
    case CipherId::kSalsa20_8: return 8;
    case CipherId::kSalsa20_20: return 20;
    default: return 12;
  }
}

void Engine::next_blocks(std::uint8_t* out, std::size_t blocks) noexcept {
  for (std::size_t b = 0; b < blocks; ++b) {
    salsa_block(state_, out + b * kBlockBytes);
    state_.set_counter(state_.counter() + 1);
  }
}

}  // namespace estream::salsa20
