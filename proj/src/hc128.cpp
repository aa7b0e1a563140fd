// Copyright 2026 The estream-portfolio Authors
// SPDX-License-Identifier: Apache-2.0

#include "hc128.hpp"


namespace estream::hc128 {

HcState init(std::span<const std::uint8_t> key, std::span<const std::uint8_t> iv) noexcept {
  std::array<Word32, 1280> w;
  for (int i = 0; i < 4; ++i) {
    w[i] = w[i + 4] = load_le32(key.data() + 4 * i);
    w[i + 8] = w[i + 12] = load_le32(iv.data() + 4 * i);
  }
  for (std::size_t i = 16; i < w.size(); ++i) {
    w[i] = f2(w[i - 2]) + w[i - 7] + f1(w[i - 15]) + w[i - 16] + static_cast<Word32>(i);
  }
  HcState s;
  for (std::size_t i = 0; i < kTableSize; ++i) {
    s.p[i] = w[i + 256];
    s.q[i] = w[i + 768];
  }
  secure_wipe_object(w);

  for (std::size_t n = 0; n < kWindow; ++n) {
    Table table = Table::kP;
    std::size_t slot = 0;
    const Word32 out = step(s, [&](Table t, std::size_t j) {
      table = t;
      slot = j;
    });
    (table == Table::kP ? s.p : s.q)[slot] = out;
  }
  s.step_counter = 0;
  return s;
}

}  // namespace estream::hc128
