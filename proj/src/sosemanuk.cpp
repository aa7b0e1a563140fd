// Copyright 2026 The estream-portfolio Authors
// SPDX-License-Identifier: Apache-2.0

#include "sosemanuk.hpp"

#include <bit>

namespace estream::sosemanuk {

namespace {

// GF(2^8) as GF(2)[x] / (x^8 + x^7 + x^5 + x^3 + 1).
constexpr unsigned kBytePoly = 0x1A9;

constexpr std::uint8_t gf_mul(unsigned a, unsigned b) {
  unsigned r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & 0x100) a ^= kBytePoly;
  }
  return static_cast<std::uint8_t>(r);
}

constexpr std::uint8_t beta_pow(int e) {
  unsigned r = 1;
  for (int i = 0; i < e; ++i) r = gf_mul(r, 2);
  return static_cast<std::uint8_t>(r);
}

constexpr Word32 pack(unsigned c, std::uint8_t b3, std::uint8_t b2, std::uint8_t b1, std::uint8_t b0) {
  return (static_cast<Word32>(gf_mul(c, b3)) << 24) | (static_cast<Word32>(gf_mul(c, b2)) << 16) |
         (static_cast<Word32>(gf_mul(c, b1)) << 8) | static_cast<Word32>(gf_mul(c, b0));
}

// alpha is a root of X^4 + b^23 X^3 + b^245 X^2 + b^48 X + b^239 over
// GF(2^8); the tables hold c * alpha^4 and c * alpha^-1 for byte c.
constexpr AlphaTables build_alpha_tables() {
  const std::uint8_t m3 = beta_pow(23), m2 = beta_pow(245), m1 = beta_pow(48), m0 = beta_pow(239);
  const std::uint8_t d3 = beta_pow(16), d2 = beta_pow(39), d1 = beta_pow(6), d0 = beta_pow(64);
  AlphaTables t;
  for (unsigned c = 0; c < 256; ++c) {
    t.mul_a[c] = pack(c, m3, m2, m1, m0);
    t.div_a[c] = pack(c, d3, d2, d1, d0);
  }
  return t;
}

constexpr AlphaTables kAlphaTables = build_alpha_tables();

// Serpent S-boxes S0..S7.
constexpr std::uint8_t kSboxes[8][16] = {
    {3, 8, 15, 1, 10, 6, 5, 11, 14, 13, 4, 2, 7, 0, 9, 12},
    {15, 12, 2, 7, 9, 0, 5, 10, 1, 11, 14, 8, 6, 13, 3, 4},
    {8, 6, 7, 9, 3, 12, 10, 15, 13, 1, 14, 4, 0, 11, 5, 2},
    {0, 15, 11, 8, 12, 9, 6, 3, 13, 1, 2, 4, 10, 7, 5, 14},
    {1, 15, 8, 3, 12, 0, 11, 6, 2, 5, 4, 10, 9, 14, 7, 13},
    {15, 5, 2, 11, 4, 10, 9, 12, 0, 3, 14, 8, 13, 6, 7, 1},
    {7, 2, 12, 5, 8, 4, 6, 11, 14, 9, 1, 15, 13, 3, 10, 0},
    {1, 13, 15, 0, 14, 8, 2, 11, 7, 4, 12, 10, 9, 3, 5, 6},
};

// Algebraic normal form of each output bit: bit m of anf[s][k] is set when
// the monomial prod_{i in m} x_i appears in output bit k of S-box s.
struct SboxAnf {
  std::uint16_t anf[8][4]{};
};

constexpr SboxAnf build_anf() {
  SboxAnf a;
  for (int s = 0; s < 8; ++s) {
    for (int k = 0; k < 4; ++k) {
      std::uint16_t truth = 0;
      for (int v = 0; v < 16; ++v) {
        if ((kSboxes[s][v] >> k) & 1) truth |= static_cast<std::uint16_t>(1u << v);
      }
      // Moebius transform over the 16-entry truth table.
      for (int bit = 0; bit < 4; ++bit) {
        for (int v = 0; v < 16; ++v) {
          if (v & (1 << bit)) {
            const int lower = v ^ (1 << bit);
            if ((truth >> lower) & 1) truth ^= static_cast<std::uint16_t>(1u << v);
          }
        }
      }
      a.anf[s][k] = truth;
    }
  }
  return a;
}

constexpr SboxAnf kAnf = build_anf();

constexpr Word32 kPhi = 0x9E3779B9;

}  // namespace

const AlphaTables& alpha_tables() noexcept { return kAlphaTables; }

Quad serpent_sbox(int index, Quad x) noexcept {
  std::array<Word32, 16> mono;
  mono[0] = 0xFFFFFFFFu;
  for (unsigned m = 1; m < 16; ++m) {
    const int low = std::countr_zero(m);
    mono[m] = mono[m & (m - 1)] & x[low];
  }
  Quad y{};
  for (int k = 0; k < 4; ++k) {
    const unsigned anf = kAnf.anf[index][k];
    Word32 acc = 0;
    for (unsigned m = 0; m < 16; ++m) {
      if ((anf >> m) & 1) acc ^= mono[m];
    }
    y[k] = acc;
  }
  return y;
}

Quad serpent_lt(Quad x) noexcept {
  x[0] = rotl(x[0], 13);
  x[2] = rotl(x[2], 3);
  x[1] ^= x[0] ^ x[2];
  x[3] ^= x[2] ^ (x[0] << 3);
  x[1] = rotl(x[1], 1);
  x[3] = rotl(x[3], 7);
  x[0] ^= x[1] ^ x[3];
  x[2] ^= x[3] ^ (x[1] << 7);
  x[0] = rotl(x[0], 5);
  x[2] = rotl(x[2], 22);
  return x;
}

Subkeys key_schedule(std::span<const std::uint8_t> key) noexcept {
  std::array<std::uint8_t, 32> padded{};
  for (std::size_t i = 0; i < key.size(); ++i) padded[i] = key[i];
  if (key.size() < padded.size()) padded[key.size()] = 0x01;

  // Prekey words w_{-8}..w_{99}, stored with an offset of 8.
  std::array<Word32, 108> w;
  for (int i = 0; i < 8; ++i) w[i] = load_le32(padded.data() + 4 * i);
  for (int i = 0; i < 100; ++i) {
    const Word32 t = w[i] ^ w[i + 3] ^ w[i + 5] ^ w[i + 7] ^ kPhi ^ static_cast<Word32>(i);
    w[i + 8] = rotl(t, 11);
  }
  Subkeys sk;
  for (int i = 0; i < 25; ++i) {
    const int box = ((3 - i) % 8 + 8) % 8;
    const Quad in = {w[8 + 4 * i], w[9 + 4 * i], w[10 + 4 * i], w[11 + 4 * i]};
    const Quad out = serpent_sbox(box, in);
    for (int k = 0; k < 4; ++k) sk[4 * i + k] = out[k];
  }
  secure_wipe_object(padded);
  secure_wipe_object(w);
  return sk;
}

Serpent24Output serpent24_apply(const Subkeys& subkeys, Quad x) noexcept {
  Serpent24Output out{};
  for (int r = 0; r < 24; ++r) {
    for (int k = 0; k < 4; ++k) x[k] ^= subkeys[4 * r + k];
    x = serpent_lt(serpent_sbox(r % 8, x));
    if (r == 11) out.out12 = x;
    if (r == 17) out.out18 = x;
  }
  for (int k = 0; k < 4; ++k) x[k] ^= subkeys[96 + k];
  out.out24 = x;
  return out;
}

void iv_setup(SosemanukState& st, std::span<const std::uint8_t> iv) noexcept {
  const Quad block = {load_le32(iv.data()), load_le32(iv.data() + 4), load_le32(iv.data() + 8),
                      load_le32(iv.data() + 12)};
  const Serpent24Output y = serpent24_apply(st.subkeys, block);
  st.s[6] = y.out12[3];
  st.s[7] = y.out12[2];
  st.s[8] = y.out12[1];
  st.s[9] = y.out12[0];
  st.s[4] = y.out18[1];
  st.s[5] = y.out18[3];
  st.r1 = y.out18[0];
  st.r2 = y.out18[2];
  st.s[0] = y.out24[3];
  st.s[1] = y.out24[2];
  st.s[2] = y.out24[1];
  st.s[3] = y.out24[0];
}

void step_group(SosemanukState& st, std::uint8_t* out) noexcept {
  Quad f;
  Quad dropped;
  for (int k = 0; k < 4; ++k) {
    const Word32 mux = (st.r1 & 1) ? (st.s[1] ^ st.s[8]) : st.s[1];
    const Word32 r1_prev = st.r1;
    st.r1 = st.r2 + mux;
    st.r2 = trans(r1_prev);
    const Word32 tail = st.s[9];
    dropped[k] = st.lfsr_step();
    f[k] = (tail + st.r1) ^ st.r2;
  }
  const Quad z = serpent_sbox(2, f);
  for (int k = 0; k < 4; ++k) store_le32(out + 4 * k, z[k] ^ dropped[k]);
}

}  // namespace estream::sosemanuk
