// Copyright 2026 The estream-portfolio Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "cipher.hpp"

namespace estream {
namespace {

Bytes random_bytes(std::mt19937_64& rng, std::size_t n) {
  Bytes b(n);
  for (auto& x : b) x = static_cast<std::uint8_t>(rng());
  return b;
}

CipherInstance make(CipherId id, std::uint8_t key_fill = 0x42, std::uint8_t iv_fill = 0x17) {
  const Bytes key(key_length_rule(id).max, key_fill);
  const Bytes iv(iv_length_rule(id).max, iv_fill);
  return CipherInstance::create(id, key, iv).value();
}

class EveryCipher : public ::testing::TestWithParam<CipherId> {};

INSTANTIATE_TEST_SUITE_P(All, EveryCipher, ::testing::ValuesIn(kAllCipherIds),
                         [](const auto& info) { return std::string(cipher_name(info.param)); });

TEST_P(EveryCipher, Deterministic) {
  auto a = make(GetParam());
  auto b = make(GetParam());
  EXPECT_EQ(a.keystream(1000).value(), b.keystream(1000).value());
}

TEST_P(EveryCipher, SplitReadsMatchWholeRead) {
  std::mt19937_64 rng(1);
  const Bytes whole = make(GetParam()).keystream(4096).value();
  for (int trial = 0; trial < 20; ++trial) {
    auto c = make(GetParam());
    Bytes joined;
    while (joined.size() < whole.size()) {
      const std::size_t n = std::min<std::size_t>(rng() % 300, whole.size() - joined.size());
      const Bytes part = c.keystream(n).value();
      joined.insert(joined.end(), part.begin(), part.end());
    }
    ASSERT_EQ(joined, whole);
    EXPECT_EQ(c.position(), whole.size());
  }
}

TEST_P(EveryCipher, ApplyTwiceIsIdentity) {
  std::mt19937_64 rng(2);
  for (std::size_t len : {0u, 1u, 15u, 64u, 513u, 4096u}) {
    const Bytes msg = random_bytes(rng, len);
    auto enc = make(GetParam());
    auto dec = make(GetParam());
    const Bytes ct = enc.apply(msg).value();
    EXPECT_EQ(dec.apply(ct).value(), msg) << len;
    if (len >= 16) {
      EXPECT_NE(ct, msg);
    }
  }
}

TEST_P(EveryCipher, InPlaceApply) {
  std::mt19937_64 rng(3);
  Bytes buf = random_bytes(rng, 777);
  const Bytes original = buf;
  auto c = make(GetParam());
  ASSERT_TRUE(c.apply(buf, buf).ok());
  auto d = make(GetParam());
  EXPECT_EQ(d.apply(buf).value(), original);
}

TEST_P(EveryCipher, SizeMismatchRejected) {
  auto c = make(GetParam());
  Bytes in(10), out(9);
  EXPECT_EQ(c.apply(in, out).code(), Errc::kInvalidArgument);
  EXPECT_EQ(c.position(), 0u);
}

TEST_P(EveryCipher, KeyAndIvSensitivity) {
  const Bytes base = make(GetParam()).keystream(64).value();
  EXPECT_NE(make(GetParam(), 0x43).keystream(64).value(), base);
  EXPECT_NE(make(GetParam(), 0x42, 0x18).keystream(64).value(), base);
}

TEST_P(EveryCipher, ResetRestartsStream) {
  auto c = make(GetParam());
  const Bytes first = c.keystream(100).value();
  ASSERT_TRUE(c.reset(Bytes(iv_length_rule(GetParam()).max, 0x17)).ok());
  EXPECT_EQ(c.position(), 0u);
  EXPECT_EQ(c.keystream(100).value(), first);
}

TEST_P(EveryCipher, ResetWithOtherIvMatchesFreshInstance) {
  auto c = make(GetParam());
  (void)c.keystream(33);
  const Bytes iv(iv_length_rule(GetParam()).max, 0x99);
  ASSERT_TRUE(c.reset(iv).ok());
  EXPECT_EQ(c.keystream(80).value(), make(GetParam(), 0x42, 0x99).keystream(80).value());
}

TEST_P(EveryCipher, ResetRejectsBadIv) {
  auto c = make(GetParam());
  const Status st = c.reset(Bytes(3));
  EXPECT_EQ(st.code(), Errc::kBadIvLength);
}

TEST_P(EveryCipher, SkipMatchesDiscard) {
  auto a = make(GetParam());
  auto b = make(GetParam());
  (void)a.keystream(1001);
  ASSERT_TRUE(b.skip(1001).ok());
  EXPECT_EQ(a.keystream(50).value(), b.keystream(50).value());
}

TEST_P(EveryCipher, CopyIsIndependentTwin) {
  auto a = make(GetParam());
  (void)a.keystream(37);
  CipherInstance b = a;
  EXPECT_EQ(b.position(), 37u);
  const Bytes from_a = a.keystream(64).value();
  EXPECT_EQ(b.keystream(64).value(), from_a);
}

TEST_P(EveryCipher, ZeroLengthReads) {
  auto c = make(GetParam());
  EXPECT_TRUE(c.keystream(0).value().empty());
  EXPECT_EQ(c.position(), 0u);
}

TEST_P(EveryCipher, SeekSupportMatchesFamily) {
  auto c = make(GetParam());
  const bool salsa = GetParam() == CipherId::kSalsa20_8 || GetParam() == CipherId::kSalsa20_12 ||
                     GetParam() == CipherId::kSalsa20_20;
  EXPECT_EQ(c.seekable(), salsa);
  if (!salsa) {
    EXPECT_EQ(c.seek(64).code(), Errc::kUnsupported);
  }
}

TEST(Create, RejectsBadLengthsWithDetails) {
  auto r = CipherInstance::create(CipherId::kRabbit, Bytes(15), Bytes(8));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.error().code, Errc::kBadKeyLength);
  EXPECT_EQ(r.error().actual, 15u);
  EXPECT_EQ(r.error().message(), "BadKeyLength: expected 16 bytes, got 15");

  EXPECT_EQ(CipherInstance::create(CipherId::kSalsa20_12, Bytes(24), Bytes(8)).error().code, Errc::kBadKeyLength);
  EXPECT_EQ(CipherInstance::create(CipherId::kHc128, Bytes(16), Bytes(8)).error().code, Errc::kBadIvLength);
  EXPECT_EQ(CipherInstance::create(CipherId::kRabbit, Bytes(16), Bytes()).error().code, Errc::kBadIvLength);
  EXPECT_TRUE(CipherInstance::create(CipherId::kSosemanuk, Bytes(20), Bytes(16)).ok());
}

TEST(Seek, MatchesFromZeroStream) {
  std::mt19937_64 rng(4);
  for (CipherId id : {CipherId::kSalsa20_8, CipherId::kSalsa20_12, CipherId::kSalsa20_20}) {
    const Bytes whole = make(id).keystream(8192).value();
    auto c = make(id);
    for (int i = 0; i < 100; ++i) {
      const std::size_t off = rng() % 8192;
      const std::size_t len = rng() % (8192 - off + 1);
      ASSERT_TRUE(c.seek(off).ok());
      EXPECT_EQ(c.position(), off);
      const Bytes got = c.keystream(len).value();
      ASSERT_TRUE(std::equal(got.begin(), got.end(), whole.begin() + static_cast<std::ptrdiff_t>(off)))
          << off << "+" << len;
    }
  }
}

TEST(Seek, BackwardsAfterReading) {
  auto c = make(CipherId::kSalsa20_12);
  const Bytes first = c.keystream(200).value();
  ASSERT_TRUE(c.seek(5).ok());
  const Bytes again = c.keystream(195).value();
  EXPECT_TRUE(std::equal(again.begin(), again.end(), first.begin() + 5));
}

TEST(StreamCap, SeekAndReadBeyondCapFail) {
  auto c = make(CipherId::kSalsa20_12);
  constexpr auto kCap = CipherInstance::kMaxStreamBytes;
  EXPECT_EQ(c.seek(kCap).code(), Errc::kPositionOverflow);
  ASSERT_TRUE(c.seek(kCap - 10).ok());
  EXPECT_EQ(c.keystream(11).error().code, Errc::kPositionOverflow);
  EXPECT_EQ(c.position(), kCap - 10);
  EXPECT_EQ(c.keystream(10).value().size(), 10u);
  EXPECT_EQ(c.keystream(1).error().code, Errc::kPositionOverflow);
}

TEST(StreamCap, SkipPastCapFails) {
  auto c = make(CipherId::kRabbit);
  EXPECT_EQ(c.skip(CipherInstance::kMaxStreamBytes + 1).code(), Errc::kPositionOverflow);
  EXPECT_EQ(c.position(), 0u);
}

}  // namespace
}  // namespace estream
