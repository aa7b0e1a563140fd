// Copyright 2026 The estream-portfolio Authors
// SPDX-License-Identifier: Apache-2.0

#include "cipher.hpp"

#include <algorithm>

namespace estream {

namespace {

constexpr std::size_t kChunkBytes = 512;

}  // namespace

Result<CipherInstance> CipherInstance::create(CipherId id, std::span<const std::uint8_t> key,
                                              std::span<const std::uint8_t> iv) {
  const LengthRule key_rule = key_length_rule(id);
  if (!key_rule.accepts(key.size())) return Error::bad_length(Errc::kBadKeyLength, key_rule, key.size());
  const LengthRule iv_rule = iv_length_rule(id);
  if (!iv_rule.accepts(iv.size())) return Error::bad_length(Errc::kBadIvLength, iv_rule, iv.size());

  switch (id) {
    case CipherId::kSalsa20_12:
    case CipherId::kSalsa20_8:
    case CipherId::kSalsa20_20:
      return CipherInstance(id, salsa20::Engine(salsa20::rounds_for(id), key, iv));
    case CipherId::kRabbit:
      return CipherInstance(id, rabbit::Engine(key, iv));
    case CipherId::kHc128:
      return CipherInstance(id, hc128::Engine(key, iv));
    case CipherId::kSosemanuk:
      return CipherInstance(id, sosemanuk::Engine(key, iv));
  }
  return Error::make(Errc::kUnknownCipherId);
}

std::size_t CipherInstance::block_bytes() const noexcept {
  return std::visit([](const auto& e) { return std::decay_t<decltype(e)>::kBlockBytes; }, engine_);
}

bool CipherInstance::seekable() const noexcept {
  return std::visit([](const auto& e) { return std::decay_t<decltype(e)>::kSeekable; }, engine_);
}

Status CipherInstance::check_advance(std::uint64_t n) const {
  if (n > kMaxStreamBytes - position_) {
    return Error::make(Errc::kPositionOverflow,
                       "position " + std::to_string(position_) + " + " + std::to_string(n) +
                           " exceeds the 2^38-byte stream cap");
  }
  return {};
}

void CipherInstance::refill() noexcept {
  std::visit([&](auto& e) { e.next_blocks(buffer_.data(), 1); }, engine_);
  buffer_pos_ = 0;
  buffer_end_ = block_bytes();
}

// Writes n keystream bytes to out, XORed with `in` when it is non-null.
void CipherInstance::produce(std::uint8_t* out, const std::uint8_t* in, std::size_t n) noexcept {
  auto emit = [&](const std::uint8_t* ks, std::size_t len) {
    if (in != nullptr) {
      for (std::size_t i = 0; i < len; ++i) out[i] = in[i] ^ ks[i];
      in += len;
    } else {
      std::copy_n(ks, len, out);
    }
    out += len;
    position_ += len;
    n -= len;
  };

  const std::size_t buffered = std::min(n, buffer_end_ - buffer_pos_);
  if (buffered > 0) {
    emit(buffer_.data() + buffer_pos_, buffered);
    buffer_pos_ += buffered;
  }
  if (n == 0) return;

  std::visit(
      [&](auto& e) {
        constexpr std::size_t kBlock = std::decay_t<decltype(e)>::kBlockBytes;
        if (in == nullptr) {
          const std::size_t blocks = n / kBlock;
          e.next_blocks(out, blocks);
          out += blocks * kBlock;
          position_ += blocks * kBlock;
          n -= blocks * kBlock;
        } else {
          std::array<std::uint8_t, kChunkBytes> chunk;
          std::size_t used = 0;
          while (n >= kBlock) {
            const std::size_t blocks = std::min(n, chunk.size()) / kBlock;
            e.next_blocks(chunk.data(), blocks);
            used = std::max(used, blocks * kBlock);
            emit(chunk.data(), blocks * kBlock);
          }
          secure_wipe(chunk.data(), used);
        }
      },
      engine_);

  if (n > 0) {
    refill();
    buffer_pos_ = n;
    emit(buffer_.data(), n);
  }
}

Status CipherInstance::keystream(std::span<std::uint8_t> out) {
  if (auto st = check_advance(out.size()); !st) return st;
  produce(out.data(), nullptr, out.size());
  return {};
}

Result<Bytes> CipherInstance::keystream(std::size_t n) {
  if (auto st = check_advance(n); !st) return st.error();
  Bytes out(n);
  produce(out.data(), nullptr, n);
  return out;
}

Status CipherInstance::apply(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) {
  if (in.size() != out.size()) {
    return Error::make(Errc::kInvalidArgument, "input and output sizes differ");
  }
  if (auto st = check_advance(in.size()); !st) return st;
  produce(out.data(), in.data(), in.size());
  return {};
}

Result<Bytes> CipherInstance::apply(std::span<const std::uint8_t> in) {
  if (auto st = check_advance(in.size()); !st) return st.error();
  Bytes out(in.size());
  produce(out.data(), in.data(), in.size());
  return out;
}

Status CipherInstance::reset(std::span<const std::uint8_t> iv) {
  const LengthRule rule = iv_length_rule(id_);
  if (!rule.accepts(iv.size())) return Error::bad_length(Errc::kBadIvLength, rule, iv.size());
  std::visit([&](auto& e) { e.reset(iv); }, engine_);
  secure_wipe_object(buffer_);
  buffer_pos_ = buffer_end_ = 0;
  position_ = 0;
  return {};
}

Status CipherInstance::seek(std::uint64_t offset) {
  if (!seekable()) {
    return Error::make(Errc::kUnsupported,
                       std::string(cipher_name(id_)) + " has no random access; use skip()");
  }
  if (offset >= kMaxStreamBytes) {
    return Error::make(Errc::kPositionOverflow,
                       "seek offset " + std::to_string(offset) + " is beyond the 2^38-byte stream cap");
  }
  auto& e = std::get<salsa20::Engine>(engine_);
  e.seek_block(offset / salsa20::kBlockBytes);
  buffer_pos_ = buffer_end_ = 0;
  position_ = offset - offset % salsa20::kBlockBytes;
  if (const std::size_t rem = offset % salsa20::kBlockBytes; rem != 0) {
    refill();
    buffer_pos_ = rem;
    position_ = offset;
  }
  return {};
}

Status CipherInstance::skip(std::uint64_t n) {
  if (auto st = check_advance(n); !st) return st;
  std::array<std::uint8_t, kChunkBytes> sink;
  while (n > 0) {
    const std::size_t len = static_cast<std::size_t>(std::min<std::uint64_t>(n, sink.size()));
    produce(sink.data(), nullptr, len);
    n -= len;
  }
  secure_wipe_object(sink);
  return {};
}

}  // namespace estream
