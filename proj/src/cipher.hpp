// Copyright 2026 The estream-portfolio Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>

#include "common.hpp"
#include "hc128.hpp"
#include "hex.hpp"
#include "rabbit.hpp"
#include "salsa20.hpp"
#include "sosemanuk.hpp"

namespace estream {

/// A keyed, IV-initialized cipher with a byte-granular keystream cursor.
///
/// Each core produces fixed-size blocks; unconsumed bytes of the last block
/// are buffered, so reads may be split at any byte boundary. Copies are
/// independent twins positioned at the same offset. Not safe for concurrent
/// use; distinct instances are independent.
class CipherInstance {
 public:
  /// Uniform stream cap for every cipher.
  static constexpr std::uint64_t kMaxStreamBytes = std::uint64_t{1} << 38;

  static Result<CipherInstance> create(CipherId id, std::span<const std::uint8_t> key,
                                       std::span<const std::uint8_t> iv);

  CipherInstance(const CipherInstance&) = default;
  CipherInstance(CipherInstance&&) noexcept = default;
  CipherInstance& operator=(const CipherInstance&) = default;
  CipherInstance& operator=(CipherInstance&&) noexcept = default;
  ~CipherInstance() { secure_wipe_object(buffer_); }

  CipherId id() const noexcept { return id_; }
  std::uint64_t position() const noexcept { return position_; }
  std::size_t block_bytes() const noexcept;
  bool seekable() const noexcept;

  /// Fills `out` with the next keystream bytes.
  Status keystream(std::span<std::uint8_t> out);
  Result<Bytes> keystream(std::size_t n);

  /// out[i] = in[i] ^ keystream[position + i]. `in` and `out` must have the
  /// same size and may alias exactly.
  Status apply(std::span<const std::uint8_t> in, std::span<std::uint8_t> out);
  Result<Bytes> apply(std::span<const std::uint8_t> in);

  /// Re-runs IV setup with the retained key; position returns to 0.
  Status reset(std::span<const std::uint8_t> iv);

  /// Random access for the Salsa20 family; other ciphers report Unsupported.
  Status seek(std::uint64_t offset);

  /// Generates and discards `n` bytes.
  Status skip(std::uint64_t n);

 private:
  using Engine = std::variant<salsa20::Engine, rabbit::Engine, hc128::Engine, sosemanuk::Engine>;

  CipherInstance(CipherId id, Engine engine) : id_(id), engine_(std::move(engine)) {}

  Status check_advance(std::uint64_t n) const;
  void produce(std::uint8_t* out, const std::uint8_t* in, std::size_t n) noexcept;
  void refill() noexcept;

  CipherId id_;
  Engine engine_;
  std::array<std::uint8_t, 64> buffer_{};
  std::size_t buffer_pos_ = 0;  // next unread byte in buffer_
  std::size_t buffer_end_ = 0;
  std::uint64_t position_ = 0;
};

}  // namespace estream
