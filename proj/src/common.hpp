// Copyright 2026 The estream-portfolio Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace estream {

using Word32 = std::uint32_t;

constexpr Word32 rotl(Word32 x, int n) noexcept { return std::rotl(x, n); }
constexpr Word32 rotr(Word32 x, int n) noexcept { return std::rotr(x, n); }

constexpr Word32 load_le32(const std::uint8_t* p) noexcept {
  return static_cast<Word32>(p[0]) | (static_cast<Word32>(p[1]) << 8) |
         (static_cast<Word32>(p[2]) << 16) | (static_cast<Word32>(p[3]) << 24);
}

constexpr void store_le32(std::uint8_t* p, Word32 v) noexcept {
  p[0] = static_cast<std::uint8_t>(v);
  p[1] = static_cast<std::uint8_t>(v >> 8);
  p[2] = static_cast<std::uint8_t>(v >> 16);
  p[3] = static_cast<std::uint8_t>(v >> 24);
}

// Overwrites memory in a way the optimizer may not elide.
void secure_wipe(void* p, std::size_t n) noexcept;

template <class T>
void secure_wipe_object(T& obj) noexcept {
  secure_wipe(&obj, sizeof(T));
}

/// Cipher identifiers, in canonical report order.
enum class CipherId : int {
  kSalsa20_12 = 0,
  kSalsa20_8 = 1,
  kSalsa20_20 = 2,
  kRabbit = 3,
  kHc128 = 4,
  kSosemanuk = 5,
};

inline constexpr std::array<CipherId, 6> kAllCipherIds = {
    CipherId::kSalsa20_12, CipherId::kSalsa20_8, CipherId::kSalsa20_20,
    CipherId::kRabbit,     CipherId::kHc128,     CipherId::kSosemanuk};

/// The four software-profile portfolio members.
inline constexpr std::array<CipherId, 4> kPortfolioCipherIds = {
    CipherId::kSalsa20_12, CipherId::kRabbit, CipherId::kHc128,
    CipherId::kSosemanuk};

std::string_view cipher_name(CipherId id) noexcept;
/// Human-readable name as used in published tables ("Salsa20/12", "HC-128").
std::string_view cipher_display_name(CipherId id) noexcept;

/// Accepted byte lengths: the closed range [min, max], or exactly one of
/// {min, max} when `endpoints_only` is set.
struct LengthRule {
  std::size_t min = 0;
  std::size_t max = 0;
  bool endpoints_only = false;
  constexpr bool accepts(std::size_t n) const noexcept {
    return endpoints_only ? (n == min || n == max) : (n >= min && n <= max);
  }
  std::string describe() const;
};

LengthRule key_length_rule(CipherId id) noexcept;
LengthRule iv_length_rule(CipherId id) noexcept;

enum class Errc : int {
  kOk = 0,
  kBadKeyLength,
  kBadIvLength,
  kPositionOverflow,
  kUnknownCipherId,
  kUnsupported,
  kParseError,
  kBadHex,
  kInvalidArgument,
  kIoError,
};

std::string_view errc_name(Errc code) noexcept;

/// Error value. Length errors carry the accepted range and the offending
/// length; parse errors carry a 1-based line number.
struct Error {
  Errc code = Errc::kOk;
  LengthRule expected;
  std::size_t actual = 0;
  std::size_t line = 0;
  std::string detail;

  static Error bad_length(Errc code, LengthRule rule, std::size_t actual);
  static Error at_line(Errc code, std::size_t line, std::string detail);
  static Error make(Errc code, std::string detail = {});

  std::string message() const;
};

template <class T>
class [[nodiscard]] Result {
 public:
  Result(T value) : v_(std::in_place_index<0>, std::move(value)) {}  // NOLINT
  Result(Error err) : v_(std::in_place_index<1>, std::move(err)) {}  // NOLINT

  bool ok() const noexcept { return v_.index() == 0; }
  explicit operator bool() const noexcept { return ok(); }

  T& value() & { return std::get<0>(v_); }
  const T& value() const& { return std::get<0>(v_); }
  T&& value() && { return std::get<0>(std::move(v_)); }
  T* operator->() { return &value(); }
  const T* operator->() const { return &value(); }
  T& operator*() & { return value(); }

  const Error& error() const { return std::get<1>(v_); }

 private:
  std::variant<T, Error> v_;
};

/// Outcome of an operation with no payload: empty means success.
class [[nodiscard]] Status {
 public:
  Status() = default;
  Status(Error err) : err_(std::move(err)) {}  // NOLINT

  bool ok() const noexcept { return !err_.has_value(); }
  explicit operator bool() const noexcept { return ok(); }
  const Error& error() const { return *err_; }
  Errc code() const noexcept { return err_ ? err_->code : Errc::kOk; }

 private:
  std::optional<Error> err_;
};

Result<CipherId> parse_cipher_id(std::string_view text);

}  // namespace estream
