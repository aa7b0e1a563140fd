// Copyright 2026 The estream-portfolio Authors
// SPDX-License-Identifier: Apache-2.0

#include "common.hpp"

#include <cctype>
#include <cstring>

namespace estream {

void secure_wipe(void* p, std::size_t n) noexcept {
  auto* vp = static_cast<volatile unsigned char*>(p);
  while (n--) *vp++ = 0;
}

std::string_view cipher_name(CipherId id) noexcept {
  switch (id) {
    case CipherId::kSalsa20_12: return "SALSA20_12";
    case CipherId::kSalsa20_8: return "SALSA20_8";
    case CipherId::kSalsa20_20: return "SALSA20_20";
    case CipherId::kRabbit: return "RABBIT";
    case CipherId::kHc128: return "HC128";
    case CipherId::kSosemanuk: return "SOSEMANUK";
  }
  return "?";
}

std::string_view cipher_display_name(CipherId id) noexcept {
  switch (id) {
    case CipherId::kSalsa20_12: return "Salsa20/12";
    case CipherId::kSalsa20_8: return "Salsa20/8";
    case CipherId::kSalsa20_20: return "Salsa20/20";
    case CipherId::kRabbit: return "Rabbit";
    case CipherId::kHc128: return "HC-128";
    case CipherId::kSosemanuk: return "Sosemanuk";
  }
  return "?";
}

LengthRule key_length_rule(CipherId id) noexcept {
  switch (id) {
    case CipherId::kSalsa20_12:
    case CipherId::kSalsa20_8:
    case CipherId::kSalsa20_20: return {16, 32, true};
    case CipherId::kRabbit:
    case CipherId::kHc128: return {16, 16};
    case CipherId::kSosemanuk: return {16, 32};
  }
  return {0, 0};
}

LengthRule iv_length_rule(CipherId id) noexcept {
  switch (id) {
    case CipherId::kSalsa20_12:
    case CipherId::kSalsa20_8:
    case CipherId::kSalsa20_20:
    case CipherId::kRabbit: return {8, 8};
    case CipherId::kHc128:
    case CipherId::kSosemanuk: return {16, 16};
  }
  return {0, 0};
}

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kOk: return "Ok";
    case Errc::kBadKeyLength: return "BadKeyLength";
    case Errc::kBadIvLength: return "BadIvLength";
    case Errc::kPositionOverflow: return "PositionOverflow";
    case Errc::kUnknownCipherId: return "UnknownCipherId";
    case Errc::kUnsupported: return "Unsupported";
    case Errc::kParseError: return "ParseError";
    case Errc::kBadHex: return "BadHex";
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kIoError: return "IoError";
  }
  return "Unknown";
}

std::string LengthRule::describe() const {
  if (min == max) return std::to_string(min);
  if (endpoints_only) return std::to_string(min) + " or " + std::to_string(max);
  return std::to_string(min) + ".." + std::to_string(max);
}

Error Error::bad_length(Errc code, LengthRule rule, std::size_t actual) {
  Error e;
  e.code = code;
  e.expected = rule;
  e.actual = actual;
  return e;
}

Error Error::at_line(Errc code, std::size_t line, std::string detail) {
  Error e;
  e.code = code;
  e.line = line;
  e.detail = std::move(detail);
  return e;
}

Error Error::make(Errc code, std::string detail) {
  Error e;
  e.code = code;
  e.detail = std::move(detail);
  return e;
}

std::string Error::message() const {
  std::string out(errc_name(code));
  if (code == Errc::kBadKeyLength || code == Errc::kBadIvLength) {
    out += ": expected " + expected.describe() + " bytes, got " + std::to_string(actual);
    return out;
  }
  if (line != 0) out += " at line " + std::to_string(line);
  if (!detail.empty()) out += ": " + detail;
  return out;
}

Result<CipherId> parse_cipher_id(std::string_view text) {
  std::string norm;
  norm.reserve(text.size());
  for (char c : text) {
    if (c == '-') continue;
    if (c == '/') c = '_';
    norm.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  for (CipherId id : kAllCipherIds) {
    if (norm == cipher_name(id)) return id;
  }
  return Error::make(Errc::kUnknownCipherId, "'" + std::string(text) + "'");
}

}  // namespace estream
