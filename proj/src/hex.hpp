// Copyright 2026 The estream-portfolio Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "common.hpp"

namespace estream {

using Bytes = std::vector<std::uint8_t>;

/// Lowercase hex.
std::string to_hex(std::span<const std::uint8_t> bytes);

/// Accepts upper or lower case; odd length or non-hex digits give BadHex.
Result<Bytes> from_hex(std::string_view text);

}  // namespace estream
