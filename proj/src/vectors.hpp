// Copyright 2026 The estream-portfolio Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "common.hpp"
#include "hex.hpp"

namespace estream::vectors {

struct Check {
  std::uint64_t offset = 0;
  Bytes expected;
};

struct KnownAnswerRecord {
  CipherId cipher = CipherId::kSalsa20_12;
  Bytes key;
  Bytes iv;
  std::vector<Check> checks;  // offsets strictly increasing
  std::size_t line = 0;       // header line in the source, 0 if built in code
};

/// Parses the line-oriented vector format:
///
///     # comment
///     cipher=RABBIT key=<hex> iv=<hex>
///     stream[0..63]=<hex>
///     stream[192..255]=<hex>
///
/// Ranges are inclusive. Records are separated by blank lines.
Result<std::vector<KnownAnswerRecord>> load_vectors(std::string_view source);

struct Failure {
  std::size_t record_index = 0;
  std::size_t check_index = 0;
  std::uint64_t offset = 0;
  std::string expected_hex;
  std::string actual_hex;
  std::string note;  // set when the record could not be run at all
};

struct VerifyReport {
  std::size_t total = 0;  // checks attempted
  std::size_t passed = 0;
  std::vector<Failure> failures;
};

/// Runs every check; exact byte equality is required. Construction errors
/// are reported as failures of every check in the record.
VerifyReport verify(std::span<const KnownAnswerRecord> records);

std::string format_report(const VerifyReport& report);

}  // namespace estream::vectors
