// Copyright 2026 The estream-portfolio Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "common.hpp"
#include "platform.hpp"

namespace estream::bench {

inline constexpr std::uint64_t kDefaultSeed = 0x5EEDC0DE2011ULL;

struct BenchConfig {
  std::vector<std::size_t> lengths = {16, 32, 64, 128, 256, 512, 1024, 2048};
  std::size_t iterations = 5000;
  std::size_t warmup_iterations = 500;
  // When set, every timed sample runs key and IV setup before encrypting.
  // Otherwise each cipher is set up once and samples continue its stream.
  bool include_setup = true;
  std::vector<CipherId> ciphers{kPortfolioCipherIds.begin(), kPortfolioCipherIds.end()};
  std::uint64_t seed = kDefaultSeed;

  Status validate() const;
};

struct CellStats {
  CipherId cipher = CipherId::kSalsa20_12;
  std::size_t length_bytes = 0;
  std::size_t iterations = 0;
  double mean_ms = 0;
  double median_ms = 0;
  double stddev_ms = 0;
  double min_ms = 0;
  double max_ms = 0;
  // Executions per timed sample; above 1 when the clock was too coarse.
  std::size_t batch = 1;
};

struct BenchReport {
  Metadata platform;
  std::vector<CellStats> cells;

  const CellStats* find(CipherId id, std::size_t length) const noexcept;
};

/// Single-threaded timing loop over every (cipher, length) pair.
Result<BenchReport> run_benchmark(const BenchConfig& config);

/// Sample statistics over per-execution times in milliseconds.
CellStats summarize(std::vector<double> samples_ms);

std::string emit_csv(const BenchReport& report);

/// mean(shortest length) / mean(longest length) for the given cipher.
std::optional<double> short_to_long_ratio(const BenchReport& report, CipherId id, std::size_t short_len = 16,
                                          std::size_t long_len = 2048);

}  // namespace estream::bench
