// Copyright 2026 The estream-portfolio Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bench.hpp"
#include "common.hpp"

namespace estream::bench {

struct ReferenceCell {
  std::string device;
  CipherId cipher = CipherId::kSalsa20_12;
  std::size_t length_bytes = 0;
  double time_ms = 0;
  bool doubtful = false;  // value carried a trailing '?'
};

struct DeviceInfo {
  std::string device;
  std::string os;
  std::string memory;
  std::string processor;
  std::string year;
};

/// Published per-cipher averages over all devices and lengths, in ms.
struct PublishedAverage {
  CipherId cipher;
  double time_ms;
};
inline constexpr PublishedAverage kPublishedAverages[] = {
    {CipherId::kSalsa20_12, 2.44},
    {CipherId::kRabbit, 2.4},
    {CipherId::kHc128, 6.4},
    {CipherId::kSosemanuk, 1.76},
};

class ReferenceDataset {
 public:
  static Result<ReferenceDataset> parse(std::string_view times_csv, std::string_view devices_csv);
  /// The dataset compiled into the library.
  static const ReferenceDataset& embedded();

  const std::vector<ReferenceCell>& cells() const noexcept { return cells_; }
  const std::vector<DeviceInfo>& devices() const noexcept { return devices_; }
  std::vector<CipherId> ciphers() const;
  std::vector<std::size_t> lengths() const;

  std::optional<double> time(std::string_view device, CipherId id, std::size_t length) const;
  /// Mean over devices for one (cipher, length).
  std::optional<double> device_average(CipherId id, std::size_t length) const;
  /// Mean over every device and length for one cipher.
  std::optional<double> overall_mean(CipherId id) const;

 private:
  std::vector<ReferenceCell> cells_;
  std::vector<DeviceInfo> devices_;  // in file order
};

std::optional<double> published_average(CipherId id) noexcept;

/// Splits one CSV line; double quotes group fields and "" is a literal quote.
Result<std::vector<std::string>> split_csv_line(std::string_view line);

/// Informational table: host means beside per-device values and averages,
/// overall means, per-length winners and the setup-cost finding.
std::string compare_reference(const BenchReport& report, const ReferenceDataset& ref);

}  // namespace estream::bench
