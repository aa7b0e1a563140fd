// Copyright 2026 The estream-portfolio Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace estream::bench {

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Best-effort description of the host: CPU model, core count, OS,
/// compiler, UTC timestamp, frequency governor and load average. Missing
/// sources are reported as "unknown".
Metadata capture_platform();

}  // namespace estream::bench
