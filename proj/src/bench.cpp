// Copyright 2026 The estream-portfolio Authors
// SPDX-License-Identifier: Apache-2.0

#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "cipher.hpp"

namespace estream::bench {

namespace {

using Clock = std::chrono::steady_clock;

// Defeats dead-code elimination of the encrypted output.
volatile std::uint8_t g_sink = 0;

// Smallest observable nonzero step between two clock reads.
double clock_granularity_ms() {
  auto best = Clock::duration::max();
  for (int i = 0; i < 200; ++i) {
    const auto a = Clock::now();
    auto b = Clock::now();
    while (b == a) b = Clock::now();
    best = std::min(best, b - a);
  }
  return std::chrono::duration<double, std::milli>(best).count();
}

struct Material {
  Bytes key;
  Bytes iv;
  Bytes message;
};

Material make_material(std::uint64_t seed, CipherId id, std::size_t length) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(id), static_cast<std::uint32_t>(length)};
  std::mt19937_64 rng(seq);
  auto fill = [&](std::size_t n) {
    Bytes b(n);
    for (auto& x : b) x = static_cast<std::uint8_t>(rng());
    return b;
  };
  Material m;
  m.key = fill(key_length_rule(id).max);
  m.iv = fill(iv_length_rule(id).max);
  m.message = fill(length);
  return m;
}

class Runner {
 public:
  Runner(CipherId id, const Material& m, bool include_setup)
      : id_(id), m_(m), include_setup_(include_setup), out_(m.message.size()) {
    if (!include_setup_) persistent_.emplace(CipherInstance::create(id_, m_.key, m_.iv).value());
  }

  void run_once() {
    if (include_setup_) {
      auto c = CipherInstance::create(id_, m_.key, m_.iv);
      (void)c->apply(m_.message, out_);
    } else {
      (void)persistent_->apply(m_.message, out_);
    }
    if (!out_.empty()) g_sink = static_cast<std::uint8_t>(g_sink ^ out_[0]);
  }

  double time_ms(std::size_t batch) {
    const auto start = Clock::now();
    for (std::size_t i = 0; i < batch; ++i) run_once();
    const auto stop = Clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / static_cast<double>(batch);
  }

 private:
  CipherId id_;
  const Material& m_;
  bool include_setup_;
  Bytes out_;
  std::optional<CipherInstance> persistent_;
};

std::string format_ms(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

}  // namespace

Status BenchConfig::validate() const {
  if (lengths.empty()) return Error::make(Errc::kInvalidArgument, "lengths must be nonempty");
  for (auto n : lengths) {
    if (n == 0) return Error::make(Errc::kInvalidArgument, "lengths must be positive");
  }
  if (iterations < 1) return Error::make(Errc::kInvalidArgument, "iterations must be at least 1");
  if (ciphers.empty()) return Error::make(Errc::kInvalidArgument, "ciphers must be nonempty");
  return {};
}

const CellStats* BenchReport::find(CipherId id, std::size_t length) const noexcept {
  for (const auto& c : cells) {
    if (c.cipher == id && c.length_bytes == length) return &c;
  }
  return nullptr;
}

CellStats summarize(std::vector<double> samples) {
  CellStats s;
  s.iterations = samples.size();
  if (samples.empty()) return s;
  std::sort(samples.begin(), samples.end());
  const std::size_t n = samples.size();
  s.min_ms = samples.front();
  s.max_ms = samples.back();
  s.median_ms = n % 2 == 1 ? samples[n / 2] : (samples[n / 2 - 1] + samples[n / 2]) / 2;
  s.mean_ms = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(n);
  if (n > 1) {
    double ss = 0;
    for (double v : samples) ss += (v - s.mean_ms) * (v - s.mean_ms);
    s.stddev_ms = std::sqrt(ss / static_cast<double>(n - 1));
  }
  // Rounding in the mean can push it a hair outside [min, max].
  s.mean_ms = std::clamp(s.mean_ms, s.min_ms, s.max_ms);
  return s;
}

Result<BenchReport> run_benchmark(const BenchConfig& config) {
  if (auto st = config.validate(); !st) return st.error();

  std::vector<CipherId> ciphers = config.ciphers;
  std::sort(ciphers.begin(), ciphers.end());
  ciphers.erase(std::unique(ciphers.begin(), ciphers.end()), ciphers.end());
  std::vector<std::size_t> lengths = config.lengths;
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());

  BenchReport report;
  report.platform = capture_platform();
  const double granularity = clock_granularity_ms();
  char seed_hex[24];
  std::snprintf(seed_hex, sizeof seed_hex, "0x%016" PRIx64, config.seed);
  report.platform.emplace_back("seed", seed_hex);
  report.platform.emplace_back("iterations", std::to_string(config.iterations));
  report.platform.emplace_back("warmup_iterations", std::to_string(config.warmup_iterations));
  report.platform.emplace_back("include_setup", config.include_setup ? "true" : "false");
  report.platform.emplace_back("clock", "steady_clock");
  report.platform.emplace_back("clock_granularity_ms", format_ms(granularity));

  std::size_t batched_cells = 0;
  for (CipherId id : ciphers) {
    for (std::size_t length : lengths) {
      const Material material = make_material(config.seed, id, length);
      Runner runner(id, material, config.include_setup);

      for (std::size_t i = 0; i < config.warmup_iterations; ++i) runner.run_once();

      // Batch when one execution is shorter than 20 clock steps.
      std::size_t batch = 1;
      double probe = 0;
      for (int i = 0; i < 5; ++i) probe = std::max(probe, runner.time_ms(1));
      const double floor_ms = 20 * granularity;
      if (probe < floor_ms) {
        batch = static_cast<std::size_t>(std::ceil(floor_ms / std::max(probe, granularity / 4)));
      }

      std::vector<double> samples(config.iterations);
      for (auto& s : samples) s = runner.time_ms(batch);

      CellStats cell = summarize(std::move(samples));
      cell.cipher = id;
      cell.length_bytes = length;
      cell.batch = batch;
      if (batch > 1) ++batched_cells;
      report.cells.push_back(cell);
    }
  }
  report.platform.emplace_back("batched_cells", std::to_string(batched_cells));
  return report;
}

std::string emit_csv(const BenchReport& report) {
  std::string out;
  for (const auto& [key, value] : report.platform) out += "# " + key + ": " + value + "\n";
  out += "cipher,length_bytes,iterations,mean_ms,median_ms,stddev_ms,min_ms,max_ms\n";

  std::vector<const CellStats*> rows;
  for (const auto& c : report.cells) rows.push_back(&c);
  std::stable_sort(rows.begin(), rows.end(), [](const CellStats* a, const CellStats* b) {
    if (a->cipher != b->cipher) return a->cipher < b->cipher;
    return a->length_bytes < b->length_bytes;
  });
  for (const CellStats* c : rows) {
    out += std::string(cipher_name(c->cipher)) + "," + std::to_string(c->length_bytes) + "," +
           std::to_string(c->iterations) + "," + format_ms(c->mean_ms) + "," + format_ms(c->median_ms) + "," +
           format_ms(c->stddev_ms) + "," + format_ms(c->min_ms) + "," + format_ms(c->max_ms) + "\n";
  }
  return out;
}

std::optional<double> short_to_long_ratio(const BenchReport& report, CipherId id, std::size_t short_len,
                                          std::size_t long_len) {
  const CellStats* s = report.find(id, short_len);
  const CellStats* l = report.find(id, long_len);
  if (s == nullptr || l == nullptr || l->mean_ms <= 0) return std::nullopt;
  return s->mean_ms / l->mean_ms;
}

}  // namespace estream::bench
