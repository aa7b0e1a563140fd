// Copyright 2026 The estream-portfolio Authors
// SPDX-License-Identifier: Apache-2.0

#include "reference.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <set>

namespace estream::bench {

extern const std::string_view kEmbeddedReferenceTimes;
extern const std::string_view kEmbeddedReferenceDevices;

namespace {

template <class Fn>
Status for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (auto st = fn(line, line_no); !st) return st;
  }
  return {};
}

Error at(std::size_t line, const std::string& what) { return Error::at_line(Errc::kParseError, line, what); }

std::string cell_text(std::optional<double> v) {
  if (!v) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", *v);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

std::string pad_right(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

template <class Value>
std::optional<CipherId> argbest(const std::vector<CipherId>& ids, Value&& value, bool want_min) {
  std::optional<CipherId> best;
  double best_v = 0;
  for (CipherId id : ids) {
    const std::optional<double> v = value(id);
    if (!v) continue;
    if (!best || (want_min ? *v < best_v : *v > best_v)) {
      best = id;
      best_v = *v;
    }
  }
  return best;
}

std::string name_or_na(std::optional<CipherId> id) {
  return id ? std::string(cipher_display_name(*id)) : "n/a";
}

}  // namespace

Result<std::vector<std::string>> split_csv_line(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) return Error::make(Errc::kParseError, "unterminated quote");
  return fields;
}

Result<ReferenceDataset> ReferenceDataset::parse(std::string_view times_csv, std::string_view devices_csv) {
  ReferenceDataset ds;

  auto st = for_each_line(times_csv, [&](std::string_view line, std::size_t n) -> Status {
    auto fields = split_csv_line(line);
    if (!fields) return at(n, fields.error().detail);
    auto& f = fields.value();
    if (f.size() != 4) return at(n, "expected 4 fields");
    if (n == 1) {
      if (f[0] != "device" || f[1] != "cipher" || f[2] != "length_bytes" || f[3] != "time_ms") {
        return at(n, "unexpected header");
      }
      return {};
    }
    ReferenceCell cell;
    cell.device = f[0];
    auto id = parse_cipher_id(f[1]);
    if (!id) return at(n, id.error().message());
    cell.cipher = id.value();
    const auto [p1, e1] = std::from_chars(f[2].data(), f[2].data() + f[2].size(), cell.length_bytes);
    if (e1 != std::errc{} || p1 != f[2].data() + f[2].size()) return at(n, "bad length_bytes");
    std::string t = f[3];
    if (!t.empty() && t.back() == '?') {
      cell.doubtful = true;
      t.pop_back();
    }
    char* end = nullptr;
    cell.time_ms = std::strtod(t.c_str(), &end);
    if (t.empty() || *end != '\0' || cell.time_ms < 0) return at(n, "bad time_ms");
    ds.cells_.push_back(std::move(cell));
    return {};
  });
  if (!st) return st.error();

  st = for_each_line(devices_csv, [&](std::string_view line, std::size_t n) -> Status {
    auto fields = split_csv_line(line);
    if (!fields) return at(n, fields.error().detail);
    auto& f = fields.value();
    if (f.size() != 5) return at(n, "expected 5 fields");
    if (n == 1) return f[0] == "device" ? Status{} : Status(at(n, "unexpected header"));
    ds.devices_.push_back({f[0], f[1], f[2], f[3], f[4]});
    return {};
  });
  if (!st) return st.error();

  // Every timing row must name a known device.
  for (const auto& c : ds.cells_) {
    const bool known = std::any_of(ds.devices_.begin(), ds.devices_.end(),
                                   [&](const DeviceInfo& d) { return d.device == c.device; });
    if (!known) return Error::make(Errc::kParseError, "timing row for unknown device '" + c.device + "'");
  }
  return ds;
}

const ReferenceDataset& ReferenceDataset::embedded() {
  static const ReferenceDataset ds = [] {
    auto parsed = parse(kEmbeddedReferenceTimes, kEmbeddedReferenceDevices);
    if (!parsed) {
      std::cerr << "embedded reference data is corrupt: " << parsed.error().message() << "\n";
      std::abort();
    }
    return std::move(parsed).value();
  }();
  return ds;
}

std::vector<CipherId> ReferenceDataset::ciphers() const {
  std::set<CipherId> ids;
  for (const auto& c : cells_) ids.insert(c.cipher);
  return {ids.begin(), ids.end()};
}

std::vector<std::size_t> ReferenceDataset::lengths() const {
  std::set<std::size_t> ls;
  for (const auto& c : cells_) ls.insert(c.length_bytes);
  return {ls.begin(), ls.end()};
}

std::optional<double> ReferenceDataset::time(std::string_view device, CipherId id, std::size_t length) const {
  for (const auto& c : cells_) {
    if (c.device == device && c.cipher == id && c.length_bytes == length) return c.time_ms;
  }
  return std::nullopt;
}

std::optional<double> ReferenceDataset::device_average(CipherId id, std::size_t length) const {
  double sum = 0;
  std::size_t n = 0;
  for (const auto& c : cells_) {
    if (c.cipher == id && c.length_bytes == length) {
      sum += c.time_ms;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

std::optional<double> ReferenceDataset::overall_mean(CipherId id) const {
  double sum = 0;
  std::size_t n = 0;
  for (const auto& c : cells_) {
    if (c.cipher == id) {
      sum += c.time_ms;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

std::optional<double> published_average(CipherId id) noexcept {
  for (const auto& p : kPublishedAverages) {
    if (p.cipher == id) return p.time_ms;
  }
  return std::nullopt;
}

std::string compare_reference(const BenchReport& report, const ReferenceDataset& ref) {
  std::vector<CipherId> ids = ref.ciphers();
  for (const auto& c : report.cells) {
    if (std::find(ids.begin(), ids.end(), c.cipher) == ids.end()) ids.push_back(c.cipher);
  }
  std::sort(ids.begin(), ids.end());
  std::set<std::size_t> length_set;
  for (auto l : ref.lengths()) length_set.insert(l);
  for (const auto& c : report.cells) length_set.insert(c.length_bytes);
  const std::vector<std::size_t> lengths(length_set.begin(), length_set.end());

  auto host_mean = [&](CipherId id, std::size_t len) -> std::optional<double> {
    const CellStats* c = report.find(id, len);
    return c ? std::optional<double>(c->mean_ms) : std::nullopt;
  };

  std::string out;
  out += "Reference devices:\n";
  for (std::size_t i = 0; i < ref.devices().size(); ++i) {
    const auto& d = ref.devices()[i];
    out += "  D" + std::to_string(i + 1) + "  " + d.device + " (" + d.year + ")\n";
  }

  constexpr std::size_t kCol = 9;
  for (CipherId id : ids) {
    out += "\n" + std::string(cipher_display_name(id)) + ", mean time per message (ms)\n";
    out += pad("bytes", 6) + pad("host", kCol + 2) + pad("ref avg", kCol + 1);
    for (std::size_t i = 0; i < ref.devices().size(); ++i) out += pad("D" + std::to_string(i + 1), kCol);
    out += "\n";
    for (std::size_t len : lengths) {
      out += pad(std::to_string(len), 6) + pad(cell_text(host_mean(id, len)), kCol + 2) +
             pad(cell_text(ref.device_average(id, len)), kCol + 1);
      for (const auto& d : ref.devices()) out += pad(cell_text(ref.time(d.device, id, len)), kCol);
      out += "\n";
    }
  }

  out += "\nOverall mean per cipher (ms)\n";
  out += pad_right("cipher", 12) + pad("host", 12) + pad("ref cells", 12) + pad("published", 12) + "\n";
  auto host_overall = [&](CipherId id) -> std::optional<double> {
    double sum = 0;
    std::size_t n = 0;
    for (const auto& c : report.cells) {
      if (c.cipher == id) {
        sum += c.mean_ms;
        ++n;
      }
    }
    if (n == 0) return std::nullopt;
    return sum / static_cast<double>(n);
  };
  for (CipherId id : ids) {
    const auto pub = published_average(id);
    char pub_text[16] = "n/a";
    if (pub) std::snprintf(pub_text, sizeof pub_text, "%.2f", *pub);
    out += pad_right(std::string(cipher_display_name(id)), 12) + pad(cell_text(host_overall(id)), 12) +
           pad(cell_text(ref.overall_mean(id)), 12) + pad(pub_text, 12) + "\n";
  }

  out += "\nFastest cipher per length\n";
  out += pad("bytes", 6) + "  " + pad_right("host", 12) + "reference average\n";
  for (std::size_t len : lengths) {
    const auto host = argbest(ids, [&](CipherId id) { return host_mean(id, len); }, true);
    const auto reference = argbest(ids, [&](CipherId id) { return ref.device_average(id, len); }, true);
    out += pad(std::to_string(len), 6) + "  " + pad_right(name_or_na(host), 12) + name_or_na(reference) + "\n";
  }

  out += "\nFindings\n";
  const auto ref_best = argbest(ids, [&](CipherId id) { return ref.overall_mean(id); }, true);
  const auto ref_worst = argbest(ids, [&](CipherId id) { return ref.overall_mean(id); }, false);
  out += "  reference: best overall average " + name_or_na(ref_best) + ", worst " + name_or_na(ref_worst) + "\n";
  const auto host_best = argbest(ids, host_overall, true);
  const auto host_worst = argbest(ids, host_overall, false);
  out += "  host: best overall average " + name_or_na(host_best) + ", worst " + name_or_na(host_worst) + "\n";

  const auto ratio = [&](CipherId id) { return short_to_long_ratio(report, id); };
  const auto top = argbest(ids, ratio, false);
  if (!top) {
    out += "  setup cost: n/a (needs 16 and 2048 byte cells)\n";
  } else {
    out += "  setup cost: mean(16 B) / mean(2048 B) on host:";
    for (CipherId id : ids) {
      char buf[64];
      const auto r = ratio(id);
      if (r) {
        std::snprintf(buf, sizeof buf, " %s %.3f", std::string(cipher_display_name(id)).c_str(), *r);
        out += buf;
      }
    }
    out += "\n  largest ratio: " + std::string(cipher_display_name(*top));
    out += *top == CipherId::kHc128 ? " (HC-128 short messages are dominated by setup, as in the reference)\n"
                                    : " (differs from the reference, where HC-128 setup dominates)\n";
  }
  return out;
}

}  // namespace estream::bench
