// Copyright 2026 The estream-portfolio Authors
// SPDX-License-Identifier: Apache-2.0

#include "vectors.hpp"

#include <charconv>
#include <sstream>

#include "cipher.hpp"

namespace estream::vectors {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_u64(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

Error line_error(Errc code, std::size_t line, const Error& inner) {
  return Error::at_line(code, line, inner.detail.empty() ? inner.message() : inner.detail);
}

Result<KnownAnswerRecord> parse_header(std::string_view text, std::size_t line) {
  KnownAnswerRecord rec;
  rec.line = line;
  bool have_cipher = false, have_key = false, have_iv = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto start = text.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    auto stop = text.find_first_of(" \t", start);
    if (stop == std::string_view::npos) stop = text.size();
    const std::string_view token = text.substr(start, stop - start);
    pos = stop;

    const auto eq = token.find('=');
    if (eq == std::string_view::npos) {
      return Error::at_line(Errc::kParseError, line, "expected name=value, got '" + std::string(token) + "'");
    }
    const std::string_view name = token.substr(0, eq);
    const std::string_view value = token.substr(eq + 1);
    if (name == "cipher") {
      auto id = parse_cipher_id(value);
      if (!id) return Error::at_line(Errc::kUnknownCipherId, line, id.error().detail);
      rec.cipher = id.value();
      have_cipher = true;
    } else if (name == "key" || name == "iv") {
      auto bytes = from_hex(value);
      if (!bytes) return line_error(Errc::kBadHex, line, bytes.error());
      (name == "key" ? rec.key : rec.iv) = std::move(bytes).value();
      (name == "key" ? have_key : have_iv) = true;
    } else {
      return Error::at_line(Errc::kParseError, line, "unknown field '" + std::string(name) + "'");
    }
  }
  if (!have_cipher || !have_key || !have_iv) {
    return Error::at_line(Errc::kParseError, line, "record header needs cipher=, key= and iv=");
  }
  if (const auto rule = key_length_rule(rec.cipher); !rule.accepts(rec.key.size())) {
    return line_error(Errc::kParseError, line, Error::bad_length(Errc::kBadKeyLength, rule, rec.key.size()));
  }
  if (const auto rule = iv_length_rule(rec.cipher); !rule.accepts(rec.iv.size())) {
    return line_error(Errc::kParseError, line, Error::bad_length(Errc::kBadIvLength, rule, rec.iv.size()));
  }
  return rec;
}

Result<Check> parse_check(std::string_view text, std::size_t line) {
  // stream[<first>..<last>]=<hex>
  constexpr std::string_view kPrefix = "stream[";
  const auto close = text.find("]=");
  const auto dots = text.find("..");
  if (text.substr(0, kPrefix.size()) != kPrefix || close == std::string_view::npos ||
      dots == std::string_view::npos || dots > close) {
    return Error::at_line(Errc::kParseError, line, "expected stream[<first>..<last>]=<hex>");
  }
  std::uint64_t first = 0, last = 0;
  if (!parse_u64(text.substr(kPrefix.size(), dots - kPrefix.size()), first) ||
      !parse_u64(text.substr(dots + 2, close - dots - 2), last) || last < first) {
    return Error::at_line(Errc::kParseError, line, "bad stream range");
  }
  auto bytes = from_hex(text.substr(close + 2));
  if (!bytes) return line_error(Errc::kBadHex, line, bytes.error());
  if (bytes->size() != last - first + 1) {
    return Error::at_line(Errc::kParseError, line,
                          "range covers " + std::to_string(last - first + 1) + " bytes but value has " +
                              std::to_string(bytes->size()));
  }
  return Check{first, std::move(bytes).value()};
}

}  // namespace

Result<std::vector<KnownAnswerRecord>> load_vectors(std::string_view source) {
  std::vector<KnownAnswerRecord> records;
  bool open = false;  // the last record may still take checks
  std::size_t line_no = 0;

  auto close_record = [&]() -> Status {
    if (open && records.back().checks.empty()) {
      return Error::at_line(Errc::kParseError, records.back().line, "record has no stream[] lines");
    }
    open = false;
    return {};
  };

  std::size_t pos = 0;
  while (pos <= source.size()) {
    auto nl = source.find('\n', pos);
    if (nl == std::string_view::npos) nl = source.size();
    const std::string_view raw = source.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);

    if (text.empty()) {
      // Comment-only lines do not terminate a record; blank lines do.
      if (trim(raw).empty()) {
        if (auto st = close_record(); !st) return st.error();
      }
      if (nl == source.size()) break;
      continue;
    }

    if (text.substr(0, 7) == "cipher=" || text.find(" cipher=") != std::string_view::npos) {
      if (auto st = close_record(); !st) return st.error();
      auto rec = parse_header(text, line_no);
      if (!rec) return rec.error();
      records.push_back(std::move(rec).value());
      open = true;
    } else {
      if (!open) return Error::at_line(Errc::kParseError, line_no, "stream[] line outside a record");
      auto check = parse_check(text, line_no);
      if (!check) return check.error();
      auto& checks = records.back().checks;
      if (!checks.empty() && check->offset <= checks.back().offset) {
        return Error::at_line(Errc::kParseError, line_no, "offsets must strictly increase within a record");
      }
      checks.push_back(std::move(check).value());
    }
    if (nl == source.size()) break;
  }
  if (auto st = close_record(); !st) return st.error();
  return records;
}

VerifyReport verify(std::span<const KnownAnswerRecord> records) {
  VerifyReport report;
  for (std::size_t r = 0; r < records.size(); ++r) {
    const auto& rec = records[r];
    report.total += rec.checks.size();

    auto made = CipherInstance::create(rec.cipher, rec.key, rec.iv);
    if (!made) {
      for (std::size_t c = 0; c < rec.checks.size(); ++c) {
        report.failures.push_back(
            {r, c, rec.checks[c].offset, to_hex(rec.checks[c].expected), "", made.error().message()});
      }
      continue;
    }
    CipherInstance& cipher = made.value();

    for (std::size_t c = 0; c < rec.checks.size(); ++c) {
      const Check& check = rec.checks[c];
      Status moved;
      if (cipher.seekable()) {
        moved = cipher.seek(check.offset);
      } else {
        if (check.offset < cipher.position()) moved = cipher.reset(rec.iv);
        if (moved) moved = cipher.skip(check.offset - cipher.position());
      }
      Result<Bytes> actual = moved ? cipher.keystream(check.expected.size()) : Result<Bytes>(moved.error());
      if (!actual) {
        report.failures.push_back({r, c, check.offset, to_hex(check.expected), "", actual.error().message()});
      } else if (actual.value() != check.expected) {
        report.failures.push_back({r, c, check.offset, to_hex(check.expected), to_hex(actual.value()), ""});
      } else {
        ++report.passed;
      }
    }
  }
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream os;
  os << report.passed << "/" << report.total << " checks passed";
  if (report.failures.empty()) {
    os << "\n";
    return os.str();
  }
  os << ", " << report.failures.size() << " failed\n";
  for (const auto& f : report.failures) {
    os << "FAIL record " << f.record_index << " check " << f.check_index << " offset " << f.offset;
    if (!f.note.empty()) {
      os << ": " << f.note << "\n";
      continue;
    }
    // Locate the first differing byte so corrupted vectors are easy to find.
    std::size_t i = 0;
    while (2 * i + 1 < f.expected_hex.size() && f.expected_hex.compare(2 * i, 2, f.actual_hex, 2 * i, 2) == 0) ++i;
    os << " (first mismatch at byte " << f.offset + i << ")\n"
       << "  expected " << f.expected_hex << "\n"
       << "  actual   " << f.actual_hex << "\n";
  }
  return os.str();
}

}  // namespace estream::vectors
