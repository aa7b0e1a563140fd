// Copyright 2026 The estream-portfolio Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: keystream, encrypt, decrypt, verify, bench.
// Exit codes: 0 success, 1 verification or runtime failure, 2 usage error.

#include <CLI11.hpp>

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "estream/estream.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CipherDeleter {
  void operator()(es_cipher* c) const { es_cipher_free(c); }
};
using CipherPtr = std::unique_ptr<es_cipher, CipherDeleter>;

struct StringDeleter {
  void operator()(char* s) const { es_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

// Thrown for bad arguments detected after CLI11 parsing.
struct UsageError {
  std::string message;
};

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::vector<uint8_t> parse_hex_flag(const std::string& flag, const std::string& text) {
  if (text.size() % 2 != 0) throw UsageError{flag + ": hex string has odd length " + std::to_string(text.size())};
  std::vector<uint8_t> out(text.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int hi = hex_digit(text[2 * i]);
    const int lo = hex_digit(text[2 * i + 1]);
    if (hi < 0 || lo < 0) throw UsageError{flag + ": invalid hex digit near position " + std::to_string(2 * i)};
    out[i] = static_cast<uint8_t>(hi << 4 | lo);
  }
  return out;
}

es_cipher_id parse_cipher_flag(const std::string& text) {
  es_cipher_id id;
  if (es_cipher_id_parse(text.c_str(), &id) != ES_OK) {
    throw UsageError{"--cipher: unknown cipher '" + text + "' (try SALSA20_12, RABBIT, HC128, SOSEMANUK)"};
  }
  return id;
}

CipherPtr make_cipher(const std::string& cipher, const std::string& key_hex, const std::string& iv_hex) {
  const es_cipher_id id = parse_cipher_flag(cipher);
  const auto key = parse_hex_flag("--key", key_hex);
  const auto iv = parse_hex_flag("--iv", iv_hex);
  es_cipher* raw = nullptr;
  const es_status st = es_cipher_new(id, key.data(), key.size(), iv.data(), iv.size(), &raw);
  if (st == ES_BAD_KEY_LENGTH) throw UsageError{std::string("--key: ") + es_last_error()};
  if (st == ES_BAD_IV_LENGTH) throw UsageError{std::string("--iv: ") + es_last_error()};
  if (st != ES_OK) throw UsageError{es_last_error()};
  return CipherPtr(raw);
}

void print_hex(const uint8_t* p, std::size_t n) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string line;
  line.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    line += kDigits[p[i] >> 4];
    line += kDigits[p[i] & 15];
  }
  std::fwrite(line.data(), 1, line.size(), stdout);
}

struct KeystreamArgs {
  std::string cipher, key, iv, format = "hex";
  std::uint64_t length = 0;
  std::uint64_t offset = 0;
};

int cmd_keystream(const KeystreamArgs& a) {
  CipherPtr c = make_cipher(a.cipher, a.key, a.iv);
  if (a.offset > 0) {
    const es_status st = es_cipher_seekable(c.get()) ? es_cipher_seek(c.get(), a.offset)
                                                     : es_cipher_skip(c.get(), a.offset);
    if (st == ES_POSITION_OVERFLOW) throw UsageError{std::string("--offset: ") + es_last_error()};
    if (st != ES_OK) {
      std::cerr << "error: " << es_last_error() << "\n";
      return kExitFailure;
    }
  }
  std::vector<uint8_t> buf(64 * 1024);
  std::uint64_t left = a.length;
  while (left > 0) {
    const std::size_t n = static_cast<std::size_t>(std::min<std::uint64_t>(left, buf.size()));
    const es_status st = es_cipher_keystream(c.get(), buf.data(), n);
    if (st == ES_POSITION_OVERFLOW) throw UsageError{std::string("--length: ") + es_last_error()};
    if (st != ES_OK) {
      std::cerr << "error: " << es_last_error() << "\n";
      return kExitFailure;
    }
    if (a.format == "raw") {
      std::fwrite(buf.data(), 1, n, stdout);
    } else {
      print_hex(buf.data(), n);
    }
    left -= n;
  }
  if (a.format == "hex") std::fputc('\n', stdout);
  return std::fflush(stdout) == 0 ? kExitOk : kExitFailure;
}

struct CryptArgs {
  std::string cipher, key, iv, in_path, out_path;
};

int cmd_crypt(const CryptArgs& a) {
  CipherPtr c = make_cipher(a.cipher, a.key, a.iv);
  std::ifstream in(a.in_path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open input '" << a.in_path << "'\n";
    return kExitFailure;
  }
  std::ofstream out(a.out_path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "error: cannot open output '" << a.out_path << "'\n";
    return kExitFailure;
  }
  std::vector<uint8_t> buf(64 * 1024);
  while (in) {
    in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    const auto n = static_cast<std::size_t>(in.gcount());
    if (n == 0) break;
    if (es_cipher_apply(c.get(), buf.data(), buf.data(), n) != ES_OK) {
      std::cerr << "error: " << es_last_error() << "\n";
      return kExitFailure;
    }
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(n));
    if (!out) {
      std::cerr << "error: write failed on '" << a.out_path << "'\n";
      return kExitFailure;
    }
  }
  if (in.bad()) {
    std::cerr << "error: read failed on '" << a.in_path << "'\n";
    return kExitFailure;
  }
  out.close();
  if (!out) {
    std::cerr << "error: write failed on '" << a.out_path << "'\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_verify(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return kExitUsage;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();

  es_verify_report* report = nullptr;
  if (es_verify_text(text.data(), text.size(), &report) != ES_OK) {
    std::cerr << path << ": " << es_last_error() << "\n";
    return kExitUsage;
  }
  const OwnedString summary(es_verify_format(report));
  std::cout << summary.get();
  const bool ok = es_verify_failure_count(report) == 0;
  es_verify_free(report);
  return ok ? kExitOk : kExitFailure;
}

struct BenchArgs {
  std::vector<std::size_t> lengths;
  std::vector<std::string> ciphers;
  std::size_t iterations = 0;
  std::size_t warmup = 0;
  bool include_setup = true;
  std::string output;
  bool compare = false;
  std::uint64_t seed = 0;
};

int cmd_bench(const BenchArgs& a) {
  es_bench_config cfg;
  es_bench_config_default(&cfg);
  std::vector<es_cipher_id> ids;
  for (const auto& name : a.ciphers) ids.push_back(parse_cipher_flag(name));
  if (!a.lengths.empty()) {
    cfg.lengths = a.lengths.data();
    cfg.n_lengths = a.lengths.size();
  }
  if (!ids.empty()) {
    cfg.ciphers = ids.data();
    cfg.n_ciphers = ids.size();
  }
  cfg.iterations = a.iterations;
  cfg.warmup_iterations = a.warmup;
  cfg.include_setup = a.include_setup ? 1 : 0;
  cfg.seed = a.seed;

  std::fprintf(stderr, "seed: 0x%016" PRIx64 "\n", a.seed);
  es_bench_report* report = nullptr;
  const es_status st = es_bench_run(&cfg, &report);
  if (st == ES_INVALID_ARGUMENT) throw UsageError{es_last_error()};
  if (st != ES_OK) {
    std::cerr << "error: " << es_last_error() << "\n";
    return kExitFailure;
  }
  const OwnedString csv(es_bench_csv(report));
  int rc = kExitOk;
  if (a.output.empty() || a.output == "-") {
    std::cout << csv.get();
  } else {
    std::ofstream out(a.output, std::ios::binary | std::ios::trunc);
    out << csv.get();
    out.close();
    if (!out) {
      std::cerr << "error: cannot write '" << a.output << "'\n";
      rc = kExitFailure;
    }
  }
  if (a.compare) {
    const OwnedString table(es_bench_compare_reference(report));
    std::cout << "\n" << table.get();
  }
  es_bench_free(report);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Portfolio stream ciphers: keystream, file encryption, known-answer checks, benchmarks"};
  app.set_version_flag("--version", es_version());
  app.require_subcommand(1);

  KeystreamArgs ks;
  auto* keystream = app.add_subcommand("keystream", "Print keystream bytes [offset, offset+length)");
  keystream->add_option("--cipher", ks.cipher, "SALSA20_12, SALSA20_8, SALSA20_20, RABBIT, HC128, SOSEMANUK")
      ->required();
  keystream->add_option("--key", ks.key, "Key as hex")->required();
  keystream->add_option("--iv", ks.iv, "IV as hex")->required();
  keystream->add_option("--length", ks.length, "Number of bytes")->required();
  keystream->add_option("--offset", ks.offset, "Starting byte offset");
  keystream->add_option("--format", ks.format, "hex or raw")->check(CLI::IsMember({"hex", "raw"}));

  CryptArgs ca;
  auto add_crypt = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("--cipher", ca.cipher, "Cipher id")->required();
    cmd->add_option("--key", ca.key, "Key as hex")->required();
    cmd->add_option("--iv", ca.iv, "IV as hex")->required();
    cmd->add_option("--in", ca.in_path, "Input file")->required();
    cmd->add_option("--out", ca.out_path, "Output file")->required();
    return cmd;
  };
  auto* encrypt = add_crypt("encrypt", "XOR a file with the keystream");
  auto* decrypt = add_crypt("decrypt", "XOR a file with the keystream (same transform as encrypt)");

  std::string vectors_path;
  auto* verify = app.add_subcommand("verify", "Check a known-answer vector file");
  verify->add_option("path", vectors_path, "Vector file")->required();

  BenchArgs ba;
  {
    es_bench_config defaults;
    es_bench_config_default(&defaults);
    ba.iterations = defaults.iterations;
    ba.warmup = defaults.warmup_iterations;
    ba.include_setup = defaults.include_setup != 0;
    ba.seed = defaults.seed;
  }
  auto* bench = app.add_subcommand("bench", "Time encryption across message lengths");
  bench->add_option("--lengths", ba.lengths, "Message lengths in bytes (default 16..2048)")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench->add_option("--ciphers", ba.ciphers, "Cipher ids (default the four portfolio ciphers)")->delimiter(',');
  bench->add_option("--iterations", ba.iterations, "Timed samples per cell")->check(CLI::PositiveNumber);
  bench->add_option("--warmup", ba.warmup, "Untimed runs per cell");
  bench->add_flag("--include-setup,!--no-setup", ba.include_setup, "Time key and IV setup with each message");
  bench->add_option("--output", ba.output, "CSV output path (default stdout)");
  bench->add_flag("--compare-reference", ba.compare, "Print a comparison with the bundled reference timings");
  bench->add_option("--seed", ba.seed, "Seed for keys, IVs and messages");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*keystream) return cmd_keystream(ks);
    if (*encrypt || *decrypt) return cmd_crypt(ca);
    if (*verify) return cmd_verify(vectors_path);
    if (*bench) return cmd_bench(ba);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
