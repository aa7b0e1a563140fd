// Copyright 2026 The estream-portfolio Authors
// SPDX-License-Identifier: Apache-2.0

#include "estream/estream.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "bench.hpp"
#include "cipher.hpp"
#include "reference.hpp"
#include "vectors.hpp"

struct es_cipher {
  estream::CipherInstance impl;
};

struct es_verify_report {
  estream::vectors::VerifyReport impl;
};

struct es_bench_report {
  estream::bench::BenchReport impl;
};

namespace {

thread_local std::string t_last_error;

es_status to_status(estream::Errc code) { return static_cast<es_status>(code); }

es_status fail(es_status code, std::string message) {
  t_last_error = std::move(message);
  return code;
}

es_status fail(const estream::Error& e) { return fail(to_status(e.code), e.message()); }

es_status check(const estream::Status& st) { return st ? ES_OK : fail(st.error()); }

bool valid_id(es_cipher_id id) { return id >= ES_SALSA20_12 && id <= ES_SOSEMANUK; }

std::span<const std::uint8_t> view(const uint8_t* p, size_t n) {
  return p == nullptr ? std::span<const std::uint8_t>{} : std::span<const std::uint8_t>(p, n);
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) return nullptr;
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

// Runs fn, converting escaped exceptions into ES_INTERNAL_ERROR.
template <class Fn>
es_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::bad_alloc&) {
    return fail(ES_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(ES_INTERNAL_ERROR, e.what());
  }
}

#define ES_REQUIRE(cond, what) \
  if (!(cond)) return fail(ES_INVALID_ARGUMENT, what)

}  // namespace

extern "C" {

const char* es_version(void) { return "1.0.0"; }

const char* es_status_name(es_status status) {
  if (status == ES_INTERNAL_ERROR) return "InternalError";
  return estream::errc_name(static_cast<estream::Errc>(status)).data();
}

const char* es_last_error(void) { return t_last_error.c_str(); }

void es_string_free(char* s) { std::free(s); }

es_status es_cipher_id_parse(const char* text, es_cipher_id* out) {
  ES_REQUIRE(text != nullptr && out != nullptr, "null argument");
  auto id = estream::parse_cipher_id(text);
  if (!id) return fail(id.error());
  *out = static_cast<es_cipher_id>(id.value());
  return ES_OK;
}

const char* es_cipher_id_name(es_cipher_id id) {
  return valid_id(id) ? estream::cipher_name(static_cast<estream::CipherId>(id)).data() : nullptr;
}

const char* es_cipher_display_name(es_cipher_id id) {
  return valid_id(id) ? estream::cipher_display_name(static_cast<estream::CipherId>(id)).data() : nullptr;
}

es_status es_cipher_new(es_cipher_id id, const uint8_t* key, size_t key_len, const uint8_t* iv, size_t iv_len,
                        es_cipher** out) {
  ES_REQUIRE(out != nullptr, "null output handle");
  *out = nullptr;
  if (!valid_id(id)) return fail(ES_UNKNOWN_CIPHER_ID, "UnknownCipherId: " + std::to_string(id));
  ES_REQUIRE(key != nullptr || key_len == 0, "null key");
  ES_REQUIRE(iv != nullptr || iv_len == 0, "null iv");
  return guarded([&] {
    auto made = estream::CipherInstance::create(static_cast<estream::CipherId>(id), view(key, key_len),
                                                view(iv, iv_len));
    if (!made) return fail(made.error());
    *out = new es_cipher{std::move(made).value()};
    return ES_OK;
  });
}

es_status es_cipher_clone(const es_cipher* c, es_cipher** out) {
  ES_REQUIRE(c != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = new es_cipher{c->impl};
    return ES_OK;
  });
}

void es_cipher_free(es_cipher* c) { delete c; }

es_status es_cipher_keystream(es_cipher* c, uint8_t* out, size_t n) {
  ES_REQUIRE(c != nullptr, "null handle");
  ES_REQUIRE(out != nullptr || n == 0, "null output buffer");
  if (n == 0) return ES_OK;
  return check(c->impl.keystream(std::span<std::uint8_t>(out, n)));
}

es_status es_cipher_apply(es_cipher* c, const uint8_t* in, uint8_t* out, size_t n) {
  ES_REQUIRE(c != nullptr, "null handle");
  ES_REQUIRE((in != nullptr && out != nullptr) || n == 0, "null buffer");
  if (n == 0) return ES_OK;
  return check(c->impl.apply(std::span<const std::uint8_t>(in, n), std::span<std::uint8_t>(out, n)));
}

es_status es_cipher_reset(es_cipher* c, const uint8_t* iv, size_t iv_len) {
  ES_REQUIRE(c != nullptr, "null handle");
  ES_REQUIRE(iv != nullptr || iv_len == 0, "null iv");
  return check(c->impl.reset(view(iv, iv_len)));
}

es_status es_cipher_seek(es_cipher* c, uint64_t offset) {
  ES_REQUIRE(c != nullptr, "null handle");
  return check(c->impl.seek(offset));
}

es_status es_cipher_skip(es_cipher* c, uint64_t n) {
  ES_REQUIRE(c != nullptr, "null handle");
  return check(c->impl.skip(n));
}

uint64_t es_cipher_position(const es_cipher* c) { return c == nullptr ? 0 : c->impl.position(); }

es_cipher_id es_cipher_get_id(const es_cipher* c) { return static_cast<es_cipher_id>(c->impl.id()); }

int es_cipher_seekable(const es_cipher* c) { return c != nullptr && c->impl.seekable() ? 1 : 0; }

es_status es_verify_text(const char* text, size_t len, es_verify_report** out) {
  ES_REQUIRE(out != nullptr, "null output handle");
  *out = nullptr;
  ES_REQUIRE(text != nullptr || len == 0, "null text");
  return guarded([&] {
    auto records = estream::vectors::load_vectors(std::string_view(text == nullptr ? "" : text, len));
    if (!records) return fail(records.error());
    *out = new es_verify_report{estream::vectors::verify(records.value())};
    return ES_OK;
  });
}

size_t es_verify_total(const es_verify_report* r) { return r == nullptr ? 0 : r->impl.total; }
size_t es_verify_passed(const es_verify_report* r) { return r == nullptr ? 0 : r->impl.passed; }
size_t es_verify_failure_count(const es_verify_report* r) { return r == nullptr ? 0 : r->impl.failures.size(); }

es_status es_verify_failure(const es_verify_report* r, size_t index, size_t* record_index, size_t* check_index,
                            uint64_t* offset) {
  ES_REQUIRE(r != nullptr && index < r->impl.failures.size(), "failure index out of range");
  const auto& f = r->impl.failures[index];
  if (record_index != nullptr) *record_index = f.record_index;
  if (check_index != nullptr) *check_index = f.check_index;
  if (offset != nullptr) *offset = f.offset;
  return ES_OK;
}

char* es_verify_format(const es_verify_report* r) {
  if (r == nullptr) return nullptr;
  return dup_string(estream::vectors::format_report(r->impl));
}

void es_verify_free(es_verify_report* r) { delete r; }

void es_bench_config_default(es_bench_config* config) {
  if (config == nullptr) return;
  const estream::bench::BenchConfig d;
  *config = es_bench_config{nullptr, 0, d.iterations, d.warmup_iterations, d.include_setup ? 1 : 0,
                            nullptr, 0, d.seed};
}

es_status es_bench_run(const es_bench_config* config, es_bench_report** out) {
  ES_REQUIRE(config != nullptr && out != nullptr, "null argument");
  *out = nullptr;
  return guarded([&] {
    estream::bench::BenchConfig cfg;
    if (config->lengths != nullptr) cfg.lengths.assign(config->lengths, config->lengths + config->n_lengths);
    if (config->ciphers != nullptr) {
      cfg.ciphers.clear();
      for (size_t i = 0; i < config->n_ciphers; ++i) {
        if (!valid_id(config->ciphers[i])) return fail(ES_UNKNOWN_CIPHER_ID, "UnknownCipherId in config");
        cfg.ciphers.push_back(static_cast<estream::CipherId>(config->ciphers[i]));
      }
    }
    cfg.iterations = config->iterations;
    cfg.warmup_iterations = config->warmup_iterations;
    cfg.include_setup = config->include_setup != 0;
    cfg.seed = config->seed;
    auto report = estream::bench::run_benchmark(cfg);
    if (!report) return fail(report.error());
    *out = new es_bench_report{std::move(report).value()};
    return ES_OK;
  });
}

size_t es_bench_cell_count(const es_bench_report* r) { return r == nullptr ? 0 : r->impl.cells.size(); }

es_status es_bench_cell_get(const es_bench_report* r, size_t index, es_bench_cell* out) {
  ES_REQUIRE(r != nullptr && out != nullptr && index < r->impl.cells.size(), "cell index out of range");
  const auto& c = r->impl.cells[index];
  *out = es_bench_cell{static_cast<es_cipher_id>(c.cipher), c.length_bytes, c.iterations, c.mean_ms, c.median_ms,
                       c.stddev_ms, c.min_ms, c.max_ms, c.batch};
  return ES_OK;
}

char* es_bench_csv(const es_bench_report* r) {
  if (r == nullptr) return nullptr;
  return dup_string(estream::bench::emit_csv(r->impl));
}

char* es_bench_compare_reference(const es_bench_report* r) {
  if (r == nullptr) return nullptr;
  return dup_string(estream::bench::compare_reference(r->impl, estream::bench::ReferenceDataset::embedded()));
}

void es_bench_free(es_bench_report* r) { delete r; }

size_t es_reference_device_count(void) { return estream::bench::ReferenceDataset::embedded().devices().size(); }

size_t es_reference_cell_count(void) { return estream::bench::ReferenceDataset::embedded().cells().size(); }

es_status es_reference_overall_mean(es_cipher_id id, double* out) {
  ES_REQUIRE(out != nullptr, "null output");
  if (!valid_id(id)) return fail(ES_UNKNOWN_CIPHER_ID, "UnknownCipherId");
  const auto v = estream::bench::ReferenceDataset::embedded().overall_mean(static_cast<estream::CipherId>(id));
  if (!v) return fail(ES_UNSUPPORTED, "no reference timings for " + std::string(es_cipher_id_name(id)));
  *out = *v;
  return ES_OK;
}

es_status es_reference_published_average(es_cipher_id id, double* out) {
  ES_REQUIRE(out != nullptr, "null output");
  if (!valid_id(id)) return fail(ES_UNKNOWN_CIPHER_ID, "UnknownCipherId");
  const auto v = estream::bench::published_average(static_cast<estream::CipherId>(id));
  if (!v) return fail(ES_UNSUPPORTED, "no published average for " + std::string(es_cipher_id_name(id)));
  *out = *v;
  return ES_OK;
}

}  // extern "C"
