#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobclass/classify.hpp"

namespace frobclass::scan {

// Frobenius classes of a rational curve base-changed to Q(zeta_l) at the
// first `primes` rational primes p = 1 mod l of good reduction. The prime
// above p is (p, x - r) with r the least root of the l-th cyclotomic
// polynomial mod p; the global pairing value is zeta_l^global_exponent.
struct ScanConfig {
  std::vector<nf::Rational> curve;  // 5 long or 2 short coefficients
  std::vector<uint64_t> ls;
  size_t primes = 0;
  unsigned threads = 1;
  uint64_t seed = ff::kDefaultSeed;
  uint64_t global_exponent = 1;
  uint64_t max_l = 11;  // soft cap
};

struct ScanRow {
  uint64_t l = 0;
  uint64_t p = 0;
  uint64_t root = 0;
  uint64_t q_mod_l = 0;
  std::optional<uint64_t> trace_mod_l;
  std::string gl_class;
  std::string sl_class;
  std::string label;
  std::string path;
  std::string error;  // empty on success
  uint64_t micros = 0;
};

struct ScanSummary {
  uint64_t l = 0;
  size_t rows = 0;
  size_t split = 0;
  size_t errors = 0;
  double seconds = 0;  // summed per-prime time
  double wall_seconds = 0;
};

// Frequencies of the two split unipotent labels (qr / nqr) among split rows,
// against a fair coin at three standard deviations.
struct ChebotarevReport {
  uint64_t l = 0;
  size_t split = 0;
  size_t qr = 0;
  size_t nqr = 0;
  double z = 0;
  bool within = true;
};

struct ScanOutput {
  std::vector<ScanRow> rows;  // grouped by l in config order, primes ascending
  std::vector<ScanSummary> summary;
  std::vector<ChebotarevReport> chebotarev;
};

// (p, r) pairs for the selection rule above. Throws InvalidInput for a
// request of zero primes.
std::vector<std::pair<uint64_t, uint64_t>> select_primes(const std::vector<nf::Rational>& curve, uint64_t l,
                                                         size_t count);

// Throws InvalidInput on a bad config before any work; per-prime failures
// become rows with an error label.
ScanOutput run_scan(const ScanConfig& cfg);

ChebotarevReport chebotarev(const std::vector<ScanRow>& rows, uint64_t l);

// Seed used for one prime, independent of thread scheduling.
uint64_t job_seed(uint64_t seed, uint64_t l, uint64_t p);

std::string tsv_header();
std::string tsv_row(const ScanRow& r);
std::string json_row(const ScanRow& r);
std::string format_summary(const ScanOutput& out, bool json);

}  // namespace frobclass::scan
