#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "threshold/code.hpp"

namespace threshold {

/// Largest n the verifiers accept. All counts fit in 64 bits up to here.
inline constexpr std::size_t kMaxVerifyVertices = 30;

/// All 2^(n-1) codes on n vertices, in lexicographic order of their digits.
std::vector<ThresholdCode> enumerate_codes(std::size_t n);

/// Visits the codes whose first `prefix_len` digits spell `prefix` (read as
/// a binary number, most significant digit first), in lexicographic order.
void for_each_code_with_prefix(std::size_t n, std::size_t prefix_len,
                               std::uint64_t prefix,
                               const std::function<void(const ThresholdCode&)>& fn);

/// How the code space is split and whether progress is persisted.
///
/// Codes are partitioned by their first `prefix_len` digits; each prefix is
/// one independent chunk. Chunk results are merged in prefix order, so the
/// report does not depend on `workers`. With a checkpoint path every
/// finished chunk is appended as one JSON line and skipped on a rerun.
struct RunOptions {
  std::size_t workers = 1;
  std::optional<std::size_t> prefix_len;  // default min(n - 1, 8)
  std::filesystem::path checkpoint;       // empty: no checkpointing
};

/// Per-e summary of an exhaustive maximum-matchings check.
struct MaxMatchingsRecord {
  std::uint64_t e = 0;
  std::uint64_t codes = 0;
  std::uint64_t max_m = 0;
  std::vector<std::string> achievers;
  std::uint64_t almost_alternating = 0;
  std::optional<std::uint64_t> non_aa_max_m;
  std::vector<std::uint64_t> aa_matching_vector;
  std::string extremal_code;
  bool pass = false;
  std::vector<std::string> failures;
};

struct MaxMatchingsReport {
  std::size_t n = 0;
  std::vector<MaxMatchingsRecord> records;
  bool pass = false;
  double elapsed_seconds = 0;
};

/// For every e: every almost alternating code attains the maximum m over
/// T(n,e), every other code is strictly below it, all almost alternating
/// codes share one matching vector, and that vector is the one of
/// almost_alternating_code(n, e).
MaxMatchingsReport verify_max_matchings(std::size_t n, const RunOptions& options = {});

struct MinIndsetsRecord {
  std::uint64_t e = 0;
  std::uint64_t codes = 0;
  std::uint64_t min_i = 0;
  std::vector<std::string> achievers;
  std::string colex_code;
  std::vector<std::uint64_t> colex_vector;
  std::vector<std::uint64_t> per_k_min;
  bool pass = false;
  std::vector<std::string> failures;
};

struct MinIndsetsReport {
  std::size_t n = 0;
  std::vector<MinIndsetsRecord> records;
  bool pass = false;
  double elapsed_seconds = 0;
};

/// For every e: the colex code is the unique minimizer of i over T(n,e) and
/// attains the minimum of every i_k.
MinIndsetsReport verify_min_indsets(std::size_t n, const RunOptions& options = {});

/// A violation of m_k(G) <= m_k(A) ("weak"), or of m_k(G) < m_k(A) for
/// k >= 2, m_k(A) > 0 and G not almost alternating ("strict").
struct ConjectureCounterexample {
  std::size_t n = 0;
  std::uint64_t e = 0;
  std::size_t k = 0;
  std::string code;
  std::uint64_t m_k = 0;
  std::uint64_t m_k_almost_alternating = 0;
  std::string clause;
};

struct ConjectureLevel {
  std::size_t n = 0;
  std::uint64_t codes = 0;
  std::uint64_t strict_checks = 0;  // (G, k) pairs the strict clause applies to
  std::uint64_t vacuous_ties = 0;   // non-AA G, k >= 2, m_k(A) == 0
  std::uint64_t counterexamples = 0;
};

struct ConjectureReport {
  std::size_t n_max = 0;
  std::uint64_t codes_checked = 0;
  bool complete = true;
  std::vector<ConjectureLevel> levels;
  std::vector<ConjectureCounterexample> counterexamples;
  double elapsed_seconds = 0;
};

struct ScanOptions {
  RunOptions run;
  std::uint64_t max_codes = 0;  // 0: no budget. Whole levels only.
  /// Called as soon as a counterexample is found (serialized across workers).
  std::function<void(const ConjectureCounterexample&)> on_counterexample;
};

/// Checks the per-size matching conjecture for every n in [1, n_max].
ConjectureReport conjecture_scan(std::size_t n_max, const ScanOptions& options = {});

}  // namespace threshold
