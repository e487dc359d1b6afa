#include "threshold/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "threshold/counting.hpp"
#include "threshold/extremal.hpp"
#include "threshold/graph.hpp"

namespace threshold {

using nlohmann::json;

void for_each_code_with_prefix(std::size_t n, std::size_t prefix_len,
                               std::uint64_t prefix,
                               const std::function<void(const ThresholdCode&)>& fn) {
  if (n == 0) throw std::invalid_argument("codes need at least one vertex");
  const std::size_t digits = n - 1;
  if (prefix_len > digits || digits >= 64) {
    throw std::invalid_argument("prefix longer than the code");
  }
  const std::size_t suffix_len = digits - prefix_len;
  const std::uint64_t count = std::uint64_t{1} << suffix_len;
  std::string text(digits, '0');
  for (std::size_t i = 0; i < prefix_len; ++i) {
    text[i] = (prefix >> (prefix_len - 1 - i)) & 1 ? '1' : '0';
  }
  for (std::uint64_t s = 0; s < count; ++s) {
    for (std::size_t i = 0; i < suffix_len; ++i) {
      text[prefix_len + i] = (s >> (suffix_len - 1 - i)) & 1 ? '1' : '0';
    }
    fn(ThresholdCode::from_digits(text));
  }
}

std::vector<ThresholdCode> enumerate_codes(std::size_t n) {
  std::vector<ThresholdCode> out;
  for_each_code_with_prefix(n, 0, 0, [&](const ThresholdCode& c) { out.push_back(c); });
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_size(std::size_t n) {
  if (n == 0 || n > kMaxVerifyVertices) {
    throw std::out_of_range("verification supports 1 <= n <= " +
                            std::to_string(kMaxVerifyVertices));
  }
}

std::size_t chunk_prefix_len(std::size_t n, const RunOptions& options) {
  const std::size_t len = options.prefix_len.value_or(std::min<std::size_t>(n - 1, 8));
  if (len > n - 1) throw std::invalid_argument("prefix_len exceeds n - 1");
  return len;
}

// Runs `compute` for every prefix chunk of the n-vertex code space and
// returns the partial results in prefix order. Finished chunks are appended
// to the checkpoint file and reloaded from it on a later run.
template <class Partial>
std::vector<Partial> run_chunks(const std::string& task, std::size_t n,
                                const RunOptions& options,
                                const std::function<Partial(std::uint64_t, std::size_t)>& compute,
                                const std::function<json(const Partial&)>& encode,
                                const std::function<Partial(const json&)>& decode) {
  const std::size_t prefix_len = chunk_prefix_len(n, options);
  const std::uint64_t chunks = std::uint64_t{1} << prefix_len;
  std::vector<std::optional<Partial>> results(chunks);

  std::mutex file_mutex;
  std::ofstream checkpoint;
  if (!options.checkpoint.empty()) {
    if (std::ifstream in(options.checkpoint); in) {
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        const json entry = json::parse(line, nullptr, false);
        if (entry.is_discarded()) continue;  // torn final line
        if (entry.value("task", "") != task || entry.value("n", 0u) != n ||
            entry.value("prefix_len", 0u) != prefix_len) {
          continue;
        }
        const auto chunk = entry.at("chunk").get<std::uint64_t>();
        if (chunk < chunks) results[chunk] = decode(entry.at("partial"));
      }
    }
    checkpoint.open(options.checkpoint, std::ios::app);
    if (!checkpoint) {
      throw std::runtime_error("cannot open checkpoint " + options.checkpoint.string());
    }
  }

  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t chunk = next++; chunk < chunks; chunk = next++) {
      if (results[chunk]) continue;
      Partial partial = compute(chunk, prefix_len);
      if (checkpoint.is_open()) {
        const json entry = {{"task", task},      {"n", n},
                            {"prefix_len", prefix_len}, {"chunk", chunk},
                            {"partial", encode(partial)}};
        std::lock_guard lock(file_mutex);
        checkpoint << entry.dump() << '\n' << std::flush;
      }
      results[chunk] = std::move(partial);
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, options.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<Partial> out;
  out.reserve(chunks);
  for (auto& r : results) out.push_back(std::move(*r));
  return out;
}

std::uint64_t sum(const std::vector<std::uint64_t>& v) {
  std::uint64_t s = 0;
  for (auto x : v) s += x;
  return s;
}

// ---------------------------------------------------------------------------
// Maximum matchings

struct MaxAgg {
  std::uint64_t codes = 0;
  std::uint64_t max_m = 0;
  std::vector<std::string> achievers;
  std::uint64_t aa = 0;
  std::uint64_t aa_min_m = std::numeric_limits<std::uint64_t>::max();
  std::string aa_min_code;
  std::string aa_example;
  std::vector<std::uint64_t> aa_vector;
  std::string aa_mismatch;  // empty while all AA vectors agree
  std::optional<std::uint64_t> non_aa_max_m;
  std::string non_aa_best;
};

void observe(MaxAgg& agg, const ThresholdCode& code) {
  const auto m = detail::matching_counts<std::uint64_t>(code);
  const std::uint64_t total = sum(m);
  const std::string text = code.str();
  if (agg.codes == 0 || total > agg.max_m) {
    agg.max_m = total;
    agg.achievers.assign(1, text);
  } else if (total == agg.max_m) {
    agg.achievers.push_back(text);
  }
  ++agg.codes;
  if (is_almost_alternating(code)) {
    if (agg.aa == 0) {
      agg.aa_vector = m;
      agg.aa_example = text;
    } else if (m != agg.aa_vector && agg.aa_mismatch.empty()) {
      agg.aa_mismatch = text + " vs " + agg.aa_example;
    }
    if (total < agg.aa_min_m) {
      agg.aa_min_m = total;
      agg.aa_min_code = text;
    }
    ++agg.aa;
  } else if (!agg.non_aa_max_m || total > *agg.non_aa_max_m) {
    agg.non_aa_max_m = total;
    agg.non_aa_best = text;
  }
}

void merge(MaxAgg& into, const MaxAgg& from) {
  if (from.codes == 0) return;
  if (into.codes == 0) {
    into = from;
    return;
  }
  into.codes += from.codes;
  if (from.max_m > into.max_m) {
    into.max_m = from.max_m;
    into.achievers = from.achievers;
  } else if (from.max_m == into.max_m) {
    into.achievers.insert(into.achievers.end(), from.achievers.begin(),
                          from.achievers.end());
  }
  if (from.aa > 0) {
    if (into.aa == 0) {
      into.aa_vector = from.aa_vector;
      into.aa_example = from.aa_example;
    } else if (from.aa_vector != into.aa_vector && into.aa_mismatch.empty()) {
      into.aa_mismatch = from.aa_example + " vs " + into.aa_example;
    }
    if (into.aa_mismatch.empty()) into.aa_mismatch = from.aa_mismatch;
    if (from.aa_min_m < into.aa_min_m) {
      into.aa_min_m = from.aa_min_m;
      into.aa_min_code = from.aa_min_code;
    }
    into.aa += from.aa;
  }
  if (from.non_aa_max_m && (!into.non_aa_max_m || *from.non_aa_max_m > *into.non_aa_max_m)) {
    into.non_aa_max_m = from.non_aa_max_m;
    into.non_aa_best = from.non_aa_best;
  }
}

json encode_max(const MaxAgg& a) {
  return {{"codes", a.codes},           {"max_m", a.max_m},
          {"achievers", a.achievers},   {"aa", a.aa},
          {"aa_min_m", a.aa_min_m},     {"aa_min_code", a.aa_min_code},
          {"aa_example", a.aa_example}, {"aa_vector", a.aa_vector},
          {"aa_mismatch", a.aa_mismatch},
          {"non_aa_max_m", a.non_aa_max_m ? json(*a.non_aa_max_m) : json(nullptr)},
          {"non_aa_best", a.non_aa_best}};
}

MaxAgg decode_max(const json& j) {
  MaxAgg a;
  a.codes = j.at("codes");
  a.max_m = j.at("max_m");
  a.achievers = j.at("achievers").get<std::vector<std::string>>();
  a.aa = j.at("aa");
  a.aa_min_m = j.at("aa_min_m");
  a.aa_min_code = j.at("aa_min_code");
  a.aa_example = j.at("aa_example");
  a.aa_vector = j.at("aa_vector").get<std::vector<std::uint64_t>>();
  a.aa_mismatch = j.at("aa_mismatch");
  if (!j.at("non_aa_max_m").is_null()) a.non_aa_max_m = j.at("non_aa_max_m").get<std::uint64_t>();
  a.non_aa_best = j.at("non_aa_best");
  return a;
}

using MaxPartial = std::map<std::uint64_t, MaxAgg>;

// ---------------------------------------------------------------------------
// Minimum independent sets

struct MinAgg {
  std::uint64_t codes = 0;
  std::uint64_t min_i = 0;
  std::vector<std::string> achievers;
  std::vector<std::uint64_t> per_k_min;
};

void observe(MinAgg& agg, const ThresholdCode& code) {
  const auto ind = detail::independence_counts<std::uint64_t>(code);
  const std::uint64_t total = sum(ind);
  const std::string text = code.str();
  if (agg.codes == 0 || total < agg.min_i) {
    agg.min_i = total;
    agg.achievers.assign(1, text);
  } else if (total == agg.min_i) {
    agg.achievers.push_back(text);
  }
  if (agg.codes == 0) {
    agg.per_k_min = ind;
  } else {
    for (std::size_t k = 0; k < ind.size(); ++k) {
      agg.per_k_min[k] = std::min(agg.per_k_min[k], ind[k]);
    }
  }
  ++agg.codes;
}

void merge(MinAgg& into, const MinAgg& from) {
  if (from.codes == 0) return;
  if (into.codes == 0) {
    into = from;
    return;
  }
  into.codes += from.codes;
  if (from.min_i < into.min_i) {
    into.min_i = from.min_i;
    into.achievers = from.achievers;
  } else if (from.min_i == into.min_i) {
    into.achievers.insert(into.achievers.end(), from.achievers.begin(),
                          from.achievers.end());
  }
  for (std::size_t k = 0; k < from.per_k_min.size(); ++k) {
    into.per_k_min[k] = std::min(into.per_k_min[k], from.per_k_min[k]);
  }
}

json encode_min(const MinAgg& a) {
  return {{"codes", a.codes},
          {"min_i", a.min_i},
          {"achievers", a.achievers},
          {"per_k_min", a.per_k_min}};
}

MinAgg decode_min(const json& j) {
  MinAgg a;
  a.codes = j.at("codes");
  a.min_i = j.at("min_i");
  a.achievers = j.at("achievers").get<std::vector<std::string>>();
  a.per_k_min = j.at("per_k_min").get<std::vector<std::uint64_t>>();
  return a;
}

using MinPartial = std::map<std::uint64_t, MinAgg>;

template <class Agg>
json encode_map(const std::map<std::uint64_t, Agg>& m, json (*encode)(const Agg&)) {
  json out = json::array();
  for (const auto& [e, agg] : m) out.push_back({{"e", e}, {"agg", encode(agg)}});
  return out;
}

template <class Agg>
std::map<std::uint64_t, Agg> decode_map(const json& j, Agg (*decode)(const json&)) {
  std::map<std::uint64_t, Agg> out;
  for (const auto& entry : j) out[entry.at("e").get<std::uint64_t>()] = decode(entry.at("agg"));
  return out;
}

template <class Agg>
std::map<std::uint64_t, Agg> scan_by_edges(std::size_t n, std::uint64_t chunk,
                                           std::size_t prefix_len) {
  std::map<std::uint64_t, Agg> partial;
  for_each_code_with_prefix(n, prefix_len, chunk, [&](const ThresholdCode& code) {
    observe(partial[edge_count(code)], code);
  });
  return partial;
}

template <class Agg>
std::map<std::uint64_t, Agg> merge_all(const std::vector<std::map<std::uint64_t, Agg>>& parts) {
  std::map<std::uint64_t, Agg> total;
  for (const auto& part : parts) {
    for (const auto& [e, agg] : part) merge(total[e], agg);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Conjecture scan

struct ScanPartial {
  ConjectureLevel level;
  std::vector<ConjectureCounterexample> found;
};

json encode_scan(const ScanPartial& p) {
  json found = json::array();
  for (const auto& c : p.found) {
    found.push_back({{"n", c.n}, {"e", c.e}, {"k", c.k}, {"code", c.code},
                     {"m_k", c.m_k}, {"m_k_aa", c.m_k_almost_alternating},
                     {"clause", c.clause}});
  }
  return {{"codes", p.level.codes},
          {"strict_checks", p.level.strict_checks},
          {"vacuous_ties", p.level.vacuous_ties},
          {"found", found}};
}

ScanPartial decode_scan(const json& j) {
  ScanPartial p;
  p.level.codes = j.at("codes");
  p.level.strict_checks = j.at("strict_checks");
  p.level.vacuous_ties = j.at("vacuous_ties");
  for (const auto& c : j.at("found")) {
    p.found.push_back({c.at("n"), c.at("e"), c.at("k"), c.at("code"), c.at("m_k"),
                       c.at("m_k_aa"), c.at("clause")});
  }
  p.level.counterexamples = p.found.size();
  return p;
}

}  // namespace

MaxMatchingsReport verify_max_matchings(std::size_t n, const RunOptions& options) {
  check_size(n);
  const auto start = Clock::now();
  const auto parts = run_chunks<MaxPartial>(
      "max-matchings", n, options,
      [n](std::uint64_t chunk, std::size_t len) { return scan_by_edges<MaxAgg>(n, chunk, len); },
      [](const MaxPartial& p) { return encode_map<MaxAgg>(p, encode_max); },
      [](const json& j) { return decode_map<MaxAgg>(j, decode_max); });
  const auto merged = merge_all(parts);

  MaxMatchingsReport report;
  report.n = n;
  report.pass = true;
  for (const auto& [e, agg] : merged) {
    MaxMatchingsRecord r;
    r.e = e;
    r.codes = agg.codes;
    r.max_m = agg.max_m;
    r.achievers = agg.achievers;
    r.almost_alternating = agg.aa;
    r.non_aa_max_m = agg.non_aa_max_m;
    r.aa_matching_vector = agg.aa_vector;
    const ThresholdCode extremal = almost_alternating_code(n, e);
    r.extremal_code = extremal.str();
    if (agg.aa == 0) {
      r.failures.push_back("no almost alternating code");
    } else {
      if (agg.aa_min_m != agg.max_m) {
        r.failures.push_back("almost alternating " + agg.aa_min_code + " has m = " +
                             std::to_string(agg.aa_min_m) + " below the maximum " +
                             std::to_string(agg.max_m));
      }
      if (!agg.aa_mismatch.empty()) {
        r.failures.push_back("almost alternating matching vectors differ: " +
                             agg.aa_mismatch);
      }
      if (detail::matching_counts<std::uint64_t>(extremal) != agg.aa_vector) {
        r.failures.push_back("constructed code " + r.extremal_code +
                             " differs from the enumerated almost alternating vector");
      }
    }
    if (agg.non_aa_max_m && *agg.non_aa_max_m >= agg.max_m) {
      r.failures.push_back("non almost alternating " + agg.non_aa_best +
                           " attains m = " + std::to_string(*agg.non_aa_max_m));
    }
    r.pass = r.failures.empty();
    report.pass = report.pass && r.pass;
    report.records.push_back(std::move(r));
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

MinIndsetsReport verify_min_indsets(std::size_t n, const RunOptions& options) {
  check_size(n);
  const auto start = Clock::now();
  const auto parts = run_chunks<MinPartial>(
      "min-indsets", n, options,
      [n](std::uint64_t chunk, std::size_t len) { return scan_by_edges<MinAgg>(n, chunk, len); },
      [](const MinPartial& p) { return encode_map<MinAgg>(p, encode_min); },
      [](const json& j) { return decode_map<MinAgg>(j, decode_min); });
  const auto merged = merge_all(parts);

  MinIndsetsReport report;
  report.n = n;
  report.pass = true;
  for (const auto& [e, agg] : merged) {
    MinIndsetsRecord r;
    r.e = e;
    r.codes = agg.codes;
    r.min_i = agg.min_i;
    r.achievers = agg.achievers;
    r.per_k_min = agg.per_k_min;
    const ThresholdCode colex = colex_code(n, e);
    r.colex_code = colex.str();
    r.colex_vector = detail::independence_counts<std::uint64_t>(colex);
    if (r.achievers != std::vector<std::string>{r.colex_code}) {
      r.failures.push_back("minimizers of i are not exactly the colex code " +
                           r.colex_code);
    }
    for (std::size_t k = 0; k < r.per_k_min.size(); ++k) {
      if (r.colex_vector[k] != r.per_k_min[k]) {
        r.failures.push_back("i_" + std::to_string(k) + " of the colex code is " +
                             std::to_string(r.colex_vector[k]) + " but some code has " +
                             std::to_string(r.per_k_min[k]));
      }
    }
    r.pass = r.failures.empty();
    report.pass = report.pass && r.pass;
    report.records.push_back(std::move(r));
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

ConjectureReport conjecture_scan(std::size_t n_max, const ScanOptions& options) {
  check_size(n_max);
  const auto start = Clock::now();
  ConjectureReport report;
  report.n_max = n_max;
  std::mutex emit_mutex;

  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::uint64_t level_codes = std::uint64_t{1} << (n - 1);
    if (options.max_codes != 0 && report.codes_checked + level_codes > options.max_codes) {
      report.complete = false;
      break;
    }
    std::vector<std::vector<std::uint64_t>> extremal(max_edges(n) + 1);
    for (std::uint64_t e = 0; e < extremal.size(); ++e) {
      extremal[e] = detail::matching_counts<std::uint64_t>(almost_alternating_code(n, e));
    }

    auto compute = [&](std::uint64_t chunk, std::size_t len) {
      ScanPartial partial;
      partial.level.n = n;
      for_each_code_with_prefix(n, len, chunk, [&](const ThresholdCode& code) {
        ++partial.level.codes;
        const std::uint64_t e = edge_count(code);
        const auto& best = extremal[e];
        const auto m = detail::matching_counts<std::uint64_t>(code);
        const bool aa = is_almost_alternating(code);
        for (std::size_t k = 0; k < m.size(); ++k) {
          std::optional<std::string> clause;
          if (m[k] > best[k]) {
            clause = "weak";
          } else if (!aa && k >= 2) {
            if (best[k] == 0) {
              ++partial.level.vacuous_ties;
            } else {
              ++partial.level.strict_checks;
              if (m[k] >= best[k]) clause = "strict";
            }
          }
          if (!clause) continue;
          ConjectureCounterexample c{n, e, k, code.str(), m[k], best[k], *clause};
          if (options.on_counterexample) {
            std::lock_guard lock(emit_mutex);
            options.on_counterexample(c);
          }
          partial.found.push_back(std::move(c));
        }
      });
      partial.level.counterexamples = partial.found.size();
      return partial;
    };
    const auto parts = run_chunks<ScanPartial>("conjecture", n, options.run, compute,
                                               encode_scan, decode_scan);
    ConjectureLevel level;
    level.n = n;
    for (const auto& p : parts) {
      level.codes += p.level.codes;
      level.strict_checks += p.level.strict_checks;
      level.vacuous_ties += p.level.vacuous_ties;
      level.counterexamples += p.found.size();
      report.counterexamples.insert(report.counterexamples.end(), p.found.begin(),
                                    p.found.end());
    }
    report.codes_checked += level.codes;
    report.levels.push_back(level);
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

}  // namespace threshold
