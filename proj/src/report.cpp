#include "threshold/report.hpp"

#include <map>
#include <sstream>

#include "threshold/graph.hpp"

namespace threshold {

using nlohmann::json;

namespace {

json decimal_array(const std::vector<BigInt>& counts) {
  json out = json::array();
  for (const auto& c : counts) out.push_back(c.str());
  return out;
}

json decimal_array(const std::vector<std::uint64_t>& counts) {
  json out = json::array();
  for (auto c : counts) out.push_back(std::to_string(c));
  return out;
}

json span_json(const Span& s) { return {{"begin", s.begin}, {"length", s.length}}; }

std::string join(const std::vector<std::string>& items, char sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out.push_back(sep);
    out += items[i];
  }
  return out;
}

}  // namespace

json to_json(const MatchingVector& v) {
  return {{"counts", decimal_array(v.counts)}, {"total", v.total().str()}};
}

json to_json(const IndependenceVector& v) {
  return {{"counts", decimal_array(v.counts)}, {"total", v.total().str()}};
}

json to_json(const ABForm& form) {
  return {{"block_digit", form.block_digit ? json(std::string(1, *form.block_digit))
                                           : json(nullptr)},
          {"block_len", form.block_len},
          {"word", form.word},
          {"starred", form.starred},
          {"alpha", form.alpha()},
          {"beta", form.beta()},
          {"small", form.small()}};
}

json to_json(const StructuralDefect& defect) {
  json out = {{"kind", std::string(to_string(defect.kind))},
              {"extent", span_json(defect.extent)}};
  if (defect.kind == DefectKind::kSeparationIssue) {
    out["first_pair"] = span_json(defect.first_pair);
    out["middle"] = span_json(defect.middle);
    out["second_pair"] = span_json(defect.second_pair);
  }
  return out;
}

json to_json(const RewriteTrace& trace) {
  const std::string prefix = trace.objective == Objective::kMatchings ? "m" : "i";
  json steps = json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"kind", std::string(to_string(s.kind))},
                     {"position", s.position},
                     {"window", s.window},
                     {"uses_star", s.uses_star},
                     {"before", s.before.str()},
                     {"after", s.after.str()},
                     {prefix + "_total_before", s.total_before.str()},
                     {prefix + "_total_after", s.total_after.str()}});
  }
  return {{"objective", std::string(to_string(trace.objective))},
          {"initial", trace.initial.str()},
          {"final", trace.final_code.str()},
          {"steps", steps}};
}

json to_json(const MaxMatchingsReport& report, bool with_timing) {
  json records = json::array();
  for (const auto& r : report.records) {
    records.push_back({{"e", r.e},
                       {"codes", r.codes},
                       {"max_m", std::to_string(r.max_m)},
                       {"achievers", r.achievers},
                       {"almost_alternating", r.almost_alternating},
                       {"non_aa_max_m", r.non_aa_max_m ? json(std::to_string(*r.non_aa_max_m))
                                                       : json(nullptr)},
                       {"aa_matching_vector", decimal_array(r.aa_matching_vector)},
                       {"extremal_code", r.extremal_code},
                       {"pass", r.pass},
                       {"failures", r.failures}});
  }
  json out = {{"theorem", "max-matchings"},
              {"n", report.n},
              {"pass", report.pass},
              {"records", records}};
  if (with_timing) out["elapsed_seconds"] = report.elapsed_seconds;
  return out;
}

json to_json(const MinIndsetsReport& report, bool with_timing) {
  json records = json::array();
  for (const auto& r : report.records) {
    records.push_back({{"e", r.e},
                       {"codes", r.codes},
                       {"min_i", std::to_string(r.min_i)},
                       {"achievers", r.achievers},
                       {"colex_code", r.colex_code},
                       {"colex_vector", decimal_array(r.colex_vector)},
                       {"per_k_min", decimal_array(r.per_k_min)},
                       {"pass", r.pass},
                       {"failures", r.failures}});
  }
  json out = {{"theorem", "min-indsets"},
              {"n", report.n},
              {"pass", report.pass},
              {"records", records}};
  if (with_timing) out["elapsed_seconds"] = report.elapsed_seconds;
  return out;
}

json to_json(const ConjectureReport& report, bool with_timing) {
  json levels = json::array();
  for (const auto& l : report.levels) {
    levels.push_back({{"n", l.n},
                      {"codes", l.codes},
                      {"strict_checks", l.strict_checks},
                      {"vacuous_ties", l.vacuous_ties},
                      {"counterexamples", l.counterexamples}});
  }
  json found = json::array();
  for (const auto& c : report.counterexamples) {
    found.push_back({{"n", c.n},
                     {"e", c.e},
                     {"k", c.k},
                     {"code", c.code},
                     {"m_k", std::to_string(c.m_k)},
                     {"m_k_almost_alternating", std::to_string(c.m_k_almost_alternating)},
                     {"clause", c.clause}});
  }
  json out = {{"scan", "matching-conjecture"},
              {"n_max", report.n_max},
              {"codes_checked", report.codes_checked},
              {"complete", report.complete},
              {"pass", report.counterexamples.empty()},
              {"levels", levels},
              {"counterexamples", found}};
  if (with_timing) out["elapsed_seconds"] = report.elapsed_seconds;
  return out;
}

std::string to_csv(const MaxMatchingsReport& report) {
  std::ostringstream out;
  out << "n,e,codes,max_m,achievers,almost_alternating,non_aa_max_m,extremal_code,pass\n";
  for (const auto& r : report.records) {
    out << report.n << ',' << r.e << ',' << r.codes << ',' << r.max_m << ','
        << join(r.achievers, ' ') << ',' << r.almost_alternating << ','
        << (r.non_aa_max_m ? std::to_string(*r.non_aa_max_m) : "") << ','
        << r.extremal_code << ',' << (r.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string to_csv(const MinIndsetsReport& report) {
  std::ostringstream out;
  out << "n,e,codes,min_i,achievers,colex_code,pass\n";
  for (const auto& r : report.records) {
    out << report.n << ',' << r.e << ',' << r.codes << ',' << r.min_i << ','
        << join(r.achievers, ' ') << ',' << r.colex_code << ','
        << (r.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string to_csv(const ConjectureReport& report) {
  // Per (n, e): how many codes and counterexamples.
  std::ostringstream out;
  out << "n,e,codes,counterexamples\n";
  for (const auto& level : report.levels) {
    std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> rows;
    for (const auto& code : enumerate_codes(level.n)) ++rows[edge_count(code)].first;
    for (const auto& c : report.counterexamples) {
      if (c.n == level.n) ++rows[c.e].second;
    }
    for (const auto& [e, row] : rows) {
      out << level.n << ',' << e << ',' << row.first << ',' << row.second << '\n';
    }
  }
  return out.str();
}

std::string highlight(const ThresholdCode& code, const StructuralDefect& defect) {
  std::vector<Span> spans;
  if (defect.kind == DefectKind::kSeparationIssue) {
    spans = {defect.first_pair, defect.second_pair};
  } else {
    spans = {defect.extent};
  }
  const std::string text = code.str();
  std::string out;
  for (std::size_t p = 0; p < text.size(); ++p) {
    for (const auto& s : spans) {
      if (s.begin == p) out.push_back('[');
    }
    out.push_back(text[p]);
    for (const auto& s : spans) {
      if (s.end() == p + 1) out.push_back(']');
    }
  }
  return out;
}

}  // namespace threshold
