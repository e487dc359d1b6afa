#include "threshold/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "threshold/code.hpp"
#include "threshold/extremal.hpp"
#include "threshold/graph.hpp"
#include "threshold/moves.hpp"
#include "threshold/report.hpp"
#include "threshold/verify.hpp"

namespace threshold {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  std::string text;
  int status = kExitOk;
};

std::string list(const std::vector<BigInt>& counts) {
  std::string out = "[";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ", ";
    out += counts[i].str();
  }
  return out + "]";
}

ThresholdCode read_code(const CliConfig& config) {
  return config.ab_input ? parse_ab_notation(config.code) : parse_code(config.code);
}

void require_format(const CliConfig& config, std::initializer_list<std::string_view> allowed) {
  for (auto f : allowed) {
    if (config.format == f) return;
  }
  throw UsageError("--format " + config.format + " is not available for " +
                   config.subcommand);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string describe(const ABForm& form) {
  std::string block = form.block_len ? std::string(form.block_len, *form.block_digit) : "-";
  return "block " + block + ", word " + form.word + (form.starred ? ", starred" : ", unstarred");
}

Outcome analyze(const CliConfig& config) {
  require_format(config, {"text", "json"});
  const ThresholdCode code = read_code(config);
  const auto forms = ab_forms(code);
  std::vector<StructuralDefect> defects;
  if (auto d = find_bracketed_string(code)) defects.push_back(*d);
  if (auto d = find_separation_issue(code)) defects.push_back(*d);

  if (config.format == "json") {
    json j = {{"code", code.str()},
              {"n", code.size()},
              {"edges", edge_count(code)},
              {"almost_alternating", !forms.empty()},
              {"alternating", is_alternating(code)},
              {"colex", is_colex(code)}};
    j["ab_forms"] = json::array();
    for (const auto& f : forms) j["ab_forms"].push_back(to_json(f));
    if (!forms.empty()) {
      j["small"] = is_small(code);
      j["large"] = is_large(code);
    }
    j["defects"] = json::array();
    for (const auto& d : defects) {
      json dj = to_json(d);
      dj["highlight"] = highlight(code, d);
      j["defects"].push_back(dj);
    }
    return {j.dump(2) + "\n"};
  }

  std::ostringstream out;
  out << "code " << code.str() << "\n"
      << "vertices " << code.size() << "\n"
      << "edges " << edge_count(code) << "\n"
      << "almost alternating: " << yes_no(!forms.empty()) << "\n"
      << "alternating: " << yes_no(is_alternating(code)) << "\n"
      << "colex: " << yes_no(is_colex(code)) << "\n";
  if (!forms.empty()) {
    out << "small: " << yes_no(is_small(code)) << "\n"
        << "large: " << yes_no(is_large(code)) << "\n";
  }
  for (const auto& f : forms) out << "ab-form: " << describe(f) << "\n";
  for (const auto& d : defects) {
    std::string name(to_string(d.kind));
    for (auto& c : name) {
      if (c == '-') c = ' ';
    }
    out << name << ": " << highlight(code, d) << "\n";
  }
  return {out.str()};
}

Outcome count(const CliConfig& config) {
  require_format(config, {"text", "json"});
  const ThresholdCode code = read_code(config);
  const MatchingVector m = match_vector(code);
  const IndependenceVector i = ind_vector(code);
  std::optional<bool> agrees;
  if (config.check_oracle) {
    const Graph g = build_graph(code);
    try {
      agrees = brute_force_match_vector(g, config.limits) == m &&
               brute_force_ind_vector(g, config.limits) == i;
    } catch (const OracleLimitExceeded& e) {
      throw UsageError(e.what());
    }
  }
  const int status = agrees.value_or(true) ? kExitOk : kExitFailed;
  if (config.format == "json") {
    json j = {{"code", code.str()}, {"matchings", to_json(m)}, {"independent_sets", to_json(i)}};
    if (agrees) j["oracle_agrees"] = *agrees;
    return {j.dump(2) + "\n", status};
  }
  std::ostringstream out;
  out << "matchings " << list(m.counts) << " total " << m.total() << "\n"
      << "independent sets " << list(i.counts) << " total " << i.total() << "\n";
  if (agrees) out << "oracle " << (*agrees ? "agrees" : "DISAGREES") << "\n";
  return {out.str(), status};
}

Outcome edges(const CliConfig& config) {
  require_format(config, {"text", "json"});
  const ThresholdCode code = read_code(config);
  if (config.format == "json") {
    json j = {{"code", code.str()}, {"n", code.size()}, {"edges", edge_count(code)}};
    return {j.dump(2) + "\n"};
  }
  return {std::to_string(edge_count(code)) + "\n"};
}

Outcome complement(const CliConfig& config) {
  require_format(config, {"text", "json"});
  const ThresholdCode code = read_code(config);
  const ThresholdCode flipped = complement_code(code);
  if (config.format == "json") {
    json j = {{"code", code.str()}, {"complement", flipped.str()}, {"edges", edge_count(flipped)}};
    return {j.dump(2) + "\n"};
  }
  return {flipped.str() + "\n"};
}

Outcome extremal(const CliConfig& config) {
  require_format(config, {"text", "json"});
  ThresholdCode code = ThresholdCode::from_digits("");
  try {
    code = config.kind == "matchings" ? almost_alternating_code(config.n, config.e)
                                      : colex_code(config.n, config.e);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  if (config.format == "json") {
    json j = {{"n", config.n}, {"e", config.e}, {"kind", config.kind}, {"code", code.str()}};
    if (config.kind == "matchings") {
      j["matchings"] = to_json(match_vector(code));
    } else {
      j["independent_sets"] = to_json(ind_vector(code));
    }
    return {j.dump(2) + "\n"};
  }
  return {code.str() + "\n"};
}

Outcome reduce(const CliConfig& config) {
  require_format(config, {"text", "json"});
  const ThresholdCode code = read_code(config);
  const RewriteTrace trace = config.objective == "matchings"
                                 ? maximize_matchings_by_moves(code)
                                 : minimize_indsets_by_moves(code);
  if (config.format == "json") return {to_json(trace).dump(2) + "\n"};
  const char* total = trace.objective == Objective::kMatchings ? "m" : "i";
  std::ostringstream out;
  for (const auto& s : trace.steps) {
    out << s.before.str() << " -> " << s.after.str() << "  " << to_string(s.kind) << " at "
        << s.position << "  " << total << " " << s.total_before << " -> " << s.total_after
        << "\n";
  }
  out << "final " << trace.final_code.str() << " after " << trace.steps.size() << " steps\n";
  return {out.str()};
}

RunOptions run_options(const CliConfig& config) {
  RunOptions options;
  options.workers = config.workers;
  if (config.prefix_len) options.prefix_len = config.prefix_len;
  if (!config.checkpoint.empty()) options.checkpoint = config.checkpoint;
  return options;
}

void check_size(std::uint64_t n, const char* flag) {
  if (n < 1 || n > kMaxVerifyVertices) {
    throw UsageError(std::string(flag) + " must be in [1, " +
                     std::to_string(kMaxVerifyVertices) + "]");
  }
}

Outcome verify(const CliConfig& config) {
  require_format(config, {"text", "json", "csv"});
  check_size(config.n, "--n");
  if (config.theorem == "max-matchings") {
    const auto report = verify_max_matchings(config.n, run_options(config));
    const int status = report.pass ? kExitOk : kExitFailed;
    if (config.format == "json") return {to_json(report, config.timing).dump(2) + "\n", status};
    if (config.format == "csv") return {to_csv(report), status};
    std::ostringstream out;
    for (const auto& r : report.records) {
      out << "e=" << r.e << " codes=" << r.codes << " max_m=" << r.max_m
          << " achievers=" << r.achievers.size() << " extremal=" << r.extremal_code << " "
          << (r.pass ? "ok" : "FAIL") << "\n";
      for (const auto& f : r.failures) out << "  " << f << "\n";
    }
    out << "max-matchings n=" << report.n << ": " << (report.pass ? "PASS" : "FAIL") << "\n";
    return {out.str(), status};
  }
  const auto report = verify_min_indsets(config.n, run_options(config));
  const int status = report.pass ? kExitOk : kExitFailed;
  if (config.format == "json") return {to_json(report, config.timing).dump(2) + "\n", status};
  if (config.format == "csv") return {to_csv(report), status};
  std::ostringstream out;
  for (const auto& r : report.records) {
    out << "e=" << r.e << " codes=" << r.codes << " min_i=" << r.min_i
        << " colex=" << r.colex_code << " " << (r.pass ? "ok" : "FAIL") << "\n";
    for (const auto& f : r.failures) out << "  " << f << "\n";
  }
  out << "min-indsets n=" << report.n << ": " << (report.pass ? "PASS" : "FAIL") << "\n";
  return {out.str(), status};
}

Outcome scan(const CliConfig& config, std::ostream& err) {
  require_format(config, {"text", "json", "csv"});
  check_size(config.n, "--n-max");
  ScanOptions options;
  options.run = run_options(config);
  options.max_codes = config.max_codes;
  std::mutex lock;
  options.on_counterexample = [&](const ConjectureCounterexample& c) {
    std::lock_guard guard(lock);
    err << "counterexample: n=" << c.n << " e=" << c.e << " k=" << c.k << " " << c.code
        << " (" << c.clause << ")\n";
  };
  const auto report = conjecture_scan(config.n, options);
  const int status = report.counterexamples.empty() ? kExitOk : kExitFailed;
  if (config.format == "json") return {to_json(report, config.timing).dump(2) + "\n", status};
  if (config.format == "csv") return {to_csv(report), status};
  std::ostringstream out;
  for (const auto& l : report.levels) {
    out << "n=" << l.n << " codes=" << l.codes << " strict_checks=" << l.strict_checks
        << " vacuous_ties=" << l.vacuous_ties << " counterexamples=" << l.counterexamples
        << "\n";
  }
  for (const auto& c : report.counterexamples) {
    out << "counterexample n=" << c.n << " e=" << c.e << " k=" << c.k << " " << c.code
        << " m_k=" << c.m_k << " vs " << c.m_k_almost_alternating << " (" << c.clause << ")\n";
  }
  out << "scan up to n=" << report.n_max << (report.complete ? "" : " (budget reached)")
      << ": " << report.codes_checked << " codes, "
      << (report.counterexamples.empty() ? "no counterexamples" : "COUNTEREXAMPLES FOUND")
      << "\n";
  return {out.str(), status};
}

Outcome export_code(const CliConfig& config) {
  const ThresholdCode code = read_code(config);
  ExportFormat format;
  try {
    format = parse_export_format(config.format);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return {export_graph(build_graph(code), format)};
}

Outcome dispatch(const CliConfig& config, std::ostream& err) {
  const std::string& s = config.subcommand;
  if (s == "analyze") return analyze(config);
  if (s == "count") return count(config);
  if (s == "edges") return edges(config);
  if (s == "complement") return complement(config);
  if (s == "extremal") return extremal(config);
  if (s == "reduce") return reduce(config);
  if (s == "verify") return verify(config);
  if (s == "scan") return scan(config, err);
  return export_code(config);
}

void report_parse_error(const CodeParseError& e, const CliConfig& config, std::ostream& err) {
  err << "error: " << e.what() << " at position " << e.position() << "\n"
      << "  " << config.code << "\n"
      << "  " << std::string(e.position(), ' ') << "^\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig config;
  if (const char* env = std::getenv("THRESH_WORKERS"); env && *env) {
    char* end = nullptr;
    const unsigned long workers = std::strtoul(env, &end, 10);
    if (*end != '\0' || workers < 1 || workers > 1024) {
      err << "error: THRESH_WORKERS must be an integer in [1, 1024], got '" << env << "'\n";
      return kExitUsage;
    }
    config.workers = workers;
  }
  CLI::App app{"Threshold graph creation codes: counting, moves, extremal codes, verification"};
  app.require_subcommand(1);

  const std::vector<std::string> data_formats = {"text", "json", "csv"};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output,-o", config.output, "Write the result to this file");
  };
  auto add_code = [&](CLI::App* sub) {
    sub->add_option("code", config.code, "Creation code, e.g. 001001* (final 0/1 means *)")
        ->required();
    sub->add_flag("--ab", config.ab_input, "Read the code as block + word, e.g. 000aaba*");
    sub->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    add_common(sub);
  };
  auto add_run = [&](CLI::App* sub) {
    sub->add_option("--workers", config.workers, "Worker threads (default: $THRESH_WORKERS or 1)")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1024}));
    sub->add_option("--prefix-len", config.prefix_len, "Digits per chunk prefix");
    sub->add_option("--checkpoint", config.checkpoint, "Resume file (JSON lines)");
    sub->add_flag("--timing", config.timing, "Include elapsed time in JSON output");
    sub->add_option("--format", config.format, "Output format")->check(CLI::IsMember(data_formats));
    add_common(sub);
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Classification, defects and ab-forms");
  add_code(analyze_cmd);
  auto* count_cmd = app.add_subcommand("count", "Matching and independence vectors");
  add_code(count_cmd);
  count_cmd->add_flag("--check", config.check_oracle, "Compare with brute-force counts");
  count_cmd->add_option("--max-matching-vertices", config.limits.max_matching_vertices,
                        "Largest n for the brute-force matching count");
  count_cmd->add_option("--max-indset-vertices", config.limits.max_independent_set_vertices,
                        "Largest n for the brute-force independent set count");
  add_code(app.add_subcommand("edges", "Edge count"));
  add_code(app.add_subcommand("complement", "Code of the complement graph"));

  auto* extremal_cmd = app.add_subcommand("extremal", "Extremal code for (n, e)");
  extremal_cmd->add_option("--n", config.n, "Vertices")->required();
  extremal_cmd->add_option("--e", config.e, "Edges")->required();
  extremal_cmd->add_option("--kind", config.kind, "matchings: almost alternating; indsets: colex")
      ->check(CLI::IsMember({"matchings", "indsets"}));
  extremal_cmd->add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  add_common(extremal_cmd);

  auto* reduce_cmd = app.add_subcommand("reduce", "Rewrite a code to an extremal one");
  add_code(reduce_cmd);
  reduce_cmd->add_option("--objective", config.objective, "What to optimize")
      ->check(CLI::IsMember({"matchings", "indsets"}));

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive check of an extremal result for all codes of length n");
  verify_cmd->add_option("--n", config.n, "Vertices")->required();
  verify_cmd->add_option("--theorem", config.theorem, "Which statement to check")
      ->required()
      ->check(CLI::IsMember({"max-matchings", "min-indsets"}));
  add_run(verify_cmd);

  auto* scan_cmd = app.add_subcommand("scan", "Search for counterexamples to the per-size conjecture");
  scan_cmd->add_option("--n-max", config.n, "Largest vertex count")->required();
  scan_cmd->add_option("--max-codes", config.max_codes, "Stop after this many codes (whole sizes)");
  add_run(scan_cmd);

  auto* export_cmd = app.add_subcommand("export", "Graph as DOT or an edge list");
  export_cmd->add_option("code", config.code, "Creation code")->required();
  export_cmd->add_flag("--ab", config.ab_input, "Read the code as block + word");
  export_cmd->add_option("--format", config.format, "Graph format")
      ->required()
      ->check(CLI::IsMember({"dot", "edge-list"}));
  add_common(export_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  config.subcommand = app.get_subcommands().front()->get_name();

  Outcome outcome;
  try {
    outcome = dispatch(config, err);
  } catch (const CodeParseError& e) {
    report_parse_error(e, config, err);
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // A count law or consistency check failed inside the library.
    err << "failure: " << e.what() << "\n";
    return kExitFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (config.output.empty()) {
    out << outcome.text;
  } else {
    std::ofstream file(config.output);
    if (!file) {
      err << "error: cannot write " << config.output << "\n";
      return kExitUsage;
    }
    file << outcome.text;
  }
  return outcome.status;
}

}  // namespace threshold
