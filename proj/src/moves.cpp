#include "threshold/moves.hpp"

#include <string>

#include "threshold/graph.hpp"

namespace threshold {

namespace {

// Symbol at p matches `want`; the star matches either digit.
bool matches(const ThresholdCode& code, std::size_t p, char want) {
  return p < code.size() && (code.is_star(p) || code.at(p) == want);
}

// Length of the run of literal `digit`s starting at p (the star excluded).
std::size_t digit_run(const ThresholdCode& code, std::size_t p, char digit) {
  std::size_t len = 0;
  while (p + len + 1 < code.size() && code.at(p + len) == digit) ++len;
  return len;
}

// 0 1^j 0 (or the 0/1-swapped form) with j >= min_run, right bracket may be
// the star. Returns the window length j + 2.
std::optional<std::size_t> match_bracket(const ThresholdCode& code, std::size_t at,
                                         char outer, std::size_t min_run) {
  if (at + 1 >= code.size() || code.at(at) != outer) return std::nullopt;
  const char inner = outer == '0' ? '1' : '0';
  const std::size_t j = digit_run(code, at + 1, inner);
  if (j < min_run || !matches(code, at + 1 + j, outer)) return std::nullopt;
  return j + 2;
}

std::optional<std::size_t> match_nonconsecutive(const ThresholdCode& code,
                                                std::size_t at) {
  if (at + 2 >= code.size() || code.at(at) != '1' || code.at(at + 1) != '0') {
    return std::nullopt;
  }
  const std::size_t j = digit_run(code, at + 2, '1');
  const std::size_t zero = at + 2 + j;
  if (j < 1 || zero + 1 >= code.size() || code.at(zero) != '0' ||
      !matches(code, zero + 1, '1')) {
    return std::nullopt;
  }
  return j + 4;
}

std::string replacement(MoveKind kind, const ThresholdCode& code, std::size_t at,
                        std::size_t window) {
  switch (kind) {
    case MoveKind::kABSwitch:
      return code.at(at) == '0' ? "1001" : "0110";
    case MoveKind::kBracketed1:
      return "10" + std::string(window - 4, '1') + "01";
    case MoveKind::kBracketed0:
    case MoveKind::kIndsetConsecutive:
      return "01" + std::string(window - 4, '0') + "10";
    case MoveKind::kIndsetNonconsecutive:
      return "0" + std::string(window - 2, '1') + "0";
  }
  throw std::logic_error("unknown move kind");
}

void require_count_law(bool ok, const RewriteStep& step, const char* law) {
  if (!ok) {
    throw std::logic_error(std::string(to_string(step.kind)) + " at " +
                           std::to_string(step.position) + " on " +
                           step.before.str() + " violates " + law);
  }
}

}  // namespace

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::kABSwitch:
      return "ab-switch";
    case MoveKind::kBracketed1:
      return "bracketed-1-move";
    case MoveKind::kBracketed0:
      return "bracketed-0-move";
    case MoveKind::kIndsetConsecutive:
      return "indset-0-move";
    case MoveKind::kIndsetNonconsecutive:
      return "indset-nonconsecutive-move";
  }
  return "unknown";
}

std::string_view to_string(Objective objective) {
  return objective == Objective::kMatchings ? "matchings" : "indsets";
}

std::optional<std::size_t> match_window(MoveKind kind, const ThresholdCode& code,
                                        std::size_t at) {
  switch (kind) {
    case MoveKind::kABSwitch: {
      if (at + 3 >= code.size() || code.at(at) == ThresholdCode::kStar) {
        return std::nullopt;
      }
      const char x = code.at(at);
      const char y = x == '0' ? '1' : '0';
      if (code.at(at + 1) == y && code.at(at + 2) == y && matches(code, at + 3, x)) {
        return 4;
      }
      return std::nullopt;
    }
    case MoveKind::kBracketed1:
      return match_bracket(code, at, '0', 3);
    case MoveKind::kBracketed0:
      return match_bracket(code, at, '1', 3);
    case MoveKind::kIndsetConsecutive:
      return match_bracket(code, at, '1', 2);
    case MoveKind::kIndsetNonconsecutive:
      return match_nonconsecutive(code, at);
  }
  return std::nullopt;
}

ThresholdCode apply_move(MoveKind kind, const ThresholdCode& code, std::size_t at) {
  const auto window = match_window(kind, code, at);
  if (!window) {
    throw MoveError(std::string(to_string(kind)) + " does not match " + code.str() +
                    " at position " + std::to_string(at));
  }
  std::string text = code.str();
  text.replace(at, *window, replacement(kind, code, at, *window));
  ThresholdCode out = parse_code(text);
  if (out.size() != code.size() || edge_count(out) != edge_count(code)) {
    throw std::logic_error(std::string(to_string(kind)) +
                           " changed the vertex or edge count of " + code.str());
  }
  return out;
}

ThresholdCode ab_switch(const ThresholdCode& code, std::size_t at) {
  return apply_move(MoveKind::kABSwitch, code, at);
}
ThresholdCode bracketed_1_move(const ThresholdCode& code, std::size_t at) {
  return apply_move(MoveKind::kBracketed1, code, at);
}
ThresholdCode bracketed_0_move(const ThresholdCode& code, std::size_t at) {
  return apply_move(MoveKind::kBracketed0, code, at);
}
ThresholdCode indset_consecutive_move(const ThresholdCode& code, std::size_t at) {
  return apply_move(MoveKind::kIndsetConsecutive, code, at);
}
ThresholdCode indset_nonconsecutive_move(const ThresholdCode& code, std::size_t at) {
  return apply_move(MoveKind::kIndsetNonconsecutive, code, at);
}

std::vector<std::size_t> move_sites(MoveKind kind, const ThresholdCode& code) {
  std::vector<std::size_t> sites;
  for (std::size_t at = 0; at < code.size(); ++at) {
    if (match_window(kind, code, at)) sites.push_back(at);
  }
  return sites;
}

namespace {

RewriteStep make_step(MoveKind kind, const ThresholdCode& code, std::size_t at,
                      const BigInt& total_before, Objective objective) {
  const std::size_t window = *match_window(kind, code, at);
  ThresholdCode after = apply_move(kind, code, at);
  BigInt total_after = objective == Objective::kMatchings
                           ? match_vector(after).total()
                           : ind_vector(after).total();
  return RewriteStep{kind,  at,    window,       at + window == code.size(),
                     code,  after, total_before, std::move(total_after)};
}

// Position of the ab-switch that shortens the shortest separation issue by
// one letter. With first pair at p, letters X and Y sit at p-1 and p+1; if the
// next letter Z differs from Y, swap Y and Z, otherwise swap X and Y.
std::size_t separation_switch_site(const ThresholdCode& code,
                                   const StructuralDefect& issue) {
  const std::size_t p = issue.first_pair.begin;
  if (issue.middle.length >= 3 && code.at(p + 3) != code.at(p + 1)) return p + 1;
  return p - 1;
}

}  // namespace

RewriteTrace maximize_matchings_by_moves(const ThresholdCode& code) {
  RewriteTrace trace{Objective::kMatchings, code, code, {}};
  BigInt total = match_vector(code).total();
  ThresholdCode current = code;
  while (!is_almost_alternating(current)) {
    RewriteStep step = [&] {
      if (auto bracket = find_bracketed_string(current)) {
        const MoveKind kind = bracket->kind == DefectKind::kBracketed1String
                                  ? MoveKind::kBracketed1
                                  : MoveKind::kBracketed0;
        return make_step(kind, current, bracket->extent.begin, total,
                         Objective::kMatchings);
      }
      auto issue = find_separation_issue(current);
      if (!issue) {
        throw std::logic_error(current.str() +
                               " is neither almost alternating nor defective");
      }
      return make_step(MoveKind::kABSwitch, current,
                       separation_switch_site(current, *issue), total,
                       Objective::kMatchings);
    }();
    if (step.kind == MoveKind::kABSwitch) {
      require_count_law(step.total_after == step.total_before, step,
                        "m(G) preservation");
    } else {
      require_count_law(step.total_after > step.total_before, step,
                        "strict increase of m(G)");
    }
    current = step.after;
    total = step.total_after;
    trace.steps.push_back(std::move(step));
  }
  trace.final_code = current;
  return trace;
}

RewriteTrace minimize_indsets_by_moves(const ThresholdCode& code) {
  RewriteTrace trace{Objective::kIndependentSets, code, code, {}};
  BigInt total = ind_vector(code).total();
  ThresholdCode current = code;
  while (!is_colex(current)) {
    std::optional<RewriteStep> step;
    for (MoveKind kind : {MoveKind::kIndsetConsecutive, MoveKind::kIndsetNonconsecutive}) {
      const auto sites = move_sites(kind, current);
      if (!sites.empty()) {
        step = make_step(kind, current, sites.front(), total,
                         Objective::kIndependentSets);
        break;
      }
    }
    if (!step) {
      throw std::logic_error(current.str() + " is not colex but admits no move");
    }
    require_count_law(step->total_after < step->total_before, *step,
                      "strict decrease of i(G)");
    require_count_law(step->after.digits() < step->before.digits(), *step,
                      "decrease of the binary value");
    current = step->after;
    total = step->total_after;
    trace.steps.push_back(std::move(*step));
  }
  trace.final_code = current;
  return trace;
}

}  // namespace threshold
