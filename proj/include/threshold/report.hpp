#pragma once

#include <string>

#include "json.hpp"
#include "threshold/code.hpp"
#include "threshold/counting.hpp"
#include "threshold/moves.hpp"
#include "threshold/verify.hpp"

namespace threshold {

// JSON and CSV encodings shared by the CLI and other consumers. Exact
// counts are always decimal strings. Timing is emitted only on request so
// that reports are reproducible.

nlohmann::json to_json(const MatchingVector& v);
nlohmann::json to_json(const IndependenceVector& v);
nlohmann::json to_json(const ABForm& form);
nlohmann::json to_json(const StructuralDefect& defect);
nlohmann::json to_json(const RewriteTrace& trace);

nlohmann::json to_json(const MaxMatchingsReport& report, bool with_timing = false);
nlohmann::json to_json(const MinIndsetsReport& report, bool with_timing = false);
nlohmann::json to_json(const ConjectureReport& report, bool with_timing = false);

/// One row per (n, e).
std::string to_csv(const MaxMatchingsReport& report);
std::string to_csv(const MinIndsetsReport& report);
std::string to_csv(const ConjectureReport& report);

/// Marks defect spans with brackets, e.g. "0[11]0[11]*".
std::string highlight(const ThresholdCode& code, const StructuralDefect& defect);

}  // namespace threshold
