#pragma once

#include <string>
#include <vector>

namespace qlab {

/// One step of a scenario replay: a label and the canonical textual output.
struct TranscriptLine {
  std::string label;
  std::string output;
};

/// Result of replaying one bundled computation. Replays are deterministic:
/// two consecutive runs produce byte-identical reports.
struct Report {
  std::string name;
  std::string citation;
  bool pass = false;
  std::vector<TranscriptLine> transcript;

  std::string text() const;
  std::string json() const;  // sorted keys, 2-space indent, trailing newline
};

struct ScenarioInfo {
  std::string name;
  std::string citation;
  std::string summary;
};

/// The bundled scenarios, sorted by name.
const std::vector<ScenarioInfo>& list_scenarios();

/// Replays the named scenario. n is the coordinate count for
/// spatialization-cn (1..8; ignored by every other scenario). Throws
/// std::invalid_argument("unknown-scenario: ...") for names outside the
/// bundle and std::invalid_argument for an out-of-range n.
Report run_scenario(const std::string& name, int n = 4);

}  // namespace qlab
