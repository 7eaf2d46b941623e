#pragma once

#include "statecut/targets.hpp"

#include <string>
#include <vector>

namespace statecut {

enum class ChooserBranch { minority, majority_easy, majority_packed };

std::string to_string(ChooserBranch branch);

// One proof-inequality evaluation, kept for the audit trail.
struct InequalityCheck {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

// Full audit record of one cut-and-choose run: roles, both halves of the
// cutter's battleground, every intermediate district, every inequality the
// construction relies on, and the final labeled partition with its report.
struct ProtocolTrace {
  Party cutter = Party::two;
  Party chooser = Party::one;
  Battleground cutter_battleground;
  Battleground chooser_battleground;
  District halves[2];
  ChooserBranch branch = ChooserBranch::minority;
  int cutter_half_index = 0;   // half whose packing the cutter keeps
  int chooser_half_index = 0;  // half (or side) the chooser builds from
  std::vector<District> cutter_pack;       // competitive districts kept for the cutter
  std::vector<District> chooser_pack;      // districts cut for the chooser
  std::vector<District> extension;         // majority branch: alternately added districts
  District won_regions[2];                 // majority branch: A_1, A_2
  District lost_regions[2];                // majority branch: B_1, B_2
  District uncovered;                      // majority branch: C
  District uncovered_split[2];             // majority branch: C_1, C_2
  std::vector<District> remainder;         // leftover equal-measure districts
  std::vector<InequalityCheck> checks;
  LabeledPartition final_partition;
  TargetReport report;
};

// Thrown when a step of the construction contradicts one of the inequalities
// it is entitled to; carries the trace gathered so far.
class protocol_invariant_error : public internal_error {
 public:
  protocol_invariant_error(const std::string& what, std::string trace_json)
      : internal_error(what), trace_json_(std::move(trace_json)) {}
  const std::string& trace_json() const { return trace_json_; }

 private:
  std::string trace_json_;
};

// Builds a partition meeting both parties' geometric targets. The party with
// the smaller battleground halves it (ties: party two cuts); the other party
// keeps whichever half serves it better, with separate handling for a
// minority and a majority chooser.
ProtocolTrace build_gt_partition(const Instance& inst);

std::string protocol_trace_to_json(const ProtocolTrace& trace);

}  // namespace statecut
