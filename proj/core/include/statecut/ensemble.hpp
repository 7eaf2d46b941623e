#pragma once

#include "statecut/metrics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace statecut {

// One ensemble sample: seats per party (each under its own belief dataset),
// plus ground-truth metrics and, once targets are known, whether the sample
// meets both geometric targets.
struct EnsembleRecord {
  int sample = 0;
  int seats_1 = 0;
  int seats_2 = 0;
  double eg = 0;
  int competitive = 0;
  double pp_mean = 0;
  bool gt = false;
};

struct DatasetChoice {
  std::string party_1 = "base";  // party one's beliefs
  std::string party_2 = "base";  // party two's beliefs
  std::string truth = "base";    // ground truth for eg / competitiveness
};

struct EnsembleTargets {
  int min_1 = 0, max_1 = 0, target_1 = 0;
  int min_2 = 0, max_2 = 0, target_2 = 0;
};

// Scores every state and fills the gt flags from the ensemble-derived
// targets (floor of the mean of each party's extreme seat counts, each party
// evaluated under its own dataset).
std::vector<EnsembleRecord> evaluate_records(const GraphInstance& g,
                                             const std::vector<Districting>& states,
                                             const DatasetChoice& datasets);

EnsembleTargets ensemble_targets(const std::vector<EnsembleRecord>& records);

enum class DeviationMode { uniform_up, uniform_down, random };
std::string to_string(DeviationMode mode);

// Adds a belief dataset in which `party` mis-reports its per-node vote share:
// scaled by (1 +/- x/100) in the uniform modes, or by (1 + y/100) with y
// drawn per node uniformly from [-x, x] (quantized to 0.01%) in random mode.
// Shares clamp to [0,1]; the opponent gets the complement. Returns the new
// dataset's name. x = 0 leaves shares bit-identical.
std::string apply_deviation(GraphInstance& g, Party party, DeviationMode mode, int x_percent,
                            std::uint64_t seed, const std::string& source = "base");

// Best observed value of each objective, over all records and over the
// GT-satisfying subset. Empty optionals when no GT record was observed.
struct PriceOfFairness {
  int records = 0;
  int gt_records = 0;
  int competitive_best = 0;
  std::optional<int> competitive_best_gt;
  double abs_eg_best = 0;
  std::optional<double> abs_eg_best_gt;
  double pp_mean_best = 0;
  std::optional<double> pp_mean_best_gt;
};

PriceOfFairness price_of_fairness(const std::vector<EnsembleRecord>& records);

// CSV with the fixed header: sample,seats_1,seats_2,eg,competitive,pp_mean,gt
std::string records_to_csv(const std::vector<EnsembleRecord>& records);

struct ScenarioResult {
  std::string name;
  int deviating_party = 0;  // 0 = none
  std::string mode = "none";
  int x_percent = 0;
  EnsembleTargets targets;
  PriceOfFairness pof;
};

// One row per deviation scenario, bar-chart shaped.
std::string scenarios_to_csv(const std::vector<ScenarioResult>& rows);

}  // namespace statecut
