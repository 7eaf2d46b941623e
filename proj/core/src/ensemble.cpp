#include "statecut/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace statecut {

std::vector<EnsembleRecord> evaluate_records(const GraphInstance& g,
                                             const std::vector<Districting>& states,
                                             const DatasetChoice& datasets) {
  const VoteDataset& ds1 = g.datasets.at(datasets.party_1);
  const VoteDataset& ds2 = g.datasets.at(datasets.party_2);
  const VoteDataset& truth = g.datasets.at(datasets.truth);

  std::vector<EnsembleRecord> records;
  records.reserve(states.size());
  for (size_t s = 0; s < states.size(); ++s) {
    EnsembleRecord r;
    r.sample = static_cast<int>(s);
    r.seats_1 = seats_won(aggregate_votes(g, states[s], ds1)).first;
    r.seats_2 = seats_won(aggregate_votes(g, states[s], ds2)).second;
    DistrictVotes truth_votes = aggregate_votes(g, states[s], truth);
    r.eg = efficiency_gap(truth_votes);
    r.competitive = competitive_count(truth_votes);
    r.pp_mean = polsby_popper(g, states[s]).mean;
    records.push_back(r);
  }
  EnsembleTargets t = ensemble_targets(records);
  for (EnsembleRecord& r : records)
    r.gt = r.seats_1 >= t.target_1 && r.seats_2 >= t.target_2;
  return records;
}

EnsembleTargets ensemble_targets(const std::vector<EnsembleRecord>& records) {
  EnsembleTargets t;
  if (records.empty()) return t;
  t.min_1 = t.max_1 = records.front().seats_1;
  t.min_2 = t.max_2 = records.front().seats_2;
  for (const EnsembleRecord& r : records) {
    t.min_1 = std::min(t.min_1, r.seats_1);
    t.max_1 = std::max(t.max_1, r.seats_1);
    t.min_2 = std::min(t.min_2, r.seats_2);
    t.max_2 = std::max(t.max_2, r.seats_2);
  }
  t.target_1 = (t.min_1 + t.max_1) / 2;
  t.target_2 = (t.min_2 + t.max_2) / 2;
  return t;
}

std::string to_string(DeviationMode mode) {
  switch (mode) {
    case DeviationMode::uniform_up: return "up";
    case DeviationMode::uniform_down: return "down";
    case DeviationMode::random: return "random";
  }
  return "?";
}

std::string apply_deviation(GraphInstance& g, Party party, DeviationMode mode, int x_percent,
                            std::uint64_t seed, const std::string& source) {
  if (x_percent < 0 || x_percent > 100)
    throw std::invalid_argument("deviation percent must be in [0, 100]");
  const VoteDataset& base = g.datasets.at(source);

  // Work in basis points so random per-node factors stay exact integers.
  constexpr std::int64_t kScale = 10000;
  Rng rng(seed);
  VoteDataset out;
  out.scale = base.scale * kScale;
  out.votes.reserve(base.votes.size());
  for (const VotePair& v : base.votes) {
    std::int64_t factor = kScale;
    switch (mode) {
      case DeviationMode::uniform_up: factor += 100LL * x_percent; break;
      case DeviationMode::uniform_down: factor -= 100LL * x_percent; break;
      case DeviationMode::random:
        factor += rng.int_in(-100LL * x_percent, 100LL * x_percent);
        break;
    }
    std::int64_t total = v.total() * kScale;
    std::int64_t own = std::clamp(v.party(party) * factor, std::int64_t{0}, total);
    VotePair adjusted;
    if (party == Party::one) {
      adjusted = {own, total - own};
    } else {
      adjusted = {total - own, own};
    }
    out.votes.push_back(adjusted);
  }

  std::string name = "dev_p" + std::to_string(party_id(party)) + "_" + to_string(mode) +
                     "_" + std::to_string(x_percent);
  g.datasets[name] = std::move(out);
  return name;
}

PriceOfFairness price_of_fairness(const std::vector<EnsembleRecord>& records) {
  PriceOfFairness out;
  out.records = static_cast<int>(records.size());
  bool first = true, first_gt = true;
  for (const EnsembleRecord& r : records) {
    double abs_eg = std::abs(r.eg);
    if (first) {
      out.competitive_best = r.competitive;
      out.abs_eg_best = abs_eg;
      out.pp_mean_best = r.pp_mean;
      first = false;
    } else {
      out.competitive_best = std::max(out.competitive_best, r.competitive);
      out.abs_eg_best = std::min(out.abs_eg_best, abs_eg);
      out.pp_mean_best = std::max(out.pp_mean_best, r.pp_mean);
    }
    if (!r.gt) continue;
    ++out.gt_records;
    if (first_gt) {
      out.competitive_best_gt = r.competitive;
      out.abs_eg_best_gt = abs_eg;
      out.pp_mean_best_gt = r.pp_mean;
      first_gt = false;
    } else {
      out.competitive_best_gt = std::max(*out.competitive_best_gt, r.competitive);
      out.abs_eg_best_gt = std::min(*out.abs_eg_best_gt, abs_eg);
      out.pp_mean_best_gt = std::max(*out.pp_mean_best_gt, r.pp_mean);
    }
  }
  return out;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::string records_to_csv(const std::vector<EnsembleRecord>& records) {
  std::string out = "sample,seats_1,seats_2,eg,competitive,pp_mean,gt\n";
  for (const EnsembleRecord& r : records) {
    out += std::to_string(r.sample) + "," + std::to_string(r.seats_1) + "," +
           std::to_string(r.seats_2) + "," + format_double(r.eg) + "," +
           std::to_string(r.competitive) + "," + format_double(r.pp_mean) + "," +
           (r.gt ? "1" : "0") + "\n";
  }
  return out;
}

std::string scenarios_to_csv(const std::vector<ScenarioResult>& rows) {
  std::string out =
      "scenario,party,mode,x,records,gt_records,"
      "competitive_best,competitive_best_gt,"
      "abs_eg_best,abs_eg_best_gt,pp_mean_best,pp_mean_best_gt\n";
  for (const ScenarioResult& s : rows) {
    out += s.name + "," + std::to_string(s.deviating_party) + "," + s.mode + "," +
           std::to_string(s.x_percent) + "," + std::to_string(s.pof.records) + "," +
           std::to_string(s.pof.gt_records) + ",";
    out += std::to_string(s.pof.competitive_best) + ",";
    out += s.pof.competitive_best_gt ? std::to_string(*s.pof.competitive_best_gt) : "";
    out += "," + format_double(s.pof.abs_eg_best) + ",";
    out += s.pof.abs_eg_best_gt ? format_double(*s.pof.abs_eg_best_gt) : "";
    out += "," + format_double(s.pof.pp_mean_best) + ",";
    out += s.pof.pp_mean_best_gt ? format_double(*s.pof.pp_mean_best_gt) : "";
    out += "\n";
  }
  return out;
}

}  // namespace statecut
