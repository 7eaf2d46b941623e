#include "statecut/targets.hpp"

#include <json.hpp>

#include <algorithm>

namespace statecut {

bool is_competitive(const Instance& inst, Party i, const District& d) {
  return 2 * integrate(inst.own_belief(i), d) == d.measure();
}

bool is_minority(const Instance& inst, Party i) {
  return 2 * inst.own_total(i) <= 1;
}

namespace {

struct WeightedPiece {
  Rational weight;  // |value - 1/2|
  Rational lo;
  Rational hi;
};

// Longest sub-length of `pieces` whose weighted mass is exactly `budget`,
// together with the realizing intervals. Greedy smallest-weight-first is
// optimal by exchange.
std::pair<Rational, std::vector<Interval>> greedy_fill(std::vector<WeightedPiece> pieces,
                                                       Rational budget) {
  std::sort(pieces.begin(), pieces.end(), [](const WeightedPiece& a, const WeightedPiece& b) {
    return a.weight != b.weight ? a.weight < b.weight : a.lo < b.lo;
  });
  Rational length(0);
  std::vector<Interval> taken;
  for (const WeightedPiece& p : pieces) {
    if (budget == 0) break;
    Rational full = p.weight * (p.hi - p.lo);
    if (full <= budget) {
      budget -= full;
      length += p.hi - p.lo;
      taken.push_back({p.lo, p.hi});
    } else {
      Rational part = budget / p.weight;
      budget = 0;
      length += part;
      taken.push_back({p.lo, p.lo + part});
    }
  }
  if (budget != 0) throw internal_error("battleground budget not exhausted");
  return {length, std::move(taken)};
}

}  // namespace

Battleground battleground(const Instance& inst, Party i) {
  const Rational half(1, 2);
  std::vector<Interval> zero;
  std::vector<WeightedPiece> pos, neg;
  Rational pos_mass(0), neg_mass(0);
  for (const DensityPiece& p : inst.own_belief(i).pieces()) {
    Rational g = p.value - half;
    if (g == 0) {
      zero.push_back({p.lo, p.hi});
    } else if (g > 0) {
      pos.push_back({g, p.lo, p.hi});
      pos_mass += g * (p.hi - p.lo);
    } else {
      neg.push_back({-g, p.lo, p.hi});
      neg_mass += -g * (p.hi - p.lo);
    }
  }

  Rational budget = std::min(pos_mass, neg_mass);
  auto [pos_len, pos_taken] = greedy_fill(std::move(pos), budget);
  auto [neg_len, neg_taken] = greedy_fill(std::move(neg), budget);

  std::vector<Interval> all = std::move(zero);
  all.insert(all.end(), pos_taken.begin(), pos_taken.end());
  all.insert(all.end(), neg_taken.begin(), neg_taken.end());
  District widest(std::move(all));
  Rational max_measure = widest.measure();

  Battleground out;
  out.district_count = static_cast<int>(floor_to_int(inst.m * max_measure));
  if (out.district_count > 0) {
    Rational keep = Rational(out.district_count, inst.m) / max_measure;
    out.region = austin_cut(inst.own_belief(i), widest, keep).piece_1;
    if (!is_competitive(inst, i, out.region))
      throw internal_error("battleground region is not competitive");
  }
  return out;
}

void require_full_partition(const Instance& inst, const LabeledPartition& p) {
  if (static_cast<int>(p.districts.size()) != inst.m)
    throw std::invalid_argument("partition must have exactly m districts");
  if (p.tiebreak.size() != p.districts.size())
    throw std::invalid_argument("partition needs one tiebreak per district");
  const Rational share(1, inst.m);
  District covered;
  for (const District& d : p.districts) {
    if (d.measure() != share)
      throw std::invalid_argument("every district must have measure exactly 1/m");
    if (district_intersect(covered, d).measure() != 0)
      throw std::invalid_argument("districts must be measure-disjoint");
    covered = district_union(covered, d);
  }
  if (!(covered == District::unit()))
    throw std::invalid_argument("districts must cover [0,1]");
}

int count_seats(const Instance& inst, Party evaluator, Party winner,
                const LabeledPartition& p) {
  require_full_partition(inst, p);
  const Rational threshold(1, 2 * inst.m);
  int seats = 0;
  for (size_t k = 0; k < p.districts.size(); ++k) {
    Rational v = inst.support(evaluator, winner, p.districts[k]);
    if (v > threshold || (v == threshold && p.tiebreak[k] == winner)) ++seats;
  }
  return seats;
}

SeatBounds seat_bounds(const Instance& inst, Party i) {
  int mi = battleground(inst, i).district_count;
  if (is_minority(inst, i)) return {0, mi};
  return {inst.m - mi, inst.m};
}

namespace {

// Equal m-way proportional division of [0,1] per i's own belief: every
// district gets exactly v_i^i([0,1])/m, so one tiebreak orientation hands i
// everything a majority can get and the other hands a minority nothing.
LabeledPartition proportional_partition(const Instance& inst, Party i, Party tie_to) {
  LabeledPartition p;
  p.districts = iterated_cut(inst.own_belief(i), District::unit(), Rational(1, inst.m));
  p.tiebreak.assign(p.districts.size(), tie_to);
  return p;
}

// Battleground cut into m_i competitive districts tie-broken toward
// `battleground_to`; the remainder proportionally divided with tiebreaks to
// i's opponent.
LabeledPartition battleground_partition(const Instance& inst, Party i, Party battleground_to) {
  Battleground bg = battleground(inst, i);
  LabeledPartition p;
  if (bg.district_count > 0) {
    p.districts = iterated_cut(inst.own_belief(i), bg.region, Rational(1, bg.district_count));
    p.tiebreak.assign(p.districts.size(), battleground_to);
  }
  District rest = district_subtract(District::unit(), bg.region);
  int rest_count = inst.m - bg.district_count;
  if (rest_count > 0) {
    for (District& d : iterated_cut(inst.own_belief(i), rest, Rational(1, rest_count))) {
      p.districts.push_back(std::move(d));
      p.tiebreak.push_back(other(i));
    }
  }
  return p;
}

}  // namespace

LabeledPartition worst_partition(const Instance& inst, Party i) {
  if (is_minority(inst, i)) return proportional_partition(inst, i, other(i));
  // Majority: the opponent's best layout per i's own data. i loses every
  // battleground district and cannot lose anything else.
  return battleground_partition(inst, i, other(i));
}

LabeledPartition best_partition(const Instance& inst, Party i) {
  if (is_minority(inst, i)) return battleground_partition(inst, i, i);
  return proportional_partition(inst, i, i);
}

int geometric_target(int min_seats, int max_seats) {
  if (min_seats < 0 || min_seats > max_seats)
    throw std::invalid_argument("need 0 <= min <= max");
  return (min_seats + max_seats) / 2;
}

TargetReport verify_gt(const Instance& inst, const LabeledPartition& p) {
  require_full_partition(inst, p);
  TargetReport report;
  for (Party i : {Party::one, Party::two}) {
    SeatBounds bounds = seat_bounds(inst, i);
    PartyReport r;
    r.party = i;
    r.min_seats = bounds.min_seats;
    r.max_seats = bounds.max_seats;
    r.target = geometric_target(bounds.min_seats, bounds.max_seats);
    r.achieved = count_seats(inst, i, i, p);
    r.satisfied = r.achieved >= r.target;
    (i == Party::one ? report.party_1 : report.party_2) = r;
  }
  return report;
}

std::string target_report_to_json(const TargetReport& report) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const PartyReport* r : {&report.party_1, &report.party_2}) {
    doc.push_back({{"party", party_id(r->party)},
                   {"min", r->min_seats},
                   {"max", r->max_seats},
                   {"target", r->target},
                   {"achieved", r->achieved},
                   {"satisfied", r->satisfied}});
  }
  return doc.dump(2);
}

}  // namespace statecut
