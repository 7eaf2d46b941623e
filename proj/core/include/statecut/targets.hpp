#pragma once

#include "statecut/cutting.hpp"
#include "statecut/instance.hpp"

#include <string>
#include <vector>

namespace statecut {

// An m-partition with its built-in tie-breaking rule: tiebreak[k] names the
// party that wins district k when its support is exactly half. Districts are
// keyed by index, not by value.
struct LabeledPartition {
  std::vector<District> districts;
  std::vector<Party> tiebreak;
};

// The largest region that party i believes is perfectly tied, in whole
// districts: region is competitive for i with measure district_count / m.
struct Battleground {
  int district_count = 0;  // m_i
  District region;         // X_i, empty when district_count == 0
};

struct PartyReport {
  Party party;
  int min_seats = 0;
  int max_seats = 0;
  int target = 0;
  int achieved = 0;
  bool satisfied = false;
};

struct TargetReport {
  PartyReport party_1;
  PartyReport party_2;

  bool all_satisfied() const { return party_1.satisfied && party_2.satisfied; }
  const PartyReport& for_party(Party p) const {
    return p == Party::one ? party_1 : party_2;
  }
};

// True iff i's own-support integral over d is exactly half d's measure.
bool is_competitive(const Instance& inst, Party i, const District& d);

// v_i^i([0,1]) <= 1/2. At exactly 1/2 a party is both, and the two seat-bound
// formulas coincide because the whole state is then competitive (m_i = m).
bool is_minority(const Instance& inst, Party i);

// Maximum competitive measure, exact. Per density piece the deviation from a
// tie is g = value - 1/2; a competitive region pairs positive-g length
// against negative-g length at equal mass. Greedily filling pieces of
// smallest |g| first maximizes length per unit mass, so the optimum is the
// zero-g length plus both greedy fills at the binding budget.
Battleground battleground(const Instance& inst, Party i);

// Districts won by `winner` according to `evaluator`: support > 1/(2m), or
// exactly 1/(2m) with the tiebreak in winner's favor. Requires a full
// m-partition.
int count_seats(const Instance& inst, Party evaluator, Party winner,
                const LabeledPartition& p);

struct SeatBounds {
  int min_seats = 0;
  int max_seats = 0;
};

// Closed-form extremes of u_i^i over all m-partitions: (0, m_i) for a
// minority party, (m - m_i, m) for a majority party.
SeatBounds seat_bounds(const Instance& inst, Party i);

// A partition realizing the minimum of u_i^i.
LabeledPartition worst_partition(const Instance& inst, Party i);

// A partition realizing the maximum of u_i^i.
LabeledPartition best_partition(const Instance& inst, Party i);

// floor((min + max) / 2)
int geometric_target(int min_seats, int max_seats);

TargetReport verify_gt(const Instance& inst, const LabeledPartition& p);

// Throws unless p is a full m-partition of [0,1]: m districts, each of
// measure 1/m, pairwise measure-disjoint, union the whole interval.
void require_full_partition(const Instance& inst, const LabeledPartition& p);

std::string target_report_to_json(const TargetReport& report);

}  // namespace statecut
