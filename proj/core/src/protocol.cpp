#include "statecut/protocol.hpp"

#include <json.hpp>

namespace statecut {

std::string to_string(ChooserBranch branch) {
  switch (branch) {
    case ChooserBranch::minority: return "minority";
    case ChooserBranch::majority_easy: return "majority-easy";
    case ChooserBranch::majority_packed: return "majority-packed";
  }
  return "?";
}

namespace {

using nlohmann::ordered_json;

ordered_json district_json(const District& d) {
  ordered_json arr = ordered_json::array();
  for (const Interval& iv : d.intervals())
    arr.push_back({format_rational(iv.lo), format_rational(iv.hi)});
  return arr;
}

ordered_json district_list_json(const std::vector<District>& ds) {
  ordered_json arr = ordered_json::array();
  for (const District& d : ds) arr.push_back(district_json(d));
  return arr;
}

// Left-to-right prefix of d with the given measure.
District take_prefix(const District& d, const Rational& amount) {
  if (amount < 0 || amount > d.measure())
    throw internal_error("prefix measure out of range");
  std::vector<Interval> out;
  Rational need = amount;
  for (const Interval& iv : d.intervals()) {
    if (need == 0) break;
    Rational len = std::min(iv.length(), need);
    out.push_back({iv.lo, iv.lo + len});
    need -= len;
  }
  return District(std::move(out));
}

class Builder {
 public:
  explicit Builder(const Instance& inst) : inst_(inst) {}

  ProtocolTrace run() {
    pick_roles();
    cut_halves();
    if (2 * inst_.own_total(trace_.chooser) <= 1) {
      minority_branch();
    } else {
      majority_branch();
    }
    trace_.report = verify_gt(inst_, trace_.final_partition);
    if (!trace_.report.all_satisfied())
      fail("final partition misses a geometric target");
    return std::move(trace_);
  }

 private:
  void fail(const std::string& what) {
    throw protocol_invariant_error(what, protocol_trace_to_json(trace_));
  }

  void check(const std::string& name, const Rational& lhs, const Rational& rhs, bool holds) {
    trace_.checks.push_back({name, lhs, rhs, holds});
    if (!holds) fail("inequality failed: " + name);
  }

  void check_le(const std::string& name, const Rational& lhs, const Rational& rhs) {
    check(name, lhs, rhs, lhs <= rhs);
  }
  void check_eq(const std::string& name, const Rational& lhs, const Rational& rhs) {
    check(name, lhs, rhs, lhs == rhs);
  }

  void pick_roles() {
    Battleground bg1 = battleground(inst_, Party::one);
    Battleground bg2 = battleground(inst_, Party::two);
    // Smaller battleground cuts; party two on ties.
    if (bg1.district_count < bg2.district_count) {
      trace_.cutter = Party::one;
      trace_.chooser = Party::two;
      trace_.cutter_battleground = std::move(bg1);
      trace_.chooser_battleground = std::move(bg2);
    } else {
      trace_.cutter = Party::two;
      trace_.chooser = Party::one;
      trace_.cutter_battleground = std::move(bg2);
      trace_.chooser_battleground = std::move(bg1);
    }
    check_le("cutter_battleground_at_most_choosers",
             Rational(trace_.cutter_battleground.district_count),
             Rational(trace_.chooser_battleground.district_count));
  }

  void cut_halves() {
    const Battleground& bg = trace_.cutter_battleground;
    CutResult cut = austin_cut(inst_.own_belief(trace_.cutter), bg.region, Rational(1, 2));
    trace_.halves[0] = std::move(cut.piece_1);
    trace_.halves[1] = std::move(cut.piece_2);
    const Rational half_measure(bg.district_count, 2 * inst_.m);
    for (int k = 0; k < 2; ++k) {
      check_eq("half_measure_" + std::to_string(k + 1), trace_.halves[k].measure(),
               half_measure);
      if (!is_competitive(inst_, trace_.cutter, trace_.halves[k]))
        fail("battleground half is not competitive for the cutter");
    }
  }

  // floor(m_j / 2) competitive 1/m districts for the cutter from half k.
  std::vector<District> pack_half(int k) {
    int mj = trace_.cutter_battleground.district_count;
    if (mj == 0) return {};
    std::vector<District> pack =
        iterated_cut(inst_.own_belief(trace_.cutter), trace_.halves[k], Rational(2, mj));
    const Rational share(1, inst_.m);
    for (const District& d : pack) {
      if (d.measure() != share || !is_competitive(inst_, trace_.cutter, d))
        fail("cutter pack district is not a competitive 1/m district");
    }
    return pack;
  }

  void add_district(const District& d, Party tie_to) {
    trace_.final_partition.districts.push_back(d);
    trace_.final_partition.tiebreak.push_back(tie_to);
  }

  // Splits whatever [0,1] region is still unassigned into equal 1/m chunks
  // with tiebreaks to the cutter.
  void fill_remainder() {
    District used;
    for (const District& d : trace_.final_partition.districts)
      used = district_union(used, d);
    District rest = district_subtract(District::unit(), used);
    int chunks = inst_.m - static_cast<int>(trace_.final_partition.districts.size());
    trace_.remainder = slice_by_measure(rest, chunks);
    for (const District& d : trace_.remainder) add_district(d, trace_.cutter);
  }

  void minority_branch() {
    trace_.branch = ChooserBranch::minority;
    const Party i = trace_.chooser;
    const int mi = trace_.chooser_battleground.district_count;
    const District& xi = trace_.chooser_battleground.region;
    const Density& belief = inst_.own_belief(i);

    // Enlarge each half's overlap with the chooser's battleground into two
    // equal-measure pieces of it, absorbing uncovered mass left to right.
    District enlarged[2];
    if (mi > 0) {
      const Rational quota(mi, 2 * inst_.m);
      District base0 = district_intersect(trace_.halves[0], xi);
      District base1 = district_intersect(trace_.halves[1], xi);
      check_le("half_overlap_within_quota_1", base0.measure(), quota);
      check_le("half_overlap_within_quota_2", base1.measure(), quota);
      District uncovered =
          district_subtract(xi, district_union(trace_.halves[0], trace_.halves[1]));
      enlarged[0] =
          district_union(base0, take_prefix(uncovered, quota - base0.measure()));
      enlarged[1] = district_subtract(xi, enlarged[0]);
      check_eq("enlarged_measure_1", enlarged[0].measure(), quota);
      check_eq("enlarged_measure_2", enlarged[1].measure(), quota);
    }

    // At least one piece holds half the battleground's own support.
    const Rational quarter(mi, 4 * inst_.m);
    Rational support0 = integrate(belief, enlarged[0]);
    Rational support1 = integrate(belief, enlarged[1]);
    int ki = support0 >= quarter ? 0 : 1;
    check("chooser_piece_support", ki == 0 ? support0 : support1, quarter,
          (ki == 0 ? support0 : support1) >= quarter);
    int kj = 1 - ki;
    trace_.chooser_half_index = ki;
    trace_.cutter_half_index = kj;

    if (mi > 0) {
      trace_.chooser_pack = iterated_cut(belief, enlarged[ki], Rational(2, mi));
      const Rational share(1, inst_.m);
      const Rational win_threshold(1, 2 * inst_.m);
      for (const District& d : trace_.chooser_pack) {
        check_eq("chooser_district_measure", d.measure(), share);
        Rational v = integrate(belief, d);
        check("chooser_district_support", v, win_threshold, v >= win_threshold);
      }
    }
    trace_.cutter_pack = pack_half(kj);

    for (const District& d : trace_.cutter_pack) add_district(d, trace_.cutter);
    for (const District& d : trace_.chooser_pack) add_district(d, i);
    fill_remainder();
  }

  void majority_branch() {
    const Party i = trace_.chooser;
    const int m = inst_.m;
    const int mi = trace_.chooser_battleground.district_count;
    const Density& belief = inst_.own_belief(i);
    const Rational win_threshold(1, 2 * m);

    // Both candidate packings, alternately extended with 1/m districts until
    // they jointly cover m_i districts' worth of the state.
    std::vector<District> sides_districts[2];
    sides_districts[0] = pack_half(0);
    sides_districts[1] = pack_half(1);
    District covered;
    for (int k = 0; k < 2; ++k)
      for (const District& d : sides_districts[k]) covered = district_union(covered, d);
    int ext_count = mi - static_cast<int>(sides_districts[0].size()) -
                    static_cast<int>(sides_districts[1].size());
    if (ext_count < 0) fail("packings already exceed the chooser battleground size");
    if (ext_count > 0) {
      District open = district_subtract(District::unit(), covered);
      std::vector<District> cuts =
          iterated_cut(belief, open, Rational(1, m) / open.measure());
      if (static_cast<int>(cuts.size()) < ext_count)
        fail("not enough room to extend the packings");
      for (int e = 0; e < ext_count; ++e) {
        trace_.extension.push_back(cuts[e]);
        sides_districts[e % 2].push_back(cuts[e]);
      }
    }

    // Classify each side's districts by whether the chooser wins them; all of
    // them tie-break toward the cutter.
    District sides[2];
    for (int k = 0; k < 2; ++k) {
      for (const District& d : sides_districts[k]) {
        if (integrate(belief, d) > win_threshold) {
          trace_.won_regions[k] = district_union(trace_.won_regions[k], d);
        } else {
          trace_.lost_regions[k] = district_union(trace_.lost_regions[k], d);
        }
      }
      sides[k] = district_union(trace_.won_regions[k], trace_.lost_regions[k]);
    }
    trace_.uncovered = district_subtract(
        District::unit(), district_union(sides[0], sides[1]));

    // A side whose support is at most half can be ceded outright: the rest of
    // the state then has a chooser majority. Failing that, a
    // majority-supported uncovered region rescues either choice.
    Rational side_support[2] = {integrate(belief, sides[0]), integrate(belief, sides[1])};
    int easy_kj = -1;
    for (int k = 0; k < 2 && easy_kj < 0; ++k)
      if (2 * side_support[k] <= sides[k].measure()) easy_kj = k;
    if (easy_kj < 0 &&
        2 * integrate(belief, trace_.uncovered) >= trace_.uncovered.measure()) {
      easy_kj = 0;
    }

    if (easy_kj >= 0) {
      majority_easy(easy_kj, sides, sides_districts);
    } else {
      majority_packed(sides, sides_districts, side_support);
    }
  }

  void majority_easy(int kj, const District sides[2],
                     const std::vector<District> sides_districts[2]) {
    trace_.branch = ChooserBranch::majority_easy;
    trace_.cutter_half_index = kj;
    trace_.chooser_half_index = 1 - kj;
    const Party i = trace_.chooser;
    const Density& belief = inst_.own_belief(i);

    District rest = district_subtract(District::unit(), sides[kj]);
    Rational rest_support = integrate(belief, rest);
    check("ceded_complement_has_chooser_majority", 2 * rest_support, rest.measure(),
          2 * rest_support >= rest.measure());

    int fill = inst_.m - static_cast<int>(sides_districts[kj].size());
    trace_.chooser_pack = iterated_cut(belief, rest, Rational(1, fill));
    const Rational win_threshold(1, 2 * inst_.m);
    for (const District& d : trace_.chooser_pack) {
      Rational v = integrate(belief, d);
      check("chooser_district_support", v, win_threshold, v >= win_threshold);
    }

    trace_.cutter_pack = sides_districts[kj];
    for (const District& d : trace_.cutter_pack) add_district(d, trace_.cutter);
    for (const District& d : trace_.chooser_pack) add_district(d, i);
    fill_remainder();
  }

  void majority_packed(const District sides[2],
                       const std::vector<District> sides_districts[2],
                       const Rational side_support[2]) {
    trace_.branch = ChooserBranch::majority_packed;
    const Party i = trace_.chooser;
    const int m = inst_.m;
    const Density& belief = inst_.own_belief(i);

    for (int k = 0; k < 2; ++k) {
      check("side_support_exceeds_half_" + std::to_string(k + 1), 2 * side_support[k],
            sides[k].measure(), 2 * side_support[k] > sides[k].measure());
    }
    Rational uncovered_support = integrate(belief, trace_.uncovered);
    check("uncovered_support_below_half", 2 * uncovered_support, trace_.uncovered.measure(),
          2 * uncovered_support < trace_.uncovered.measure());

    // The uncovered region fits inside the chooser's won regions, district by
    // district; split it so each part fits its side.
    Rational won_total = trace_.won_regions[0].measure() + trace_.won_regions[1].measure();
    check_le("uncovered_at_most_won_regions", trace_.uncovered.measure(), won_total);

    long long mc = floor_to_int(m * trace_.uncovered.measure());
    if (Rational(mc) != m * trace_.uncovered.measure())
      fail("uncovered region is not a whole number of districts");
    long long a1 = floor_to_int(m * trace_.won_regions[0].measure());
    long long c1 = std::min(a1, mc);
    long long c2 = mc - c1;
    check_le("uncovered_split_fits_2", Rational(c2), m * trace_.won_regions[1].measure());
    if (mc > 0) {
      CutResult split = austin_cut(belief, trace_.uncovered, Rational(c1, mc));
      trace_.uncovered_split[0] = std::move(split.piece_1);
      trace_.uncovered_split[1] = std::move(split.piece_2);
    }

    District regions[2] = {
        district_union(sides[0], trace_.uncovered_split[0]),
        district_union(sides[1], trace_.uncovered_split[1]),
    };
    Rational region_support[2] = {integrate(belief, regions[0]),
                                  integrate(belief, regions[1])};
    int ki = 2 * region_support[0] >= regions[0].measure() ? 0 : 1;
    check("chosen_region_majority", 2 * region_support[ki], regions[ki].measure(),
          2 * region_support[ki] >= regions[ki].measure());
    int kj = 1 - ki;
    trace_.chooser_half_index = ki;
    trace_.cutter_half_index = kj;

    long long region_districts = floor_to_int(m * regions[ki].measure());
    if (Rational(region_districts) != m * regions[ki].measure())
      fail("chooser region is not a whole number of districts");
    const Rational win_threshold(1, 2 * m);
    trace_.chooser_pack = iterated_cut(belief, regions[ki], Rational(1, region_districts));
    for (const District& d : trace_.chooser_pack) {
      Rational v = integrate(belief, d);
      check("chooser_district_support", v, win_threshold, v >= win_threshold);
    }

    trace_.cutter_pack = sides_districts[kj];
    for (const District& d : trace_.cutter_pack) add_district(d, trace_.cutter);
    for (const District& d : trace_.chooser_pack) add_district(d, i);
    fill_remainder();
  }

  const Instance& inst_;
  ProtocolTrace trace_;
};

}  // namespace

ProtocolTrace build_gt_partition(const Instance& inst) { return Builder(inst).run(); }

std::string protocol_trace_to_json(const ProtocolTrace& trace) {
  ordered_json doc;
  doc["cutter"] = party_id(trace.cutter);
  doc["chooser"] = party_id(trace.chooser);
  doc["cutter_battleground"] = {
      {"districts", trace.cutter_battleground.district_count},
      {"region", district_json(trace.cutter_battleground.region)}};
  doc["chooser_battleground"] = {
      {"districts", trace.chooser_battleground.district_count},
      {"region", district_json(trace.chooser_battleground.region)}};
  doc["halves"] = {district_json(trace.halves[0]), district_json(trace.halves[1])};
  doc["branch"] = to_string(trace.branch);
  doc["cutter_half_index"] = trace.cutter_half_index + 1;
  doc["chooser_half_index"] = trace.chooser_half_index + 1;
  doc["cutter_pack"] = district_list_json(trace.cutter_pack);
  doc["chooser_pack"] = district_list_json(trace.chooser_pack);
  if (!trace.extension.empty()) doc["extension"] = district_list_json(trace.extension);
  if (trace.branch != ChooserBranch::minority) {
    doc["won_regions"] = {district_json(trace.won_regions[0]),
                          district_json(trace.won_regions[1])};
    doc["lost_regions"] = {district_json(trace.lost_regions[0]),
                           district_json(trace.lost_regions[1])};
    doc["uncovered"] = district_json(trace.uncovered);
    if (trace.branch == ChooserBranch::majority_packed) {
      doc["uncovered_split"] = {district_json(trace.uncovered_split[0]),
                                district_json(trace.uncovered_split[1])};
    }
  }
  doc["remainder"] = district_list_json(trace.remainder);

  ordered_json checks = ordered_json::array();
  for (const InequalityCheck& c : trace.checks) {
    checks.push_back({{"name", c.name},
                      {"lhs", format_rational(c.lhs)},
                      {"rhs", format_rational(c.rhs)},
                      {"holds", c.holds}});
  }
  doc["checks"] = std::move(checks);

  ordered_json partition = ordered_json::array();
  size_t max_intervals = 0;
  for (size_t k = 0; k < trace.final_partition.districts.size(); ++k) {
    const District& d = trace.final_partition.districts[k];
    max_intervals = std::max(max_intervals, d.intervals().size());
    partition.push_back({{"district", district_json(d)},
                         {"tiebreak", party_id(trace.final_partition.tiebreak[k])}});
  }
  doc["final_partition"] = std::move(partition);
  doc["max_intervals_per_district"] = max_intervals;

  ordered_json report = ordered_json::array();
  for (const PartyReport* r : {&trace.report.party_1, &trace.report.party_2}) {
    report.push_back({{"party", party_id(r->party)},
                      {"min", r->min_seats},
                      {"max", r->max_seats},
                      {"target", r->target},
                      {"achieved", r->achieved},
                      {"satisfied", r->satisfied}});
  }
  doc["report"] = std::move(report);
  return doc.dump(2);
}

}  // namespace statecut
