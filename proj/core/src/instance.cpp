#include "statecut/instance.hpp"

#include <json.hpp>

namespace statecut {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

Party party_from_id(int id) {
  if (id == 1) return Party::one;
  if (id == 2) return Party::two;
  throw parse_error("party id must be 1 or 2");
}

Instance::Instance(int m_, Density d1, Density d2)
    : m(m_), density_1(std::move(d1)), density_2(std::move(d2)) {
  if (m < 1) throw parse_error("instance requires m >= 1");
}

const Density& Instance::own_belief(Party i) const {
  return i == Party::one ? density_1 : density_2;
}

Density Instance::belief(Party evaluator, Party candidate) const {
  const Density& own = own_belief(evaluator);
  return evaluator == candidate ? own : own.complement();
}

Rational Instance::support(Party evaluator, Party candidate, const District& d) const {
  if (evaluator == candidate) return integrate(own_belief(evaluator), d);
  // f_i^j = 1 - f_i^i, so integrate the complement as measure - own mass.
  return d.measure() - integrate(own_belief(evaluator), d);
}

Rational Instance::own_total(Party i) const {
  return integrate(own_belief(i), District::unit());
}

namespace {

Rational json_rational(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(BigInt(v.get<long long>()));
  if (v.is_number())
    throw parse_error(
        "non-integer JSON number in instance; use a string like \"1/3\" or \"0.25\" "
        "for exact parsing");
  throw parse_error("expected a rational literal");
}

Density parse_density(const json& arr) {
  if (!arr.is_array() || arr.empty()) throw parse_error("density must be a nonempty array");
  std::vector<DensityPiece> pieces;
  for (const json& row : arr) {
    if (!row.is_array() || row.size() != 3)
      throw parse_error("density piece must be [lo, hi, value]");
    pieces.push_back({json_rational(row[0]), json_rational(row[1]), json_rational(row[2])});
  }
  return Density(std::move(pieces));
}

}  // namespace

Instance parse_instance_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("instance JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("m") || !doc.contains("densities"))
    throw parse_error("instance JSON needs \"m\" and \"densities\"");
  if (!doc["m"].is_number_integer()) throw parse_error("\"m\" must be an integer");
  const json& dens = doc["densities"];
  if (!dens.is_object() || !dens.contains("1") || !dens.contains("2"))
    throw parse_error("\"densities\" needs keys \"1\" and \"2\"");
  return Instance(doc["m"].get<int>(), parse_density(dens["1"]), parse_density(dens["2"]));
}

std::string instance_to_json(const Instance& inst) {
  ordered_json doc;
  doc["m"] = inst.m;
  for (Party p : {Party::one, Party::two}) {
    ordered_json rows = ordered_json::array();
    for (const DensityPiece& piece : inst.own_belief(p).pieces()) {
      rows.push_back({format_rational(piece.lo), format_rational(piece.hi),
                      format_rational(piece.value)});
    }
    doc["densities"][std::to_string(party_id(p))] = std::move(rows);
  }
  return doc.dump(2);
}

}  // namespace statecut
