#include "statecut/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace statecut {

namespace {

constexpr int kMaxAtoms = 14;

void require_enumerable(const AtomInstance& a) {
  if (a.m < 1 || a.atoms_per_district < 1)
    throw std::invalid_argument("atom instance needs positive m and atoms per district");
  if (a.atom_count() > kMaxAtoms)
    throw std::invalid_argument("atom instance too large to enumerate");
  for (const auto& vals : a.values) {
    if (static_cast<int>(vals.size()) != a.atom_count())
      throw std::invalid_argument("atom instance needs one value per atom per party");
  }
}

}  // namespace

AtomInstance atomize(const Instance& inst, int atom_count) {
  if (atom_count < 1 || atom_count % inst.m != 0)
    throw std::invalid_argument("atom count must be a positive multiple of m");
  AtomInstance out;
  out.m = inst.m;
  out.atoms_per_district = atom_count / inst.m;
  for (int p = 0; p < 2; ++p) {
    const Density& f = p == 0 ? inst.density_1 : inst.density_2;
    out.values[p].reserve(atom_count);
    for (int atom = 0; atom < atom_count; ++atom) {
      Rational lo(atom, atom_count);
      Rational hi(atom + 1, atom_count);
      const DensityPiece* owner = nullptr;
      for (const DensityPiece& piece : f.pieces()) {
        if (piece.lo <= lo && hi <= piece.hi) {
          owner = &piece;
          break;
        }
      }
      if (!owner)
        throw std::invalid_argument("density breakpoint falls inside an atom");
      out.values[p].push_back(owner->value);
    }
  }
  return out;
}

namespace {

// Walks every unordered partition of the remaining atoms into blocks of q,
// pinning each block to the smallest unused atom so each partition is
// visited once.
struct PartitionEnumerator {
  int n, q;
  const std::vector<Rational>& values;
  Rational half_block;  // q/2: a block is tied when its value sum hits this

  int best_max = 0;
  int best_min = 0;
  bool first = true;

  std::vector<bool> used;
  std::vector<int> block;

  explicit PartitionEnumerator(const AtomInstance& a, Party evaluator)
      : n(a.atom_count()),
        q(a.atoms_per_district),
        values(a.own_values(evaluator)),
        half_block(Rational(q, 2)),
        used(static_cast<size_t>(n), false) {}

  void run() { descend(0, 0); }

  // strict_wins/tied accumulate over completed blocks.
  void descend(int strict_wins, int tied) {
    int anchor = -1;
    for (int i = 0; i < n; ++i) {
      if (!used[i]) {
        anchor = i;
        break;
      }
    }
    if (anchor < 0) {
      int max_here = strict_wins + tied;  // every tie broken for the party
      int min_here = strict_wins;         // every tie broken against
      if (first) {
        best_max = max_here;
        best_min = min_here;
        first = false;
      } else {
        best_max = std::max(best_max, max_here);
        best_min = std::min(best_min, min_here);
      }
      return;
    }
    used[anchor] = true;
    block.assign(1, anchor);
    choose_rest(anchor + 1, strict_wins, tied);
    used[anchor] = false;
  }

  void choose_rest(int from, int strict_wins, int tied) {
    if (static_cast<int>(block.size()) == q) {
      Rational sum(0);
      for (int idx : block) sum += values[idx];
      std::vector<int> saved = block;
      if (sum > half_block) {
        descend(strict_wins + 1, tied);
      } else if (sum == half_block) {
        descend(strict_wins, tied + 1);
      } else {
        descend(strict_wins, tied);
      }
      block = std::move(saved);
      return;
    }
    for (int i = from; i < n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      block.push_back(i);
      choose_rest(i + 1, strict_wins, tied);
      block.pop_back();
      used[i] = false;
    }
  }
};

}  // namespace

std::pair<int, int> brute_minmax_seats(const AtomInstance& a, Party evaluator) {
  require_enumerable(a);
  PartitionEnumerator e(a, evaluator);
  e.run();
  return {e.best_min, e.best_max};
}

int brute_max_competitive(const AtomInstance& a, Party i) {
  require_enumerable(a);
  const std::vector<Rational>& values = a.own_values(i);
  const int n = a.atom_count();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size % a.atoms_per_district != 0) continue;
    int k = size / a.atoms_per_district;
    if (k <= best) continue;
    Rational sum(0);
    for (int bit = 0; bit < n; ++bit)
      if (mask & (1u << bit)) sum += values[bit];
    if (2 * sum == Rational(size)) best = k;
  }
  return best;
}

}  // namespace statecut
