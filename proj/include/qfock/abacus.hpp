#pragma once

#include "qfock/partition.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qfock {

inline int floor_div(long long a, int n) {
  long long q = a / n;
  if ((a % n != 0) && ((a < 0) != (n < 0))) --q;
  return static_cast<int>(q);
}

// A set of beta-numbers. Every position below floor() is a bead, floor()
// itself is vacant, and the beads above it are listed explicitly in
// decreasing order. This normal form makes equality structural.
class BetaSet {
 public:
  BetaSet() = default;  // the vacuum {x < 0}
  // Normalises any description "all x < lo are beads, plus `beads`".
  static BetaSet from_beads(int lo, std::vector<int> beads);

  int floor() const { return floor_; }
  const std::vector<int>& above() const { return above_; }
  bool contains(long long x) const;
  int charge() const { return floor_ + static_cast<int>(above_.size()); }
  // every bead >= lo in decreasing order
  std::vector<int> beads_from(int lo) const;
  int max_bead() const { return above_.empty() ? floor_ - 1 : above_.front(); }

  friend auto operator<=>(const BetaSet& a, const BetaSet& b) {
    if (auto c = a.floor_ <=> b.floor_; c != 0) return c;
    return a.above_ <=> b.above_;
  }
  friend bool operator==(const BetaSet&, const BetaSet&) = default;

 private:
  int floor_ = 0;
  std::vector<int> above_;
};

BetaSet beta_set(const Partition& p, int s);
Partition par(const BetaSet& b);
inline int charge(const BetaSet& b) { return b.charge(); }
BetaSet move_bead(const BetaSet& b, int from, int to);

class RunnerTuple {
 public:
  RunnerTuple() = default;
  explicit RunnerTuple(std::vector<int> parts);
  static RunnerTuple parse(const std::string& text);  // "4,2,3"

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  int n() const { return sigma_.empty() ? 0 : sigma_.back(); }
  int part(int j) const { return parts_[static_cast<size_t>(j)]; }
  // sigma(j) = n_0 + ... + n_{j-1}; sections are indexed from 0
  int sigma(int j) const { return sigma_[static_cast<size_t>(j)]; }
  int section_of(int runner) const;
  std::string to_string() const;

  friend bool operator==(const RunnerTuple& a, const RunnerTuple& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const RunnerTuple& a, const RunnerTuple& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  std::vector<int> sigma_;
};

// Bead counts per (row, section), stored only where they differ from the
// vacuum (full for rows < 0, empty for rows >= 0).
struct BlockSignature {
  RunnerTuple nt;
  std::map<std::pair<int, int>, int> dev;

  int count(int row, int section) const;
  int charge() const;
  friend bool operator==(const BlockSignature&, const BlockSignature&) = default;
  friend auto operator<=>(const BlockSignature& a, const BlockSignature& b) {
    if (auto c = a.nt <=> b.nt; c != 0) return c;
    return a.dev <=> b.dev;
  }
};

using SectionSets = std::map<std::pair<int, int>, std::vector<int>>;

// X_{i,j}(B) for every section that is not in its vacuum state.
SectionSets section_sets(const BetaSet& b, const RunnerTuple& nt);
std::vector<int> section_set(const BetaSet& b, const RunnerTuple& nt, int row, int section);
BlockSignature block_signature(const BetaSet& b, const RunnerTuple& nt);

// Order on signatures of equal charge: the largest (row, section) where
// the counts differ decides. Returns nullopt when the charges differ.
std::optional<int> compare_signatures(const BlockSignature& a, const BlockSignature& b);

BetaSet base_beta_set(const BlockSignature& t);
Partition base_partition(const BlockSignature& t);

std::vector<BetaSet> jantzen_successors(const BetaSet& b, int n);

struct JantzenLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Reachability under Jantzen moves; throws once more than `state_limit`
// states have been visited without reaching the target.
bool jantzen_geq(const BetaSet& from, const BetaSet& to, int n, size_t state_limit = 1000000);
// Everything reachable from b, b included.
std::vector<BetaSet> jantzen_down_set(const BetaSet& b, int n, size_t state_limit = 1000000);

struct RunnerComponent {
  BetaSet beads;
  int charge;
};
std::vector<RunnerComponent> runner_split(const BetaSet& b, const RunnerTuple& nt);
BetaSet runner_merge(const std::vector<BetaSet>& parts, const RunnerTuple& nt);

struct RenderOptions {
  std::optional<std::pair<int, int>> rows;  // inclusive
  std::optional<RunnerTuple> sections;
};
std::string render_abacus(const BetaSet& b, int n, const RenderOptions& opt = {});

void to_json(nlohmann::json& j, const BetaSet& b);
void from_json(const nlohmann::json& j, BetaSet& b);
void to_json(nlohmann::json& j, const BlockSignature& t);

}  // namespace qfock
