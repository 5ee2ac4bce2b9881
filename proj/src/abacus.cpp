#include "qfock/abacus.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace qfock {

BetaSet BetaSet::from_beads(int lo, std::vector<int> beads) {
  std::sort(beads.begin(), beads.end(), std::greater<int>());
  beads.erase(std::unique(beads.begin(), beads.end()), beads.end());
  while (!beads.empty() && beads.back() < lo) beads.pop_back();
  // slide the floor up through any beads sitting right on it
  while (!beads.empty() && beads.back() == lo) {
    beads.pop_back();
    ++lo;
  }
  BetaSet b;
  b.floor_ = lo;
  b.above_ = std::move(beads);
  return b;
}

bool BetaSet::contains(long long x) const {
  if (x < floor_) return true;
  return std::binary_search(above_.begin(), above_.end(), static_cast<int>(x), std::greater<int>());
}

std::vector<int> BetaSet::beads_from(int lo) const {
  std::vector<int> out;
  for (int x : above_)
    if (x >= lo) out.push_back(x);
  for (int x = floor_ - 1; x >= lo; --x) out.push_back(x);
  return out;
}

BetaSet beta_set(const Partition& p, int s) {
  std::vector<int> beads;
  for (int i = 1; i <= p.length(); ++i) beads.push_back(p.part(i) + s - i);
  return BetaSet::from_beads(s - p.length(), beads);
}

Partition par(const BetaSet& b) {
  const int s = b.charge();
  std::vector<int> parts;
  int i = 1;
  for (int x : b.above()) parts.push_back(x - s + i++);
  return Partition(parts);
}

BetaSet move_bead(const BetaSet& b, int from, int to) {
  if (!b.contains(from)) throw std::invalid_argument("move_bead: no bead at " + std::to_string(from));
  if (b.contains(to)) throw std::invalid_argument("move_bead: position " + std::to_string(to) + " occupied");
  int lo = std::min({b.floor(), from, to});
  std::vector<int> beads = b.beads_from(lo);
  std::erase(beads, from);
  beads.push_back(to);
  return BetaSet::from_beads(lo, beads);
}

Partition n_core(const Partition& p, int n) {
  BetaSet b = beta_set(p, 0);
  int lo = floor_div(b.floor(), n) * n;
  std::vector<int> per(static_cast<size_t>(n));
  for (int x : b.beads_from(lo)) per[static_cast<size_t>(mod(x, n))] += 1;
  std::vector<int> beads;
  for (int y = 0; y < n; ++y)
    for (int k = 0; k < per[static_cast<size_t>(y)]; ++k) beads.push_back(lo + y + k * n);
  return par(BetaSet::from_beads(lo, beads));
}

RunnerTuple::RunnerTuple(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("runner tuple must be nonempty");
  sigma_.push_back(0);
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("runner tuple entries must be positive");
    sigma_.push_back(sigma_.back() + p);
  }
}

RunnerTuple RunnerTuple::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument("bad runner tuple '" + text + "'");
    parts.push_back(v);
  }
  return RunnerTuple(parts);
}

int RunnerTuple::section_of(int runner) const {
  auto it = std::upper_bound(sigma_.begin(), sigma_.end(), runner);
  return static_cast<int>(it - sigma_.begin()) - 1;
}

std::string RunnerTuple::to_string() const {
  std::string s;
  for (size_t j = 0; j < parts_.size(); ++j) s += (j ? "," : "") + std::to_string(parts_[j]);
  return s;
}

int BlockSignature::count(int row, int section) const {
  auto it = dev.find({row, section});
  if (it != dev.end()) return it->second;
  return row < 0 ? nt.part(section) : 0;
}

int BlockSignature::charge() const {
  int s = 0;
  for (const auto& [key, c] : dev) s += key.first >= 0 ? c : c - nt.part(key.second);
  return s;
}

std::vector<int> section_set(const BetaSet& b, const RunnerTuple& nt, int row, int section) {
  std::vector<int> out;
  const int base = row * nt.n() + nt.sigma(section);
  for (int x = 0; x < nt.part(section); ++x)
    if (b.contains(base + x)) out.push_back(x);
  return out;
}

namespace {

// rows outside [lo, hi] are in their vacuum state
std::pair<int, int> active_rows(const BetaSet& b, int n) {
  int lo = std::min(floor_div(b.floor(), n), 0);
  int hi = std::max(floor_div(b.max_bead(), n), -1);
  return {lo, hi};
}

}  // namespace

SectionSets section_sets(const BetaSet& b, const RunnerTuple& nt) {
  SectionSets out;
  auto [lo, hi] = active_rows(b, nt.n());
  for (int i = lo; i <= hi; ++i)
    for (int j = 0; j < nt.size(); ++j) {
      auto x = section_set(b, nt, i, j);
      int vac = i < 0 ? nt.part(j) : 0;
      if (static_cast<int>(x.size()) != vac) out[{i, j}] = std::move(x);
    }
  return out;
}

BlockSignature block_signature(const BetaSet& b, const RunnerTuple& nt) {
  BlockSignature t{nt, {}};
  auto [lo, hi] = active_rows(b, nt.n());
  for (int i = lo; i <= hi; ++i)
    for (int j = 0; j < nt.size(); ++j) {
      int c = static_cast<int>(section_set(b, nt, i, j).size());
      if (c != (i < 0 ? nt.part(j) : 0)) t.dev[{i, j}] = c;
    }
  return t;
}

std::optional<int> compare_signatures(const BlockSignature& a, const BlockSignature& b) {
  if (a.nt != b.nt) throw std::invalid_argument("signatures over different runner tuples");
  if (a.charge() != b.charge()) return std::nullopt;
  std::set<std::pair<int, int>> keys;
  for (const auto& kv : a.dev) keys.insert(kv.first);
  for (const auto& kv : b.dev) keys.insert(kv.first);
  for (auto it = keys.rbegin(); it != keys.rend(); ++it) {
    int ca = a.count(it->first, it->second);
    int cb = b.count(it->first, it->second);
    if (ca != cb) return ca > cb ? 1 : -1;
  }
  return 0;
}

BetaSet base_beta_set(const BlockSignature& t) {
  const int n = t.nt.n();
  int lo = 0, hi = -1;
  for (const auto& kv : t.dev) {
    lo = std::min(lo, kv.first.first);
    hi = std::max(hi, kv.first.first);
  }
  std::vector<int> beads;
  for (int i = lo; i <= hi; ++i)
    for (int j = 0; j < t.nt.size(); ++j)
      for (int x = 0; x < t.count(i, j); ++x) beads.push_back(i * n + t.nt.sigma(j) + x);
  return BetaSet::from_beads(lo * n, beads);
}

Partition base_partition(const BlockSignature& t) { return par(base_beta_set(t)); }

std::vector<BetaSet> jantzen_successors(const BetaSet& b, int n) {
  std::set<BetaSet> out;
  const int lo = b.floor();
  for (int a : b.above()) {
    for (int i = 1; a - i * n >= lo; ++i) {
      const int down = a - i * n;
      if (b.contains(down)) continue;
      for (int v = lo; v < a; ++v) {
        if (v == down || b.contains(v) || !b.contains(v - i * n)) continue;
        int bb = v - i * n;
        int base = std::min(lo, bb);
        std::vector<int> beads = b.beads_from(base);
        std::erase(beads, a);
        std::erase(beads, bb);
        beads.push_back(down);
        beads.push_back(v);
        out.insert(BetaSet::from_beads(base, beads));
      }
    }
  }
  return {out.begin(), out.end()};
}

namespace {

bool bfs(const BetaSet& from, int n, size_t limit, const std::function<bool(const BetaSet&)>& stop,
         std::set<BetaSet>& seen) {
  std::deque<BetaSet> queue{from};
  seen.insert(from);
  while (!queue.empty()) {
    BetaSet cur = std::move(queue.front());
    queue.pop_front();
    if (stop(cur)) return true;
    for (auto& nx : jantzen_successors(cur, n)) {
      if (seen.insert(nx).second) {
        if (seen.size() > limit) throw JantzenLimitExceeded("Jantzen search exceeded " + std::to_string(limit) + " states");
        queue.push_back(std::move(nx));
      }
    }
  }
  return false;
}

}  // namespace

bool jantzen_geq(const BetaSet& from, const BetaSet& to, int n, size_t state_limit) {
  if (from.charge() != to.charge()) return false;
  if (par(from).size() != par(to).size()) return false;
  std::set<BetaSet> seen;
  return bfs(from, n, state_limit, [&](const BetaSet& c) { return c == to; }, seen);
}

std::vector<BetaSet> jantzen_down_set(const BetaSet& b, int n, size_t state_limit) {
  std::set<BetaSet> seen;
  bfs(b, n, state_limit, [](const BetaSet&) { return false; }, seen);
  return {seen.begin(), seen.end()};
}

std::vector<RunnerComponent> runner_split(const BetaSet& b, const RunnerTuple& nt) {
  const int n = nt.n();
  const int r0 = floor_div(b.floor(), n);
  std::vector<std::vector<int>> beads(static_cast<size_t>(nt.size()));
  for (int x : b.beads_from(r0 * n)) {
    int i = floor_div(x, n);
    int y = x - i * n;
    int j = nt.section_of(y);
    beads[static_cast<size_t>(j)].push_back(i * nt.part(j) + y - nt.sigma(j));
  }
  BlockSignature t = block_signature(b, nt);
  std::vector<int> charges(static_cast<size_t>(nt.size()));
  for (const auto& [key, c] : t.dev)
    charges[static_cast<size_t>(key.second)] += key.first >= 0 ? c : c - nt.part(key.second);

  std::vector<RunnerComponent> out;
  for (int j = 0; j < nt.size(); ++j) {
    BetaSet bj = BetaSet::from_beads(r0 * nt.part(j), beads[static_cast<size_t>(j)]);
    if (bj.charge() != charges[static_cast<size_t>(j)])
      throw std::logic_error("runner_split: component charge disagrees with the signature formula");
    out.push_back({std::move(bj), charges[static_cast<size_t>(j)]});
  }
  return out;
}

BetaSet runner_merge(const std::vector<BetaSet>& parts, const RunnerTuple& nt) {
  if (static_cast<int>(parts.size()) != nt.size()) throw std::invalid_argument("runner_merge: arity mismatch");
  int r0 = 0;
  for (int j = 0; j < nt.size(); ++j)
    r0 = std::min(r0, floor_div(parts[static_cast<size_t>(j)].floor(), nt.part(j)));
  std::vector<int> beads;
  for (int j = 0; j < nt.size(); ++j) {
    const int nj = nt.part(j);
    for (int y : parts[static_cast<size_t>(j)].beads_from(r0 * nj)) {
      int i = floor_div(y, nj);
      beads.push_back(i * nt.n() + nt.sigma(j) + (y - i * nj));
    }
  }
  return BetaSet::from_beads(r0 * nt.n(), beads);
}

std::string render_abacus(const BetaSet& b, int n, const RenderOptions& opt) {
  int top, bottom;
  if (opt.rows) {
    std::tie(top, bottom) = *opt.rows;
  } else {
    auto t = block_signature(b, RunnerTuple({n}));
    if (t.dev.empty()) {
      top = -1;
      bottom = 0;
    } else {
      top = t.dev.begin()->first.first - 1;
      bottom = t.dev.rbegin()->first.first + 1;
    }
  }
  auto gap_before = [&](int y) {
    return opt.sections && y > 0 && opt.sections->section_of(y) != opt.sections->section_of(y - 1);
  };
  const int cw = static_cast<int>(std::to_string(n - 1).size()) + 1;
  const int lw = static_cast<int>(std::max(std::to_string(top).size(), std::to_string(bottom).size()));
  auto pad = [](const std::string& s, int w) { return std::string(static_cast<size_t>(std::max(0, w - static_cast<int>(s.size()))), ' ') + s; };

  std::ostringstream os;
  os << std::string(static_cast<size_t>(lw), ' ');
  for (int y = 0; y < n; ++y) os << (gap_before(y) ? " |" : "") << pad(std::to_string(y), cw);
  os << "\n";
  for (int i = top; i <= bottom; ++i) {
    os << pad(std::to_string(i), lw);
    for (int y = 0; y < n; ++y) os << (gap_before(y) ? " |" : "") << pad(b.contains(static_cast<long long>(i) * n + y) ? "o" : ".", cw);
    os << "\n";
  }
  return os.str();
}

void to_json(nlohmann::json& j, const BetaSet& b) { j = {{"floor", b.floor()}, {"beads", b.above()}}; }

void from_json(const nlohmann::json& j, BetaSet& b) {
  b = BetaSet::from_beads(j.at("floor").get<int>(), j.at("beads").get<std::vector<int>>());
}

void to_json(nlohmann::json& j, const BlockSignature& t) {
  nlohmann::json d = nlohmann::json::array();
  for (const auto& [key, c] : t.dev) d.push_back({key.first, key.second, c});
  j = {{"runner_tuple", t.nt.parts()}, {"deviations", d}};
}

}  // namespace qfock
