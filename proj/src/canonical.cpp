#include "qfock/canonical.hpp"

#include "wedge.hpp"

#include <algorithm>
#include <set>

namespace qfock {

LadderPlan ladder_plan(const Partition& mu, int n, TieBreak tb) {
  std::map<int, LadderStep> ladders;
  for (const auto& x : nodes(mu)) {
    int key = x.row + (n - 1) * (x.col - 1);
    auto [it, fresh] = ladders.try_emplace(key, LadderStep{residue(x, n), 0});
    it->second.count += 1;
  }
  LadderPlan plan;
  for (const auto& kv : ladders) plan.push_back(kv.second);
  if (tb == TieBreak::Reverse) {
    auto commutes = [n](int a, int b) { return a != b && !adjacent_residues(a, b, n); };
    size_t start = 0;
    while (start < plan.size()) {
      size_t end = start + 1;
      while (end < plan.size()) {
        bool all = true;
        for (size_t k = start; k < end; ++k) all = all && commutes(plan[k].residue, plan[end].residue);
        if (!all) break;
        ++end;
      }
      std::reverse(plan.begin() + static_cast<long>(start), plan.begin() + static_cast<long>(end));
      start = end;
    }
  }
  return plan;
}

FockVector apply_plan(const LadderPlan& plan, const FockContext& ctx) {
  FockVector v(ctx, Partition());
  for (const auto& st : plan) v = divided_power_f(st.residue + ctx.s, st.count, v);
  return v;
}

FockVector first_approx(const Partition& mu, int n, int s, TieBreak tb) {
  FockVector v = apply_plan(ladder_plan(mu, n, tb), FockContext{n, s});
  if (!(v.coeff(mu) == LaurentPoly(1)))
    throw TriangularityFault("first approximation of " + mu.to_string() + " at n=" + std::to_string(n) +
                             " has coefficient " + v.coeff(mu).to_string() + " on its top partition");
  for (const auto& [lam, c] : v.terms())
    if (lam.size() != mu.size() || lam > mu)
      throw TriangularityFault("first approximation of " + mu.to_string() + " reaches " + lam.to_string());
  return v;
}

std::shared_ptr<const CanonicalColumn> ColumnCache::find(int n, const Partition& mu) const {
  std::shared_lock lock(mu_);
  auto it = cols_.find({n, mu});
  if (it == cols_.end()) {
    ++misses_;
    return nullptr;
  }
  ++hits_;
  return it->second;
}

std::shared_ptr<const CanonicalColumn> ColumnCache::insert(CanonicalColumn col) {
  std::unique_lock lock(mu_);
  auto key = std::make_pair(col.n, col.mu);
  auto it = cols_.find(key);
  if (it != cols_.end()) return it->second;
  auto p = std::make_shared<const CanonicalColumn>(std::move(col));
  cols_.emplace(std::move(key), p);
  return p;
}

std::shared_ptr<const std::map<Partition, LaurentPoly>> ColumnCache::find_bar(int n, const Partition& lam) const {
  std::shared_lock lock(mu_);
  auto it = bars_.find({n, lam});
  return it == bars_.end() ? nullptr : it->second;
}

std::shared_ptr<const std::map<Partition, LaurentPoly>> ColumnCache::insert_bar(int n, const Partition& lam,
                                                                                 std::map<Partition, LaurentPoly> v) {
  std::unique_lock lock(mu_);
  auto [it, fresh] = bars_.try_emplace({n, lam}, nullptr);
  if (fresh) it->second = std::make_shared<const std::map<Partition, LaurentPoly>>(std::move(v));
  return it->second;
}

std::vector<std::shared_ptr<const CanonicalColumn>> ColumnCache::columns() const {
  std::shared_lock lock(mu_);
  std::vector<std::shared_ptr<const CanonicalColumn>> out;
  for (const auto& kv : cols_) out.push_back(kv.second);
  return out;
}

size_t ColumnCache::size() const {
  std::shared_lock lock(mu_);
  return cols_.size();
}

void ColumnCache::clear() {
  std::unique_lock lock(mu_);
  cols_.clear();
  bars_.clear();
  hits_ = 0;
  misses_ = 0;
}

ColumnCache& default_cache() {
  static ColumnCache cache;
  return cache;
}

std::shared_ptr<const std::map<Partition, LaurentPoly>> bar_of_basis(const Partition& lam, int n, ColumnCache& cache) {
  if (auto hit = cache.find_bar(n, lam)) return hit;
  return cache.insert_bar(n, lam, detail::bar_basis(lam, n));
}

FockVector bar_vector(const FockVector& v, ColumnCache& cache) {
  FockVector out(v.context());
  for (const auto& [lam, c] : v.terms())
    for (const auto& [nu, a] : *bar_of_basis(lam, v.context().n, cache)) out.add(nu, a * bar(c));
  return out;
}

namespace {

std::map<Partition, LaurentPoly> ladder_route(const Partition& mu, int n, TieBreak tb, ColumnCache& cache) {
  FockVector v = first_approx(mu, n, 0, tb);
  for (const auto& nu : partitions_of(mu.size())) {
    if (!(nu < mu)) continue;
    LaurentPoly alpha = symmetric_truncation(v.coeff(nu)).alpha;
    if (alpha.is_zero()) continue;
    auto g = canonical_column(nu, n, cache);
    v.add_scaled(column_vector(*g, 0), -alpha);
  }
  return v.terms();
}

std::map<Partition, LaurentPoly> wedge_route(const Partition& mu, int n, ColumnCache& cache) {
  std::map<Partition, LaurentPoly> d{{mu, 1}};
  // bar-invariance of sum_nu d_nu nu, solved one row at a time from the top
  std::vector<std::pair<Partition, std::shared_ptr<const std::map<Partition, LaurentPoly>>>> known{
      {mu, bar_of_basis(mu, n, cache)}};
  for (const auto& lam : partitions_of(mu.size())) {
    if (!(lam < mu)) continue;
    LaurentPoly rhs;
    for (const auto& [nu, bars] : known) {
      auto it = bars->find(lam);
      if (it != bars->end()) rhs += bar(d[nu]) * it->second;
    }
    LaurentPoly pos;
    for (const auto& [e, c] : rhs.terms())
      if (e > 0) pos += LaurentPoly::monomial(e, c);
    if (!(rhs == pos - bar(pos)))
      throw std::logic_error("bar equation for " + lam.to_string() + " in G(" + mu.to_string() +
                             ") has no solution: " + rhs.to_string());
    if (!pos.is_zero()) {
      d[lam] = pos;
      known.emplace_back(lam, bar_of_basis(lam, n, cache));
    }
  }
  return d;
}

}  // namespace

CanonicalColumn compute_column(const Partition& mu, int n, Strategy strategy, TieBreak tb, ColumnCache& cache) {
  if (n < 2) throw std::invalid_argument("canonical columns need n >= 2");
  CanonicalColumn col{mu, n, {}};
  bool ladder = strategy == Strategy::Ladder || (strategy == Strategy::Auto && mu.is_regular(n));
  col.entries = ladder ? ladder_route(mu, n, tb, cache) : wedge_route(mu, n, cache);
  for (const auto& [lam, c] : col.entries)
    if (!(lam == mu) && !in_qNq(c)) {
      cache.flag_negative();
      break;
    }
  return col;
}

std::shared_ptr<const CanonicalColumn> canonical_column(const Partition& mu, int n, ColumnCache& cache) {
  if (auto hit = cache.find(n, mu)) return hit;
  return cache.insert(compute_column(mu, n, Strategy::Auto, TieBreak::Forward, cache));
}

DecompositionMatrix decomposition_matrix(int n, int m, ColumnCache& cache) {
  DecompositionMatrix dm;
  dm.n = n;
  dm.m = m;
  dm.labels = partitions_of(m);
  const size_t k = dm.labels.size();
  dm.entry.assign(k, std::vector<LaurentPoly>(k));
  for (size_t c = 0; c < k; ++c) {
    auto col = canonical_column(dm.labels[c], n, cache);
    for (size_t r = 0; r < k; ++r) dm.entry[r][c] = col->d(dm.labels[r]);
  }
  return dm;
}

FockVector column_vector(const CanonicalColumn& col, int s) {
  FockVector v(FockContext{col.n, s});
  for (const auto& [lam, c] : col.entries) v.add(lam, c);
  return v;
}

std::map<Partition, LaurentPoly> expand_in_canonical(const FockVector& v, ColumnCache& cache) {
  std::map<Partition, LaurentPoly> out;
  FockVector rest = v;
  std::set<int> sizes;
  for (const auto& kv : v.terms()) sizes.insert(kv.first.size());
  if (sizes.size() > 1) throw std::invalid_argument("expand_in_canonical needs a single size class");
  while (!rest.is_zero()) {
    auto top = std::prev(rest.terms().end());
    Partition mu = top->first;
    LaurentPoly c = top->second;
    out[mu] = c;
    auto g = canonical_column(mu, v.context().n, cache);
    rest.add_scaled(column_vector(*g, v.context().s), -c);
  }
  return out;
}

std::map<Partition, BigInt> evaluate_at_one(const CanonicalColumn& col) {
  std::map<Partition, BigInt> out;
  for (const auto& [lam, c] : col.entries) out[lam] = evaluate_at_one(c);
  return out;
}

CheckReport check_column(const CanonicalColumn& col, bool jantzen) {
  CheckReport rep;
  rep.theorem = "column-invariants";
  rep.parameters = {{"n", col.n}, {"mu", col.mu.to_string()}};
  rep.instances = 1;
  const std::string tag = "G" + col.mu.to_string() + " n=" + std::to_string(col.n) + ": ";
  if (!(col.d(col.mu) == LaurentPoly(1))) rep.fail(tag + "diagonal entry is " + col.d(col.mu).to_string());
  std::set<Partition> down;
  if (jantzen)
    for (const auto& b : jantzen_down_set(beta_set(col.mu, 0), col.n)) down.insert(par(b));
  for (const auto& [lam, c] : col.entries) {
    if (lam == col.mu) continue;
    if (lam.size() != col.mu.size() || !(lam < col.mu)) rep.fail(tag + "entry at " + lam.to_string() + " breaks lex triangularity");
    if (!in_qNq(c)) rep.fail(tag + "entry at " + lam.to_string() + " is " + c.to_string());
    if (jantzen && !down.count(lam)) rep.fail(tag + lam.to_string() + " lies outside the Jantzen down-set");
  }
  return rep;
}

CheckReport verify_columns(int n, int max_size, bool jantzen, ColumnCache& cache) {
  CheckReport rep;
  rep.theorem = "columns";
  rep.parameters = {{"n", n}, {"max_size", max_size}, {"jantzen", jantzen}};
  for (int m = 0; m <= max_size; ++m)
    for (const auto& mu : partitions_of(m)) rep.merge(check_column(*canonical_column(mu, n, cache), jantzen));
  return rep;
}

CheckReport verify_bar_symmetry(int n, int s, int max_size, ColumnCache& cache) {
  CheckReport rep;
  rep.theorem = "bar-symmetry";
  rep.parameters = {{"n", n}, {"s", s}, {"max_size", max_size}};
  for (int m = 0; m <= max_size; ++m)
    for (const auto& lam : partitions_of(m)) {
      FockVector g = column_vector(*canonical_column(lam, n, cache), s);
      for (int i = 0; i < n; ++i) {
        ++rep.instances;
        FockVector fg = apply_f(i, g);
        if (fg.is_zero()) continue;
        for (const auto& [mu, c] : expand_in_canonical(fg, cache))
          if (!is_bar_symmetric(c))
            rep.fail("f_" + std::to_string(i) + " G" + lam.to_string() + " at n=" + std::to_string(n) +
                     " s=" + std::to_string(s) + ": coefficient of G" + mu.to_string() + " is " + c.to_string());
      }
    }
  return rep;
}

nlohmann::json to_json(const CanonicalColumn& col) {
  nlohmann::json entries = nlohmann::json::array();
  for (auto it = col.entries.rbegin(); it != col.entries.rend(); ++it) {
    nlohmann::json p, c;
    to_json(p, it->first);
    to_json(c, it->second);
    entries.push_back({p, c});
  }
  nlohmann::json mu;
  to_json(mu, col.mu);
  return {{"n", col.n}, {"mu", mu}, {"entries", entries}};
}

CanonicalColumn column_from_json(const nlohmann::json& j) {
  CanonicalColumn col;
  col.n = j.at("n").get<int>();
  from_json(j.at("mu"), col.mu);
  for (const auto& e : j.at("entries")) {
    Partition p;
    LaurentPoly c;
    from_json(e.at(0), p);
    from_json(e.at(1), c);
    col.entries[p] = c;
  }
  return col;
}

}  // namespace qfock
