#include "qfock/blocks.hpp"

#include <algorithm>

namespace qfock {

std::vector<RunnerTuple> runner_tuples(int n, int r) {
  std::vector<RunnerTuple> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int slots) -> void {
    if (slots == 1) {
      cur.push_back(left);
      out.emplace_back(cur);
      cur.pop_back();
      return;
    }
    for (int a = 1; a <= left - slots + 1; ++a) {
      cur.push_back(a);
      self(self, left - a, slots - 1);
      cur.pop_back();
    }
  };
  if (r >= 1 && r <= n) rec(rec, n, r);
  return out;
}

BlockId block_of(const Partition& p, const RunnerTuple& nt, int s) {
  return {block_signature(beta_set(p, s), nt), s};
}

FockVector project(const FockVector& v, const BlockId& b) {
  if (v.context().s != b.s || v.context().n != b.t.nt.n())
    throw ContextMismatch("projection onto a block of another charge or level");
  FockVector out(v.context());
  for (const auto& [lam, c] : v.terms())
    if (block_signature(beta_set(lam, b.s), b.t.nt) == b.t) out.add(lam, c);
  return out;
}

namespace {

std::map<int, std::set<Node>> nodes_by_residue(const Partition& p, int n) {
  std::map<int, std::set<Node>> out;
  for (const auto& x : nodes(p)) out[residue(x, n)].insert(x);
  return out;
}

// The partition with exactly these nodes, if they form a Young diagram.
std::optional<Partition> diagram(const std::set<Node>& cells) {
  std::vector<int> rows;
  for (const auto& x : cells) {
    if (x.row > static_cast<int>(rows.size())) rows.resize(static_cast<size_t>(x.row), 0);
    rows[static_cast<size_t>(x.row - 1)] += 1;
  }
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i > 0 && rows[i] > rows[i - 1]) return std::nullopt;
  }
  for (const auto& x : cells)
    if (x.col > rows[static_cast<size_t>(x.row - 1)]) return std::nullopt;
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  for (int r : rows)
    if (r == 0) return std::nullopt;
  return Partition(rows);
}

}  // namespace

bool same_block_by_residues(const Partition& a, const Partition& b, const RunnerTuple& nt, int s) {
  const int n = nt.n();
  auto na = nodes_by_residue(a, n);
  auto nb = nodes_by_residue(b, n);
  for (int j = 0; j < nt.size(); ++j) {
    int r = mod(static_cast<long long>(nt.sigma(j)) - s, n);
    if (na[r] != nb[r]) return false;
  }
  return true;
}

std::vector<Partition> block_members_of_size(const BlockId& b, int size) {
  std::vector<Partition> out;
  for (const auto& p : partitions_of(size))
    if (block_signature(beta_set(p, b.s), b.t.nt) == b.t) out.push_back(p);
  return out;
}

std::vector<Partition> block_members(const BlockId& b, int size_limit) {
  const Partition base = base_partition(b.t);
  std::vector<Partition> out;
  for (int m = 0; m <= size_limit; ++m) {
    for (const auto& p : partitions_of(m)) {
      bool by_sig = block_signature(beta_set(p, b.s), b.t.nt) == b.t;
      bool by_res = same_block_by_residues(p, base, b.t.nt, b.s);
      if (by_sig != by_res)
        throw std::logic_error("block descriptions disagree on " + p.to_string() + " (base " + base.to_string() + ")");
      if (by_sig) out.push_back(p);
    }
  }
  return out;
}

LaurentPoly runner_product_d(const Partition& lambda, const Partition& mu, const RunnerTuple& nt, int s,
                             ColumnCache& cache) {
  BetaSet bl = beta_set(lambda, s), bm = beta_set(mu, s);
  if (!(block_signature(bl, nt) == block_signature(bm, nt)))
    throw BlockMismatch(lambda.to_string() + " and " + mu.to_string() + " lie in different blocks");
  auto sl = runner_split(bl, nt);
  auto sm = runner_split(bm, nt);
  LaurentPoly d = 1;
  for (int j = 0; j < nt.size(); ++j) {
    Partition lj = par(sl[static_cast<size_t>(j)].beads);
    Partition mj = par(sm[static_cast<size_t>(j)].beads);
    if (nt.part(j) == 1) {
      if (!(lj == mj)) return {};
      continue;
    }
    d *= canonical_column(mj, nt.part(j), cache)->d(lj);
    if (d.is_zero()) return d;
  }
  return d;
}

std::map<Partition, LaurentPoly> runner_product_column(const Partition& mu, const RunnerTuple& nt, int s,
                                                       ColumnCache& cache) {
  std::map<Partition, LaurentPoly> out;
  for (const auto& lam : block_members_of_size(block_of(mu, nt, s), mu.size())) {
    LaurentPoly d = runner_product_d(lam, mu, nt, s, cache);
    if (!d.is_zero()) out[lam] = d;
  }
  return out;
}

const std::map<Partition, LaurentPoly>& BlockInduction::column(const Partition& mu, int s) {
  auto key = std::make_pair(mu, s);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  std::map<Partition, LaurentPoly> out;
  const int n = nt_.n();
  if (mu.empty()) {
    out[mu] = 1;
    return memo_.emplace(key, std::move(out)).first->second;
  }

  const BetaSet b = beta_set(mu, s);
  const int c = floor_div(b.max_bead(), n);
  int in_row = 0;
  bool packed = true;
  for (int j = 0; j < nt_.size(); ++j) {
    auto x = section_set(b, nt_, c, j);
    in_row += static_cast<int>(x.size());
    for (size_t k = 0; k < x.size(); ++k) packed = packed && x[k] == static_cast<int>(k);
  }

  if (packed) {
    // the bottom row holds the first parts; the rest is a smaller problem
    // beads of zero parts can sit in that row too
    const int strip = std::min(in_row, mu.length());
    const auto& rest = column(strip_first_rows(mu, strip), s - in_row);
    std::vector<int> head(mu.parts().begin(), mu.parts().begin() + strip);
    for (const auto& [lam, d] : rest) {
      std::vector<int> parts = head;
      parts.insert(parts.end(), lam.parts().begin(), lam.parts().end());
      out[Partition(parts)] = d;
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  std::vector<int> cand;
  for (int k = c * n + 1; k < (c + 1) * n; ++k) {
    const int y = k - c * n;
    if (b.contains(k) && !b.contains(k - 1) && nt_.section_of(y) == nt_.section_of(y - 1)) cand.push_back(k);
  }
  if (cand.empty()) throw std::logic_error("block induction found no movable bead for " + mu.to_string());
  const int k = choice_ == BeadChoice::Rightmost ? cand.back() : cand.front();
  const Partition lam = par(move_bead(b, k, k - 1));
  const BlockId blk = block_of(mu, nt_, s);

  FockVector v(FockContext{n, s});
  for (const auto& [p, d] : column(lam, s)) v.add(p, d);
  v = project(apply_f(mod(k, n), v), blk);
  if (!(v.coeff(mu) == LaurentPoly(1)))
    throw TriangularityFault("block induction: f_" + std::to_string(mod(k, n)) + " G_t" + lam.to_string() +
                             " has coefficient " + v.coeff(mu).to_string() + " at " + mu.to_string());
  for (const auto& nu : block_members_of_size(blk, mu.size())) {
    if (!(nu < mu)) continue;
    LaurentPoly alpha = symmetric_truncation(v.coeff(nu)).alpha;
    if (alpha.is_zero()) continue;
    FockVector g(v.context());
    for (const auto& [p, d] : column(nu, s)) g.add(p, d);
    v.add_scaled(g, -alpha);
  }
  for (const auto& [p, d] : v.terms()) {
    if (!(p == mu) && !in_qZq(d))
      throw TriangularityFault("block induction left " + d.to_string() + " at " + p.to_string() + " in G_t" +
                               mu.to_string());
    out[p] = d;
  }
  return memo_.emplace(key, std::move(out)).first->second;
}

namespace {

std::string render(const std::map<Partition, LaurentPoly>& col) {
  std::string s = "{";
  for (auto it = col.rbegin(); it != col.rend(); ++it)
    s += (it == col.rbegin() ? "" : ", ") + it->first.to_string() + ": " + it->second.to_string();
  return s + "}";
}

std::string first_difference(const std::map<Partition, LaurentPoly>& a, const std::map<Partition, LaurentPoly>& b) {
  std::set<Partition> keys;
  for (const auto& kv : a) keys.insert(kv.first);
  for (const auto& kv : b) keys.insert(kv.first);
  for (auto it = keys.rbegin(); it != keys.rend(); ++it) {
    auto x = a.count(*it) ? a.at(*it) : LaurentPoly();
    auto y = b.count(*it) ? b.at(*it) : LaurentPoly();
    if (!(x == y)) return it->to_string() + ": " + x.to_string() + " vs " + y.to_string();
  }
  return "";
}

}  // namespace

CheckReport verify_decomp(const RunnerTuple& nt, int s, int max_size, BeadChoice choice, ColumnCache& cache) {
  CheckReport rep;
  rep.theorem = "decomp";
  rep.parameters = {{"runner_tuple", nt.parts()}, {"s", s}, {"max_size", max_size},
                    {"bead_choice", choice == BeadChoice::Rightmost ? "rightmost" : "leftmost"}};
  BlockInduction ind(nt, choice);
  for (int m = 0; m <= max_size; ++m) {
    for (const auto& mu : partitions_of(m)) {
      ++rep.instances;
      const BlockId blk = block_of(mu, nt, s);
      std::map<Partition, LaurentPoly> proj;
      for (const auto& [lam, d] : canonical_column(mu, nt.n(), cache)->entries)
        if (block_signature(beta_set(lam, s), nt) == blk.t) proj[lam] = d;
      auto prod = runner_product_column(mu, nt, s, cache);
      const auto& induced = ind.column(mu, s);
      if (proj != prod)
        rep.fail("mu=" + mu.to_string() + " projection vs runner product differ at " + first_difference(proj, prod));
      if (proj != induced)
        rep.fail("mu=" + mu.to_string() + " projection vs block induction differ at " +
                 first_difference(proj, induced) + " induced " + render(induced));
    }
  }
  return rep;
}

CheckReport verify_runner_removal(const RunnerTuple& nt, int s, int size, ColumnCache& cache) {
  CheckReport rep;
  rep.theorem = "runner";
  rep.parameters = {{"runner_tuple", nt.parts()}, {"s", s}, {"size", size}};
  auto parts = partitions_of(size);
  std::vector<BlockSignature> sig;
  for (const auto& p : parts) sig.push_back(block_signature(beta_set(p, s), nt));
  for (size_t a = 0; a < parts.size(); ++a) {
    auto col = canonical_column(parts[a], nt.n(), cache);
    for (size_t b = 0; b < parts.size(); ++b) {
      // G(mu) may reach other blocks; only its projection is constrained
      if (!(sig[a] == sig[b])) continue;
      ++rep.instances;
      LaurentPoly lhs = col->d(parts[b]);
      LaurentPoly rhs = runner_product_d(parts[b], parts[a], nt, s, cache);
      if (!(lhs == rhs))
        rep.fail("d(" + parts[b].to_string() + ", " + parts[a].to_string() + "): level " + std::to_string(nt.n()) +
                 " gives " + lhs.to_string() + ", runner product gives " + rhs.to_string());
    }
  }
  return rep;
}

ResidueTuple residue_tuple(const std::set<int>& I, int p) {
  if (p < 2) throw std::invalid_argument("residue_tuple needs p >= 2");
  for (int i : I) {
    if (i < 0 || i >= p) throw std::invalid_argument("residue out of range");
    for (int j : I)
      if (i != j && adjacent_residues(i, j, p))
        throw std::invalid_argument("residues " + std::to_string(i) + " and " + std::to_string(j) + " are adjacent");
  }
  const int s = I.count(0) ? 1 : 0;
  std::vector<int> sigma;
  for (int x = 0; x <= p; ++x)
    if (!I.count(x - s)) sigma.push_back(x);
  std::vector<int> parts;
  for (size_t j = 1; j < sigma.size(); ++j) parts.push_back(sigma[j] - sigma[j - 1]);
  RunnerTuple nt(parts);
  std::set<int> back;
  for (int j = 0; j < nt.size(); ++j)
    if (nt.part(j) == 2) back.insert(nt.sigma(j + 1) - s - 1);
  if (back != I) throw std::logic_error("residue_tuple: index identity fails");
  return {s, nt};
}

std::vector<std::set<int>> nonadjacent_sets(int p, int max_size) {
  std::vector<std::set<int>> out{{}};
  for (size_t k = 0; k < out.size(); ++k) {
    if (static_cast<int>(out[k].size()) >= max_size) continue;
    int start = out[k].empty() ? 0 : *out[k].rbegin() + 1;
    for (int x = start; x < p; ++x) {
      bool ok = true;
      for (int y : out[k]) ok = ok && !adjacent_residues(x, y, p);
      if (!ok) continue;
      auto next = out[k];
      next.insert(x);
      out.push_back(next);
    }
  }
  return out;
}

CheckReport verify_move_product(const Partition& mu, int p, const std::set<int>& I, ColumnCache& cache) {
  CheckReport rep;
  rep.theorem = "moves";
  rep.parameters = {{"mu", mu.to_string()}, {"p", p}, {"I", std::vector<int>(I.begin(), I.end())}};
  const ResidueTuple lt = residue_tuple(I, p);
  auto col = canonical_column(mu, p, cache);
  auto mu_nodes = nodes_by_residue(mu, p);
  for (const auto& lam : partitions_of(mu.size())) {
    auto lam_nodes = nodes_by_residue(lam, p);
    bool fits = true;
    for (int r = 0; r < p && fits; ++r) {
      bool differs = lam_nodes[r] != mu_nodes[r];
      fits = I.count(r) ? differs : !differs;
    }
    if (!fits) continue;
    ++rep.instances;
    const std::string tag = "lambda=" + lam.to_string() + " mu=" + mu.to_string() + ": ";
    LaurentPoly lhs = col->d(lam);
    LaurentPoly prod = 1;
    for (int i : I) {
      std::set<Node> cells;
      for (int r = 0; r < p; ++r)
        for (const auto& x : (r == i ? lam_nodes[r] : mu_nodes[r])) cells.insert(x);
      auto li = diagram(cells);
      if (!li) {
        rep.fail(tag + "moving only residue " + std::to_string(i) + " does not give a partition");
        prod = {};
        break;
      }
      prod *= col->d(*li);
    }
    if (!(lhs == prod)) rep.fail(tag + "d = " + lhs.to_string() + " but the residue product is " + prod.to_string());
    LaurentPoly runner = runner_product_d(lam, mu, lt.nt, lt.s, cache);
    if (!(lhs == runner)) rep.fail(tag + "d = " + lhs.to_string() + " but the runner product is " + runner.to_string());
  }
  return rep;
}

CheckReport verify_moves(int p, int max_size, int max_residues, ColumnCache& cache) {
  CheckReport rep;
  rep.theorem = "moves";
  rep.parameters = {{"p", p}, {"max_size", max_size}, {"max_residues", max_residues}};
  for (const auto& I : nonadjacent_sets(p, max_residues))
    for (int m = 0; m <= max_size; ++m)
      for (const auto& mu : partitions_of(m)) rep.merge(verify_move_product(mu, p, I, cache));
  return rep;
}

CheckReport verify_project_commutes(int n, const RunnerTuple& nt, int s, int size_limit) {
  CheckReport rep;
  rep.theorem = "project-commutes";
  rep.parameters = {{"n", n}, {"runner_tuple", nt.parts()}, {"s", s}, {"max_size", size_limit}};
  std::set<int> sigmas;
  for (int j = 0; j < nt.size(); ++j) sigmas.insert(nt.sigma(j));
  for (int m = 0; m <= size_limit; ++m)
    for (const auto& lam : partitions_of(m))
      for (int i = 0; i < n; ++i) {
        if (sigmas.count(i)) continue;
        ++rep.instances;
        FockVector v(FockContext{n, s}, lam);
        FockVector fv = apply_f(i, v), ev = apply_e(i, v);
        BlockId b = block_of(lam, nt, s);
        if (!(project(fv, b) == fv) || !(project(ev, b) == ev))
          rep.fail("operator " + std::to_string(i) + " leaves the block of " + lam.to_string());
      }
  return rep;
}

}  // namespace qfock
