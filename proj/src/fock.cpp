#include "qfock/fock.hpp"

#include <algorithm>

namespace qfock {

void CheckReport::merge(const CheckReport& o) {
  instances += o.instances;
  for (const auto& f : o.failures) fail(f);
  suppressed += o.suppressed;
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j;
  j["theorem"] = theorem;
  j["parameters"] = parameters;
  j["instances_checked"] = instances;
  j["failures"] = failures;
  if (suppressed) j["failures_suppressed"] = suppressed;
  return j;
}

FockVector apply_f(int i, const FockVector& v) {
  const auto& ctx = v.context();
  const int r = ctx.shifted(i);
  FockVector out(ctx);
  for (const auto& [lam, c] : v.terms()) {
    std::vector<int> cols;  // +col addable, -col removable, residue r only
    auto add = addable_nodes(lam, ctx.n);
    auto rem = removable_nodes(lam, ctx.n);
    for (size_t k = 0; k < add.size(); ++k) {
      if (add[k].res != r) continue;
      const int col = add[k].node.col;
      int e = 0;
      for (const auto& a : add)
        if (a.res == r && a.node.col > col) ++e;
      for (const auto& x : rem)
        if (x.res == r && x.node.col > col) --e;
      out.add(add_node(lam, add[k].node), c.shifted(e));
    }
  }
  return out;
}

FockVector apply_e(int i, const FockVector& v) {
  const auto& ctx = v.context();
  const int r = ctx.shifted(i);
  FockVector out(ctx);
  for (const auto& [mu, c] : v.terms()) {
    for (const auto& x : removable_nodes(mu, ctx.n)) {
      if (x.res != r) continue;
      Partition lam = remove_node(mu, x.node);
      int e = 0;
      for (const auto& a : addable_nodes(lam, ctx.n))
        if (a.res == r && a.node.col < x.node.col) ++e;
      for (const auto& y : removable_nodes(lam, ctx.n))
        if (y.res == r && y.node.col < x.node.col) --e;
      out.add(lam, c.shifted(-e));
    }
  }
  return out;
}

int k_exponent(int i, const Partition& p, const FockContext& ctx, KConvention conv) {
  const int r = conv == KConvention::Shifted ? ctx.shifted(i) : mod(i, ctx.n);
  int e = 0;
  for (const auto& a : addable_nodes(p, ctx.n))
    if (a.res == r) ++e;
  for (const auto& x : removable_nodes(p, ctx.n))
    if (x.res == r) --e;
  return e;
}

FockVector apply_K(int i, const FockVector& v, int sign, KConvention conv) {
  FockVector out(v.context());
  for (const auto& [lam, c] : v.terms()) out.add(lam, c.shifted(sign * k_exponent(i, lam, v.context(), conv)));
  return out;
}

namespace {

// +1 where y is an addable slot (bead at y-1, none at y), -1 where removable
int slot_kind(const BetaSet& b, long long y) {
  bool here = b.contains(y), before = b.contains(y - 1);
  if (before && !here) return 1;
  if (here && !before) return -1;
  return 0;
}

BetaSet shift_bead(const BetaSet& b, int from, int to) { return move_bead(b, from, to); }

}  // namespace

BetaVector apply_f_beta(int i, const BetaVector& v) {
  const auto& ctx = v.context();
  BetaVector out(ctx);
  for (const auto& [b, c] : v.terms()) {
    if (b.charge() != ctx.s) throw ContextMismatch("beta set charge differs from the context");
    const int lo = b.floor();
    const int hi = b.max_bead() + 1;
    // candidate targets x with x = i mod n, x-1 a bead, x vacant
    int x0 = lo + mod(static_cast<long long>(i) - lo, ctx.n);
    for (int x = x0; x <= hi; x += ctx.n) {
      if (slot_kind(b, x) != 1) continue;
      int e = 0;
      for (int y = x + ctx.n; y <= hi + ctx.n; y += ctx.n) e += slot_kind(b, y);
      out.add(shift_bead(b, x - 1, x), c.shifted(e));
    }
  }
  return out;
}

BetaVector apply_e_beta(int i, const BetaVector& v) {
  const auto& ctx = v.context();
  BetaVector out(ctx);
  for (const auto& [b, c] : v.terms()) {
    if (b.charge() != ctx.s) throw ContextMismatch("beta set charge differs from the context");
    const int lo = b.floor();
    const int hi = b.max_bead() + 1;
    int x0 = lo + mod(static_cast<long long>(i) - lo, ctx.n);
    for (int x = x0; x <= hi; x += ctx.n) {
      if (slot_kind(b, x) != -1) continue;
      BetaSet smaller = shift_bead(b, x, x - 1);
      int e = 0;
      for (int y = x - ctx.n; y >= lo - ctx.n; y -= ctx.n) e += slot_kind(smaller, y);
      out.add(smaller, c.shifted(-e));
    }
  }
  return out;
}

BetaVector to_beta(const FockVector& v) {
  BetaVector out(v.context());
  for (const auto& [lam, c] : v.terms()) out.add(beta_set(lam, v.context().s), c);
  return out;
}

FockVector from_beta(const BetaVector& v) {
  FockVector out(v.context());
  for (const auto& [b, c] : v.terms()) out.add(par(b), c);
  return out;
}

FockVector divided_power_f(int i, int a, const FockVector& v) {
  if (a < 0) throw std::invalid_argument("divided power needs a >= 0");
  FockVector w = v;
  for (int k = 0; k < a; ++k) w = apply_f(i, w);
  if (a <= 1) return w;
  const LaurentPoly den = quantum_factorial(a);
  FockVector out(v.context());
  for (const auto& [lam, c] : w.terms()) out.add(lam, exact_div(c, den));
  return out;
}

namespace {

int cartan(int i, int j, int n) {
  if (i == j) return 2;
  if (n == 2) return -2;
  return adjacent_residues(i, j, n) ? -1 : 0;
}

template <class Op>
FockVector power(Op op, int i, int k, FockVector v) {
  for (int t = 0; t < k; ++t) v = op(i, v);
  return v;
}

}  // namespace

CheckReport check_relations(const FockContext& ctx, int size_limit, KConvention conv) {
  CheckReport rep;
  rep.theorem = "relations";
  rep.parameters = {{"n", ctx.n}, {"s", ctx.s}, {"max_size", size_limit},
                    {"k_convention", conv == KConvention::Shifted ? "shifted" : "literal"}};
  const LaurentPoly qdiff = LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);
  for (int m = 0; m <= size_limit; ++m) {
    for (const auto& lam : partitions_of(m)) {
      FockVector basis(ctx, lam);
      for (int i = 0; i < ctx.n; ++i) {
        for (int j = 0; j < ctx.n; ++j) {
          ++rep.instances;
          FockVector lhs = apply_e(i, apply_f(j, basis));
          lhs -= apply_f(j, apply_e(i, basis));
          FockVector rhs(ctx);
          if (i == j) {
            int k = k_exponent(i, lam, ctx, conv);
            LaurentPoly num = LaurentPoly::monomial(k) - LaurentPoly::monomial(-k);
            rhs.add(lam, exact_div(num, qdiff));
          }
          if (!(lhs == rhs))
            rep.fail("commutator fails at lambda=" + lam.to_string() + " i=" + std::to_string(i) +
                     " j=" + std::to_string(j));
          if (i == j) continue;
          // q-Serre, both for f and for e
          const int top = 1 - cartan(i, j, ctx.n);
          for (int which = 0; which < 2; ++which) {
            auto op = [which](int idx, const FockVector& v) { return which == 0 ? apply_f(idx, v) : apply_e(idx, v); };
            FockVector sum(ctx);
            for (int k = 0; k <= top; ++k) {
              FockVector t = power(op, i, k, basis);
              t = op(j, t);
              t = power(op, i, top - k, t);
              LaurentPoly coef = quantum_binom(top, k);
              sum.add_scaled(t, k % 2 ? -coef : coef);
            }
            ++rep.instances;
            if (!sum.is_zero())
              rep.fail(std::string(which == 0 ? "f" : "e") + "-Serre fails at lambda=" + lam.to_string() +
                       " i=" + std::to_string(i) + " j=" + std::to_string(j));
          }
        }
      }
    }
  }
  return rep;
}

nlohmann::json to_json(const FockVector& v) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [lam, c] : v.terms()) {
    nlohmann::json pj, cj;
    to_json(pj, lam);
    to_json(cj, c);
    terms.push_back({pj, cj});
  }
  return {{"n", v.context().n}, {"s", v.context().s}, {"terms", terms}};
}

}  // namespace qfock
