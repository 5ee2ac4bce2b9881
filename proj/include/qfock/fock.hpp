#pragma once

#include "qfock/abacus.hpp"
#include "qfock/laurent.hpp"
#include "qfock/partition.hpp"
#include "qfock/report.hpp"

#include <map>

namespace qfock {

struct FockContext {
  int n = 2;
  int s = 0;
  // residue of the nodes the operator with index i acts on
  int shifted(int i) const { return mod(static_cast<long long>(i) - s, n); }
  friend bool operator==(const FockContext&, const FockContext&) = default;
};

struct ContextMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class Key>
class BasicVector {
 public:
  using Terms = std::map<Key, LaurentPoly>;

  BasicVector() = default;
  explicit BasicVector(FockContext ctx) : ctx_(ctx) {}
  BasicVector(FockContext ctx, const Key& k, LaurentPoly c = 1) : ctx_(ctx) { add(k, std::move(c)); }

  const FockContext& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? LaurentPoly() : it->second;
  }

  void add(const Key& k, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  // this += c * v
  void add_scaled(const BasicVector& v, const LaurentPoly& c) {
    check(v);
    for (const auto& [k, x] : v.terms_) add(k, x * c);
  }
  BasicVector& operator+=(const BasicVector& v) {
    add_scaled(v, 1);
    return *this;
  }
  BasicVector& operator-=(const BasicVector& v) {
    add_scaled(v, -1);
    return *this;
  }
  BasicVector scaled(const LaurentPoly& c) const {
    BasicVector r(ctx_);
    for (const auto& [k, x] : terms_) r.add(k, x * c);
    return r;
  }
  void check(const BasicVector& v) const {
    if (!(v.ctx_ == ctx_)) throw ContextMismatch("Fock vectors from different contexts");
  }
  friend bool operator==(const BasicVector&, const BasicVector&) = default;

 private:
  FockContext ctx_;
  Terms terms_;
};

using FockVector = BasicVector<Partition>;
using BetaVector = BasicVector<BetaSet>;

FockVector apply_f(int i, const FockVector& v);
FockVector apply_e(int i, const FockVector& v);

enum class KConvention { Shifted, Literal };
// N_i(lambda): addable minus removable nodes of the relevant residue
int k_exponent(int i, const Partition& p, const FockContext& ctx, KConvention conv = KConvention::Shifted);
FockVector apply_K(int i, const FockVector& v, int sign, KConvention conv = KConvention::Shifted);

BetaVector apply_f_beta(int i, const BetaVector& v);
BetaVector apply_e_beta(int i, const BetaVector& v);
BetaVector to_beta(const FockVector& v);
FockVector from_beta(const BetaVector& v);

FockVector divided_power_f(int i, int a, const FockVector& v);

// Commutator and q-Serre relations on every basis vector of size <= limit.
CheckReport check_relations(const FockContext& ctx, int size_limit, KConvention conv = KConvention::Shifted);

nlohmann::json to_json(const FockVector& v);

}  // namespace qfock
