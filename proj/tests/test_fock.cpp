#include "doctest.h"
#include "qfock/fock.hpp"

using namespace qfock;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
const LaurentPoly q = LaurentPoly::monomial(1);

}  // namespace

TEST_SUITE("fock") {
  TEST_CASE("hand evaluated actions at n=2") {
    const FockContext ctx{2, 0};
    FockVector one(ctx, P({1}));
    FockVector want(ctx, P({2}));
    want.add(P({1, 1}), q);
    CHECK(apply_f(1, one) == want);
    CHECK(apply_e(1, FockVector(ctx, P({1, 1}))) == FockVector(ctx, P({1})));
    CHECK(apply_e(1, FockVector(ctx, P({2}))) == FockVector(ctx, P({1}), LaurentPoly::monomial(-1)));
    CHECK(apply_K(1, one, 1) == FockVector(ctx, P({1}), q * q));
    CHECK(apply_K(1, one, -1) == FockVector(ctx, P({1}), LaurentPoly::monomial(-2)));
    CHECK(divided_power_f(1, 2, one) == FockVector(ctx, P({2, 1})));
    CHECK(apply_f(0, one).is_zero());
  }

  TEST_CASE("charge shifts the residue an operator acts on") {
    // at s=1 the operator f_1 adds residue-0 nodes
    FockVector v(FockContext{2, 1}, Partition());
    CHECK(apply_f(1, v) == FockVector(FockContext{2, 1}, P({1})));
    CHECK(apply_f(0, v).is_zero());
  }

  TEST_CASE("sizes go up by one") {
    const FockContext ctx{3, 0};
    for (const auto& p : partitions_of(5))
      for (int i = 0; i < 3; ++i) {
        FockVector v = apply_f(i, FockVector(ctx, p));
        for (const auto& [lam, c] : v.terms()) CHECK(lam.size() == 6);
      }
  }

  TEST_CASE("contexts do not mix") {
    FockVector a(FockContext{2, 0}, P({1})), b(FockContext{2, 1}, P({1}));
    CHECK_THROWS_AS(a += b, ContextMismatch);
  }

  TEST_CASE("beta formulation agrees") {
    for (int n : {2, 3})
      for (int s : {-1, 0, 1, 14}) {
        const FockContext ctx{n, s};
        for (int m = 0; m <= 8; ++m)
          for (const auto& p : partitions_of(m))
            for (int i = 0; i < n; ++i) {
              FockVector v(ctx, p);
              CHECK(from_beta(apply_f_beta(i, to_beta(v))) == apply_f(i, v));
              CHECK(from_beta(apply_e_beta(i, to_beta(v))) == apply_e(i, v));
            }
      }
  }

  TEST_CASE("relations") {
    for (int n : {2, 3})
      for (int s : {0, 1, 14}) {
        auto rep = check_relations(FockContext{n, s}, 5);
        CHECK_MESSAGE(rep.ok(), rep.to_json().dump());
        CHECK(rep.instances > 0);
      }
  }

  TEST_CASE("literal K exponent breaks the commutator at s=1") {
    CHECK(check_relations(FockContext{3, 0}, 4, KConvention::Literal).ok());
    CHECK_FALSE(check_relations(FockContext{3, 1}, 4, KConvention::Literal).ok());
    CHECK_FALSE(check_relations(FockContext{2, 1}, 4, KConvention::Literal).ok());
  }
}
