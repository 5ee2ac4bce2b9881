#include "doctest.h"
#include "qfock/fk2.hpp"

#include <random>

using namespace qfock;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
const LaurentPoly q = LaurentPoly::monomial(1);

}  // namespace

TEST_SUITE("fk2") {
  TEST_CASE("sign sequences") {
    const RunnerTuple nt({2});
    auto two = sign_sequence(beta_set(P({2}), 0), nt, 0, FkConvention::BeadLeftIsDown);
    CHECK(two == SignSequence{{-1, Sign::Down}, {0, Sign::Up}});
    auto ones = sign_sequence(beta_set(P({1, 1}), 0), nt, 0, FkConvention::BeadLeftIsDown);
    CHECK(ones == SignSequence{{-1, Sign::Up}, {0, Sign::Down}});
    CHECK(sign_sequence(beta_set(P({2}), 0), nt, 0) == ones);
    CHECK(to_string(two) == "DU");
  }

  TEST_CASE("cup matching") {
    auto cd = cup_matching(SignSequence{{-1, Sign::Down}, {0, Sign::Up}});
    CHECK(cd.cups == std::vector<std::pair<int, int>>{{-1, 0}});
    CHECK(cd.unmatched.empty());
    CHECK(cup_matching(SignSequence{{0, Sign::Up}, {1, Sign::Down}}).cups.empty());
    std::mt19937 rng(1);
    for (int k = 0; k < 300; ++k) {
      SignSequence seq;
      for (int r = 0; r < 10; ++r) seq[r] = rng() % 2 ? Sign::Up : Sign::Down;
      auto c = cup_matching(seq);
      CHECK(c.cups.size() * 2 + c.unmatched.size() == seq.size());
      for (const auto& [a, b] : c.cups) {
        CHECK(seq[a] == Sign::Down);
        CHECK(seq[b] == Sign::Up);
        for (const auto& [x, y] : c.cups) CHECK_FALSE((a < x && x < b && b < y));
      }
    }
  }

  TEST_CASE("columns from cups") {
    auto col = fk_column(P({2}), RunnerTuple({2}), 0, 0);
    CHECK(col == std::map<Partition, LaurentPoly>{{P({2}), 1}, {P({1, 1}), q}});
    auto rep = verify_fk(0, 6, false);
    CHECK_MESSAGE(rep.ok(), rep.to_json().dump());
    rep = verify_fk(1, 6, false);
    CHECK_MESSAGE(rep.ok(), rep.to_json().dump());
  }

  TEST_CASE("calibration guard") {
    CHECK(calibrate_fk(FkConvention::BeadLeftIsUp, 6).ok());
    CHECK_FALSE(calibrate_fk(FkConvention::BeadLeftIsDown, 6).ok());
  }

  TEST_CASE("normal nodes: scan and bracket agree") {
    for (int n = 2; n <= 5; ++n)
      for (int m = 0; m <= 8; ++m)
        for (const auto& p : partitions_of(m))
          for (int r = 0; r < n; ++r) CHECK(normal_nodes(p, n, r) == normal_nodes_bracket(p, n, r));
  }

  TEST_CASE("branching coefficients") {
    // f_1 G((1)) = G((2)) at n=2
    const RunnerTuple nt({2});
    auto want = lbt_coefficients(P({1}), 1, nt, 0);
    CHECK(want == std::map<Partition, LaurentPoly>{{P({2}), 1}});
    CHECK(block_expansion(P({1}), 1, nt, 0) == want);
    auto rep = verify_lbt(3, 5);
    CHECK_MESSAGE(rep.ok(), rep.to_json().dump());
    for (int s : {0, 1}) {
      rep = verify_branching(5, s, 5);
      CHECK_MESSAGE(rep.ok(), rep.to_json().dump());
    }
  }
}
