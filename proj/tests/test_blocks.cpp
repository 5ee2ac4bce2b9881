#include "doctest.h"
#include "qfock/blocks.hpp"

using namespace qfock;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

std::map<int, std::set<Node>> by_residue(const Partition& p, int n) {
  std::map<int, std::set<Node>> out;
  for (const auto& x : nodes(p)) out[residue(x, n)].insert(x);
  return out;
}

}  // namespace

TEST_SUITE("blocks") {
  TEST_CASE("runner tuples") {
    CHECK(runner_tuples(4, 2) == std::vector<RunnerTuple>{RunnerTuple({1, 3}), RunnerTuple({2, 2}), RunnerTuple({3, 1})});
    CHECK(runner_tuples(3, 3) == std::vector<RunnerTuple>{RunnerTuple({1, 1, 1})});
    CHECK(runner_tuples(2, 3).empty());
  }

  TEST_CASE("vacuum block") {
    const RunnerTuple nt({2});
    BlockId b = block_of(Partition(), nt, 0);
    std::vector<Partition> want;
    for (int m = 0; m <= 2; ++m)
      for (const auto& p : partitions_of(m))
        if (block_signature(beta_set(p, 0), nt) == b.t) want.push_back(p);
    auto got = block_members(b, 2);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
    CHECK(b.t.charge() == 0);
  }

  TEST_CASE("signature and residue descriptions agree") {
    for (int n = 3; n <= 4; ++n)
      for (int r = 2; r <= 3; ++r)
        for (const auto& nt : runner_tuples(n, r))
          for (int s : {0, 1})
            for (int m = 0; m <= 6; ++m) {
              auto ps = partitions_of(m);
              for (const auto& a : ps)
                for (const auto& b : ps)
                  CHECK((block_of(a, nt, s) == block_of(b, nt, s)) == same_block_by_residues(a, b, nt, s));
            }
  }

  TEST_CASE("base partition is the smallest member") {
    const RunnerTuple nt({1, 2});
    for (int m = 0; m <= 6; ++m)
      for (const auto& p : partitions_of(m)) {
        BlockId b = block_of(p, nt, 0);
        Partition base = base_partition(b.t);
        CHECK(block_of(base, nt, 0) == b);
        for (const auto& x : block_members(b, 8)) CHECK(base.size() <= x.size());
      }
  }

  TEST_CASE("projection") {
    const RunnerTuple nt({1, 2});
    auto g = canonical_column(P({3, 2}), 3);
    FockVector v = column_vector(*g, 0);
    FockVector sum(v.context());
    std::vector<BlockId> seen;
    for (const auto& [lam, c] : v.terms()) {
      BlockId b = block_of(lam, nt, 0);
      if (std::find(seen.begin(), seen.end(), b) != seen.end()) continue;
      seen.push_back(b);
      FockVector pv = project(v, b);
      CHECK(project(pv, b) == pv);
      sum += pv;
    }
    CHECK(sum == v);
    CHECK(project(v, block_of(P({3, 2}), nt, 0)).coeff(P({3, 2})) == LaurentPoly(1));
    CHECK_THROWS(project(v, block_of(P({3, 2}), nt, 1)));
  }

  TEST_CASE("runner products") {
    const RunnerTuple nt({1, 2});
    CHECK(runner_product_d(P({3, 1}), P({3, 1}), nt, 0) == LaurentPoly(1));
    CHECK_THROWS_AS(runner_product_d(P({3}), P({2, 1}), RunnerTuple({1, 1, 1}), 0), BlockMismatch);
    // n=(1,1): every block has one member of each size
    const RunnerTuple ones({1, 1});
    for (int m = 0; m <= 6; ++m)
      for (const auto& a : partitions_of(m))
        for (const auto& b : partitions_of(m))
          if (block_of(a, ones, 0) == block_of(b, ones, 0)) CHECK(runner_product_d(a, b, ones, 0) == LaurentPoly(a == b ? 1 : 0));
  }

  TEST_CASE("decomposition theorem at small size") {
    for (auto choice : {BeadChoice::Rightmost, BeadChoice::Leftmost}) {
      auto rep = verify_decomp(RunnerTuple({1, 2}), 0, 6, choice);
      CHECK_MESSAGE(rep.ok(), rep.to_json().dump());
      CHECK(rep.instances > 0);
    }
    auto rep = verify_decomp(RunnerTuple({2, 1, 1}), 1, 5);
    CHECK_MESSAGE(rep.ok(), rep.to_json().dump());
  }

  TEST_CASE("runner removal at small size") {
    for (int m = 0; m <= 6; ++m) {
      auto rep = verify_runner_removal(RunnerTuple({2, 2}), 1, m);
      CHECK_MESSAGE(rep.ok(), rep.to_json().dump());
    }
  }

  TEST_CASE("operators away from the section boundaries stay in the block") {
    auto rep = verify_project_commutes(4, RunnerTuple({2, 2}), 0, 6);
    CHECK_MESSAGE(rep.ok(), rep.to_json().dump());
    CHECK(rep.instances > 0);
  }

  TEST_CASE("residue tuples") {
    auto empty = residue_tuple({}, 3);
    CHECK(empty.s == 0);
    CHECK(empty.nt == RunnerTuple({1, 1, 1}));
    auto zero = residue_tuple({0}, 3);
    CHECK(zero.s == 1);
    CHECK(zero.nt == RunnerTuple({2, 1}));
    CHECK_THROWS(residue_tuple({0, 1}, 3));
    CHECK_THROWS(residue_tuple({0, 4}, 5));
    for (int p : {3, 5})
      for (const auto& I : nonadjacent_sets(p, 2)) {
        auto lt = residue_tuple(I, p);
        for (int j = 0; j < lt.nt.size(); ++j) CHECK((lt.nt.part(j) == 1 || lt.nt.part(j) == 2));
        CHECK(lt.s == (I.count(0) ? 1 : 0));
        for (int m = 0; m <= 7; ++m) {
          auto ps = partitions_of(m);
          for (const auto& a : ps) {
            auto ra = by_residue(a, p);
            for (const auto& b : ps) {
              auto rb = by_residue(b, p);
              bool only_I = true;
              for (int r = 0; r < p; ++r)
                if (!I.count(r) && ra[r] != rb[r]) only_I = false;
              if (only_I) CHECK(block_of(a, lt.nt, lt.s) == block_of(b, lt.nt, lt.s));
            }
          }
        }
      }
  }

  TEST_CASE("move products") {
    auto rep = verify_moves(5, 6, 2);
    CHECK_MESSAGE(rep.ok(), rep.to_json().dump());
    CHECK(rep.instances > 0);
    auto trivial = verify_move_product(P({3, 1}), 5, {});
    CHECK(trivial.instances == 1);
    CHECK(trivial.ok());
  }
}
