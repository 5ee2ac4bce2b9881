#include "doctest.h"
#include "qfock/blocks.hpp"

#include <algorithm>
#include <set>

using namespace qfock;

namespace {

const Partition kFig({13, 12, 10, 8, 8, 8, 6, 5, 5, 3, 2, 1, 1});
const std::vector<int> kFigBeads{26, 24, 21, 18, 17, 16, 13, 11, 10, 7, 5, 3, 2, 0};

int hook_length(const Partition& p, const Node& x) {
  int leg = 0;
  while (p.part(x.row + leg + 1) >= x.col) ++leg;
  return p.part(x.row) - x.col + leg + 1;
}

}  // namespace

TEST_SUITE("abacus") {
  TEST_CASE("worked example bead set") {
    BetaSet b = beta_set(kFig, 14);
    CHECK(b.beads_from(0) == kFigBeads);
    CHECK(b.contains(-1));
    CHECK(b.contains(-100));
    CHECK(b.charge() == 14);
    CHECK(par(b) == kFig);
    CHECK(b == BetaSet::from_beads(0, kFigBeads));
  }

  TEST_CASE("beta round trip") {
    for (int m = 0; m <= 10; ++m)
      for (const auto& p : partitions_of(m))
        for (int s = -3; s <= 3; ++s) {
          BetaSet b = beta_set(p, s);
          CHECK(par(b) == p);
          CHECK(b.charge() == s);
        }
    // the normal form does not depend on how the set is described
    CHECK(BetaSet::from_beads(-5, {-5, -4, 5}) == BetaSet::from_beads(-3, {5}));
  }

  TEST_CASE("worked example picture") {
    const std::string want =
        "   0 1 2 3 4 5 6 7 8\n"
        "-2 o o o o o o o o o\n"
        "-1 o o o o o o o o o\n"
        " 0 o . o o . o . o .\n"
        " 1 . o o . o . . o o\n"
        " 2 o . . o . . o . o\n";
    RenderOptions opt;
    opt.rows = std::make_pair(-2, 2);
    std::string got = render_abacus(beta_set(kFig, 14), 9, opt);
    CHECK(got == want);
    CHECK(std::count(got.begin(), got.end(), 'o') == 32);
  }

  TEST_CASE("vacuum picture") {
    CHECK(render_abacus(BetaSet(), 2) == "   0 1\n-1 o o\n 0 . .\n");
  }

  TEST_CASE("worked example sections under 4,2,3") {
    BetaSet b = beta_set(kFig, 14);
    RunnerTuple nt({4, 2, 3});
    using V = std::vector<int>;
    CHECK(section_set(b, nt, 0, 0) == V{0, 2, 3});
    CHECK(section_set(b, nt, 0, 1) == V{1});
    CHECK(section_set(b, nt, 0, 2) == V{1});
    CHECK(section_set(b, nt, 1, 0) == V{1, 2});
    CHECK(section_set(b, nt, 1, 1) == V{0});
    CHECK(section_set(b, nt, 1, 2) == V{1, 2});
    CHECK(section_set(b, nt, 2, 0) == V{0, 3});
    CHECK(section_set(b, nt, 2, 1) == V{});
    CHECK(section_set(b, nt, 2, 2) == V{0, 2});
    BlockSignature t = block_signature(b, nt);
    CHECK(t.count(1, 0) == 2);
    CHECK(t.count(1, 1) == 1);
    CHECK(t.count(1, 2) == 2);
    CHECK(t.count(-1, 1) == 2);
    CHECK(t.count(3, 0) == 0);
    CHECK(t.charge() == 14);
  }

  TEST_CASE("worked example runner split") {
    // each section read as a smaller abacus, rows kept
    auto parts = runner_split(beta_set(kFig, 14), RunnerTuple({4, 2, 3}));
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].beads.beads_from(0) == std::vector<int>{11, 8, 6, 5, 3, 2, 0});
    CHECK(parts[0].charge == 7);
    CHECK(parts[1].beads.beads_from(0) == std::vector<int>{2, 1});
    CHECK(parts[1].charge == 2);
    CHECK(parts[2].beads.beads_from(0) == std::vector<int>{8, 6, 5, 4, 1});
    CHECK(parts[2].charge == 5);
  }

  TEST_CASE("split and merge round trip") {
    for (int n = 2; n <= 5; ++n)
      for (int r = 1; r <= n; ++r)
        for (const auto& nt : runner_tuples(n, r))
          for (int m = 0; m <= 8; ++m)
            for (const auto& p : partitions_of(m))
              for (int s : {-1, 0, 1}) {
                BetaSet b = beta_set(p, s);
                auto parts = runner_split(b, nt);
                std::vector<BetaSet> bs;
                int total = 0;
                for (const auto& c : parts) {
                  bs.push_back(c.beads);
                  total += c.charge;
                  CHECK(c.beads.charge() == c.charge);
                }
                CHECK(total == s);
                CHECK(runner_merge(bs, nt) == b);
              }
  }

  TEST_CASE("bead moves are rim hooks") {
    for (int n = 2; n <= 4; ++n)
      for (int m = 0; m <= 8; ++m)
        for (const auto& p : partitions_of(m)) {
          BetaSet b = beta_set(p, 0);
          std::set<Partition> by_beads, by_hooks;
          for (int x : b.beads_from(b.floor()))
            if (!b.contains(x - n)) by_beads.insert(par(move_bead(b, x, x - n)));
          for (const auto& x : nodes(p))
            if (hook_length(p, x) == n) by_hooks.insert(unwrap_rim_hook(p, x).rest);
          CHECK(by_beads == by_hooks);
        }
  }

  TEST_CASE("jantzen order") {
    BetaSet two = beta_set(Partition({2}), 0), oneone = beta_set(Partition({1, 1}), 0);
    auto succ = jantzen_successors(two, 2);
    CHECK(std::find(succ.begin(), succ.end(), oneone) != succ.end());
    CHECK(jantzen_geq(two, oneone, 2));
    CHECK_FALSE(jantzen_geq(oneone, two, 2));
    CHECK_THROWS_AS(jantzen_geq(beta_set(Partition({8}), 0), beta_set(Partition({1, 1, 1, 1, 1, 1, 1, 1}), 0), 2, 2),
                    JantzenLimitExceeded);
  }

  TEST_CASE("jantzen steps lower the block signature") {
    for (int n = 3; n <= 4; ++n)
      for (int r = 2; r <= 3; ++r)
        for (const auto& nt : runner_tuples(n, r))
          for (int m = 0; m <= 6; ++m)
            for (const auto& p : partitions_of(m)) {
              BetaSet b = beta_set(p, 0);
              auto tb = block_signature(b, nt);
              for (const auto& c : jantzen_successors(b, n)) {
                auto cmp = compare_signatures(block_signature(c, nt), tb);
                REQUIRE(cmp.has_value());
                CHECK(*cmp <= 0);
              }
            }
  }

  TEST_CASE("json") {
    nlohmann::json j;
    to_json(j, beta_set(Partition({2}), 0));
    CHECK(j.dump() == R"({"beads":[1],"floor":-1})");
    BetaSet b;
    from_json(j, b);
    CHECK(par(b) == Partition({2}));
  }
}
