#pragma once

#include "qfock/canonical.hpp"

#include <set>

namespace qfock {

struct BlockId {
  BlockSignature t;
  int s = 0;
  friend bool operator==(const BlockId&, const BlockId&) = default;
};

// All compositions of n into r positive parts, lexicographically.
std::vector<RunnerTuple> runner_tuples(int n, int r);

BlockId block_of(const Partition& p, const RunnerTuple& nt, int s);

struct BlockMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

FockVector project(const FockVector& v, const BlockId& b);

// Same node sets at every residue sigma_j - s (the residue description of
// a block).
bool same_block_by_residues(const Partition& a, const Partition& b, const RunnerTuple& nt, int s);

// Members of sizes 0..size_limit. Both descriptions are computed and must
// agree; a disagreement throws.
std::vector<Partition> block_members(const BlockId& b, int size_limit);
// Members of one exact size, sorted decreasingly.
std::vector<Partition> block_members_of_size(const BlockId& b, int size);

// prod_j d^{n_j}(lambda^(j), mu^(j)) with d^1 the Kronecker delta.
LaurentPoly runner_product_d(const Partition& lambda, const Partition& mu, const RunnerTuple& nt, int s,
                             ColumnCache& cache = default_cache());
// The column of G_t(mu) assembled from the split components.
std::map<Partition, LaurentPoly> runner_product_column(const Partition& mu, const RunnerTuple& nt, int s,
                                                       ColumnCache& cache = default_cache());

enum class BeadChoice { Rightmost, Leftmost };

// G_t(mu) built inside its block only: strip a left-packed bottom row, or
// step one bead within its section and eliminate against smaller block
// columns. Uses nothing but f at level n.
class BlockInduction {
 public:
  BlockInduction(RunnerTuple nt, BeadChoice choice) : nt_(std::move(nt)), choice_(choice) {}
  const std::map<Partition, LaurentPoly>& column(const Partition& mu, int s);

 private:
  RunnerTuple nt_;
  BeadChoice choice_;
  std::map<std::pair<Partition, int>, std::map<Partition, LaurentPoly>> memo_;
};

// pi_t(G_s(mu)) against the runner factorisation and the block induction,
// for every mu of size <= max_size.
CheckReport verify_decomp(const RunnerTuple& nt, int s, int max_size, BeadChoice choice = BeadChoice::Rightmost,
                          ColumnCache& cache = default_cache());
// d^n = product of component d's on all same-block pairs of one size.
CheckReport verify_runner_removal(const RunnerTuple& nt, int s, int size, ColumnCache& cache = default_cache());

struct ResidueTuple {
  int s;
  RunnerTuple nt;
};
ResidueTuple residue_tuple(const std::set<int>& I, int p);
// Subsets of Z/p of size <= max_size with no two elements adjacent.
std::vector<std::set<int>> nonadjacent_sets(int p, int max_size);

// All lambda reached from mu by moving nodes at every residue of I (and
// nowhere else): d_{lambda mu} = prod_i d_{lambda(i) mu}, also matched
// against the runner factorisation through residue_tuple.
CheckReport verify_move_product(const Partition& mu, int p, const std::set<int>& I,
                                ColumnCache& cache = default_cache());

// verify_move_product for every mu of size <= max_size and every
// non-adjacent I with |I| <= max_residues.
CheckReport verify_moves(int p, int max_size, int max_residues, ColumnCache& cache = default_cache());

CheckReport verify_project_commutes(int n, const RunnerTuple& nt, int s, int size_limit);

}  // namespace qfock
