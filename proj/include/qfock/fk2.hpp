#pragma once

#include "qfock/blocks.hpp"

namespace qfock {

enum class Sign { Up, Down, Inert };

// Which slot of a row with a single bead reads as Up. Calibrated against
// the canonical engine; see kFkConvention.
enum class FkConvention { BeadLeftIsUp, BeadLeftIsDown };
inline constexpr FkConvention kFkConvention = FkConvention::BeadLeftIsUp;

// Symbols of the rows of one 2-runner section that hold exactly one bead,
// by ascending row. Every other row is Inert.
using SignSequence = std::map<int, Sign>;

SignSequence sign_sequence(const BetaSet& b, const RunnerTuple& nt, int section,
                           FkConvention conv = kFkConvention);
std::string to_string(const SignSequence& seq);

struct CupDiagram {
  std::vector<std::pair<int, int>> cups;  // (Down row, Up row), lower row first
  std::vector<int> unmatched;
};
// Bracket matching by ascending row: Down pushes, Up pops.
CupDiagram cup_matching(const SignSequence& seq);
std::string render_cups(const SignSequence& seq, const CupDiagram& cd);
nlohmann::json to_json(const CupDiagram& cd);

// One row of the dual (inverse) block matrix: (-q)^|S| at every member
// obtained by flipping a subset S of lambda's cups from (Down, Up) to
// (Up, Down).
std::map<Partition, LaurentPoly> cup_row(const Partition& lambda, const RunnerTuple& nt, int section, int s,
                                         FkConvention conv = kFkConvention);

// Block column d^t(-, mu) over the 2-runner section `section` of nt,
// obtained by inverting the unitriangular cup matrix of the block. The
// other sections must be trivial (n_j = 1).
std::map<Partition, LaurentPoly> fk_column(const Partition& mu, const RunnerTuple& nt, int section, int s,
                                           FkConvention conv = kFkConvention);

// Normal nodes by bracket cancellation: a removable node is cancelled by
// the nearest free addable node to its right.
std::vector<Node> normal_nodes_bracket(const Partition& p, int n, int r);

// Predicted coefficients of f_k G_t(lambda) in the block canonical basis:
// [1 + #normal nodes right of x]_q at mu = lambda + x for a normal x.
std::map<Partition, LaurentPoly> lbt_coefficients(const Partition& lambda, int k, const RunnerTuple& nt, int s);

// Expansion of f_k G_s(lambda) in canonical basis, restricted to the block
// of lambda.
std::map<Partition, LaurentPoly> block_expansion(const Partition& lambda, int k, const RunnerTuple& nt, int s,
                                                 ColumnCache& cache = default_cache());

// The fk_column oracle against the engine on n = 2 blocks; optionally also
// the monomial and 2^#cups shape of each column.
CheckReport verify_fk(int s, int max_size, bool shape, ColumnCache& cache = default_cache());
CheckReport verify_fk_shape(int s, int max_size, ColumnCache& cache = default_cache());
// Convention check: which labelling reproduces the engine columns.
CheckReport calibrate_fk(FkConvention conv, int max_size, ColumnCache& cache = default_cache());
CheckReport verify_lbt(int p, int max_size, ColumnCache& cache = default_cache());
CheckReport verify_branching(int p, int s, int max_size, ColumnCache& cache = default_cache());

}  // namespace qfock
