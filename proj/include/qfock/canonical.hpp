#pragma once

#include "qfock/fock.hpp"

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace qfock {

struct CanonicalColumn {
  Partition mu;
  int n = 2;
  std::map<Partition, LaurentPoly> entries;  // lambda -> d_{lambda mu}(q)

  LaurentPoly d(const Partition& lambda) const {
    auto it = entries.find(lambda);
    return it == entries.end() ? LaurentPoly() : it->second;
  }
  friend bool operator==(const CanonicalColumn&, const CanonicalColumn&) = default;
};

struct LadderStep {
  int residue;  // unshifted; the operator index is residue + s
  int count;
  friend bool operator==(const LadderStep&, const LadderStep&) = default;
};
using LadderPlan = std::vector<LadderStep>;

// Forward applies ladders in increasing order. Reverse permutes every run
// of pairwise commuting steps backwards, which must not change anything.
enum class TieBreak { Forward, Reverse };

LadderPlan ladder_plan(const Partition& mu, int n, TieBreak tb = TieBreak::Forward);
FockVector apply_plan(const LadderPlan& plan, const FockContext& ctx);

struct TriangularityFault : std::logic_error {
  using std::logic_error::logic_error;
};
// A(mu): the plan applied to the empty partition. Throws TriangularityFault
// unless mu appears with coefficient 1 above lex-smaller terms only.
FockVector first_approx(const Partition& mu, int n, int s, TieBreak tb = TieBreak::Forward);

// Auto uses ladders for n-regular mu and the wedge bar involution for the
// rest. Wedge uses the involution for every mu.
enum class Strategy { Auto, Ladder, Wedge };

// Columns keyed by (n, mu). Many readers, exclusive insertion; inserting a
// column that is already present is a no-op.
class ColumnCache {
 public:
  std::shared_ptr<const CanonicalColumn> find(int n, const Partition& mu) const;
  std::shared_ptr<const CanonicalColumn> insert(CanonicalColumn col);
  std::shared_ptr<const std::map<Partition, LaurentPoly>> find_bar(int n, const Partition& lam) const;
  std::shared_ptr<const std::map<Partition, LaurentPoly>> insert_bar(int n, const Partition& lam,
                                                                      std::map<Partition, LaurentPoly> v);
  std::vector<std::shared_ptr<const CanonicalColumn>> columns() const;
  size_t size() const;
  void clear();

  long long hits() const { return hits_; }
  long long misses() const { return misses_; }
  long long negative_flags() const { return negative_flags_; }
  void flag_negative() { ++negative_flags_; }

 private:
  mutable std::shared_mutex mu_;
  std::map<std::pair<int, Partition>, std::shared_ptr<const CanonicalColumn>> cols_;
  std::map<std::pair<int, Partition>, std::shared_ptr<const std::map<Partition, LaurentPoly>>> bars_;
  mutable std::atomic<long long> hits_{0}, misses_{0};
  std::atomic<long long> negative_flags_{0};
};

ColumnCache& default_cache();

// Cached G(mu).
std::shared_ptr<const CanonicalColumn> canonical_column(const Partition& mu, int n,
                                                        ColumnCache& cache = default_cache());

// Computes G(mu) from scratch at the top level with the chosen route;
// smaller columns still come from the cache. Used to cross-check routes.
CanonicalColumn compute_column(const Partition& mu, int n, Strategy strategy, TieBreak tb,
                               ColumnCache& cache = default_cache());

// bar(|lambda>) in the standard basis, cached.
std::shared_ptr<const std::map<Partition, LaurentPoly>> bar_of_basis(const Partition& lam, int n,
                                                                      ColumnCache& cache = default_cache());
FockVector bar_vector(const FockVector& v, ColumnCache& cache = default_cache());

struct DecompositionMatrix {
  int n = 2;
  int m = 0;
  std::vector<Partition> labels;                // decreasing lex
  std::vector<std::vector<LaurentPoly>> entry;  // entry[row lambda][col mu]
};
DecompositionMatrix decomposition_matrix(int n, int m, ColumnCache& cache = default_cache());

FockVector column_vector(const CanonicalColumn& col, int s);

// Expresses v in the canonical basis {G_s(mu)} by back-substitution.
std::map<Partition, LaurentPoly> expand_in_canonical(const FockVector& v, ColumnCache& cache = default_cache());

std::map<Partition, BigInt> evaluate_at_one(const CanonicalColumn& col);

// Unitriangularity, off-diagonal entries in qN[q], lex support and (if
// asked) support inside the Jantzen down-set of mu.
CheckReport check_column(const CanonicalColumn& col, bool jantzen);
// check_column over every mu of size <= max_size.
CheckReport verify_columns(int n, int max_size, bool jantzen, ColumnCache& cache = default_cache());
// f_i G_s(lambda) expanded in the canonical basis has bar-symmetric
// coefficients, for every lambda of size <= max_size and every i.
CheckReport verify_bar_symmetry(int n, int s, int max_size, ColumnCache& cache = default_cache());

nlohmann::json to_json(const CanonicalColumn& col);
CanonicalColumn column_from_json(const nlohmann::json& j);

}  // namespace qfock
