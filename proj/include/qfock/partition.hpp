#pragma once

#include "json.hpp"

#include <compare>
#include <string>
#include <vector>

namespace qfock {

// Weakly decreasing positive parts; trailing zeros are never stored.
// The defaulted comparison is lexicographic on parts, which is exactly
// the lexicographic order on partitions.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // validates

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  // 1-based row; 0 beyond the last part
  int part(int row) const { return row >= 1 && row <= length() ? parts_[static_cast<size_t>(row - 1)] : 0; }

  bool is_regular(int n) const;  // no part repeated n or more times

  std::string to_string() const;                         // "(3,2,1)", "()"
  static Partition parse(const std::string& text);       // accepts (3,1^2)

  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct Node {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Node&, const Node&) = default;
};

inline int mod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

int residue(const Node& x, int n);
bool adjacent_residues(int a, int b, int n);

struct ResNode {
  Node node;
  int res;
};

// Listed left to right, i.e. by increasing column.
std::vector<ResNode> addable_nodes(const Partition& p, int n);
std::vector<ResNode> removable_nodes(const Partition& p, int n);
std::vector<Node> nodes(const Partition& p);

Partition add_node(const Partition& p, const Node& x);
Partition remove_node(const Partition& p, const Node& x);

// Removable residue-r nodes x such that every residue-r addable or
// removable node m right of x has #removable >= #addable among the
// residue-r nodes in the column interval (x, m].
std::vector<Node> normal_nodes(const Partition& p, int n, int r);

int lex_compare(const Partition& a, const Partition& b);  // -1, 0, 1

struct RimHook {
  Partition rest;
  int size = 0;
  int leg = 0;  // rows spanned minus one
};
// Removes h_{a,b} = {(i,j) in [p] : i >= a, j >= max(b, p_{i+1})}.
RimHook unwrap_rim_hook(const Partition& p, const Node& x);
// Inverse of unwrap: slides the bead of row `foot_row` of `rest` up by
// `size`. foot_row is the lowest row the hook occupies (top row + leg).
// Returns false when the target position is occupied.
bool wrap_rim_hook(const Partition& rest, int foot_row, int size, Partition& out);

Partition n_core(const Partition& p, int n);
Partition strip_first_rows(const Partition& p, int k);
std::vector<Partition> move_node_variants(const Partition& mu, int n, int r);

// All partitions of m, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int m);

void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);

}  // namespace qfock
