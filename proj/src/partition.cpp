#include "qfock/partition.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qfock {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

bool Partition::is_regular(int n) const {
  int run = 0;
  for (size_t i = 0; i < parts_.size(); ++i) {
    run = (i > 0 && parts_[i] == parts_[i - 1]) ? run + 1 : 1;
    if (run >= n) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition Partition::parse(const std::string& text) {
  auto fail = [&](const std::string& why) -> Partition {
    throw std::invalid_argument("bad partition literal '" + text + "': " + why);
  };
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') return fail("expected parentheses");
  t = t.substr(1, t.size() - 2);
  std::vector<int> parts;
  if (!t.empty()) {
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) return fail("empty entry");
      auto caret = item.find('^');
      int value = 0, mult = 1;
      try {
        size_t used = 0;
        value = std::stoi(item.substr(0, caret), &used);
        if (used != (caret == std::string::npos ? item.size() : caret)) return fail("not a number");
        if (caret != std::string::npos) {
          mult = std::stoi(item.substr(caret + 1), &used);
          if (used != item.size() - caret - 1) return fail("bad exponent");
        }
      } catch (const std::logic_error&) {
        return fail("not a number");
      }
      if (value < 0 || mult < 0) return fail("negative entry");
      for (int k = 0; k < mult; ++k) parts.push_back(value);
    }
    if (t.back() == ',') return fail("trailing comma");
  }
  for (size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) return fail("not weakly decreasing");
  return Partition(parts);
}

int residue(const Node& x, int n) { return mod(x.col - x.row, n); }

bool adjacent_residues(int a, int b, int n) {
  int d = mod(a - b, n);
  return d == 1 || d == n - 1;
}

std::vector<ResNode> addable_nodes(const Partition& p, int n) {
  std::vector<ResNode> out;
  for (int i = p.length() + 1; i >= 1; --i) {
    if (i == 1 || p.part(i - 1) > p.part(i)) {
      Node x{i, p.part(i) + 1};
      out.push_back({x, residue(x, n)});
    }
  }
  return out;
}

std::vector<ResNode> removable_nodes(const Partition& p, int n) {
  std::vector<ResNode> out;
  for (int i = p.length(); i >= 1; --i) {
    if (p.part(i) > p.part(i + 1)) {
      Node x{i, p.part(i)};
      out.push_back({x, residue(x, n)});
    }
  }
  return out;
}

std::vector<Node> nodes(const Partition& p) {
  std::vector<Node> out;
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.part(i); ++j) out.push_back({i, j});
  return out;
}

Partition add_node(const Partition& p, const Node& x) {
  std::vector<int> v = p.parts();
  if (x.row == p.length() + 1 && x.col == 1) {
    v.push_back(1);
  } else if (x.row >= 1 && x.row <= p.length() && x.col == p.part(x.row) + 1 &&
             (x.row == 1 || p.part(x.row - 1) > p.part(x.row))) {
    v[static_cast<size_t>(x.row - 1)] += 1;
  } else {
    throw std::invalid_argument("node is not addable");
  }
  return Partition(v);
}

Partition remove_node(const Partition& p, const Node& x) {
  if (x.row < 1 || x.row > p.length() || x.col != p.part(x.row) || p.part(x.row + 1) >= x.col)
    throw std::invalid_argument("node is not removable");
  std::vector<int> v = p.parts();
  v[static_cast<size_t>(x.row - 1)] -= 1;
  return Partition(v);
}

std::vector<Node> normal_nodes(const Partition& p, int n, int r) {
  struct Mark {
    int col;
    bool removable;
    Node node;
  };
  std::vector<Mark> marks;
  for (const auto& a : addable_nodes(p, n))
    if (a.res == r) marks.push_back({a.node.col, false, a.node});
  for (const auto& x : removable_nodes(p, n))
    if (x.res == r) marks.push_back({x.node.col, true, x.node});
  std::sort(marks.begin(), marks.end(), [](const Mark& a, const Mark& b) { return a.col < b.col; });

  std::vector<Node> out;
  for (size_t k = 0; k < marks.size(); ++k) {
    if (!marks[k].removable) continue;
    bool ok = true;
    for (size_t m = k + 1; m < marks.size() && ok; ++m) {
      int nr = 0, na = 0;
      for (size_t u = k + 1; u <= m; ++u) (marks[u].removable ? nr : na) += 1;
      if (nr < na) ok = false;
    }
    if (ok) out.push_back(marks[k].node);
  }
  return out;
}

int lex_compare(const Partition& a, const Partition& b) {
  auto c = a <=> b;
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

RimHook unwrap_rim_hook(const Partition& p, const Node& x) {
  if (x.row < 1 || x.row > p.length() || x.col < 1 || x.col > p.part(x.row))
    throw std::invalid_argument("node " + std::to_string(x.row) + "," + std::to_string(x.col) +
                                " is not in the diagram of " + p.to_string());
  std::vector<int> v = p.parts();
  RimHook h;
  int last = x.row;
  for (int i = x.row; i <= p.length() && p.part(i) >= x.col; ++i) {
    int keep = std::max(x.col, p.part(i + 1)) - 1;
    h.size += p.part(i) - keep;
    v[static_cast<size_t>(i - 1)] = keep;
    last = i;
  }
  h.leg = last - x.row;
  h.rest = Partition(v);
  return h;
}

bool wrap_rim_hook(const Partition& rest, int foot_row, int size, Partition& out) {
  if (foot_row < 1 || size < 1) return false;
  int len = std::max(rest.length(), foot_row) + size + 1;
  std::vector<int> beta(static_cast<size_t>(len));
  for (int i = 1; i <= len; ++i) beta[static_cast<size_t>(i - 1)] = rest.part(i) - i;
  int from = beta[static_cast<size_t>(foot_row - 1)];
  int to = from + size;
  if (std::find(beta.begin(), beta.end(), to) != beta.end()) return false;
  beta[static_cast<size_t>(foot_row - 1)] = to;
  std::sort(beta.begin(), beta.end(), std::greater<int>());
  std::vector<int> parts;
  for (int i = 1; i <= len; ++i) parts.push_back(beta[static_cast<size_t>(i - 1)] + i);
  out = Partition(parts);
  return true;
}

Partition strip_first_rows(const Partition& p, int k) {
  if (k < 0 || k > p.length()) throw std::out_of_range("strip_first_rows: k out of range");
  return Partition(std::vector<int>(p.parts().begin() + k, p.parts().end()));
}

std::vector<Partition> move_node_variants(const Partition& mu, int n, int r) {
  std::set<Partition> found;
  for (const auto& x : removable_nodes(mu, n)) {
    if (x.res != r) continue;
    Partition mid = remove_node(mu, x.node);
    for (const auto& a : addable_nodes(mid, n)) {
      if (a.res != r) continue;
      Partition lam = add_node(mid, a.node);
      if (lam != mu) found.insert(lam);
    }
  }
  return {found.rbegin(), found.rend()};
}

namespace {
void gen(int m, int maxp, std::vector<int>& cur, std::vector<Partition>& out) {
  if (m == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(m, maxp); p >= 1; --p) {
    cur.push_back(p);
    gen(m - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (m >= 0) gen(m, m, cur, out);
  return out;
}

void to_json(nlohmann::json& j, const Partition& p) { j = p.parts(); }

void from_json(const nlohmann::json& j, Partition& p) { p = Partition(j.get<std::vector<int>>()); }

}  // namespace qfock
