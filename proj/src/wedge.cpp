#include "wedge.hpp"

#include <stdexcept>
#include <unordered_map>

namespace qfock::detail {

namespace {

using Wedge = std::vector<int>;
using Expansion = std::vector<std::pair<Wedge, LaurentPoly>>;

struct WedgeHash {
  size_t operator()(const Wedge& w) const noexcept {
    size_t h = w.size();
    for (int x : w) h = h * 1000003u ^ static_cast<size_t>(x + 0x9e3779b9);
    return h;
  }
};

class Straightener {
 public:
  explicit Straightener(int n) : n_(n) {}

  // Rewrites u_{w_0} ^ u_{w_1} ^ ... into strictly decreasing wedges.
  const Expansion& run(const Wedge& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    Expansion out;
    size_t j = 0;
    while (j + 1 < w.size() && w[j] > w[j + 1]) ++j;
    if (j + 1 == w.size()) {
      out.emplace_back(w, LaurentPoly(1));
    } else if (w[j] != w[j + 1]) {
      const int l = w[j], m = w[j + 1];
      const int i = mod(m - l, n_);
      std::map<Wedge, LaurentPoly> acc;
      auto push = [&](int a, int b, const LaurentPoly& c) {
        Wedge v = w;
        v[j] = a;
        v[j + 1] = b;
        for (const auto& [x, d] : run(v)) {
          auto& slot = acc[x];
          slot += d * c;
        }
      };
      if (i == 0) {
        push(m, l, -1);
      } else {
        push(m, l, -LaurentPoly::monomial(-1));
        const LaurentPoly base = LaurentPoly::monomial(-2) - 1;
        for (int k = 0;; ++k) {
          int d = (k % 2 == 0) ? (k / 2) * n_ + i : ((k + 1) / 2) * n_;
          if (!(m - d > l + d)) break;
          push(m - d, l + d, base * LaurentPoly::monomial(-k, k % 2 ? -1 : 1));
        }
      }
      for (auto& [x, c] : acc)
        if (!c.is_zero()) out.emplace_back(x, std::move(c));
    }
    return memo_.emplace(w, std::move(out)).first->second;
  }

 private:
  int n_;
  std::unordered_map<Wedge, Expansion, WedgeHash> memo_;
};

}  // namespace

std::map<Partition, LaurentPoly> bar_basis(const Partition& lambda, int n) {
  const int r = n * ((lambda.length() + lambda.size()) / n + 1);
  Wedge ks(static_cast<size_t>(r));
  for (int i = 1; i <= r; ++i) ks[static_cast<size_t>(i - 1)] = lambda.part(i) - i;
  long long kappa = 0;
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b)
      if (mod(ks[static_cast<size_t>(a)] - ks[static_cast<size_t>(b)], n) == 0) ++kappa;
  const long long c2 = static_cast<long long>(r) * (r - 1) / 2;
  const LaurentPoly norm = LaurentPoly::monomial(static_cast<int>(c2 - kappa), c2 % 2 ? -1 : 1);

  Wedge rev(ks.rbegin(), ks.rend());
  Straightener st(n);
  std::map<Partition, LaurentPoly> out;
  for (const auto& [w, c] : st.run(rev)) {
    std::vector<int> parts;
    for (int i = 0; i < r; ++i) parts.push_back(w[static_cast<size_t>(i)] + i + 1);
    // Partition's ctor rejects anything that is not weakly decreasing
    Partition p(parts);
    auto& slot = out[p];
    slot += c * norm;
    if (slot.is_zero()) out.erase(p);
  }
  return out;
}

}  // namespace qfock::detail
