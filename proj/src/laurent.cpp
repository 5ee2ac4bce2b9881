#include "qfock/laurent.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qfock {

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) terms_.emplace_back(0, BigInt(c));
}

LaurentPoly LaurentPoly::monomial(int exp, BigInt coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace_back(exp, std::move(coeff));
  return p;
}

BigInt LaurentPoly::coeff(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exp) return it->second;
  return 0;
}

int LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
  return terms_.front().first;
}

int LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
  return terms_.back().first;
}

void LaurentPoly::add_scaled(const LaurentPoly& o, int sign) {
  if (o.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.emplace_back(b->first, sign > 0 ? b->second : BigInt(-b->second));
      ++b;
    } else {
      BigInt c = sign > 0 ? BigInt(a->second + b->second) : BigInt(a->second - b->second);
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  add_scaled(o, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  add_scaled(o, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) {
    LaurentPoly r;
    r.terms_.reserve(a.terms_.size());
    for (const auto& [e, c] : a.terms_)
      r.terms_.emplace_back(e + b.terms_[0].first, c * b.terms_[0].second);
    return r;
  }
  int lo = a.min_exp() + b.min_exp();
  int hi = a.max_exp() + b.max_exp();
  std::vector<BigInt> acc(static_cast<size_t>(hi - lo + 1));
  for (const auto& [e, c] : a.terms_)
    for (const auto& [f, d] : b.terms_) acc[static_cast<size_t>(e + f - lo)] += c * d;
  LaurentPoly r;
  for (int k = 0; k <= hi - lo; ++k)
    if (acc[static_cast<size_t>(k)] != 0) r.terms_.emplace_back(lo + k, std::move(acc[static_cast<size_t>(k)]));
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first += k;
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool at_digit() {
    skip();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  std::string digits() {
    skip();
    size_t b = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(b, pos - b);
  }
  [[noreturn]] void fail() const {
    throw std::invalid_argument("cannot parse Laurent polynomial: '" + s + "'");
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
  Lexer lx{text};
  LaurentPoly out;
  lx.skip();
  if (lx.pos == text.size()) lx.fail();
  bool first = true;
  while (true) {
    lx.skip();
    if (lx.pos == text.size()) break;
    int sign = 1;
    if (lx.eat('+')) {
    } else if (lx.eat('-')) {
      sign = -1;
    } else if (!first) {
      lx.fail();
    }
    first = false;
    BigInt c = 1;
    int e = 0;
    bool have_num = false;
    if (lx.at_digit()) {
      c = BigInt(lx.digits());
      have_num = true;
    }
    if (have_num && !lx.eat('*')) {
      out += monomial(0, sign * c);
      continue;
    }
    if (!lx.eat('q')) lx.fail();
    e = 1;
    if (lx.eat('^')) {
      int es = 1;
      if (lx.eat('-')) es = -1;
      std::string d = lx.digits();
      if (d.empty()) lx.fail();
      e = es * std::stoi(d);
    }
    out += monomial(e, sign * c);
  }
  return out;
}

LaurentPoly bar(const LaurentPoly& p) {
  LaurentPoly r;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    r += LaurentPoly::monomial(-it->first, it->second);
  return r;
}

BigInt evaluate_at_one(const LaurentPoly& p) {
  BigInt s = 0;
  for (const auto& t : p.terms()) s += t.second;
  return s;
}

bool is_bar_symmetric(const LaurentPoly& p) { return bar(p) == p; }

bool in_qZq(const LaurentPoly& p) { return p.is_zero() || p.min_exp() >= 1; }

bool in_qNq(const LaurentPoly& p) {
  if (!in_qZq(p)) return false;
  for (const auto& t : p.terms())
    if (t.second < 0) return false;
  return true;
}

bool is_signed_monomial(const LaurentPoly& p) {
  return p.terms().size() == 1 && (p.terms()[0].second == 1 || p.terms()[0].second == -1);
}

LaurentPoly quantum_int(int m) {
  if (m <= 0) throw std::invalid_argument("quantum_int needs m >= 1, got " + std::to_string(m));
  LaurentPoly r;
  for (int j = 0; j < m; ++j) r += LaurentPoly::monomial(1 - m + 2 * j);
  return r;
}

LaurentPoly quantum_factorial(int m) {
  if (m < 0) throw std::invalid_argument("quantum_factorial needs m >= 0");
  LaurentPoly r = 1;
  for (int j = 2; j <= m; ++j) r *= quantum_int(j);
  return r;
}

LaurentPoly quantum_binom(int m, int k) {
  if (k < 0 || m < 0 || k > m) throw std::invalid_argument("quantum_binom needs 0 <= k <= m");
  return exact_div(quantum_factorial(m), quantum_factorial(k) * quantum_factorial(m - k));
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("exact_div by zero");
  if (num.is_zero()) return {};
  // long division on the top terms; den's leading coefficient must divide
  LaurentPoly rem = num;
  LaurentPoly quot;
  const int dtop = den.max_exp();
  const int dlow = den.min_exp();
  const BigInt& lead = den.terms().back().second;
  while (!rem.is_zero()) {
    int rtop = rem.max_exp();
    if (rtop - dtop < rem.min_exp() - dlow) break;
    const BigInt& c = rem.terms().back().second;
    if (c % lead != 0) break;
    LaurentPoly t = LaurentPoly::monomial(rtop - dtop, c / lead);
    quot += t;
    rem -= t * den;
  }
  if (!rem.is_zero())
    throw InexactDivision("inexact division: (" + num.to_string() + ") / (" + den.to_string() + ")");
  return quot;
}

SymmetricSplit symmetric_truncation(const LaurentPoly& c) {
  SymmetricSplit out;
  for (const auto& [e, k] : c.terms()) {
    if (e < 0) {
      out.alpha += LaurentPoly::monomial(e, k);
      out.alpha += LaurentPoly::monomial(-e, k);
    } else if (e == 0) {
      out.alpha += LaurentPoly::monomial(0, k);
    }
  }
  out.rest = c - out.alpha;
  return out;
}

void to_json(nlohmann::json& j, const LaurentPoly& p) {
  j = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
      j.push_back({e, static_cast<long long>(c)});
    else
      j.push_back({e, c.str()});
  }
}

void from_json(const nlohmann::json& j, LaurentPoly& p) {
  p = LaurentPoly();
  for (const auto& t : j) {
    int e = t.at(0).get<int>();
    const auto& c = t.at(1);
    BigInt v = c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<long long>());
    p += LaurentPoly::monomial(e, v);
  }
}

}  // namespace qfock
