#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qfock {

using BigInt = boost::multiprecision::cpp_int;

// Thrown when an exact division leaves a remainder. Always a bug.
struct InexactDivision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of Z[q, q^-1]. Terms are kept sorted by exponent with no zero
// coefficients, so equality is structural.
class LaurentPoly {
 public:
  using Term = std::pair<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long long c);  // NOLINT: constants convert implicitly
  static LaurentPoly monomial(int exp, BigInt coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  BigInt coeff(int exp) const;
  int min_exp() const;  // precondition: nonzero
  int max_exp() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // multiply by q^k
  LaurentPoly shifted(int k) const;

  std::string to_string() const;
  static LaurentPoly parse(const std::string& text);

 private:
  void add_scaled(const LaurentPoly& o, int sign);
  std::vector<Term> terms_;
};

LaurentPoly bar(const LaurentPoly& p);
BigInt evaluate_at_one(const LaurentPoly& p);
bool is_bar_symmetric(const LaurentPoly& p);
// every exponent >= 1
bool in_qZq(const LaurentPoly& p);
// in qZ[q] with nonnegative coefficients
bool in_qNq(const LaurentPoly& p);
bool is_signed_monomial(const LaurentPoly& p);

LaurentPoly quantum_int(int m);
LaurentPoly quantum_factorial(int m);
LaurentPoly quantum_binom(int m, int k);
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

struct SymmetricSplit {
  LaurentPoly alpha;  // bar-invariant part
  LaurentPoly rest;   // strictly positive exponents
};
SymmetricSplit symmetric_truncation(const LaurentPoly& c);

void to_json(nlohmann::json& j, const LaurentPoly& p);
void from_json(const nlohmann::json& j, LaurentPoly& p);

}  // namespace qfock
