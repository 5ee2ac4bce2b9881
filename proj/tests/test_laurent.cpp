#include "doctest.h"
#include "qfock/laurent.hpp"

#include <random>

using namespace qfock;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-4, 4), coef(-5, 5), len(0, 4);
  LaurentPoly p;
  for (int k = len(rng); k > 0; --k) p += LaurentPoly::monomial(exp(rng), coef(rng));
  return p;
}

const LaurentPoly q = LaurentPoly::monomial(1);
const LaurentPoly qi = LaurentPoly::monomial(-1);

}  // namespace

TEST_SUITE("laurent") {
  TEST_CASE("canonical form drops zeros") {
    LaurentPoly p = q + qi - q;
    CHECK(p == qi);
    CHECK(p.terms().size() == 1);
    CHECK((q - q).is_zero());
  }

  TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(7);
    for (int k = 0; k < 300; ++k) {
      LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(bar(bar(a)) == a);
      CHECK(bar(a * b) == bar(a) * bar(b));
    }
  }

  TEST_CASE("quantum integers") {
    CHECK(quantum_int(1) == LaurentPoly(1));
    CHECK(quantum_int(2) == q + qi);
    CHECK(quantum_int(3) == q * q + 1 + qi * qi);
    for (int m = 1; m < 8; ++m) {
      CHECK(is_bar_symmetric(quantum_int(m)));
      CHECK(evaluate_at_one(quantum_int(m)) == m);
    }
    CHECK(quantum_factorial(3) == (q + qi) * (q * q + 1 + qi * qi));
    CHECK(quantum_binom(4, 2) * quantum_factorial(2) * quantum_factorial(2) == quantum_factorial(4));
  }

  TEST_CASE("exact division round trip") {
    std::mt19937 rng(11);
    for (int k = 0; k < 200; ++k) {
      LaurentPoly x = random_poly(rng);
      CHECK(exact_div(quantum_int(2) * x, quantum_int(2)) == x);
      CHECK(exact_div(quantum_factorial(3) * x, quantum_factorial(3)) == x);
    }
    CHECK_THROWS_AS(exact_div(LaurentPoly(1), quantum_int(2)), InexactDivision);
  }

  TEST_CASE("symmetric truncation") {
    // c = alpha + rest with bar(alpha) = alpha and rest in qZ[q]
    std::mt19937 rng(3);
    for (int k = 0; k < 200; ++k) {
      LaurentPoly c = random_poly(rng);
      auto sp = symmetric_truncation(c);
      CHECK(sp.alpha + sp.rest == c);
      CHECK(is_bar_symmetric(sp.alpha));
      CHECK(in_qZq(sp.rest));
    }
    auto sp = symmetric_truncation(qi * 2 + 3 + q);
    CHECK(sp.alpha == qi * 2 + 3 + q * 2);
    CHECK(sp.rest == -q);
  }

  TEST_CASE("text and json round trip") {
    std::mt19937 rng(5);
    for (int k = 0; k < 100; ++k) {
      LaurentPoly a = random_poly(rng);
      CHECK(LaurentPoly::parse(a.to_string()) == a);
      nlohmann::json j;
      to_json(j, a);
      LaurentPoly b;
      from_json(j, b);
      CHECK(a == b);
    }
    CHECK(q.to_string() == "q");
    CHECK(LaurentPoly(1).to_string() == "1");
  }

  TEST_CASE("big coefficients survive") {
    LaurentPoly p = quantum_int(2);
    for (int k = 0; k < 80; ++k) p *= quantum_int(2);
    CHECK(evaluate_at_one(p) == BigInt(1) << 81);
    nlohmann::json j;
    to_json(j, p);
    LaurentPoly b;
    from_json(j, b);
    CHECK(b == p);
  }
}
