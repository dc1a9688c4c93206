#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bianchi/error.hpp"
#include "bianchi/exactmath.hpp"
#include "bianchi/oracles.hpp"
#include "bianchi/quadfield.hpp"

using namespace bianchi;

TEST_CASE("factorize") {
  CHECK(factorize(BigInt(1)).empty());
  CHECK(factorize(BigInt(12)) == Factorization{{BigInt(2), 2}, {BigInt(3), 1}});
  CHECK(factorize(BigInt(9999)) == oracle::factorize_trial(9999));
  for (std::int64_t n = 1; n <= 2000; ++n) CHECK(factorize(BigInt(n)) == oracle::factorize_trial(n));
  CHECK_THROWS_AS(factorize(BigInt(0)), PreconditionError);
  CHECK_THROWS_AS(factorize(BigInt(-5)), PreconditionError);
}

TEST_CASE("factorize beyond trial division range") {
  const BigInt p("1000000007"), q("998244353");
  CHECK(factorize(p * q) == Factorization{{q, 1}, {p, 1}});
  CHECK(factorize(p * p * 4) == Factorization{{BigInt(2), 2}, {p, 2}});
  CHECK(is_prime(BigInt("2305843009213693951")));
}

TEST_CASE("legendre") {
  CHECK(legendre(BigInt(2), BigInt(7)) == oracle::legendre_by_squares(2, 7));
  CHECK(legendre(BigInt(-1), BigInt(5)) == 1);
  CHECK(legendre(BigInt(3), BigInt(5)) == oracle::legendre_by_squares(3, 5));
  CHECK(legendre(BigInt(10), BigInt(5)) == 0);
  CHECK_THROWS_AS(legendre(BigInt(1), BigInt(2)), PreconditionError);
  CHECK_THROWS_AS(legendre(BigInt(1), BigInt(9)), PreconditionError);
}

TEST_CASE("kronecker") {
  CHECK(kronecker(BigInt(-3), BigInt(2)) == -1);
  CHECK(kronecker(BigInt(-8), BigInt(3)) == oracle::legendre_by_squares(-8, 3));
  for (std::int64_t n = -30; n <= 30; ++n) {
    if (n != 0) CHECK(kronecker(BigInt(1), BigInt(n)) == 1);
  }
  for (std::int64_t p : {3, 5, 7, 11, 13, 97}) {
    for (std::int64_t a = -200; a <= 200; ++a) {
      CHECK(kronecker(BigInt(a), BigInt(p)) == legendre(BigInt(a), BigInt(p)));
    }
  }
}

TEST_CASE("hilbert2 against the norm search") {
  CHECK(hilbert2(BigInt(-1), BigInt(-2)) == oracle::hilbert2_by_search(-1, -2));
  CHECK(oracle::hilbert2_by_search(-1, -2) == -1);
  CHECK(hilbert2(BigInt(3), BigInt(-2)) == oracle::hilbert2_by_search(3, -2));
  for (std::int64_t b = -30; b <= 30; ++b) {
    if (b != 0) CHECK(hilbert2(BigInt(1), BigInt(b)) == 1);
  }
  for (std::int64_t a = -15; a <= 15; a += 2) {
    for (std::int64_t b = -15; b <= 15; b += 2) {
      CHECK(hilbert2(BigInt(a), BigInt(b)) == oracle::hilbert2_by_search(a, b));
    }
    for (std::int64_t e : {2, -2, 6, -6, 10, -10}) {
      CHECK(hilbert2(BigInt(a), BigInt(e)) == oracle::hilbert2_by_search(a, e));
      CHECK(hilbert2(BigInt(e), BigInt(a)) == oracle::hilbert2_by_search(e, a));
    }
  }
  CHECK_THROWS_AS(hilbert2(BigInt(0), BigInt(3)), PreconditionError);
}

TEST_CASE("hilbert2 symmetric and bimultiplicative") {
  std::vector<std::int64_t> sf;
  for (std::int64_t a = -50; a <= 50; ++a) {
    if (a != 0 && is_squarefree(a)) sf.push_back(a);
  }
  for (std::int64_t a : sf) {
    for (std::int64_t b : sf) {
      const int ab = hilbert2(BigInt(a), BigInt(b));
      REQUIRE(ab == hilbert2(BigInt(b), BigInt(a)));
      for (std::int64_t c : {-1, 2, -2, 3, 5, -5, 7}) {
        REQUIRE(hilbert2(BigInt(a * c), BigInt(b)) == ab * hilbert2(BigInt(c), BigInt(b)));
      }
    }
  }
}

TEST_CASE("euler_phi") {
  CHECK(euler_phi(BigInt(1)) == 1);
  CHECK(euler_phi(BigInt(7)) == 6);
  CHECK(euler_phi(BigInt(20)) == oracle::phi_by_count(20));
  for (std::int64_t n = 1; n <= 300; ++n) CHECK(euler_phi(BigInt(n)) == oracle::phi_by_count(n));
  CHECK_THROWS_AS(euler_phi(BigInt(0)), PreconditionError);
}

TEST_CASE("sym_power_trace") {
  for (long k = 0; k <= 12; ++k) CHECK(sym_power_trace(BigInt(2), k) == k + 1);
  CHECK(sym_power_trace(BigInt(0), 2) == oracle::sym_power_trace_by_eigenvalues(0, 2));
  CHECK(sym_power_trace(BigInt(1), 3) == oracle::sym_power_trace_by_eigenvalues(1, 3));
  for (std::int64_t t = -2; t <= 2; ++t) {
    for (long k = 0; k <= 10; ++k) {
      CHECK(sym_power_trace(BigInt(t), k) == oracle::sym_power_trace_by_eigenvalues(t, k));
    }
  }
  const std::pair<std::int64_t, long> orders[] = {{-1, 3}, {0, 4}, {1, 6}};
  for (auto [t, r] : orders) {
    for (long k = 0; k + r <= 48; ++k) CHECK(sym_power_trace(BigInt(t), k) == sym_power_trace(BigInt(t), k + r));
  }
  CHECK_THROWS_AS(sym_power_trace(BigInt(0), -1), PreconditionError);
}

TEST_CASE("require_integer") {
  CHECK(require_integer(BigRat(6, 3), "x") == 2);
  CHECK_THROWS_AS(require_integer(BigRat(1, 2), "x"), ConformanceError);
  CHECK(to_string(BigRat(-3, 6)) == "-1/2");
  CHECK(pow2(-2) == BigRat(1, 4));
}
