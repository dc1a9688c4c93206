#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bianchi/error.hpp"
#include "bianchi/lefschetz.hpp"
#include "bianchi/quadfield.hpp"

using namespace bianchi;

namespace {

// Independent evaluation of the k = 0 identities L(σ) = 2 + h − 2^{t−1},
// L(τ) = 2 − h − 2^{t−1}, with h counted from ideal classes.
BigRat anchor(const QuadField& f, Involution inv) {
  const BigRat h = f.class_number();
  const BigRat genus = BigRat(BigInt(1) << (f.t() - 1));
  if (inv == Involution::sigma) return BigRat(2 + h - genus);
  return BigRat(2 - h - genus);
}

}  // namespace

TEST_CASE("Rohlfs A and B") {
  const QuadField f7 = make_field(-7);
  auto ab = rohlfs_ab(f7, make_level(f7, 9));
  CHECK(ab.A == 1);
  CHECK(ab.B == 0);

  const QuadField f5 = make_field(-5);
  ab = rohlfs_ab(f5, make_level(f5, 3));
  CHECK(ab.A == 2);
  CHECK(ab.B == 1);

  const QuadField f2 = make_field(-2);
  const Level level = make_level(f2, 5);
  CHECK(level.A == 1);
  CHECK(level.B == BigRat(1, 2));
  CHECK(level.non_integral_ab);
  CHECK(level.A + 2 * level.B == 2);
  CHECK_THROWS_AS(make_level(f2, 2), PreconditionError);
}

TEST_CASE("s rule switch") {
  const QuadField f = make_field(-15);  // D = −15, 3 and 5 ramify
  CHECK(make_level(f, 3 * 7).s == 2);
  CHECK(make_level(f, 3 * 7, SRule::ramified_odd_level_primes).s == 1);
  CHECK(!make_level(f, 21).validated);
  CHECK(make_level(f, 49).validated);
}

TEST_CASE("principal-level Lefschetz numbers") {
  const QuadField f7 = make_field(-7);
  CHECK(lefschetz_sigma_principal(f7, make_level(f7, 3), 0) == -2);
  CHECK(lefschetz_sigma_principal(f7, make_level(f7, 3), 2) == -6);
  // (A + 2B)·(−27/12)·(8/9) with A + 2B = 4
  const QuadField f5 = make_field(-5);
  CHECK(BigRat(lefschetz_sigma_principal(f5, make_level(f5, 3), 0)) == BigRat(4) * BigRat(-27, 12) * BigRat(8, 9));
}

TEST_CASE("prime-power closed form") {
  CHECK(lefschetz_sigma_prime_power(make_field(-7), 3, 1, 0) == -2);
  CHECK(lefschetz_sigma_prime_power(make_field(-2), 3, 1, 0) == -4);
  CHECK(BigRat(lefschetz_sigma_prime_power(make_field(-2), 5, 2, 0)) == BigRat(-2 * (15625 - 625), 12));
  CHECK_THROWS_AS(lefschetz_sigma_prime_power(make_field(-5), 5, 1, 0), PreconditionError);
  CHECK_THROWS_AS(lefschetz_sigma_prime_power(make_field(-7), 2, 2, 0), PreconditionError);
}

TEST_CASE("principal and prime-power paths agree") {
  for (std::int64_t d : {-2, -5, -7, -11}) {
    const QuadField f = make_field(d);
    for (std::int64_t p : {3, 5, 7}) {
      if (f.is_ramified(p)) continue;
      for (unsigned n : {1u, 2u}) {
        const auto N = static_cast<std::int64_t>(ipow(BigInt(p), n));
        const Level level = make_level(f, N);
        for (long k = 0; k <= 5; ++k) {
          CHECK(lefschetz_sigma_principal(f, level, k) == lefschetz_sigma_prime_power(f, p, n, k));
        }
      }
    }
  }
}

TEST_CASE("principal-level values are integers and linear in k+1") {
  for (std::int64_t d : {-2, -5, -7, -11}) {
    const QuadField f = make_field(d);
    for (std::int64_t N = 3; N <= 40; ++N) {
      if (factorize(BigInt(N)).size() != 1) continue;
      const Level level = make_level(f, N);
      const BigInt L0 = lefschetz_sigma_principal(f, level, 0);
      for (long k = 1; k <= 20; ++k) CHECK(lefschetz_sigma_principal(f, level, k) == L0 * (k + 1));
    }
  }
}

TEST_CASE("brackets") {
  CHECK(bracket(BracketVariant::kronecker, 0, 4) == 1);
  CHECK(bracket(BracketVariant::kronecker, 0, 3) == 1);
  CHECK(bracket(BracketVariant::torsion_char, 0, 4) == 1);
  CHECK(bracket(BracketVariant::torsion_char, 0, 3) == 1);
  CHECK(bracket(BracketVariant::torsion_char, 2, 4) == -1);
  CHECK(bracket(BracketVariant::rational, 2, 4) == BigRat(3, 4));
  CHECK(parse_bracket("torsion-char") == BracketVariant::torsion_char);
  CHECK(!parse_bracket("nonsense").has_value());
}

TEST_CASE("level-one values at k = 0") {
  for (std::int64_t d : {-2, -5, -7, -11}) {
    const QuadField f = make_field(d);
    for (BracketVariant v : {BracketVariant::kronecker, BracketVariant::torsion_char}) {
      CHECK(lefschetz_level_one(f, Involution::sigma, 0, v).value == anchor(f, Involution::sigma));
      CHECK(lefschetz_level_one(f, Involution::tau, 0, v).value == anchor(f, Involution::tau));
    }
  }
  const auto s2 = lefschetz_level_one(make_field(-2), Involution::sigma, 0);
  CHECK(s2.terms[0] == BigRat(7, 12));
  CHECK(s2.terms[1] == BigRat(-5, 12));
  CHECK(s2.terms[2] == BigRat(1, 2));
  CHECK(s2.terms[3] == BigRat(4, 3));
  CHECK(s2.value == 2);
  const auto t2 = lefschetz_level_one(make_field(-2), Involution::tau, 0);
  CHECK(t2.terms[0] == BigRat(-3, 4));
  CHECK(t2.terms[1] == BigRat(1, 4));
  CHECK(t2.value == 0);
}

TEST_CASE("rational brackets break integrality") {
  const auto L = lefschetz_level_one(make_field(-2), Involution::sigma, 0, BracketVariant::rational);
  CHECK(!L.integral());
  CHECK(L.value == BigRat(53, 72));
}

TEST_CASE("bracket adjudication") {
  const auto report = adjudicate_brackets({-2, -5, -7, -11}, 24);
  CHECK(!report.result(BracketVariant::rational).integrality_failures.empty());
  CHECK(report.result(kDefaultBracket).passes_even_k());
  const auto conforming = report.even_k_conforming();
  CHECK(std::find(conforming.begin(), conforming.end(), kDefaultBracket) != conforming.end());
}

TEST_CASE("classical modular curve invariants") {
  auto inv = classical_gamma_invariants(3);
  CHECK(inv.cusps == 4);
  CHECK(inv.chi_compact == 2);
  CHECK(inv.chi_group == -2);
  inv = classical_gamma_invariants(5);
  CHECK(inv.cusps == 12);
  CHECK(inv.chi_compact == 2);
  inv = classical_gamma_invariants(7);
  CHECK(inv.cusps == 24);
  CHECK(inv.chi_compact == 2 - 2 * 3);
  for (std::int64_t N = 3; N <= 60; ++N) {
    inv = classical_gamma_invariants(N);
    CHECK(inv.chi_group == inv.chi_compact - BigRat(inv.cusps));
  }
  CHECK_THROWS_AS(classical_gamma_invariants(2), PreconditionError);
}
