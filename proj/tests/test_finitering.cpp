#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bianchi/error.hpp"
#include "bianchi/finitering.hpp"

using namespace bianchi;

namespace {

// #SL₂ of a finite field of order q, for the CRT side of the check.
BigInt sl2_field_order(std::int64_t q) { return BigInt(q) * (q * q - 1); }

}  // namespace

TEST_CASE("ring arithmetic follows the omega rule") {
  const FiniteRing r(make_field(-7), 5);
  const RingElem w = r.make(0, 1);
  // ω² = ω − 2
  CHECK(r.mul(w, w) == r.make(-2, 1));
  CHECK(r.sigma(w) == r.make(1, -1));
  for (const auto& x : r.elements()) {
    CHECK(r.sigma(r.sigma(x)) == x);
    for (const auto& y : r.elements()) {
      CHECK(r.sigma(r.mul(x, y)) == r.mul(r.sigma(x), r.sigma(y)));
    }
  }
}

TEST_CASE("sigma and tau on matrices") {
  const FiniteRing r(make_field(-2), 5);
  const Mat2 id{r.one(), r.zero(), r.zero(), r.one()};
  CHECK(sigma_mat(r, id) == id);
  const Mat2 m{r.one(), r.make(0, 1), r.zero(), r.one()};
  CHECK(tau_mat(r, m) == m);

  std::mt19937 gen(7);
  std::uniform_int_distribution<std::int64_t> dist(0, 4);
  auto elem = [&] { return r.make(dist(gen), dist(gen)); };
  for (int i = 0; i < 100; ++i) {
    const Mat2 x{elem(), elem(), elem(), elem()};
    CHECK(sigma_mat(r, sigma_mat(r, x)) == x);
    CHECK(tau_mat(r, tau_mat(r, x)) == x);
  }
}

TEST_CASE("SL2 orders") {
  const FiniteRing r2(make_field(-2), 3);
  // 3 splits in Q(√−2): SL₂(F₃)²
  CHECK(sl2_order_exhaustive(r2) == sl2_field_order(3) * sl2_field_order(3));
  CHECK(sl2_order(r2) == 576);
  const FiniteRing r7(make_field(-7), 3);
  CHECK(sl2_order_exhaustive(r7) == sl2_field_order(9));
  CHECK(sl2_order(r7) == 720);
  const FiniteRing two(make_field(-2), 2);
  CHECK(sl2_order_exhaustive(two) == sl2_order_formula(make_field(-2), 2));
  CHECK(BigInt(sl2_elements(two).size()) == sl2_order_exhaustive(two));
  for (std::int64_t d : {-2, -5, -7, -11}) {
    for (std::int64_t N : {2, 3, 4, 5, 6}) {
      const FiniteRing ring(make_field(d), N);
      CHECK(sl2_order_exhaustive(ring) == sl2_order_formula(make_field(d), N));
    }
  }
}

TEST_CASE("involutions preserve SL2") {
  for (auto [d, N] : {std::pair<std::int64_t, std::int64_t>{-2, 3}, {-7, 3}, {-2, 5}}) {
    const FiniteRing r(make_field(d), N);
    for (const auto& m : sl2_elements(r)) {
      for (Involution inv : {Involution::sigma, Involution::tau}) {
        const Mat2 image = apply(r, inv, m);
        REQUIRE(r.det(image) == r.one());
        REQUIRE(apply(r, inv, image) == m);
      }
    }
  }
}

TEST_CASE("projective lines") {
  CHECK(projective_line(FiniteRing(make_field(-7), 3)).size() == 10);
  CHECK(projective_line(FiniteRing(make_field(-7), 9)).size() == 90);
  // split prime: P¹(F₃) × P¹(F₃)
  CHECK(projective_line(FiniteRing(make_field(-2), 3)).size() == 16);
  CHECK(projective_line(FiniteRing(make_field(-2), 9)).size() == 144);
  CHECK_THROWS_AS(projective_line(FiniteRing(make_field(-2), 6)), PreconditionError);
}

TEST_CASE("sigma coset census") {
  for (std::int64_t d : {-2, -7}) {
    for (auto [p, n] : {std::pair<std::int64_t, unsigned>{3, 1}, {3, 2}, {5, 1}}) {
      const FiniteRing r(make_field(d), static_cast<std::int64_t>(ipow(BigInt(p), n)));
      const auto report = fixed_coset_count(r, Involution::sigma);
      CHECK(report.formula == ipow(BigInt(p), 2 * n) - ipow(BigInt(p), 2 * n - 2));
      CHECK(report.match());
    }
  }
  CHECK(fixed_coset_count(FiniteRing(make_field(-7), 3), Involution::sigma).census == 8);
  CHECK(fixed_coset_count(FiniteRing(make_field(-2), 3), Involution::sigma).census == 8);
}

TEST_CASE("tau coset census is reported next to its closed form") {
  const auto report = fixed_coset_count(FiniteRing(make_field(-2), 5), Involution::tau);
  // p^{2n−1} − p^{2n−2} at p = 5, n = 1
  CHECK(report.formula == 5 - 1);
  CHECK(report.census > 0);
  CHECK_THROWS_AS(fixed_coset_count(FiniteRing(make_field(-5), 5), Involution::sigma),
                  PreconditionError);
  CHECK_THROWS_AS(fixed_coset_count(FiniteRing(make_field(-7), 4), Involution::sigma),
                  PreconditionError);
}

TEST_CASE("cusp counts by enumeration") {
  CHECK(cusp_count_bruteforce(make_field(-2), 3) == 576 / 9);
  CHECK(cusp_count_bruteforce(make_field(-7), 3) == 720 / 9);
  CHECK(cusp_count_bruteforce(make_field(-5), 3) == 2 * 576 / 9);
  CHECK_THROWS_AS(cusp_count_bruteforce(make_field(-2), 2), PreconditionError);
}
