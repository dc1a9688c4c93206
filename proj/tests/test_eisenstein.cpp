#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "bianchi/eisenstein.hpp"
#include "bianchi/error.hpp"
#include "bianchi/finitering.hpp"
#include "bianchi/sczech.hpp"

using namespace bianchi;

TEST_CASE("cusp counts") {
  CHECK(cusp_count(make_field(-2), 3) == cusp_count_bruteforce(make_field(-2), 3));
  CHECK(cusp_count(make_field(-7), 3) == cusp_count_bruteforce(make_field(-7), 3));
  CHECK(cusp_count(make_field(-2), 5) == 624);
  for (std::int64_t d : {-2, -5, -7, -11}) {
    for (std::int64_t N : {3, 4, 5}) {
      CHECK(cusp_count(make_field(d), N) == cusp_count_bruteforce(make_field(d), N));
    }
  }
  CHECK_THROWS_AS(cusp_count(make_field(-2), 2), PreconditionError);
}

TEST_CASE("boundary and Eisenstein dimensions") {
  const auto dims = boundary_dims(make_field(-2), 3, 0);
  CHECK(dims.h0 == 64);
  CHECK(dims.h1 == 128);
  CHECK(dims.h2 == 64);
  const auto dims7 = boundary_dims(make_field(-7), 3, 5);
  CHECK(dims7.h1 == dims7.h0 + dims7.h2);
  CHECK(eis_dim(make_field(-2), 3, 1) == 64);
  CHECK(eis_dim(make_field(-7), 3, 2) == 80);
  CHECK(eis_dim(make_field(-2), 5, 1) == 624);
  CHECK_THROWS_AS(eis_dim(make_field(-2), 3, 0), PreconditionError);
}

TEST_CASE("H2 Eisenstein traces") {
  CHECK(trace_sigma_h2_eis(make_field(-7), 9, 1) == -72);
  CHECK(trace_sigma_h2_eis(make_field(-7), 3, 0) == -7);
  CHECK(trace_sigma_h2_eis(make_field(-5), 3, 1) == -16);
  CHECK(trace_tau_h2_eis(make_field(-7), 3, 1) == -2);
  CHECK(trace_tau_h2_eis(make_field(-7), 9, 1) == -18);
  CHECK(trace_tau_h2_eis(make_field(-2), 1, 1) == -1);
  CHECK_THROWS_AS(trace_sigma_h2_eis(make_field(-5), 5, 1), PreconditionError);
  CHECK_THROWS_AS(trace_sigma_h2_eis(make_field(-2), 2, 1), PreconditionError);

  // σ trace equals −2^{t−1}·(σ-fixed coset census) + δ(0,k)
  for (std::int64_t d : {-2, -7, -11}) {
    for (std::int64_t N : {3, 5, 9}) {
      const QuadField f = make_field(d);
      const auto census = fixed_coset_count(FiniteRing(f, N), Involution::sigma).census;
      CHECK(trace_sigma_h2_eis(f, N, 1) == -two_torsion_count(f) * census);
      CHECK(trace_sigma_h2_eis(f, N, 0) == -two_torsion_count(f) * census + 1);
    }
  }

  for (std::int64_t d : {-2, -7}) {
    for (std::int64_t N : {3, 5, 9}) {
      const QuadField f = make_field(d);
      const BigInt c = eis_dim(f, N, 1);
      CHECK(abs(trace_sigma_h2_eis(f, N, 1)) <= c);
      CHECK(abs(trace_tau_h2_eis(f, N, 1)) <= c);
    }
  }
}

TEST_CASE("tau census cross-check is reported") {
  const auto reports = tau_census_crosscheck(make_field(-7), 3);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].formula == 2);
}

TEST_CASE("level-one sigma traces") {
  auto t = level_one_sigma_traces(make_field(-5), 0);
  CHECK(t.tr0.value() == 1);
  CHECK(t.tr1.value() == -2);
  CHECK(t.tr2.value() == -1);
  t = level_one_sigma_traces(make_field(-2), 0);
  CHECK(t.tr1.value() == -1);
  CHECK(t.tr2.value() == 0);
  t = level_one_sigma_traces(make_field(-105), 0);
  CHECK(t.tr1.value() == -8);
  CHECK(t.tr2.value() == -7);
  CHECK(t.tr2.value() == trace_sigma_h2_eis(make_field(-105), 1, 0));
  t = level_one_sigma_traces(make_field(-5), 3);
  CHECK(!t.tr1.is_exact());
  CHECK(t.tr1.hi == 2);
  CHECK(t.tr0.value() == 0);
  CHECK_THROWS_AS(t.tr1.value(), PreconditionError);
}

TEST_CASE("H1 Eisenstein trace for class number one") {
  CHECK(trace_sigma_h1_eis(make_field(-2), 5, 1) == -26);
  CHECK(trace_sigma_h1_eis(make_field(-2), 5, 2) == -600);
  CHECK(trace_sigma_h1_eis(make_field(-11), 2, 1) == -5);
  CHECK_THROWS_AS(trace_sigma_h1_eis(make_field(-5), 3, 1), PreconditionError);
  CHECK_THROWS_AS(trace_sigma_h1_eis(make_field(-2), 3, 1), PreconditionError);
}

TEST_CASE("character variants") {
  const QuadField f = make_field(-2);
  CHECK(!character_is_o_periodic(f, CharacterVariant::literal_d));
  CHECK(character_is_o_periodic(f, CharacterVariant::inverse_different));
  CHECK(character_is_o_periodic(f, CharacterVariant::symplectic_level));
  CHECK(character_is_class_function(f, 3, CharacterVariant::symplectic_level));
  CHECK(!character_is_class_function(f, 3, CharacterVariant::inverse_different));
  CHECK_THROWS_AS(sczech_operator(f, 2, CharacterVariant::literal_d), PreconditionError);
  CHECK_THROWS_AS(sczech_operator(f, 1), PreconditionError);
  CHECK_THROWS_AS(sczech_operator(f, 11), PreconditionError);
  CHECK(parse_character("symplectic-level") == CharacterVariant::symplectic_level);
}

TEST_CASE("Sczech operator") {
  const QuadField f = make_field(-2);
  const auto op = sczech_operator(f, 2);
  CHECK(op.dimension() == 15);
  for (std::size_t i = 0; i < op.dimension(); ++i) {
    CHECK(op.entry(i, i).real() == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
    CHECK(std::abs(op.entry(i, i).imag()) < 1e-12);
  }
  CHECK(std::abs(op.trace().real() + 5) < 1e-8);

  const std::pair<std::int64_t, std::int64_t> grid[] = {{-2, 3}, {-2, 5}, {-7, 2}, {-7, 3}};
  for (auto [d, N] : grid) {
    const auto tr = sczech_trace(make_field(d), N);
    CHECK(std::abs(tr.real + static_cast<double>(N * N + 1)) < 1e-8);
    CHECK(std::abs(tr.imag) < 1e-9);
  }
  CHECK(std::abs(sczech_trace(f, 5).real - static_cast<double>(trace_sigma_h1_eis(f, 5, 1))) < 1e-8);
}

TEST_CASE("Sczech operator dump format") {
  const auto op = sczech_operator(make_field(-7), 2);
  std::ostringstream out;
  op.dump(out);
  std::istringstream in(out.str());
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) {
    std::istringstream row(line);
    std::size_t i = 0, j = 0;
    double re = 0, im = 0;
    REQUIRE(static_cast<bool>(row >> i >> j >> re >> im));
    CHECK(re == op.entry(i, j).real());
    CHECK(im == op.entry(i, j).imag());
    ++lines;
  }
  CHECK(lines == 15 * 15);
}
