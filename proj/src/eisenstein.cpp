#include "bianchi/eisenstein.hpp"

#include <string>

#include "bianchi/error.hpp"

namespace bianchi {

namespace {

void require_unramified_level(const QuadField& field, std::int64_t N, std::string_view op) {
  require(N == 1 || N >= 3, std::string(op) + ": N must be 1 or >= 3");
  for (const auto& [p, e] : factorize(BigInt(N))) {
    require(!field.is_ramified(static_cast<std::int64_t>(p)),
            std::string(op) + ": prime " + p.str() + " of N ramifies in K");
  }
}

BigInt genus_count(const QuadField& field) { return BigInt(1) << (field.t() - 1); }

}  // namespace

TraceValue TraceValue::exact(BigInt v, std::string source) {
  return {v, v, std::move(source)};
}

TraceValue TraceValue::interval(BigInt bound, std::string source) {
  return {-bound, bound, std::move(source)};
}

const BigInt& TraceValue::value() const {
  if (!is_exact()) throw PreconditionError("TraceValue: trace is only known up to an interval");
  return lo;
}

BigInt cusp_count(const QuadField& field, std::int64_t N) {
  require(N >= 3, "cusp_count: N must be >= 3");
  BigRat value = BigRat(ipow(BigInt(N), 4));
  for (const auto& [p, e] : factorize(BigInt(N))) {
    for (const auto& ideal : primes_above(field, static_cast<std::int64_t>(p))) {
      value *= BigRat(1) - BigRat(BigInt(1), BigInt(ideal.norm) * ideal.norm);
    }
  }
  return BigInt(field.class_number()) * require_integer(value, "cusp count");
}

BoundaryDims boundary_dims(const QuadField& field, std::int64_t N, long k) {
  require(k >= 0, "boundary_dims: k must be >= 0");
  const BigInt c = cusp_count(field, N);
  return {c, 2 * c, c};
}

BigInt eis_dim(const QuadField& field, std::int64_t N, long k) {
  require(k > 0, "eis_dim: k must be > 0 (the k = 0 dimensions depend on the degree)");
  return cusp_count(field, N);
}

BigInt trace_sigma_h2_eis(const QuadField& field, std::int64_t N, long k) {
  require(k >= 0, "trace_sigma_h2_eis: k must be >= 0");
  require_unramified_level(field, N, "trace_sigma_h2_eis");
  BigInt product = 1;
  for (const auto& [p, n] : factorize(BigInt(N))) product *= ipow(p, 2 * n) - ipow(p, 2 * n - 2);
  return -genus_count(field) * product + (k == 0 ? 1 : 0);
}

BigInt trace_tau_h2_eis(const QuadField& field, std::int64_t N, long k) {
  require(k >= 0, "trace_tau_h2_eis: k must be >= 0");
  require_unramified_level(field, N, "trace_tau_h2_eis");
  BigInt product = 1;
  for (const auto& [p, n] : factorize(BigInt(N))) product *= ipow(p, 2 * n - 1) - ipow(p, 2 * n - 2);
  return -genus_count(field) * product + (k == 0 ? 1 : 0);
}

std::vector<CensusReport> tau_census_crosscheck(const QuadField& field, std::int64_t N) {
  require_unramified_level(field, N, "tau_census_crosscheck");
  std::vector<CensusReport> out;
  for (const auto& [p, n] : factorize(BigInt(N))) {
    if (p == 2) continue;
    const auto modulus = static_cast<std::int64_t>(ipow(p, n));
    if (modulus * modulus > kExhaustiveRingSize) continue;
    out.push_back(fixed_coset_count(FiniteRing(field, modulus), Involution::tau));
  }
  return out;
}

LevelOneTraces level_one_sigma_traces(const QuadField& field, long k) {
  require(k >= 0, "level_one_sigma_traces: k must be >= 0");
  const BigInt h = field.class_number();
  const BigInt genus = genus_count(field);
  if (k == 0) {
    return {TraceValue::exact(1, "trivial action on H^0 of a connected space"),
            TraceValue::exact(-h, "restriction image lies in the (-1)-eigenspace of conjugation"),
            TraceValue::exact(-genus + 1, "genus theory count of conjugation-fixed cusps")};
  }
  return {TraceValue::exact(0, "E_{k,k} irreducible for k > 0"),
          TraceValue::interval(h, "|tr| <= dim H^1_Eis = h(K)"),
          TraceValue::exact(-genus, "genus theory count of conjugation-fixed cusps")};
}

BigInt trace_sigma_h1_eis(const QuadField& field, std::int64_t p, unsigned n) {
  require(field.class_number() == 1, "trace_sigma_h1_eis: K must have class number one");
  require(n >= 1, "trace_sigma_h1_eis: n must be >= 1");
  require(splitting_type(field, p) == SplittingType::inert,
          "trace_sigma_h1_eis: p must be inert in K");
  const BigInt P(p);
  if (n == 1) return -(P * P + 1);
  return -(ipow(P, 2 * n) - ipow(P, 2 * n - 2));
}

}  // namespace bianchi
