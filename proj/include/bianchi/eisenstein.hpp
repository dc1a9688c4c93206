#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bianchi/exactmath.hpp"
#include "bianchi/finitering.hpp"
#include "bianchi/quadfield.hpp"

namespace bianchi {

/// A trace that is either known exactly (lo == hi) or only bounded.
struct TraceValue {
  BigInt lo;
  BigInt hi;
  std::string source;

  static TraceValue exact(BigInt v, std::string source);
  static TraceValue interval(BigInt bound, std::string source);

  bool is_exact() const { return lo == hi; }
  const BigInt& value() const;  // throws unless exact
};

/// c(Γ(N)) = h(K)·N⁴·∏_{𝔭|(N)}(1 − N𝔭^{−2}).
BigInt cusp_count(const QuadField& field, std::int64_t N);

struct BoundaryDims {
  BigInt h0, h1, h2;
};

/// Cohomology of the Borel-Serre boundary: (c, 2c, c).
BoundaryDims boundary_dims(const QuadField& field, std::int64_t N, long k);

/// dim H^i_Eis(Γ(N), E_{k,k}) = c(Γ(N)) for k > 0.
BigInt eis_dim(const QuadField& field, std::int64_t N, long k);

/// −2^{t−1}·∏(p^{2n} − p^{2n−2}) + δ(0,k). N = 1 is the full group.
BigInt trace_sigma_h2_eis(const QuadField& field, std::int64_t N, long k);

/// −2^{t−1}·∏(p^{2n−1} − p^{2n−2}) + δ(0,k). N = 1 is the full group.
BigInt trace_tau_h2_eis(const QuadField& field, std::int64_t N, long k);

/// The fixed-coset census behind the τ boundary trace, one report per prime
/// power of N (odd primes only), next to the closed-form factor it should equal.
std::vector<CensusReport> tau_census_crosscheck(const QuadField& field, std::int64_t N);

struct LevelOneTraces {
  TraceValue tr0, tr1, tr2;
};

/// Traces of σ on H^i_Eis(SL₂(O), E_{k,k}), i = 0, 1, 2. At k = 0 all three
/// are exact; for k > 0 the degree-1 trace is only bounded by h(K).
LevelOneTraces level_one_sigma_traces(const QuadField& field, long k);

/// tr(σ | H¹_Eis(Γ(pⁿ), C)) for h(K) = 1 and p inert.
BigInt trace_sigma_h1_eis(const QuadField& field, std::int64_t p, unsigned n);

}  // namespace bianchi
