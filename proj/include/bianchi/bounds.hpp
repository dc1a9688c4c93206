#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bianchi/eisenstein.hpp"
#include "bianchi/exactmath.hpp"
#include "bianchi/finitering.hpp"
#include "bianchi/lefschetz.hpp"
#include "bianchi/quadfield.hpp"

namespace bianchi {

enum class BoundMode { exact, worst_case };

std::string_view to_string(BoundMode mode);

struct ProvenanceEntry {
  std::string ingredient;
  std::string source;
};

/// Lower bound for dim H¹_cusp from ½|L + tr¹_Eis − tr²_Eis − tr⁰|.
struct BoundReport {
  std::int64_t d = 0;
  std::int64_t N = 1;
  long k = 0;
  Involution involution = Involution::sigma;
  BigInt L;
  TraceValue tr0, tr1, tr2;
  /// dim H¹_Eis, the width of the degree-1 interval in worst-case mode
  BigInt eis_dim;
  BoundMode mode = BoundMode::worst_case;
  BigInt bound;
  std::vector<ProvenanceEntry> provenance;
  std::vector<std::string> warnings;
};

/// N = 1 is the full group SL₂(O) and uses the level-one formulas with the
/// given bracket reading; N ≥ 3 uses the principal-level formulas (σ only).
BoundReport cusp_lower_bound(const QuadField& field, std::int64_t N, long k,
                             Involution inv = Involution::sigma,
                             BracketVariant bracket = kDefaultBracket);

struct Gl2Trace {
  long k = 0;
  BracketVariant variant = kDefaultBracket;
  BigRat value;
  bool integral = false;
  /// Odd k is outside what the bracket adjudication settles.
  bool adjudicated = false;
};

/// tr(σ¹ | H¹(GL₂(O), E_{k,k})) = −¼(L(τ) + L(σ) + 2^t − 4δ(k,0)).
Gl2Trace gl2_trace_sigma1(const QuadField& field, long k, BracketVariant variant = kDefaultBracket);

/// |gl2_trace_sigma1|; throws ConformanceError when the trace is not integral.
BigInt gl2_lower_bound(const QuadField& field, long k, BracketVariant variant = kDefaultBracket);

struct GrowthRow {
  std::int64_t parameter = 0;
  BigInt quantity;
  BigInt reference;
  BigRat ratio;  // quantity / reference
};

struct GrowthScan {
  std::string parameter_name;
  std::string quantity_name;
  std::string reference_name;
  std::vector<GrowthRow> rows;
  BigRat min_ratio;
  BigRat max_ratio;
  BigRat floor;
  /// Every ratio is ≥ floor (strictly positive when floor is 0).
  bool above_floor = false;
  bool constant = false;
};

/// σ-bound on Γ(pⁿ) against p^{3n}, weight k fixed.
GrowthScan level_growth_scan(const QuadField& field, std::int64_t p, const std::vector<unsigned>& ns,
                             long k = 0, BigRat floor = 0);

/// L(σ, Γ(N), E_{k,k}) against k + 1.
GrowthScan weight_growth_scan(const QuadField& field, std::int64_t N, const std::vector<long>& ks);

/// Level-one σ-bound against φ(|D|) over a list of fields.
GrowthScan discriminant_growth_scan(const std::vector<std::int64_t>& ds, long k = 0,
                                    BracketVariant bracket = kDefaultBracket);

/// Square-free d in [lo, hi] with d ∉ {−1, −3}; lo ≤ hi < 0.
std::vector<std::int64_t> squarefree_discriminants(std::int64_t lo, std::int64_t hi);

}  // namespace bianchi
