#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "bianchi/exactmath.hpp"
#include "bianchi/finitering.hpp"
#include "bianchi/quadfield.hpp"

namespace bianchi {

/// How the fixed-surface count parameter s is read off the level.
enum class SRule {
  /// number of odd rational primes dividing N
  odd_level_primes,
  /// number of odd primes p | D with p | N
  ramified_odd_level_primes,
};

/// A principal level (N), N > 2, together with the data the fixed-surface
/// table needs.
struct Level {
  std::int64_t N = 0;
  Factorization factorization;
  std::vector<SplittingType> splitting;  // parallel to factorization
  unsigned j2 = 0;
  unsigned s = 0;
  SRule s_rule = SRule::odd_level_primes;
  BigRat A, B;
  /// A or B alone is not an integer (only A + 2B is used downstream).
  bool non_integral_ab = false;
  /// Prime-power levels; composite levels are computed but unvalidated.
  bool validated = false;
};

Level make_level(const QuadField& field, std::int64_t N, SRule rule = SRule::odd_level_primes);

struct RohlfsAB {
  BigRat A, B;
  bool non_integral = false;
};

RohlfsAB rohlfs_ab(const QuadField& field, const Level& level);

/// L(σ, Γ(N), E_{k,k}) = (A + 2B)·(−N³/12)·∏_{p|N}(1 − p^{−2})·(k + 1).
BigInt lefschetz_sigma_principal(const QuadField& field, const Level& level, long k);

/// Closed form for N = pⁿ, p odd and unramified.
BigInt lefschetz_sigma_prime_power(const QuadField& field, std::int64_t p, unsigned n, long k);

/// Readings of the weight-dependent factors ((k+1)/4), ((k+1)/3) of the
/// level-one formula.
enum class BracketVariant {
  /// plain rational division
  rational,
  /// Kronecker symbols (k+1 | 4) and (k+1 | 3)
  kronecker,
  /// characters of order-4 and order-3 elements on E_k
  torsion_char,
};

inline constexpr std::array<BracketVariant, 3> kAllBracketVariants = {
    BracketVariant::rational, BracketVariant::kronecker, BracketVariant::torsion_char};

/// Variant used when none is requested; chosen by adjudicate_brackets.
inline constexpr BracketVariant kDefaultBracket = BracketVariant::torsion_char;

std::string_view to_string(BracketVariant variant);
std::optional<BracketVariant> parse_bracket(std::string_view name);

/// Value of the ((k+1)/m) factor for m ∈ {3, 4}.
BigRat bracket(BracketVariant variant, long k, int m);

struct LevelOneLefschetz {
  Involution involution = Involution::sigma;
  long k = 0;
  BracketVariant variant = kDefaultBracket;
  /// the four summands of (−1)^k·L, in display order
  std::array<BigRat, 4> terms;
  /// L itself (the summed terms times (−1)^k)
  BigRat value;
  bool integral() const { return is_integer(value); }
};

/// L(ρ, SL₂(O), E_{k,k}) for ρ ∈ {σ, τ}.
LevelOneLefschetz lefschetz_level_one(const QuadField& field, Involution inv, long k,
                                      BracketVariant variant = kDefaultBracket);

struct BracketFinding {
  std::int64_t d = 0;
  long k = 0;
  std::optional<Involution> involution;  // empty for parity/sum findings
  std::string detail;
};

struct VariantAdjudication {
  BracketVariant variant = BracketVariant::rational;
  std::vector<BracketFinding> integrality_failures;
  /// L(σ) + L(τ) ≢ −2^t (mod 4) at some k > 0, or non-integral sum
  std::vector<BracketFinding> parity_violations;
  std::vector<BracketFinding> anchor_failures;

  bool passes_even_k() const;
  bool passes_odd_k() const;
  bool passes_all() const { return passes_even_k() && passes_odd_k(); }
};

struct BracketAdjudication {
  std::vector<std::int64_t> discriminants;  // the d values scanned
  long k_max = 0;
  std::vector<VariantAdjudication> variants;

  /// Variants passing every even-k check and all anchors.
  std::vector<BracketVariant> even_k_conforming() const;
  const VariantAdjudication& result(BracketVariant variant) const;
};

/// Scans every bracket reading over d ∈ ds, 0 ≤ k ≤ k_max and both
/// involutions. Checks integrality, the mod-4 condition on L(σ) + L(τ) for
/// k > 0 and the k = 0 anchors L(σ) = 2 + h − 2^{t−1}, L(τ) = 2 − h − 2^{t−1}.
/// The anchors assume vanishing level-one cuspidal cohomology, true for the
/// fields d = −2, −5, −7, −11 in the default scan.
BracketAdjudication adjudicate_brackets(const std::vector<std::int64_t>& ds, long k_max);

struct ClassicalInvariants {
  BigInt cusps;
  BigRat chi_compact;  // χ(X_N)
  BigRat chi_group;    // χ(Γ_N)
};

/// Cusps and Euler characteristics of the principal congruence subgroup
/// Γ_N ⊂ SL₂(Z) and its compactified modular curve.
ClassicalInvariants classical_gamma_invariants(std::int64_t N);

}  // namespace bianchi
