#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "bianchi/quadfield.hpp"

namespace bianchi {

/// Character φ and pairing used in the conjugation action on the formal span
/// of the cocycles Ψ(u, v).
enum class CharacterVariant {
  /// φ(z) = exp(2πi(z − z̄)/D) on s·v̄ − t·ū
  literal_d,
  /// φ(z) = exp(2πi(z − z̄)/√D) on s·v̄ − t·ū
  inverse_different,
  /// φ(z) = exp(2πi(z − z̄)/√D) on s·v − t·u
  symplectic_invdiff,
  /// φ(z) = exp(2πi·N(z − z̄)/√D) on s·v − t·u
  symplectic_level,
};

inline constexpr std::array<CharacterVariant, 4> kAllCharacterVariants = {
    CharacterVariant::literal_d, CharacterVariant::inverse_different,
    CharacterVariant::symplectic_invdiff, CharacterVariant::symplectic_level};

inline constexpr CharacterVariant kDefaultCharacter = CharacterVariant::symplectic_level;

std::string_view to_string(CharacterVariant variant);
std::optional<CharacterVariant> parse_character(std::string_view name);

/// (u, v) with u = (a1 + b1·ω)/N, v = (a2 + b2·ω)/N, residues in [0, N).
struct SczechIndex {
  std::int64_t a1 = 0, b1 = 0, a2 = 0, b2 = 0;

  bool operator==(const SczechIndex&) const = default;
};

/// φ(1) = φ(ω) = 1 and φ(0) = 1 for the variant.
bool character_is_o_periodic(const QuadField& field, CharacterVariant variant);

/// The pairing φ(·) does not change when any of s, t, u, v is moved by an
/// element of O (checked on the generators 1 and ω, level N).
bool character_is_class_function(const QuadField& field, std::int64_t N, CharacterVariant variant);

/// φ(pairing((s,t),(u,v))) for representatives with residues in [0, N).
std::complex<double> sczech_pairing(const QuadField& field, std::int64_t N, CharacterVariant variant,
                                    const SczechIndex& st, const SczechIndex& uv);

inline constexpr std::int64_t kMaxSczechDimension = 10000;

class SczechOperator {
 public:
  std::int64_t N() const { return n_; }
  CharacterVariant variant() const { return variant_; }
  std::size_t dimension() const { return index_.size(); }
  const std::vector<SczechIndex>& index() const { return index_; }

  /// Coefficient of Ψ(row) in σ(Ψ(col)).
  std::complex<double> entry(std::size_t row, std::size_t col) const {
    return data_[row * index_.size() + col];
  }

  std::complex<double> trace() const;
  /// ‖M² − I‖∞ (maximum absolute row sum).
  double involution_defect() const;

  /// Rows "i j re im", row-major, 17 significant digits.
  void dump(std::ostream& out) const;

  friend SczechOperator sczech_operator(const QuadField& field, std::int64_t N,
                                        CharacterVariant variant);

 private:
  std::int64_t n_ = 0;
  CharacterVariant variant_ = kDefaultCharacter;
  std::vector<SczechIndex> index_;
  std::vector<std::complex<double>> data_;  // row-major
};

/// Dense matrix of σ on the span of Ψ(u, v), (u, v) ≠ (0, 0), after
/// eliminating Ψ(0, 0): entry = −1/(N²(N²−1)) − φ(pairing)/N².
SczechOperator sczech_operator(const QuadField& field, std::int64_t N,
                               CharacterVariant variant = kDefaultCharacter);

struct SczechTrace {
  double real = 0;
  double imag = 0;
};

SczechTrace sczech_trace(const QuadField& field, std::int64_t N,
                         CharacterVariant variant = kDefaultCharacter);

struct CharacterAdjudicationRow {
  std::int64_t d = 0;
  std::int64_t N = 0;
  bool constructed = false;
  double trace_error = 0;   // |trace + (N² + 1)|
  double involution_defect = 0;
  double imag = 0;
};

struct CharacterAdjudication {
  CharacterVariant variant = kDefaultCharacter;
  bool o_periodic = false;
  bool class_function = false;
  std::vector<CharacterAdjudicationRow> rows;
  bool passes(double trace_tol, double involution_tol) const;
};

inline constexpr double kSczechTraceTolerance = 1e-8;
inline constexpr double kSczechInvolutionTolerance = 1e-9;

/// Builds every variant over the (d, N) grid and records trace error and
/// involution defect.
std::vector<CharacterAdjudication> adjudicate_characters(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& grid);

}  // namespace bianchi
