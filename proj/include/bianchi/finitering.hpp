#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "bianchi/exactmath.hpp"
#include "bianchi/quadfield.hpp"

namespace bianchi {

enum class Involution { sigma, tau };

std::string_view to_string(Involution inv);

/// a + bω with 0 ≤ a, b < N.
struct RingElem {
  std::int64_t a = 0;
  std::int64_t b = 0;

  auto operator<=>(const RingElem&) const = default;
};

struct Mat2 {
  RingElem a, b, c, d;

  bool operator==(const Mat2&) const = default;
};

/// Canonical representative of a point (x : y) of P¹(R).
struct ProjPoint {
  RingElem x, y;

  auto operator<=>(const ProjPoint&) const = default;
};

/// The quotient R = O/(N).
class FiniteRing {
 public:
  FiniteRing(const QuadField& field, std::int64_t modulus);

  const QuadField& field() const { return field_; }
  std::int64_t modulus() const { return n_; }
  std::int64_t size() const { return n_ * n_; }

  RingElem make(std::int64_t a, std::int64_t b) const;
  RingElem zero() const { return {0, 0}; }
  RingElem one() const { return make(1, 0); }

  RingElem add(RingElem x, RingElem y) const;
  RingElem sub(RingElem x, RingElem y) const;
  RingElem neg(RingElem x) const;
  RingElem mul(RingElem x, RingElem y) const;
  /// a + bω ↦ a + bω̄
  RingElem sigma(RingElem x) const;

  bool is_unit(RingElem x) const;
  /// The ideal generated by x and y is all of R.
  bool is_unimodular(RingElem x, RingElem y) const;

  std::vector<RingElem> elements() const;
  std::vector<RingElem> units() const;

  /// Index of an element in elements(); a·N + b.
  std::size_t index(RingElem x) const { return static_cast<std::size_t>(x.a * n_ + x.b); }

  RingElem det(const Mat2& m) const;
  Mat2 mul(const Mat2& x, const Mat2& y) const;

 private:
  QuadField field_;
  std::int64_t n_;
  std::vector<PrimeIdeal> maximal_ideals_;
};

Mat2 sigma_mat(const FiniteRing& ring, const Mat2& m);
/// β·σ(m)·β with β = diag(−1, 1).
Mat2 tau_mat(const FiniteRing& ring, const Mat2& m);
Mat2 apply(const FiniteRing& ring, Involution inv, const Mat2& m);

/// Every element of SL₂(R); only for small rings.
std::vector<Mat2> sl2_elements(const FiniteRing& ring);

/// #SL₂(R) by counting all (a, b, c, d) with ad − bc = 1.
BigInt sl2_order_exhaustive(const FiniteRing& ring);
/// N⁶·∏_{𝔭 | (N)} (1 − N𝔭^{−2}).
BigInt sl2_order_formula(const QuadField& field, std::int64_t modulus);

/// Rings with |R| ≤ this are enumerated.
inline constexpr std::int64_t kExhaustiveRingSize = 81;

/// Exhaustive count when |R| ≤ 81, checked against the closed formula;
/// closed formula otherwise.
BigInt sl2_order(const FiniteRing& ring);

std::vector<ProjPoint> projective_line(const FiniteRing& ring);

/// Result of counting cosets gU (U upper unitriangular) fixed by an
/// involution, next to the closed-form prediction for the same count.
struct CensusReport {
  Involution involution = Involution::sigma;
  std::int64_t p = 0;
  unsigned n = 0;
  BigInt census;
  BigInt formula;
  bool match() const { return census == formula; }
};

/// N = pⁿ with p odd and unramified. The coset gU is determined by the first
/// column (a, c) of g; σ fixes it iff (σa, σc) = (a, c), τ iff (σa, −σc) = (a, c).
CensusReport fixed_coset_count(const FiniteRing& ring, Involution inv);

/// h(K)·#SL₂(O/(N))/N² with the SL₂ order counted where feasible.
BigInt cusp_count_bruteforce(const QuadField& field, std::int64_t modulus);

}  // namespace bianchi
