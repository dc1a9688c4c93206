#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "bianchi/exactmath.hpp"

namespace bianchi {

enum class SplittingType { split, inert, ramified };

std::string_view to_string(SplittingType type);

/// ω satisfies ω² = trace·ω − norm, i.e. ω² = d (d ≡ 2,3 mod 4) or
/// ω² = ω + (d−1)/4 (d ≡ 1 mod 4). O-elements are pairs (a, b) = a + bω.
struct OmegaRule {
  std::int64_t trace = 0;
  std::int64_t norm = 0;
};

/// A prime ideal 𝔭 of O above a rational prime p. When `root` is set,
/// 𝔭 = (p, ω − root); otherwise p is inert and 𝔭 = (p).
struct PrimeIdeal {
  std::int64_t p = 0;
  std::int64_t norm = 0;
  std::optional<std::int64_t> root;

  bool contains(std::int64_t a, std::int64_t b) const;
};

/// Reduced primitive positive-definite form ax² + bxy + cy².
struct ReducedForm {
  std::int64_t a = 0, b = 0, c = 0;

  bool ambiguous() const { return b == 0 || a == b || a == c; }
  bool operator==(const ReducedForm&) const = default;
};

/// Invariants of K = Q(√d) for square-free d < 0, d ≠ −1, −3.
class QuadField {
 public:
  std::int64_t d() const { return d_; }
  std::int64_t discriminant() const { return disc_; }
  const OmegaRule& omega() const { return omega_; }
  const std::vector<std::int64_t>& ramified_primes() const { return ramified_; }
  unsigned t() const { return static_cast<unsigned>(ramified_.size()); }
  /// 2-part of the discriminant: 1, 4 or 8.
  std::int64_t d2() const { return d2_; }
  std::int64_t class_number() const { return h_; }
  bool d_is_1_mod_4() const { return omega_.trace == 1; }
  bool is_ramified(std::int64_t p) const;

  std::int64_t norm(std::int64_t a, std::int64_t b) const;

  friend QuadField make_field(std::int64_t d);

 private:
  std::int64_t d_ = 0;
  std::int64_t disc_ = 0;
  OmegaRule omega_;
  std::vector<std::int64_t> ramified_;
  std::int64_t d2_ = 1;
  std::int64_t h_ = 0;
};

QuadField make_field(std::int64_t d);

bool is_squarefree(std::int64_t n);

SplittingType splitting_type(const QuadField& field, std::int64_t p);

std::vector<PrimeIdeal> primes_above(const QuadField& field, std::int64_t p);

std::vector<ReducedForm> reduced_forms(std::int64_t discriminant);

std::int64_t class_number(const QuadField& field);
std::int64_t class_number(std::int64_t discriminant);

/// Number of ideal classes of order dividing 2: 2^{t−1}.
std::int64_t two_torsion_count(const QuadField& field);

}  // namespace bianchi
