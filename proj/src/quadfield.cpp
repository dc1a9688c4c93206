#include "bianchi/quadfield.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bianchi/error.hpp"

namespace bianchi {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::string_view to_string(SplittingType type) {
  switch (type) {
    case SplittingType::split: return "split";
    case SplittingType::inert: return "inert";
    case SplittingType::ramified: return "ramified";
  }
  return "?";
}

bool PrimeIdeal::contains(std::int64_t a, std::int64_t b) const {
  if (!root) return mod(a, p) == 0 && mod(b, p) == 0;
  return mod(a + b * *root, p) == 0;
}

bool is_squarefree(std::int64_t n) {
  std::int64_t m = n < 0 ? -n : n;
  if (m == 0) return false;
  for (std::int64_t q = 2; q * q <= m; ++q) {
    if (m % (q * q) == 0) return false;
  }
  return true;
}

bool QuadField::is_ramified(std::int64_t p) const {
  return std::find(ramified_.begin(), ramified_.end(), p) != ramified_.end();
}

std::int64_t QuadField::norm(std::int64_t a, std::int64_t b) const {
  return a * a + a * b * omega_.trace + b * b * omega_.norm;
}

QuadField make_field(std::int64_t d) {
  require(d < 0, "make_field: d must be negative (d = " + std::to_string(d) + ")");
  require(is_squarefree(d), "make_field: d must be square-free (d = " + std::to_string(d) + ")");
  require(d != -1 && d != -3, "make_field: d ≠ −1,−3 (extra units are excluded)");

  QuadField f;
  f.d_ = d;
  if (mod(d, 4) == 1) {
    f.disc_ = d;
    f.omega_ = {1, (1 - d) / 4};
  } else {
    f.disc_ = 4 * d;
    f.omega_ = {0, -d};
  }
  for (const auto& [p, e] : factorize(BigInt(-f.disc_))) {
    f.ramified_.push_back(static_cast<std::int64_t>(p));
  }
  f.d2_ = f.disc_ % 8 == 0 ? 8 : (f.disc_ % 4 == 0 ? 4 : 1);
  f.h_ = class_number(f.disc_);
  return f;
}

SplittingType splitting_type(const QuadField& field, std::int64_t p) {
  require(p >= 2 && is_prime(BigInt(p)), "splitting_type: p must be prime");
  if (field.discriminant() % p == 0) return SplittingType::ramified;
  return kronecker(BigInt(field.discriminant()), BigInt(p)) == 1 ? SplittingType::split
                                                                  : SplittingType::inert;
}

std::vector<PrimeIdeal> primes_above(const QuadField& field, std::int64_t p) {
  SplittingType type = splitting_type(field, p);
  if (type == SplittingType::inert) return {PrimeIdeal{p, p * p, std::nullopt}};
  // roots of x² − trace·x + norm mod p
  std::vector<PrimeIdeal> ideals;
  const auto& w = field.omega();
  for (std::int64_t r = 0; r < p; ++r) {
    if (mod(r * r - w.trace * r + w.norm, p) == 0) ideals.push_back({p, p, r});
  }
  return ideals;
}

std::vector<ReducedForm> reduced_forms(std::int64_t discriminant) {
  require(discriminant < 0 && mod(discriminant, 4) <= 1, "reduced_forms: invalid discriminant");
  std::vector<ReducedForm> forms;
  const std::int64_t abs_d = -discriminant;
  // a ≤ √(|D|/3) for reduced forms
  for (std::int64_t a = 1; 3 * a * a <= abs_d; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      std::int64_t num = b * b - discriminant;
      if (num % (4 * a) != 0) continue;
      std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
      forms.push_back({a, b, c});
    }
  }
  return forms;
}

std::int64_t class_number(std::int64_t discriminant) {
  return static_cast<std::int64_t>(reduced_forms(discriminant).size());
}

std::int64_t class_number(const QuadField& field) { return field.class_number(); }

std::int64_t two_torsion_count(const QuadField& field) { return std::int64_t{1} << (field.t() - 1); }

}  // namespace bianchi
