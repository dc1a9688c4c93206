#include "bianchi/finitering.hpp"

#include <numeric>
#include <set>
#include <string>

#include "bianchi/error.hpp"

namespace bianchi {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

struct PrimePowerLevel {
  std::int64_t p = 0;
  unsigned n = 0;
};

PrimePowerLevel as_prime_power(std::int64_t modulus, std::string_view op) {
  auto fac = factorize(BigInt(modulus));
  require(fac.size() == 1, std::string(op) + ": N must be a prime power");
  return {static_cast<std::int64_t>(fac[0].prime), fac[0].exponent};
}

}  // namespace

std::string_view to_string(Involution inv) { return inv == Involution::sigma ? "sigma" : "tau"; }

FiniteRing::FiniteRing(const QuadField& field, std::int64_t modulus) : field_(field), n_(modulus) {
  require(modulus >= 2, "FiniteRing: modulus must be >= 2");
  for (const auto& [p, e] : factorize(BigInt(modulus))) {
    for (const auto& ideal : primes_above(field, static_cast<std::int64_t>(p))) {
      maximal_ideals_.push_back(ideal);
    }
  }
}

RingElem FiniteRing::make(std::int64_t a, std::int64_t b) const { return {mod(a, n_), mod(b, n_)}; }

RingElem FiniteRing::add(RingElem x, RingElem y) const { return make(x.a + y.a, x.b + y.b); }

RingElem FiniteRing::sub(RingElem x, RingElem y) const { return make(x.a - y.a, x.b - y.b); }

RingElem FiniteRing::neg(RingElem x) const { return make(-x.a, -x.b); }

RingElem FiniteRing::mul(RingElem x, RingElem y) const {
  // ω² = trace·ω − norm
  const auto& w = field_.omega();
  std::int64_t bb = mod(x.b * y.b, n_);
  return make(x.a * y.a - bb * w.norm, x.a * y.b + x.b * y.a + bb * w.trace);
}

RingElem FiniteRing::sigma(RingElem x) const {
  // ω̄ = trace − ω
  return make(x.a + x.b * field_.omega().trace, -x.b);
}

bool FiniteRing::is_unit(RingElem x) const {
  return std::gcd(mod(field_.norm(x.a, x.b), n_), n_) == 1;
}

bool FiniteRing::is_unimodular(RingElem x, RingElem y) const {
  for (const auto& ideal : maximal_ideals_) {
    if (ideal.contains(x.a, x.b) && ideal.contains(y.a, y.b)) return false;
  }
  return true;
}

std::vector<RingElem> FiniteRing::elements() const {
  std::vector<RingElem> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::int64_t a = 0; a < n_; ++a) {
    for (std::int64_t b = 0; b < n_; ++b) out.push_back({a, b});
  }
  return out;
}

std::vector<RingElem> FiniteRing::units() const {
  std::vector<RingElem> out;
  for (const auto& x : elements()) {
    if (is_unit(x)) out.push_back(x);
  }
  return out;
}

RingElem FiniteRing::det(const Mat2& m) const { return sub(mul(m.a, m.d), mul(m.b, m.c)); }

Mat2 FiniteRing::mul(const Mat2& x, const Mat2& y) const {
  return {add(mul(x.a, y.a), mul(x.b, y.c)), add(mul(x.a, y.b), mul(x.b, y.d)),
          add(mul(x.c, y.a), mul(x.d, y.c)), add(mul(x.c, y.b), mul(x.d, y.d))};
}

Mat2 sigma_mat(const FiniteRing& ring, const Mat2& m) {
  return {ring.sigma(m.a), ring.sigma(m.b), ring.sigma(m.c), ring.sigma(m.d)};
}

Mat2 tau_mat(const FiniteRing& ring, const Mat2& m) {
  return {ring.sigma(m.a), ring.neg(ring.sigma(m.b)), ring.neg(ring.sigma(m.c)), ring.sigma(m.d)};
}

Mat2 apply(const FiniteRing& ring, Involution inv, const Mat2& m) {
  return inv == Involution::sigma ? sigma_mat(ring, m) : tau_mat(ring, m);
}

std::vector<Mat2> sl2_elements(const FiniteRing& ring) {
  require(ring.size() <= kExhaustiveRingSize, "sl2_elements: ring too large to enumerate");
  const auto elems = ring.elements();
  const RingElem one = ring.one();
  std::vector<Mat2> out;
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      for (const auto& c : elems) {
        const RingElem rhs = ring.add(one, ring.mul(b, c));
        for (const auto& d : elems) {
          if (ring.mul(a, d) == rhs) out.push_back({a, b, c, d});
        }
      }
    }
  }
  return out;
}

BigInt sl2_order_exhaustive(const FiniteRing& ring) {
  // #{ad = r} and #{bc = r} over all pairs, then Σ_r #{ad = r}·#{bc = r − 1}
  const auto elems = ring.elements();
  std::vector<std::int64_t> products(static_cast<std::size_t>(ring.size()), 0);
  for (const auto& x : elems) {
    for (const auto& y : elems) ++products[ring.index(ring.mul(x, y))];
  }
  BigInt total = 0;
  for (const auto& r : elems) {
    const RingElem r_minus_one = ring.sub(r, ring.one());
    total += BigInt(products[ring.index(r)]) * products[ring.index(r_minus_one)];
  }
  return total;
}

BigInt sl2_order_formula(const QuadField& field, std::int64_t modulus) {
  require(modulus >= 1, "sl2_order_formula: N must be >= 1");
  BigRat value = BigRat(ipow(BigInt(modulus), 6));
  for (const auto& [p, e] : factorize(BigInt(modulus))) {
    for (const auto& ideal : primes_above(field, static_cast<std::int64_t>(p))) {
      value *= BigRat(1) - BigRat(BigInt(1), BigInt(ideal.norm) * ideal.norm);
    }
  }
  return require_integer(value, "#SL2(O/(N))");
}

BigInt sl2_order(const FiniteRing& ring) {
  BigInt formula = sl2_order_formula(ring.field(), ring.modulus());
  if (ring.size() > kExhaustiveRingSize) return formula;
  BigInt counted = sl2_order_exhaustive(ring);
  if (counted != formula) {
    throw ConformanceError("sl2_order: exhaustive count " + to_string(counted) +
                           " disagrees with closed formula " + to_string(formula));
  }
  return counted;
}

std::vector<ProjPoint> projective_line(const FiniteRing& ring) {
  as_prime_power(ring.modulus(), "projective_line");
  const auto elems = ring.elements();
  const auto units = ring.units();
  std::set<ProjPoint> points;
  for (const auto& x : elems) {
    for (const auto& y : elems) {
      if (!ring.is_unimodular(x, y)) continue;
      ProjPoint best{x, y};
      for (const auto& u : units) {
        ProjPoint scaled{ring.mul(u, x), ring.mul(u, y)};
        if (scaled < best) best = scaled;
      }
      points.insert(best);
    }
  }
  return {points.begin(), points.end()};
}

CensusReport fixed_coset_count(const FiniteRing& ring, Involution inv) {
  const auto [p, n] = as_prime_power(ring.modulus(), "fixed_coset_count");
  require(p != 2, "fixed_coset_count: p must be odd");
  require(!ring.field().is_ramified(p), "fixed_coset_count: p must be unramified in K");

  CensusReport report;
  report.involution = inv;
  report.p = p;
  report.n = n;
  std::int64_t count = 0;
  for (const auto& a : ring.elements()) {
    if (ring.sigma(a) != a) continue;
    for (const auto& c : ring.elements()) {
      const RingElem image = inv == Involution::sigma ? ring.sigma(c) : ring.neg(ring.sigma(c));
      if (image != c) continue;
      if (ring.is_unimodular(a, c)) ++count;
    }
  }
  report.census = count;
  const BigInt P(p);
  report.formula = inv == Involution::sigma ? ipow(P, 2 * n) - ipow(P, 2 * n - 2)
                                            : ipow(P, 2 * n - 1) - ipow(P, 2 * n - 2);
  return report;
}

BigInt cusp_count_bruteforce(const QuadField& field, std::int64_t modulus) {
  require(modulus >= 3, "cusp_count_bruteforce: N must be >= 3");
  FiniteRing ring(field, modulus);
  BigInt order = sl2_order(ring);
  BigInt n2 = BigInt(modulus) * modulus;
  if (order % n2 != 0) throw ConformanceError("cusp_count_bruteforce: #SL2 not divisible by N^2");
  return BigInt(field.class_number()) * order / n2;
}

}  // namespace bianchi
