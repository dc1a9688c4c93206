#include "bianchi/lefschetz.hpp"

#include <string>

#include "bianchi/error.hpp"

namespace bianchi {

namespace {

BigRat euler_product(const Factorization& fac) {
  BigRat product = 1;
  for (const auto& [p, e] : fac) product *= BigRat(1) - BigRat(BigInt(1), p * p);
  return product;
}

int local_symbol(const QuadField& field, std::int64_t a, std::int64_t p) {
  // (a | p) at a ramified prime: Legendre for odd p, the norm character of
  // Q₂(√d)/Q₂ for p = 2
  if (p == 2) return hilbert2(BigInt(a), BigInt(field.d()));
  return legendre(BigInt(a), BigInt(p));
}

}  // namespace

Level make_level(const QuadField& field, std::int64_t N, SRule rule) {
  require(N > 2, "make_level: N must be > 2 (N = " + std::to_string(N) + ")");
  Level level;
  level.N = N;
  level.s_rule = rule;
  level.factorization = factorize(BigInt(N));
  for (const auto& [p, e] : level.factorization) {
    const auto prime = static_cast<std::int64_t>(p);
    const SplittingType type = splitting_type(field, prime);
    level.splitting.push_back(type);
    if (prime == 2) level.j2 = type == SplittingType::ramified ? 2 * e : e;
    if (prime == 2) continue;
    if (rule == SRule::odd_level_primes || type == SplittingType::ramified) ++level.s;
  }
  const RohlfsAB ab = rohlfs_ab(field, level);
  level.A = ab.A;
  level.B = ab.B;
  level.non_integral_ab = ab.non_integral;
  level.validated = level.factorization.size() == 1;
  return level;
}

RohlfsAB rohlfs_ab(const QuadField& field, const Level& level) {
  require(level.N > 2, "rohlfs_ab: N must be > 2");
  const long e = static_cast<long>(field.t()) - static_cast<long>(level.s);
  const std::int64_t d_mod_4 = ((field.d() % 4) + 4) % 4;
  const unsigned j2 = level.j2;
  RohlfsAB ab;
  if (d_mod_4 == 1) {
    ab.A = pow2(e);
    ab.B = 0;
  } else if (d_mod_4 == 2) {
    if (j2 <= 1) {
      ab.A = pow2(e);
      ab.B = pow2(e - 1);
    } else if (j2 == 2) {
      ab.A = 8 * pow2(e);
      ab.B = 0;
    } else {
      ab.A = 8 * pow2(e - 1);
      ab.B = 0;
    }
  } else {
    if (j2 == 0) {
      ab.A = pow2(e);
      ab.B = pow2(e - 1);
    } else if (j2 == 1) {
      ab.A = pow2(e);
      ab.B = 0;
    } else if (j2 == 2) {
      ab.A = 8 * pow2(e);
      ab.B = 0;
    } else if (j2 % 2 == 1) {
      ab.A = pow2(e - 1);
      ab.B = 0;
    } else {
      ab.A = 8 * pow2(e - 1);
      ab.B = 0;
    }
  }
  ab.non_integral = !is_integer(ab.A) || !is_integer(ab.B);
  return ab;
}

BigInt lefschetz_sigma_principal(const QuadField& /*field*/, const Level& level, long k) {
  require(level.N > 2, "lefschetz_sigma_principal: N must be > 2");
  require(k >= 0, "lefschetz_sigma_principal: k must be >= 0");
  const BigInt n3 = ipow(BigInt(level.N), 3);
  const BigRat value = (level.A + 2 * level.B) * BigRat(-n3, BigInt(12)) *
                       euler_product(level.factorization) * BigRat(k + 1);
  return require_integer(value, "L(sigma, Gamma(" + std::to_string(level.N) + "))");
}

BigInt lefschetz_sigma_prime_power(const QuadField& field, std::int64_t p, unsigned n, long k) {
  require(p > 2 && is_prime(BigInt(p)), "lefschetz_sigma_prime_power: p must be an odd prime");
  require(n >= 1, "lefschetz_sigma_prime_power: n must be >= 1");
  require(!field.is_ramified(p), "lefschetz_sigma_prime_power: p must be unramified in K");
  require(k >= 0, "lefschetz_sigma_prime_power: k must be >= 0");
  const BigInt P(p);
  const long exponent = field.d_is_1_mod_4() ? static_cast<long>(field.t()) - 1
                                              : static_cast<long>(field.t());
  const BigRat value = -pow2(exponent) * BigRat(ipow(P, 3 * n) - ipow(P, 3 * n - 2), BigInt(12)) *
                       BigRat(k + 1);
  return require_integer(value, "L(sigma, Gamma(p^n))");
}

std::string_view to_string(BracketVariant variant) {
  switch (variant) {
    case BracketVariant::rational: return "rational";
    case BracketVariant::kronecker: return "kronecker";
    case BracketVariant::torsion_char: return "torsion-char";
  }
  return "?";
}

std::optional<BracketVariant> parse_bracket(std::string_view name) {
  for (auto v : kAllBracketVariants) {
    if (to_string(v) == name) return v;
  }
  if (name == "torsion_char") return BracketVariant::torsion_char;
  return std::nullopt;
}

BigRat bracket(BracketVariant variant, long k, int m) {
  require(m == 3 || m == 4, "bracket: modulus must be 3 or 4");
  require(k >= 0, "bracket: k must be >= 0");
  switch (variant) {
    case BracketVariant::rational:
      return BigRat(BigInt(k + 1), BigInt(m));
    case BracketVariant::kronecker:
      return BigRat(kronecker(BigInt(k + 1), BigInt(m)));
    case BracketVariant::torsion_char:
      // order 4: trace 0; order 3: trace −1
      return BigRat(sym_power_trace(BigInt(m == 4 ? 0 : -1), k));
  }
  return 0;
}

LevelOneLefschetz lefschetz_level_one(const QuadField& field, Involution inv, long k,
                                      BracketVariant variant) {
  require(k >= 0, "lefschetz_level_one: k must be >= 0");
  const std::int64_t q = inv == Involution::tau ? 1 : -1;
  const BigRat sign_k = k % 2 == 0 ? 1 : -1;
  const BigRat weight = k + 1;

  BigRat p1 = 1, p2 = 1, p3 = 1, p4a = 1, p4b = 1;
  for (std::int64_t p : field.ramified_primes()) {
    if (p == 2) {
      p1 *= field.d2() + local_symbol(field, q, 2);
      p2 *= 4 + local_symbol(field, -q, 2);
    } else {
      p1 *= p + local_symbol(field, q, p);
      p2 *= 1 + local_symbol(field, -q, p);
      p3 *= 1 + local_symbol(field, -2 * q, p);
    }
    if (p != 3) p4a *= 1 + local_symbol(field, -3 * q, p);
    p4b *= 1 + local_symbol(field, -q, p);
  }

  LevelOneLefschetz out;
  out.involution = inv;
  out.k = k;
  out.variant = variant;
  out.terms[0] = BigRat(-q, 12) * p1 * weight;
  out.terms[1] = BigRat(q, 12) * p2 * sign_k * weight;
  out.terms[2] = BigRat(1, 2) * p3 * bracket(variant, k, 4);
  out.terms[3] = BigRat(1, 3) * (p4a + sign_k * p4b) * bracket(variant, k, 3);
  out.value = sign_k * (out.terms[0] + out.terms[1] + out.terms[2] + out.terms[3]);
  return out;
}

bool VariantAdjudication::passes_even_k() const {
  auto even = [](const std::vector<BracketFinding>& v) {
    for (const auto& f : v) {
      if (f.k % 2 == 0) return false;
    }
    return true;
  };
  return even(integrality_failures) && even(parity_violations) && anchor_failures.empty();
}

bool VariantAdjudication::passes_odd_k() const {
  auto odd = [](const std::vector<BracketFinding>& v) {
    for (const auto& f : v) {
      if (f.k % 2 == 1) return false;
    }
    return true;
  };
  return odd(integrality_failures) && odd(parity_violations);
}

std::vector<BracketVariant> BracketAdjudication::even_k_conforming() const {
  std::vector<BracketVariant> out;
  for (const auto& v : variants) {
    if (v.passes_even_k()) out.push_back(v.variant);
  }
  return out;
}

const VariantAdjudication& BracketAdjudication::result(BracketVariant variant) const {
  for (const auto& v : variants) {
    if (v.variant == variant) return v;
  }
  throw PreconditionError("BracketAdjudication: variant not scanned");
}

BracketAdjudication adjudicate_brackets(const std::vector<std::int64_t>& ds, long k_max) {
  require(k_max >= 0, "adjudicate_brackets: k_max must be >= 0");
  BracketAdjudication report;
  report.discriminants = ds;
  report.k_max = k_max;
  std::vector<QuadField> fields;
  for (std::int64_t d : ds) fields.push_back(make_field(d));

  for (BracketVariant variant : kAllBracketVariants) {
    VariantAdjudication result;
    result.variant = variant;
    for (const auto& field : fields) {
      const std::int64_t h = field.class_number();
      const BigInt two_t = BigInt(1) << field.t();
      const BigInt genus = BigInt(1) << (field.t() - 1);
      for (long k = 0; k <= k_max; ++k) {
        const auto sigma = lefschetz_level_one(field, Involution::sigma, k, variant);
        const auto tau = lefschetz_level_one(field, Involution::tau, k, variant);
        for (const auto* l : {&sigma, &tau}) {
          if (!l->integral()) {
            result.integrality_failures.push_back(
                {field.d(), k, l->involution, "L = " + to_string(l->value)});
          }
        }
        if (k > 0) {
          const BigRat sum = sigma.value + tau.value + BigRat(two_t);
          if (!is_integer(sum)) {
            result.parity_violations.push_back(
                {field.d(), k, std::nullopt, "L(sigma)+L(tau)+2^t = " + to_string(sum)});
          } else if (boost::multiprecision::numerator(sum) % 4 != 0) {
            result.parity_violations.push_back(
                {field.d(), k, std::nullopt,
                 "L(sigma)+L(tau)+2^t = " + to_string(sum) + " not divisible by 4"});
          }
        } else {
          const BigRat want_sigma = BigRat(2 + h) - BigRat(genus);
          const BigRat want_tau = BigRat(2 - h) - BigRat(genus);
          if (sigma.value != want_sigma) {
            result.anchor_failures.push_back({field.d(), 0, Involution::sigma,
                                              "L = " + to_string(sigma.value) + ", expected " +
                                                  to_string(want_sigma)});
          }
          if (tau.value != want_tau) {
            result.anchor_failures.push_back({field.d(), 0, Involution::tau,
                                              "L = " + to_string(tau.value) + ", expected " +
                                                  to_string(want_tau)});
          }
        }
      }
    }
    report.variants.push_back(std::move(result));
  }
  return report;
}

ClassicalInvariants classical_gamma_invariants(std::int64_t N) {
  require(N >= 3, "classical_gamma_invariants: N must be >= 3");
  const BigRat product = euler_product(factorize(BigInt(N)));
  const BigInt n2 = BigInt(N) * N;
  ClassicalInvariants out;
  out.cusps = require_integer(BigRat(n2, BigInt(2)) * product, "cusps of Gamma_N");
  out.chi_compact = BigRat(-n2 * (N - 6), BigInt(12)) * product;
  out.chi_group = BigRat(-n2 * N, BigInt(12)) * product;
  return out;
}

}  // namespace bianchi
