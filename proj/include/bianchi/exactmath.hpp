#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bianchi {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

/// Primes strictly increasing, exponents positive. Empty for 1.
using Factorization = std::vector<PrimePower>;

Factorization factorize(const BigInt& n);
bool is_prime(const BigInt& n);

/// p-adic valuation of a nonzero integer.
unsigned valuation(BigInt n, const BigInt& p);

BigInt ipow(const BigInt& base, unsigned exponent);

/// 2^e for any sign of e, as an exact rational.
BigRat pow2(long exponent);

int legendre(const BigInt& a, const BigInt& p);
int kronecker(const BigInt& a, const BigInt& n);

/// The 2-adic Hilbert symbol (a,b)_2, by the unit/valuation exponent formula.
int hilbert2(const BigInt& a, const BigInt& b);

BigInt euler_phi(const BigInt& n);

/// Trace of x on the k-th symmetric power of C^2 for det(x) = 1, tr(x) = t.
BigInt sym_power_trace(const BigInt& t, long k);

/// Converts an exact rational that must be an integer. Throws
/// ConformanceError naming `what` when the denominator is not 1.
BigInt require_integer(const BigRat& value, std::string_view what);

bool is_integer(const BigRat& value);

std::string to_string(const BigInt& value);
std::string to_string(const BigRat& value);

inline BigInt big(std::int64_t v) { return BigInt(v); }

}  // namespace bianchi
