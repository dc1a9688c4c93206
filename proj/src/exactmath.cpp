#include "bianchi/exactmath.hpp"

#include <algorithm>
#include <map>

#include <boost/integer/common_factor.hpp>

#include "bianchi/error.hpp"

namespace bianchi {

namespace mp = boost::multiprecision;

namespace {

constexpr unsigned kTrialLimit = 1000000;

// Miller-Rabin with the first thirteen primes as witnesses; exact below 3.3e24.
bool miller_rabin(const BigInt& n) {
  static const unsigned witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  BigInt d = n - 1;
  unsigned r = 0;
  while (!mp::bit_test(d, 0)) {
    d >>= 1;
    ++r;
  }
  for (unsigned w : witnesses) {
    BigInt a(w);
    if (a % n == 0) continue;
    BigInt x = mp::powm(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r; ++i) {
      x = (x * x) % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's variant of Pollard rho; n is odd, composite, without small factors.
BigInt pollard_rho(const BigInt& n) {
  for (unsigned c = 1;; ++c) {
    BigInt x = 2, y = 2, g = 1;
    auto f = [&](const BigInt& v) { return (v * v + c) % n; };
    while (g == 1) {
      x = f(x);
      y = f(f(y));
      BigInt diff = x > y ? BigInt(x - y) : BigInt(y - x);
      g = boost::integer::gcd(diff, n);
    }
    if (g != n) return g;
  }
}

void split_large(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  BigInt f = pollard_rho(n);
  split_large(f, out);
  split_large(n / f, out);
}

int odd_part_symbol_mod8(const BigInt& a) {
  // (a/2) in the Kronecker sense for odd a
  int r = static_cast<int>(((a % 8) + 8) % 8);
  return (r == 1 || r == 7) ? 1 : -1;
}

int jacobi(BigInt a, BigInt n) {
  // n odd and positive
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (!mp::bit_test(a, 0)) {
      a >>= 1;
      int r = static_cast<int>(n % 8);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  return miller_rabin(n);
}

Factorization factorize(const BigInt& n) {
  require(n >= 1, "factorize: n must be >= 1");
  Factorization result;
  BigInt m = n;
  for (unsigned p = 2; p <= kTrialLimit && BigInt(p) * p <= m; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) result.push_back({BigInt(p), e});
  }
  if (m > 1) {
    std::map<BigInt, unsigned> large;
    split_large(m, large);
    for (const auto& [p, e] : large) result.push_back({p, e});
  }
  return result;
}

unsigned valuation(BigInt n, const BigInt& p) {
  require(n != 0, "valuation: zero has infinite valuation");
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

BigInt ipow(const BigInt& base, unsigned exponent) { return mp::pow(base, exponent); }

BigRat pow2(long exponent) {
  BigInt magnitude = BigInt(1) << static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  return exponent < 0 ? BigRat(BigInt(1), magnitude) : BigRat(magnitude);
}

int legendre(const BigInt& a, const BigInt& p) {
  require(p > 2 && is_prime(p), "legendre: p must be an odd prime");
  return jacobi(a, p);
}

int kronecker(const BigInt& a, const BigInt& n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  BigInt m = n;
  if (m < 0) {
    m = -m;
    if (a < 0) result = -result;
  }
  unsigned v = 0;
  while (!mp::bit_test(m, 0)) {
    m >>= 1;
    ++v;
  }
  if (v > 0) {
    if (!mp::bit_test(a, 0) && a != 0) return 0;
    if (a == 0) return 0;
    if (v % 2 == 1) result *= odd_part_symbol_mod8(a);
  }
  if (m == 1) return result;
  return result * jacobi(a, m);
}

int hilbert2(const BigInt& a, const BigInt& b) {
  require(a != 0 && b != 0, "hilbert2: arguments must be nonzero");
  unsigned alpha = valuation(a, 2);
  unsigned beta = valuation(b, 2);
  BigInt u = a / (BigInt(1) << alpha);
  BigInt v = b / (BigInt(1) << beta);
  auto residue8 = [](const BigInt& x) { return static_cast<int>(((x % 8) + 8) % 8); };
  auto eps = [&](const BigInt& x) { int r = residue8(x); return (r == 3 || r == 7) ? 1 : 0; };
  auto omega = [&](const BigInt& x) { int r = residue8(x); return (r == 3 || r == 5) ? 1 : 0; };
  unsigned exponent = eps(u) * eps(v) + (alpha % 2) * omega(v) + (beta % 2) * omega(u);
  return exponent % 2 == 0 ? 1 : -1;
}

BigInt euler_phi(const BigInt& n) {
  require(n >= 1, "euler_phi: n must be >= 1");
  BigInt result = n;
  for (const auto& [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

BigInt sym_power_trace(const BigInt& t, long k) {
  require(k >= 0, "sym_power_trace: k must be >= 0");
  BigInt prev = 1;  // u_0
  if (k == 0) return prev;
  BigInt cur = t;  // u_1
  for (long j = 2; j <= k; ++j) {
    BigInt next = t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool is_integer(const BigRat& value) { return mp::denominator(value) == 1; }

BigInt require_integer(const BigRat& value, std::string_view what) {
  if (!is_integer(value)) {
    throw ConformanceError(std::string(what) + " is not an integer: " + to_string(value));
  }
  return mp::numerator(value);
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const BigRat& value) {
  if (is_integer(value)) return mp::numerator(value).str();
  return mp::numerator(value).str() + "/" + mp::denominator(value).str();
}

}  // namespace bianchi
