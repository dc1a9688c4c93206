#include "bianchi/oracles.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "bianchi/error.hpp"

namespace bianchi::oracle {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

struct Vec {
  std::int64_t x = 0, y = 0;  // x + yω
};

Vec mul(const QuadField& f, Vec u, Vec v) {
  const auto [tr, nm] = f.omega();
  return {u.x * v.x - u.y * v.y * nm, u.x * v.y + u.y * v.x + u.y * v.y * tr};
}

// Z-lattice in O in the form AZ + (B + Cω)Z.
struct Hnf {
  std::int64_t A = 0, B = 0, C = 0;

  bool contains(Vec v) const {
    if (v.y % C != 0) return false;
    return mod(v.x - (v.y / C) * B, A) == 0;
  }
};

Hnf hnf(std::vector<Vec> gens) {
  for (;;) {
    std::size_t pivot = gens.size();
    std::size_t other = gens.size();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].y == 0) continue;
      if (pivot == gens.size() || std::abs(gens[i].y) < std::abs(gens[pivot].y)) pivot = i;
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i != pivot && gens[i].y != 0) other = i;
    }
    if (other == gens.size()) {
      require(pivot != gens.size(), "hnf: lattice has rank < 2");
      Vec e2 = gens[pivot];
      if (e2.y < 0) e2 = {-e2.x, -e2.y};
      std::int64_t A = 0;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i != pivot) A = std::gcd(A, gens[i].x);
      }
      require(A != 0, "hnf: lattice has rank < 2");
      return {A, mod(e2.x, A), e2.y};
    }
    const std::int64_t q = gens[other].y / gens[pivot].y;
    gens[other].x -= q * gens[pivot].x;
    gens[other].y -= q * gens[pivot].y;
  }
}

}  // namespace

Factorization factorize_trial(std::int64_t n) {
  require(n >= 1, "factorize_trial: n must be >= 1");
  Factorization out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({BigInt(p), e});
  }
  if (n > 1) out.push_back({BigInt(n), 1});
  return out;
}

int legendre_by_squares(std::int64_t a, std::int64_t p) {
  const std::int64_t r = mod(a, p);
  if (r == 0) return 0;
  for (std::int64_t x = 1; x < p; ++x) {
    if (x * x % p == r) return 1;
  }
  return -1;
}

std::int64_t phi_by_count(std::int64_t n) {
  std::int64_t count = 0;
  for (std::int64_t a = 1; a <= n; ++a) {
    if (std::gcd(a, n) == 1) ++count;
  }
  return count;
}

int hilbert2_by_search(std::int64_t a, std::int64_t b) {
  require(a != 0 && b != 0, "hilbert2_by_search: arguments must be nonzero");
  constexpr std::int64_t M = 512;
  std::set<std::int64_t> squares, odd_squares;
  for (std::int64_t x = 0; x < M; ++x) {
    squares.insert(x * x % M);
    if (x % 2 == 1) odd_squares.insert(x * x % M);
  }
  for (std::int64_t x2 : squares) {
    for (std::int64_t y2 : squares) {
      if (!odd_squares.contains(x2) && !odd_squares.contains(y2)) continue;
      if (squares.contains(mod(a * x2 + b * y2, M))) return 1;
    }
  }
  return -1;
}

BigInt sym_power_trace_by_eigenvalues(std::int64_t t, long k) {
  require(k >= 0, "sym_power_trace_by_eigenvalues: k must be >= 0");
  // elements c0 + c1·λ with λ² = tλ − 1
  struct El {
    BigInt c0, c1;
  };
  auto times = [t](const El& u, const El& v) {
    const BigInt sq = u.c1 * v.c1;
    return El{u.c0 * v.c0 - sq, u.c0 * v.c1 + u.c1 * v.c0 + sq * t};
  };
  const El lambda{0, 1};
  const El mu{t, -1};
  El total{0, 0};
  for (long j = 0; j <= k; ++j) {
    El term{1, 0};
    for (long i = 0; i < k - j; ++i) term = times(term, lambda);
    for (long i = 0; i < j; ++i) term = times(term, mu);
    total.c0 += term.c0;
    total.c1 += term.c1;
  }
  if (total.c1 != 0) throw ConformanceError("eigenvalue sum is not rational");
  return total.c0;
}

SplittingType splitting_type_by_roots(const QuadField& field, std::int64_t p) {
  const auto [tr, nm] = field.omega();
  int roots = 0;
  for (std::int64_t x = 0; x < p; ++x) {
    if (mod(x * x - tr * x + nm, p) == 0) ++roots;
  }
  if (roots == 2) return SplittingType::split;
  if (roots == 1) return SplittingType::ramified;
  return SplittingType::inert;
}

std::vector<IdealLattice> primitive_ideals(const QuadField& field, std::int64_t bound) {
  const auto [tr, nm] = field.omega();
  std::vector<IdealLattice> out;
  for (std::int64_t a = 1; a <= bound; ++a) {
    for (std::int64_t b = 0; b < a; ++b) {
      if (mod(b * b + b * tr + nm, a) == 0) out.push_back({a, b});
    }
  }
  return out;
}

bool ideals_equivalent(const QuadField& field, const IdealLattice& I, const IdealLattice& J) {
  const auto tr = field.omega().trace;
  const Vec i1{I.a, 0}, i2{I.b, 1};
  const Vec j1{J.a, 0}, j2{J.b + tr, -1};  // conjugate of J.b + ω
  const Hnf prod = hnf({mul(field, i1, j1), mul(field, i1, j2), mul(field, i2, j1), mul(field, i2, j2)});
  const std::int64_t n = I.a * J.a;
  require(prod.A * prod.C == n, "ideals_equivalent: product index differs from the norm");
  // 4N(x + yω) = (2x + y·tr)² + y²·|D|
  const std::int64_t D = -field.discriminant();
  for (std::int64_t y = 0; y * y * D <= 4 * n; ++y) {
    const std::int64_t rest = 4 * n - y * y * D;
    const std::int64_t s = isqrt(rest);
    if (s * s != rest) continue;
    for (std::int64_t sign_y : {1, -1}) {
      for (std::int64_t sign_s : {1, -1}) {
        const std::int64_t yy = sign_y * y;
        const std::int64_t twice_x = sign_s * s - yy * tr;
        if (twice_x % 2 != 0) continue;
        if (prod.contains({twice_x / 2, yy})) return true;
      }
    }
  }
  return false;
}

std::int64_t class_number_by_ideals(const QuadField& field) {
  const double minkowski =
      2.0 / std::numbers::pi * std::sqrt(static_cast<double>(-field.discriminant()));
  const auto ideals = primitive_ideals(field, static_cast<std::int64_t>(std::floor(minkowski)) + 1);
  std::vector<IdealLattice> classes;
  for (const auto& I : ideals) {
    bool known = false;
    for (const auto& rep : classes) {
      if (ideals_equivalent(field, I, rep)) {
        known = true;
        break;
      }
    }
    if (!known) classes.push_back(I);
  }
  return static_cast<std::int64_t>(classes.size());
}

}  // namespace bianchi::oracle
