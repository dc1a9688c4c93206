#pragma once

// Brute-force counterparts of the closed formulas. Each one recomputes its
// quantity from definitions only, sharing no code path with the formula it
// checks.

#include <cstdint>
#include <vector>

#include "bianchi/exactmath.hpp"
#include "bianchi/quadfield.hpp"

namespace bianchi::oracle {

/// Trial division up to √n.
Factorization factorize_trial(std::int64_t n);

/// Is a a nonzero square mod p, by listing all squares.
int legendre_by_squares(std::int64_t a, std::int64_t p);

/// Units mod n counted one by one.
std::int64_t phi_by_count(std::int64_t n);

/// z² ≡ a·x² + b·y² (mod 2⁹) with x or y odd.
int hilbert2_by_search(std::int64_t a, std::int64_t b);

/// Σ λ^{k−j}·μ^j in Z[λ]/(λ² − tλ + 1), μ = t − λ.
BigInt sym_power_trace_by_eigenvalues(std::int64_t t, long k);

/// Roots of x² − trace·x + norm mod p: two distinct → split, one → ramified.
SplittingType splitting_type_by_roots(const QuadField& field, std::int64_t p);

/// Primitive ideal aZ + (b + ω)Z of O, 0 ≤ b < a, a | N(b + ω).
struct IdealLattice {
  std::int64_t a = 1;
  std::int64_t b = 0;
};

/// Primitive ideals of norm ≤ bound.
std::vector<IdealLattice> primitive_ideals(const QuadField& field, std::int64_t bound);

/// I·J̄ is principal, tested by searching for a generator of the right norm.
bool ideals_equivalent(const QuadField& field, const IdealLattice& I, const IdealLattice& J);

/// Number of classes among primitive ideals of norm ≤ the Minkowski bound.
std::int64_t class_number_by_ideals(const QuadField& field);

}  // namespace bianchi::oracle
