#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgrcol/bigint.hpp"

namespace mgrcol {

// Dense square matrix over exact integers.
struct IntMatrix {
  int n = 0;
  std::vector<BigInt> entries; // row-major, n*n

  IntMatrix() = default;
  explicit IntMatrix(int size) : n(size), entries(static_cast<size_t>(size) * size) {}
  BigInt& at(int r, int c) { return entries[static_cast<size_t>(r) * n + c]; }
  const BigInt& at(int r, int c) const { return entries[static_cast<size_t>(r) * n + c]; }
  bool operator==(const IntMatrix&) const = default;
};

// g[k-1] = gcd of all k x k minors (0 when they all vanish), k = 1..n.
struct GcdProfile {
  std::vector<BigInt> g;
  bool operator==(const GcdProfile&) const = default;
};

IntMatrix identity_matrix(int n);

BigInt determinant(const IntMatrix& m); // fraction-free elimination

// gcd over all C(n,k)^2 minors, exact; jobs > 1 partitions the row-subset
// enumeration across OpenMP workers (gcd-fold merge is order independent).
BigInt minor_gcd(const IntMatrix& m, int k, int jobs = 1);

GcdProfile gcd_profile(const IntMatrix& m, int jobs = 1);

// The paper family: (4+l) x (4+l) block matrix with upper-left
// rows (0 0 0 0 / 0 0 1 0 / -1 0 4 0 / -1 0 0 4+2k) and v in the lower right.
IntMatrix build_vk(const IntMatrix& v, long long k);

// True iff the profiles differ anywhere, certifying non-congruence.
bool profiles_distinguish(const IntMatrix& m1, const IntMatrix& m2, int jobs = 1);

// P^T M P; throws unless |det P| = 1.
IntMatrix congruent_transform(const IntMatrix& m, const IntMatrix& p);

// Product of `steps` seeded elementary matrices (row additions with
// coefficients in [-3,3], swaps, sign flips); det is +-1 by construction.
IntMatrix random_unimodular(int n, int steps, unsigned long long seed);

// Exhaustive search for P with P^T m1 P = m2, entries in [-entry_bound,
// entry_bound]. Test-scale only: n <= 3 and entry_bound <= 2.
std::optional<IntMatrix> congruence_witness_search(const IntMatrix& m1,
                                                   const IntMatrix& m2,
                                                   int entry_bound);

// Text format: first line n, then n rows of n signed integers.
IntMatrix parse_matrix(const std::string& text);
std::string serialize_matrix(const IntMatrix& m);

} // namespace mgrcol
