#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fockda/fock.hpp"

namespace fockda {

/// Length, charge (dg) and energy (deg_h) of a monomial.
struct GradeTriple {
  int length = 0;
  int charge = 0;
  int energy = 0;
  friend bool operator==(const GradeTriple&, const GradeTriple&) = default;
};

/// #odd indices - #even indices.
int dg(const FermionMonomial& v);

/// v_0 = |0>; indices {1, 3, ..., 2n-1} for n > 0 and {0, 2, ..., 2|n|-2} for n < 0.
FermionMonomial vacuum_like(int n);

/// Sum of (n_i + 1/2).
Rational weight(const FermionMonomial& v);

/// Twice the weight of v_n, which is 2n^2 + n for every integer n.
int vacuum_like_weight2(int n);

/// (weight(v) - weight(v_dg(v))) / 2. Throws std::logic_error if not a non-negative integer.
int deg_h(const FermionMonomial& v);

GradeTriple grades(const FermionMonomial& v);

/// All monomials with dg = n and deg_h = k, in basis order.
std::vector<FermionMonomial> sector_basis(int n, int k);

/// Non-increasing list of positive parts.
struct Partition {
  std::vector<int> parts;
  int size() const;
  std::string to_string() const;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Partitions of k, parts non-increasing, in reverse lexicographic order (largest first part first).
std::vector<Partition> partitions_of(int k);

std::int64_t partition_count(int k);

/// Injective map from partitions of k into sector (0, k).
///
/// Uses the Frobenius coordinates of the Young diagram: with Durfee size d, arms a_i = lambda_i - i
/// and legs b_i = lambda'_i - i, the monomial has odd indices {2 a_i + 1} and even indices {2 b_i}.
FermionMonomial lemma_vector(const Partition& lambda);

}  // namespace fockda
