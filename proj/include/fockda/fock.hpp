#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fockda/linear.hpp"
#include "fockda/rational.hpp"

namespace fockda {

/// Index of a neutral-fermion mode phi_p, p in Z + 1/2, stored as the odd integer 2p.
/// p < 0 is a creation mode, p > 0 an annihilation mode.
class FermionModeIndex {
 public:
  /// From the doubled value 2p; throws std::invalid_argument unless odd.
  static FermionModeIndex from_doubled(int twice);
  /// The creation mode phi_{-n-1/2} that inserts index n >= 0.
  static FermionModeIndex creator(int n) { return FermionModeIndex(-2 * n - 1); }
  /// The annihilation mode phi_{n+1/2} that removes index n >= 0.
  static FermionModeIndex annihilator(int n) { return FermionModeIndex(2 * n + 1); }
  /// Parses `p/2` or `-p/2` with p odd.
  static FermionModeIndex parse(std::string_view text);

  int doubled() const { return twice_; }
  bool is_creation() const { return twice_ < 0; }
  bool is_annihilation() const { return twice_ > 0; }
  /// The monomial index n >= 0 this mode inserts (creation) or removes (annihilation).
  int fock_index() const { return twice_ < 0 ? (-twice_ - 1) / 2 : (twice_ - 1) / 2; }
  FermionModeIndex dual() const { return FermionModeIndex(-twice_); }
  Rational value() const { return Rational(twice_, 2); }
  std::string to_string() const;

  friend auto operator<=>(const FermionModeIndex&, const FermionModeIndex&) = default;

 private:
  explicit FermionModeIndex(int twice) : twice_(twice) {}
  int twice_;
};

/// Canonical monomial phi_{-n_k-1/2} ... phi_{-n_1-1/2}|0> with n_k > ... > n_1 >= 0,
/// most negative mode leftmost. Stored as a bit set over the indices n_i (n_i < kMaxIndex).
class FermionMonomial {
 public:
  static constexpr int kMaxIndex = 128;
  using Mask = unsigned __int128;

  FermionMonomial() = default;  // vacuum
  /// From any list of distinct non-negative indices (order irrelevant).
  /// Throws std::invalid_argument on duplicates, negatives or indices >= kMaxIndex.
  static FermionMonomial from_indices(const std::vector<int>& indices);
  static FermionMonomial from_mask(Mask mask);

  bool is_vacuum() const { return mask_ == 0; }
  bool contains(int n) const { return n >= 0 && n < kMaxIndex && ((mask_ >> n) & 1U) != 0; }
  /// Number of factors (the "length" grading).
  int length() const;
  /// Indices in increasing order n_1 < n_2 < ... < n_k.
  std::vector<int> indices() const;
  /// Largest index, or -1 for the vacuum.
  int max_index() const;
  /// Number of stored indices strictly greater than n.
  int count_above(int n) const;
  /// Twice the weight: sum of (2 n_i + 1).
  int weight2() const { return weight2_; }
  Rational weight() const { return Rational(weight2_, 2); }
  Mask mask() const { return mask_; }

  FermionMonomial with(int n) const;
  FermionMonomial without(int n) const;

  /// `phi[-5/2] phi[-1/2] |0>`; the vacuum renders as `|0>`.
  std::string to_string() const;

  friend bool operator==(const FermionMonomial& a, const FermionMonomial& b) { return a.mask_ == b.mask_; }
  /// Graded by weight, then lexicographic on the increasing index lists.
  friend std::strong_ordering operator<=>(const FermionMonomial& a, const FermionMonomial& b);

 private:
  Mask mask_ = 0;
  int weight2_ = 0;
};

using FockState = LinearCombination<FermionMonomial>;
using NeutralOperator = LinearOperator<FermionMonomial>;
using NeutralFamily = OperatorFamily<FermionMonomial>;

inline FockState vacuum_state() { return FockState(FermionMonomial{}); }

/// Clifford action of phi_m on a single monomial ({phi_m, phi_n} = delta_{m,-n}, phi_m|0> = 0 for m > 0).
FockState apply_fermion_mode(FermionModeIndex m, const FermionMonomial& v);
/// Linear extension of the monomial action.
FockState apply_fermion_mode(FermionModeIndex m, const FockState& s);
/// phi_m as a LinearOperator.
NeutralOperator fermion_mode_operator(FermionModeIndex m);

/// All monomials of weight <= weight_cut, graded by weight then lexicographic.
/// weight_cut must be a non-negative integer or half-integer.
std::vector<FermionMonomial> enumerate_basis(const Rational& weight_cut);
/// Same, with the cut given as twice the weight.
std::vector<FermionMonomial> enumerate_basis_doubled(int weight_cut2);

/// `c1 phi[..] .. |0> + c2 ...`, or `0`. Coefficients are always written.
std::string render_state(const FockState& s);

}  // namespace fockda
