#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fockda/fock.hpp"

namespace fockda {

/// Data of a normal-ordered pair :phi_p phi_q: = phi_p phi_q - contraction = sign * phi_first phi_second,
/// where (first, second) has annihilators to the right.
struct NormalOrderedPair {
  FermionModeIndex first;
  FermionModeIndex second;
  int sign;
  /// Vacuum expectation <0|phi_p phi_q|0> = delta_{p,-q} [p > 0].
  Rational contraction;
};

NormalOrderedPair normal_order_pair(FermionModeIndex p, FermionModeIndex q);

/// Action of :phi_p phi_q: on a monomial.
FockState apply_normal_ordered_pair(FermionModeIndex p, FermionModeIndex q, const FermionMonomial& v);

/// Raised when a summand outside the declared support acts nonzero on a monomial.
class SupportViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Lazy normal-ordered quadratic  sum_p c(p) :phi_p phi_{S-p}:  + scalar * Id  with S = p + q fixed.
///
/// The sum is formally infinite, but on any monomial v only finitely many summands act: either one
/// factor annihilates an index present in v, or both factors are creators with S < p < 0. The
/// support function enumerates exactly that set; a custom one may be supplied (it is then checked
/// by apply_checked, never trusted blindly there).
class QuadraticModeOperator {
 public:
  using CoefficientRule = std::function<Rational(FermionModeIndex p)>;
  using SupportBound = std::function<std::vector<FermionModeIndex>(const FermionMonomial&)>;

  /// `total_doubled` is 2(p + q); it must be even (p + q is an integer).
  QuadraticModeOperator(int total_doubled, CoefficientRule rule, Rational scalar = {});

  static QuadraticModeOperator zero(int total_doubled = 0);

  int total_doubled() const { return total2_; }
  /// Twice the weight shift (every summand shifts weight by -(p + q)).
  int weight_shift2() const { return -total2_; }
  const Rational& scalar_part() const { return scalar_; }
  Rational coefficient(FermionModeIndex p) const { return rule_(p); }
  FermionModeIndex partner(FermionModeIndex p) const { return FermionModeIndex::from_doubled(total2_ - p.doubled()); }

  QuadraticModeOperator with_support_bound(SupportBound bound) const;
  QuadraticModeOperator with_scalar(Rational scalar) const;

  /// Summand indices p that can act nonzero on v, increasing.
  std::vector<FermionModeIndex> support(const FermionMonomial& v) const;

  FockState apply(const FermionMonomial& v) const;
  FockState apply(const FockState& s) const;

  /// Like apply, but also evaluates every summand within `margin` of the support window (and the
  /// creator window) and throws SupportViolation if one outside the support acts nonzero.
  FockState apply_checked(const FermionMonomial& v, int margin = 8) const;

  NeutralOperator as_operator() const;

 private:
  FockState summand(FermionModeIndex p, const FermionMonomial& v) const;

  int total2_;
  CoefficientRule rule_;
  Rational scalar_;
  SupportBound bound_;
};

/// prefactor * z^zshift * :(d^dleft phi)(sleft z) (d^dright phi)(sright z):
struct FermionBilinear {
  Rational prefactor{1};
  int zshift = 0;
  int dleft = 0;
  int dright = 0;
  int sleft = 1;
  int sright = 1;
};

/// Coefficient of z^e in the bilinear field, as a quadratic mode operator.
QuadraticModeOperator bilinear_mode(const FermionBilinear& f, int e);

/// Coefficient of z^e in a sum of bilinear fields.
NeutralOperator field_mode(const std::vector<FermionBilinear>& field, int e);

/// Falling factorial k (k-1) ... (k-a+1); 1 for a == 0.
Rational falling_factorial(std::int64_t k, int a);

}  // namespace fockda
