#pragma once

#include <map>
#include <optional>
#include <utility>

#include "fockda/charged.hpp"
#include "fockda/verify.hpp"

namespace fockda {

/// J^k_n on the charged space: the w^(-n-k-1) coefficient of (-1)^k :psi^+(w) d^k psi^-(w):.
/// Anchored so that J^0_n = h^A_n.
ChargedQuadratic jk_mode_charged(int k, int n);
/// J^k_n on the neutral space, conjugated through the D-A isomorphism.
NeutralOperator jk_mode_neutral(int k, int n);

ChargedFamily jk_family_charged(int k);
NeutralFamily jk_family_neutral(int k);

/// Sparse finite matrix on the index window [-radius, radius], entries E_{ij}.
class TruncatedMatrix {
 public:
  explicit TruncatedMatrix(int radius) : radius_(radius) {}

  int radius() const { return radius_; }
  bool in_window(int i) const { return i >= -radius_ && i <= radius_; }
  Rational at(int i, int j) const;
  /// Adds c to entry (i, j); entries outside the window are dropped.
  void add(int i, int j, const Rational& c);
  const std::map<std::pair<int, int>, Rational>& entries() const { return entries_; }

  friend TruncatedMatrix operator*(const TruncatedMatrix& a, const TruncatedMatrix& b);
  friend TruncatedMatrix operator-(const TruncatedMatrix& a, const TruncatedMatrix& b);
  friend bool operator==(const TruncatedMatrix&, const TruncatedMatrix&) = default;

 private:
  int radius_;
  std::map<std::pair<int, int>, Rational> entries_;
};

/// The image of t^(n+k) (-d/dt)^k in gl_infinity: (-1)^k k! binom(-j, k) E_{j-n, j} for j in the window.
/// The k! makes this the exact matrix of the differential operator on the basis t^(-j), so the map
/// is a Lie algebra homomorphism; for k <= 1 it equals (-1)^k binom(-j, k) E_{j-n, j}.
TruncatedMatrix glinf_matrix(int k, int n, int radius);

/// sum M_{ij} :psi^+_{-i} psi^-_{j-1}: as a charged operator.
ChargedOperator lift(const TruncatedMatrix& m);

struct ScalarDefect {
  VerificationReport report;
  /// The common scalar, when the defect is scalar on every tested state.
  std::optional<Rational> scalar;
};

/// [J^{k1}_{n1}, J^{k2}_{n2}] - lift([G1, G2]) on the charged basis of weight <= weight_cut must act
/// as one scalar. The window radius defaults to a bound that keeps boundary terms away from the
/// tested states.
ScalarDefect scalar_defect_check(int k1, int n1, int k2, int n2, const Rational& weight_cut, int radius = 0,
                                 int jobs = 1);

/// The orbit of v_n under J^k_{-m} (0 <= k <= kmax, m >= 1) spans each sector (n, d), d <= max_deg.
VerificationReport orbit_spanning_check(int n, int max_deg, int kmax);

}  // namespace fockda
