#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "fockda/rational.hpp"
#include "fockda/verify.hpp"

namespace fockda {

/// Truncated series sum c(z, h) z^z q^(h/2) with integer coefficients. Coefficients with
/// qhalf > qmax_half are unknown and never stored.
class CharacterSeries {
 public:
  using Key = std::pair<int, int>;  // (z exponent, qhalf)

  explicit CharacterSeries(int qmax_half) : qmax_half_(qmax_half) {}
  /// 1 truncated at qmax_half.
  static CharacterSeries one(int qmax_half);
  /// 1 + sign * z^zexp q^(qhalf/2), the basic product factor.
  static CharacterSeries binomial(int zexp, int qhalf, int sign, int qmax_half);

  int qmax_half() const { return qmax_half_; }
  const std::map<Key, mpz_class>& coefficients() const { return coeffs_; }
  mpz_class coefficient(int zexp, int qhalf) const;
  void add(int zexp, int qhalf, const mpz_class& c);

  /// Product truncated at the smaller bound.
  friend CharacterSeries operator*(const CharacterSeries& a, const CharacterSeries& b);
  friend CharacterSeries operator+(const CharacterSeries& a, const CharacterSeries& b);
  /// Equal below both truncations.
  friend bool operator==(const CharacterSeries& a, const CharacterSeries& b);

  /// First (zexp, qhalf) where the two series differ below the common bound.
  static std::optional<Key> first_difference(const CharacterSeries& a, const CharacterSeries& b);

  /// `[{"z":..,"qhalf":..,"coeff":..}, ...]`
  std::string to_json() const;
  /// One `z qhalf coeff` line per coefficient.
  std::string to_text() const;

 private:
  int qmax_half_;
  std::map<Key, mpz_class> coeffs_;
};

/// Sum over monomials of weight <= weight_cut of z^dg q^weight; complete for qhalf <= 2 weight_cut.
CharacterSeries char_trace(const Rational& weight_cut);
/// prod_{i>=1} (1 + z q^((4i-1)/2)) (1 + z^-1 q^((4i-3)/2)).
CharacterSeries char_product_form(int qmax_half);
/// (1 / prod (1 - q^(2i))) sum_n z^n q^(n(2n+1)/2).
CharacterSeries char_sum_form(int qmax_half);

enum class JacobiKind { DA, A };
/// Both sides of the selected identity through q^qmax (integer q units).
std::pair<CharacterSeries, CharacterSeries> jacobi_sides(JacobiKind which, int qmax);
VerificationReport jacobi_check(JacobiKind which, int qmax);

/// trace = product = sum through qhalf <= qmax_half.
VerificationReport character_agreement_check(int qmax_half);

/// For |n| <= nmax and k <= kmax, every h_{-k_l}...h_{-k_1} v_n is an L^{1/2}_0 eigenvector with
/// eigenvalue 2k + weight(v_n).
VerificationReport virasoro_weight_check(int nmax, int kmax);

}  // namespace fockda
