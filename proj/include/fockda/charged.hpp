#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fockda/fock.hpp"
#include "fockda/verify.hpp"

namespace fockda {

enum class Species { plus, minus };

/// psi^+_n or psi^-_n; creation for n <= -1, annihilation for n >= 0.
struct ChargedModeIndex {
  Species species = Species::plus;
  int value = 0;

  bool is_creation() const { return value <= -1; }
  /// Bit position j = -n-1 touched by a creator, or j = n for an annihilator.
  int slot() const { return value <= -1 ? -value - 1 : value; }
  std::string to_string() const;
  friend auto operator<=>(const ChargedModeIndex&, const ChargedModeIndex&) = default;
};

/// Canonical monomial psi^+_{a_1} ... psi^+_{a_r} psi^-_{b_1} ... psi^-_{b_s} |0> with
/// a_1 < ... < a_r <= -1 and b_1 < ... < b_s <= -1. Bit j of each mask stands for index -j-1.
class ChargedMonomial {
 public:
  static constexpr int kMaxSlot = 64;
  ChargedMonomial() = default;
  static ChargedMonomial from_masks(std::uint64_t plus, std::uint64_t minus);
  /// From index lists (each entry <= -1, order irrelevant); throws on duplicates or range.
  static ChargedMonomial from_indices(const std::vector<int>& plus, const std::vector<int>& minus);

  std::uint64_t plus_mask() const { return plus_; }
  std::uint64_t minus_mask() const { return minus_; }
  bool has(Species s, int slot) const;
  int plus_count() const;
  int minus_count() const;
  int charge() const { return plus_count() - minus_count(); }
  /// Twice the weight transported from the neutral side: plus slot j gives 4j+3, minus slot j gives 4j+1.
  int weight2() const;
  /// Increasing index lists.
  std::vector<int> plus_indices() const;
  std::vector<int> minus_indices() const;

  /// `psi+[-2] psi+[-1] psi-[-1] |0>`
  std::string to_string() const;

  friend bool operator==(const ChargedMonomial&, const ChargedMonomial&) = default;
  /// By transported weight, then masks.
  friend std::strong_ordering operator<=>(const ChargedMonomial& a, const ChargedMonomial& b);

 private:
  std::uint64_t plus_ = 0;
  std::uint64_t minus_ = 0;
};

using ChargedState = LinearCombination<ChargedMonomial>;
using ChargedOperator = LinearOperator<ChargedMonomial>;
using ChargedFamily = OperatorFamily<ChargedMonomial>;

/// Action of one mode ({psi^+_m, psi^-_n} = delta_{m+n,-1}).
ChargedState apply_charged_mode(ChargedModeIndex m, const ChargedMonomial& v);
ChargedState apply_charged_mode(ChargedModeIndex m, const ChargedState& s);
ChargedOperator charged_mode_operator(ChargedModeIndex m);

/// Action of :psi^+_a psi^-_b:.
ChargedState apply_charged_pair(int a, int b, const ChargedMonomial& v);

/// Lazy sum_a c(a) :psi^+_a psi^-_{T-a}: + scalar.
class ChargedQuadratic {
 public:
  using Rule = std::function<Rational(int a)>;
  ChargedQuadratic(int total, Rule rule, Rational scalar = {});

  int total() const { return total_; }
  Rational coefficient(int a) const { return rule_(a); }
  /// Values of a whose summand can act nonzero on v, increasing.
  std::vector<int> support(const ChargedMonomial& v) const;
  ChargedState apply(const ChargedMonomial& v) const;
  ChargedState apply(const ChargedState& s) const;
  /// Twice the transported weight shift: -4 (T + 1).
  int weight_shift2() const { return -4 * (total_ + 1); }
  ChargedOperator as_operator() const;

 private:
  int total_;
  Rule rule_;
  Rational scalar_;
};

/// prefactor * w^zshift * :(d^dleft psi^X)(w) (d^dright psi^Y)(w): with X = + and Y = - when
/// plus_left, and X = -, Y = + otherwise.
struct ChargedBilinear {
  Rational prefactor{1};
  int zshift = 0;
  int dleft = 0;
  int dright = 0;
  bool plus_left = true;
};

/// Coefficient of w^e.
ChargedQuadratic charged_bilinear_mode(const ChargedBilinear& f, int e);
ChargedOperator charged_field_mode(const std::vector<ChargedBilinear>& field, int e);

/// h^A_n = sum_a :psi^+_a psi^-_{n-a-1}:, the w^(-n-1) coefficient of :psi^+(w) psi^-(w):.
ChargedQuadratic hA_mode(int n);
/// L^{A,lambda}_n from (1 - lambda):d psi^+ psi^-: + lambda :d psi^- psi^+: at w^(-n-2).
ChargedQuadratic lA_lambda_mode(const Rational& lambda, int n);
/// L^{A,lambda}_n - b h^A_n + delta_{n,0} b (b - 2 lambda + 1) / 2.
ChargedOperator lA_lambda_b_mode(const Rational& lambda, const Rational& b, int n);

ChargedFamily hA_family();
ChargedFamily lA_lambda_b_family(const Rational& lambda, const Rational& b);

BracketSpec<ChargedMonomial> charged_heisenberg_spec(const ChargedFamily& h);
BracketSpec<ChargedMonomial> charged_virasoro_spec(const ChargedFamily& f, const Rational& c);

/// All charged monomials with transported weight <= weight_cut (a half-integer), in basis order.
std::vector<ChargedMonomial> enumerate_charged_basis(const Rational& weight_cut);

/// Neutral-to-charged mode dictionary:
///   phi_{-2j-3/2} -> psi^+_{-j-1},  phi_{-2j-1/2} -> psi^-_{-j-1},
///   phi_{2j+1/2}  -> psi^+_j,       phi_{2j+3/2}  -> psi^-_j.
ChargedModeIndex da_mode_dict(FermionModeIndex d);
/// Inverse of da_mode_dict.
FermionModeIndex da_mode_inverse(ChargedModeIndex c);

/// Applies the mapped creators of v right to left to the charged vacuum.
ChargedState da_map(const FermionMonomial& v);
ChargedState da_map(const FockState& s);
FockState da_inverse(const ChargedMonomial& c);
FockState da_inverse(const ChargedState& s);

/// Conjugates a charged operator to the neutral space: da_inverse . op . da_map.
NeutralOperator transport_to_neutral(const ChargedOperator& op);
/// Conjugates a neutral operator to the charged space.
ChargedOperator transport_to_charged(const NeutralOperator& op);

/// Dictionary transport of the Clifford relations, intertwining h_n <-> h^A_n for |n| <= nmax,
/// and basis bijectivity, all on the weight <= weight_cut truncation.
std::vector<VerificationReport> iso_checks(const Rational& weight_cut, int nmax, int jobs = 1);

}  // namespace fockda
