#include <doctest.h>

#include "fockda/virasoro.hpp"
#include "helpers.hpp"

using namespace fockda;
using testutil::mono;

namespace {
const std::vector<FermionMonomial>& basis6() {
  static const auto b = enumerate_basis(Rational(6));
  return b;
}
bool same_on(const NeutralFamily& a, const NeutralFamily& b, int range, const std::vector<FermionMonomial>& basis) {
  std::vector<int> modes;
  for (int n = -range; n <= range; ++n) modes.push_back(n);
  return field_identity_check<FermionMonomial>("same", a, b, modes, basis, {}).passed();
}
}  // namespace

TEST_CASE("L^{1/2}_0 is the weight") {
  CHECK(l_half_mode(0).apply(FermionMonomial{}).is_zero());
  for (const auto& v : enumerate_basis(Rational(8))) CHECK(l_half_mode(0).apply(v) == FockState(v, v.weight()));
  CHECK(l_half_mode(0).apply(vacuum_like(1)) == FockState(vacuum_like(1), Rational(3, 2)));
}

TEST_CASE("L^{1/2}_n matches its explicit mode rule") {
  // (1/2) sum_p (-p - 1/2) :phi_p phi_{n-p}:
  for (int n = -3; n <= 3; ++n) {
    const QuadraticModeOperator rule(2 * n, [](FermionModeIndex p) { return (-p.value() - Rational(1, 2)) / Rational(2); });
    for (const auto& v : basis6()) CHECK(l_half_mode(n).apply(v) == rule.apply(v));
  }
}

TEST_CASE("c = 1/2 families") {
  CHECK(bracket_check(virasoro_spec(l_half_family(), Rational(1, 2)), square_mode_pairs(3), basis6(), {}).passed());
  CHECK(bracket_check(virasoro_spec(l_half_tilde_family(), Rational(1, 2)), square_mode_pairs(3), basis6(), {}).passed());
  CHECK(bracket_check(virasoro_spec(parity_flip(l_half_family()), Rational(1, 2)), square_mode_pairs(2), basis6(), {}).passed());
  // The wrong charge is detected.
  CHECK_FALSE(bracket_check(virasoro_spec(l_half_family(), Rational(1)), square_mode_pairs(2), basis6(), {}).passed());
}

TEST_CASE("parity flip equals the flipped-field extraction") {
  CHECK(same_on(l_half_tilde_family(), parity_flip(l_half_family()), 4, basis6()));
  const NeutralFamily flipped_field{"flip", [](int n) {
                                      return bilinear_mode(FermionBilinear{Rational(1, 2), 0, 1, 0, -1, -1}, -n - 2).as_operator();
                                    }};
  CHECK(same_on(l_half_tilde_family(), flipped_field, 4, basis6()));
  for (const auto& v : basis6()) {
    CHECK(l_half_tilde_mode(1).apply(v) == Rational(-1) * l_half_mode(1).apply(v));
    CHECK(l_half_tilde_mode(2).apply(v) == l_half_mode(2).apply(v));
  }
}

TEST_CASE("Sugawara L^1") {
  for (int n = -4; n <= 4; ++n) {
    CHECK(sugawara_l1_mode(0).apply(vacuum_like(n)) == FockState(vacuum_like(n), Rational(n * n, 2)));
  }
  const auto basis = enumerate_basis(Rational(8));
  const auto l1 = sugawara_l1_mode(1);
  const auto lm1 = sugawara_l1_mode(-1);
  const auto l2 = sugawara_l1_mode(2);
  const auto lm2 = sugawara_l1_mode(-2);
  const auto l0 = sugawara_l1_mode(0);
  for (const auto& v : basis) {
    CHECK(commutator(l1, lm1).apply(v) == Rational(2) * l0.apply(v));
    CHECK(commutator(l2, lm2).apply(v) == Rational(4) * l0.apply(v) + FockState(v, Rational(1, 2)));
  }
  CHECK(bracket_check(virasoro_spec(sugawara_l1_family(), Rational(1)), square_mode_pairs(2), basis6(), {}).passed());
}

TEST_CASE("L^1 from the Heisenberg square has no odd exponents") {
  auto [lhs, rhs] = h_normorder_identity();
  for (int e = -9; e <= 5; e += 2) {
    for (const auto& v : basis6()) {
      CHECK(lhs(e).apply(v).is_zero());
      CHECK(rhs(e).apply(v).is_zero());
    }
  }
}

TEST_CASE("L~1") {
  CHECK(l1_tilde_mode(0).apply(FermionMonomial{}) == FockState(FermionMonomial{}, Rational(1, 32)));
  CHECK(bracket_check(virasoro_spec(l1_tilde_family(), Rational(1)), square_mode_pairs(2), basis6(), {}).passed());
  // Field form (1/(8z^2))(:dphi phi: + :(dphi)(-z) phi(-z):) + 1/(32 z^4): at (z^2)^(-n-2) read z^(-2n-2).
  const NeutralFamily field{"field", [](int n) {
                              FermionBilinear a{Rational(1, 8), -2, 1, 0, 1, 1};
                              FermionBilinear b{Rational(1, 8), -2, 1, 0, -1, -1};
                              NeutralOperator op = field_mode({a, b}, -2 * n - 4);
                              if (n == 0) op = op + NeutralOperator::scalar(Rational(1, 32));
                              return op;
                            }};
  CHECK(same_on(l1_tilde_family(), field, 4, basis6()));
}

TEST_CASE("lambda family specialisations") {
  const auto basis = enumerate_basis(Rational(8));
  CHECK(same_on(l_lambda_b_family(Rational(1, 2), Rational(0)), sugawara_l1_family(), 3, basis));
  CHECK(same_on(l_lambda_b_family(Rational(1, 2), Rational(-1, 4)), l1_tilde_family(), 3, basis));
}

TEST_CASE("lambda family brackets") {
  for (auto [l, b] : std::vector<std::pair<Rational, Rational>>{
           {Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(1, 3), Rational(2, 5)}, {Rational(1, 2), Rational(-1, 4)}}) {
    CHECK(bracket_check(virasoro_spec(l_lambda_b_family(l, b), lambda_central_charge(l)), square_mode_pairs(2),
                        enumerate_basis(Rational(4)), {})
              .passed());
  }
}

TEST_CASE("central charge of the lambda family") {
  CHECK(lambda_central_charge(Rational(0)) == Rational(-2));
  CHECK(lambda_central_charge(Rational(1, 2)) == Rational(1));
  CHECK(lambda_central_charge(Rational(1)) == Rational(-2));
  for (int p = -3; p <= 3; ++p) {
    const Rational l(p, 3);
    CHECK(lambda_central_charge(l) == Rational(1) - Rational(3) * (Rational(1) - Rational(2) * l) * (Rational(1) - Rational(2) * l));
  }
}

TEST_CASE("the constant with coefficient 2b(1 - 2 lambda) breaks the bracket law") {
  const Rational l(1, 3);
  const Rational b(2, 5);
  const Rational t = Rational(1) - Rational(2) * l;
  const Rational alt = (Rational(16) * b * b + Rational(2) * b * t - Rational(3) * t * t) / Rational(32);
  CHECK(alt != lambda_b_constant(l, b));
  const NeutralFamily shifted{"alt", [&](int n) {
                                NeutralOperator op = l_lambda_b_mode(l, b, n);
                                if (n == 0) op = op + NeutralOperator::scalar(alt - lambda_b_constant(l, b));
                                return op;
                              }};
  CHECK_FALSE(bracket_check(virasoro_spec(shifted, lambda_central_charge(l)), square_mode_pairs(1), enumerate_basis(Rational(2)), {})
                  .passed());
  // Both constants agree when b = 0 or lambda = 1/2, where the specialisations live.
  CHECK(lambda_b_constant(Rational(1, 2), Rational(-1, 4)) == Rational(1, 32));
  CHECK(lambda_b_constant(Rational(1, 2), Rational(0)) == Rational(0));
}

TEST_CASE("doubling construction") {
  const auto id = doubling_construct(l_half_family(), Rational(1, 2), 1);
  CHECK(same_on(id, l_half_family(), 3, basis6()));
  const auto two = doubling_construct(l_half_family(), Rational(1, 2), 2);
  CHECK(same_on(two, l1_tilde_family(), 4, basis6()));
  const auto three = doubling_construct(l_half_family(), Rational(1, 2), 3);
  CHECK(bracket_check(virasoro_spec(three, Rational(3, 2)), square_mode_pairs(2), basis6(), {}).passed());
  CHECK_THROWS_AS(doubling_construct(l_half_family(), Rational(1, 2), 0), std::invalid_argument);
}

TEST_CASE("weight-2 fields and their identities") {
  const auto w1 = weight2_field(1);
  CHECK(w1(0).apply(vacuum_like(1)) == FockState(vacuum_like(1), Rational(3)));
  for (const auto& v : basis6()) CHECK(w1(0).apply(v) == Rational(2) * l_half_mode(0).apply(v));
  CHECK_THROWS_AS(weight2_field(5), std::invalid_argument);

  std::vector<int> exps;
  for (int e = -10; e <= 6; ++e) exps.push_back(e);
  auto [dh, w34] = hderiv_identity();
  CHECK(field_identity_check<FermionMonomial>("hderiv", dh, w34, exps, basis6(), {}).passed());
  auto [hh, rhs] = h_normorder_identity();
  CHECK(field_identity_check<FermionMonomial>("hnorm", hh, rhs, exps, basis6(), {}).passed());
  const auto zero = phi_phi_field();
  for (int e : exps) {
    for (const auto& v : basis6()) CHECK(zero(e).apply(v).is_zero());
  }
}
