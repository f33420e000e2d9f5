#include <doctest.h>

#include "fockda/heisenberg.hpp"
#include "fockda/mode_operators.hpp"
#include "fockda/virasoro.hpp"
#include "helpers.hpp"

using namespace fockda;
using testutil::mono;

namespace {
FermionModeIndex mode(int twice) { return FermionModeIndex::from_doubled(twice); }

/// :phi_p phi_q: v through the oracle: phi_p phi_q v minus the vacuum expectation.
FockState oracle_pair(int p2, int q2, const FermionMonomial& v) {
  FockState s = testutil::oracle_apply({p2, q2}, v);
  if (p2 > 0 && p2 == -q2) s.add(v, Rational(-1));
  return s;
}
}  // namespace

TEST_CASE("normal_order_pair cases") {
  auto a = normal_order_pair(mode(-3), mode(-1));
  CHECK(a.first == mode(-3));
  CHECK(a.second == mode(-1));
  CHECK(a.sign == 1);
  CHECK(a.contraction == Rational(0));

  auto b = normal_order_pair(mode(1), mode(-1));
  CHECK(b.first == mode(-1));
  CHECK(b.second == mode(1));
  CHECK(b.sign == -1);
  CHECK(b.contraction == Rational(1));

  auto c = normal_order_pair(mode(-1), mode(1));
  CHECK(c.first == mode(-1));
  CHECK(c.sign == 1);
  CHECK(c.contraction == Rational(0));

  auto d = normal_order_pair(mode(3), mode(-1));
  CHECK(d.sign == -1);
  CHECK(d.contraction == Rational(0));
}

TEST_CASE("normal-ordered pairs match phi_p phi_q minus the vacuum expectation") {
  for (const auto& v : enumerate_basis(Rational(4))) {
    for (int p2 = -9; p2 <= 9; p2 += 2) {
      for (int q2 = -9; q2 <= 9; q2 += 2) {
        CHECK(apply_normal_ordered_pair(mode(p2), mode(q2), v) == oracle_pair(p2, q2, v));
      }
    }
  }
}

TEST_CASE("normal-ordered pairs have zero vacuum expectation") {
  for (int p2 = -9; p2 <= 9; p2 += 2) {
    for (int q2 = -9; q2 <= 9; q2 += 2) {
      CHECK(apply_normal_ordered_pair(mode(p2), mode(q2), FermionMonomial{}).coefficient(FermionMonomial{}) == Rational(0));
    }
  }
}

TEST_CASE("zero operator and scalar part") {
  const auto z = QuadraticModeOperator::zero(4);
  for (const auto& v : enumerate_basis(Rational(3))) CHECK(z.apply(v).is_zero());
  const auto s = QuadraticModeOperator::zero(0).with_scalar(Rational(3, 7));
  CHECK(s.apply(mono({1})) == FockState(mono({1}), Rational(3, 7)));
  CHECK_THROWS_AS(QuadraticModeOperator(3, [](FermionModeIndex) { return Rational(1); }), std::invalid_argument);
}

TEST_CASE("bilinear extraction examples") {
  // (1/2):phi(z) phi(-z): at z^-1 is h_0 and kills the vacuum.
  const auto h0 = bilinear_mode(FermionBilinear{Rational(1, 2), 0, 0, 0, 1, -1}, -1);
  CHECK(h0.apply(FermionMonomial{}).is_zero());
  CHECK(h0.apply(mono({2})) == FockState(mono({2}), Rational(-1)));

  // (1/2):dphi(z) phi(z): at z^-2 is diagonal with the weight.
  const auto l0 = bilinear_mode(FermionBilinear{Rational(1, 2), 0, 1, 0, 1, 1}, -2);
  for (const auto& v : enumerate_basis(Rational(6))) CHECK(l0.apply(v) == FockState(v, v.weight()));

  // :phi(z) phi(z): vanishes identically.
  for (int e = -8; e <= 4; ++e) {
    const auto zero = bilinear_mode(FermionBilinear{}, e);
    for (const auto& v : enumerate_basis(Rational(4))) CHECK(zero.apply(v).is_zero());
  }
}

TEST_CASE("h_1 on phi_{-5/2}|0> matches a brute-force expansion of the mode sum") {
  // h_1 = (1/2) sum_i (-1)^(i+1) :phi_{-i-1/2} phi_{i+5/2}:, summed over |i| <= 10 with the oracle.
  const auto v = mono({2});
  FockState brute;
  for (int i = -10; i <= 10; ++i) {
    const Rational c = (i % 2 != 0) ? Rational(1, 2) : Rational(-1, 2);
    brute.add_scaled(oracle_pair(-2 * i - 1, 2 * i + 5, v), c);
  }
  CHECK(brute == FockState(mono({0}), Rational(-1)));
  CHECK(h_mode(1).apply(v) == brute);
}

TEST_CASE("lazy support is sound: no summand outside it acts") {
  for (int n = -3; n <= 3; ++n) {
    for (const auto& v : enumerate_basis(Rational(5))) {
      CHECK_NOTHROW(h_mode(n).apply_checked(v));
      CHECK_NOTHROW(l_half_mode(n).apply_checked(v));
      CHECK(h_mode(n).apply_checked(v) == h_mode(n).apply(v));
    }
  }
}

TEST_CASE("an undersized support bound is reported") {
  // Declare only the pure-creator range, dropping the annihilating summands.
  const auto bad = h_mode(0).with_support_bound([](const FermionMonomial&) { return std::vector<FermionModeIndex>{}; });
  CHECK_THROWS_AS(bad.apply_checked(mono({2})), SupportViolation);
  CHECK(bad.apply(mono({2})).is_zero());  // the unchecked path trusts the bound
}

TEST_CASE("families are weight homogeneous") {
  for (int n = -3; n <= 3; ++n) {
    const auto op = l_half_mode(n);
    for (const auto& v : enumerate_basis(Rational(5))) {
      for (const auto& [w, c] : op.apply(v)) CHECK(w.weight2() == v.weight2() + op.weight_shift2());
    }
    const auto h = h_mode(n);
    for (const auto& v : enumerate_basis(Rational(5))) {
      for (const auto& [w, c] : h.apply(v)) CHECK(w.weight2() == v.weight2() - 4 * n);
    }
  }
}

TEST_CASE("compose_families") {
  const auto basis = enumerate_basis(Rational(6));
  const auto h = h_family();
  const auto same = compose_families(l_half_family(), Rational(1), h, Rational(0));
  for (int n = -2; n <= 2; ++n) {
    for (const auto& v : basis) CHECK(same(n).apply(v) == l_half_family()(n).apply(v));
  }
  // L~1_n = (1/2) L^{1/2}_{2n} + delta/32 as a composition.
  const NeutralFamily doubled{"Lhalf(2n)", [](int n) { return l_half_mode(2 * n).as_operator(); }};
  const auto built = compose_families(doubled, Rational(1, 2), h, Rational(0), Rational(1, 32));
  for (int n = -2; n <= 2; ++n) {
    for (const auto& v : basis) CHECK(built(n).apply(v) == l1_tilde_mode(n).apply(v));
  }
  // L^{1/2,-1/4} = L^1 + h/4 + 1/32 equals L~1.
  const auto lb = compose_families(sugawara_l1_family(), Rational(1), h, Rational(1, 4), Rational(1, 32));
  for (int n = -2; n <= 2; ++n) {
    for (const auto& v : enumerate_basis(Rational(8))) CHECK(lb(n).apply(v) == l1_tilde_mode(n).apply(v));
  }
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(5, 0) == Rational(1));
  CHECK(falling_factorial(5, 2) == Rational(20));
  CHECK(falling_factorial(1, 2) == Rational(0));
  CHECK(falling_factorial(-2, 2) == Rational(6));
}
