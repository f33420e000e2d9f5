#include <doctest.h>

#include <set>

#include "fockda/charged.hpp"
#include "fockda/grading.hpp"
#include "fockda/heisenberg.hpp"
#include "fockda/virasoro.hpp"
#include "helpers.hpp"

using namespace fockda;
using testutil::mono;

namespace {
ChargedModeIndex plus(int n) { return {Species::plus, n}; }
ChargedModeIndex minus(int n) { return {Species::minus, n}; }
ChargedMonomial cm(std::vector<int> p, std::vector<int> m) { return ChargedMonomial::from_indices(p, m); }

/// h^A_n through the word oracle: sum over a of :psi^+_a psi^-_b: with b = n - a - 1.
ChargedState oracle_hA(int n, const ChargedMonomial& v, int range) {
  ChargedState out;
  for (int a = -range; a <= range; ++a) {
    const int b = n - a - 1;
    if (a >= 0 && b < 0) {
      out += Rational(-1) * testutil::oracle_apply({{-1, b}, {1, a}}, v);
    } else {
      out += testutil::oracle_apply({{1, a}, {-1, b}}, v);
    }
  }
  return out;
}
}  // namespace

TEST_CASE("charged monomial basics") {
  const auto v = cm({-2, -1}, {-1});
  CHECK(v.plus_count() == 2);
  CHECK(v.minus_count() == 1);
  CHECK(v.charge() == 1);
  CHECK(v.weight2() == 3 + 7 + 1);
  CHECK(v.to_string() == "psi+[-2] psi+[-1] psi-[-1] |0>");
  CHECK(ChargedMonomial{}.to_string() == "|0>");
  CHECK(plus(-1).to_string() == "psi+[-1]");
  CHECK_THROWS_AS(cm({-1, -1}, {}), std::invalid_argument);
  CHECK_THROWS_AS(cm({0}, {}), std::invalid_argument);
}

TEST_CASE("charged basis enumeration") {
  const auto b = enumerate_charged_basis(Rational(4));
  // weight2 <= 8 from parts {3, 7} (plus) and {1, 5} (minus): {}, -1, +1, -2, +1-1, +2, -1-2 (6), ...
  std::set<ChargedMonomial> seen(b.begin(), b.end());
  CHECK(seen.size() == b.size());
  for (const auto& v : b) CHECK(v.weight2() <= 8);
  CHECK(std::is_sorted(b.begin(), b.end()));
  // Count with an independent subset enumeration over slots 0..3.
  std::size_t count = 0;
  for (int pm = 0; pm < 16; ++pm) {
    for (int mm = 0; mm < 16; ++mm) {
      if (ChargedMonomial::from_masks(static_cast<std::uint64_t>(pm), static_cast<std::uint64_t>(mm)).weight2() <= 8) ++count;
    }
  }
  CHECK(b.size() == count);
  // Neutral and charged truncations have equal size.
  CHECK(b.size() == enumerate_basis(Rational(4)).size());
}

TEST_CASE("single charged modes agree with the word oracle") {
  for (const auto& v : enumerate_charged_basis(Rational(5))) {
    for (int n = -4; n <= 3; ++n) {
      CHECK(apply_charged_mode(plus(n), v) == testutil::oracle_apply({{1, n}}, v));
      CHECK(apply_charged_mode(minus(n), v) == testutil::oracle_apply({{-1, n}}, v));
    }
  }
}

TEST_CASE("charged Clifford relations") {
  const auto basis = enumerate_charged_basis(Rational(4));
  for (int m = -3; m <= 2; ++m) {
    for (int n = -3; n <= 2; ++n) {
      const auto pp = anticommutator(charged_mode_operator(plus(m)), charged_mode_operator(plus(n)));
      const auto pm = anticommutator(charged_mode_operator(plus(m)), charged_mode_operator(minus(n)));
      for (const auto& v : basis) {
        CHECK(pp.apply(v).is_zero());
        CHECK(pm.apply(v) == ChargedState(v, Rational(m + n == -1 ? 1 : 0)));
      }
    }
  }
}

TEST_CASE("normal-ordered pairs") {
  CHECK(apply_charged_pair(0, -1, ChargedMonomial{}).is_zero());
  CHECK(apply_charged_pair(-1, 0, ChargedMonomial{}).is_zero());
  CHECK(apply_charged_pair(-1, -1, ChargedMonomial{}) == ChargedState(cm({-1}, {-1})));
  // :psi^+_0 psi^-_{-1}: = -psi^-_{-1} psi^+_0, which sends psi^-_{-1}|0> to -psi^-_{-1}|0>.
  CHECK(apply_charged_pair(0, -1, cm({}, {-1})) == ChargedState(cm({}, {-1}), Rational(-1)));
  // :psi^+_0 psi^-_{-1}: psi^+_{-1}|0> = -psi^-_{-1} psi^+_0 psi^+_{-1}|0> = -|..> via the oracle.
  CHECK(apply_charged_pair(0, -1, cm({-1}, {})) == Rational(-1) * testutil::oracle_apply({{-1, -1}, {1, 0}}, cm({-1}, {})));
}

TEST_CASE("h^A_n agrees with the word oracle") {
  for (const auto& v : enumerate_charged_basis(Rational(4))) {
    for (int n = -3; n <= 3; ++n) CHECK(hA_mode(n).apply(v) == oracle_hA(n, v, 10));
  }
}

TEST_CASE("h^A_0 is the charge") {
  for (const auto& v : enumerate_charged_basis(Rational(5))) CHECK(hA_mode(0).apply(v) == ChargedState(v, Rational(v.charge())));
}

TEST_CASE("charged Heisenberg and Virasoro families") {
  const auto basis = enumerate_charged_basis(Rational(4));
  CHECK(bracket_check(charged_heisenberg_spec(hA_family()), square_mode_pairs(3), basis, {}).passed());
  for (const Rational l : {Rational(0), Rational(1, 2), Rational(1)}) {
    for (const Rational b : {Rational(0), Rational(1, 3)}) {
      CHECK(bracket_check(charged_virasoro_spec(lA_lambda_b_family(l, b), lambda_central_charge(l)), square_mode_pairs(2),
                          basis, {})
                .passed());
    }
  }
  // L^{A,1/2,0}_0 is the transported Sugawara L^1_0.
  const auto l0 = transport_to_charged(sugawara_l1_mode(0));
  for (const auto& v : enumerate_charged_basis(Rational(4))) {
    CHECK(lA_lambda_b_mode(Rational(1, 2), Rational(0), 0).apply(v) == l0.apply(v));
  }
}

TEST_CASE("the mode dictionary") {
  CHECK(da_mode_dict(FermionModeIndex::creator(0)) == minus(-1));
  CHECK(da_mode_dict(FermionModeIndex::creator(1)) == plus(-1));
  CHECK(da_mode_dict(FermionModeIndex::creator(2)) == minus(-2));
  CHECK(da_mode_dict(FermionModeIndex::creator(3)) == plus(-2));
  CHECK(da_mode_dict(FermionModeIndex::annihilator(0)) == plus(0));
  CHECK(da_mode_dict(FermionModeIndex::annihilator(1)) == minus(0));
  CHECK(da_mode_dict(FermionModeIndex::annihilator(4)) == plus(2));
  for (int t = -41; t <= 41; t += 2) {
    const auto d = FermionModeIndex::from_doubled(t);
    CHECK(da_mode_inverse(da_mode_dict(d)) == d);
  }
  for (int n = -10; n <= 10; ++n) {
    CHECK(da_mode_dict(da_mode_inverse(plus(n))) == plus(n));
    CHECK(da_mode_dict(da_mode_inverse(minus(n))) == minus(n));
  }
}

TEST_CASE("da_map examples") {
  CHECK(da_map(FermionMonomial{}) == ChargedState(ChargedMonomial{}));
  CHECK(da_map(mono({0})) == ChargedState(cm({}, {-1})));
  CHECK(da_map(mono({1})) == ChargedState(cm({-1}, {})));
  CHECK(da_map(mono({0, 2})) == ChargedState(cm({}, {-2, -1})));
  // phi_{-3/2} phi_{-1/2}|0> -> psi^+_{-1} psi^-_{-1}|0>
  CHECK(da_map(mono({0, 1})) == ChargedState(cm({-1}, {-1})));
}

TEST_CASE("da_map preserves weight and sends dg to charge") {
  for (const auto& v : enumerate_basis(Rational(7))) {
    const auto img = da_map(v);
    REQUIRE(img.size() == 1);
    const auto& [c, coeff] = *img.begin();
    CHECK((coeff == Rational(1) || coeff == Rational(-1)));
    CHECK(c.weight2() == v.weight2());
    CHECK(c.charge() == dg(v));
    CHECK(da_inverse(img) == FockState(v));
  }
}

TEST_CASE("transport intertwines h and h^A") {
  for (int n = -3; n <= 3; ++n) {
    const auto t = transport_to_charged(h_mode(n).as_operator());
    for (const auto& v : enumerate_charged_basis(Rational(4))) CHECK(t.apply(v) == hA_mode(n).apply(v));
  }
}

TEST_CASE("isomorphism checks") {
  const auto reports = iso_checks(Rational(4), 3);
  REQUIRE(reports.size() == 3);
  for (const auto& r : reports) CHECK(r.passed());
  CHECK(reports[0].check == "iso:clifford_transport");
  CHECK(reports[1].check == "iso:intertwining");
  CHECK(reports[2].check == "iso:bijection");
}
