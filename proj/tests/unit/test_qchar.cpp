#include <doctest.h>

#include "fockda/grading.hpp"
#include "fockda/qchar.hpp"

using namespace fockda;

namespace {
CharacterSeries pseudo_random(int qmax, int seed) {
  CharacterSeries s(qmax);
  int x = seed;
  for (int h = 0; h <= qmax; ++h) {
    for (int z = -2; z <= 2; ++z) {
      x = (x * 73 + 19) % 101;
      if (x % 3 == 0) s.add(z, h, mpz_class(x % 7 - 3));
    }
  }
  return s;
}
}  // namespace

TEST_CASE("trace coefficients") {
  const auto t = char_trace(Rational(6));
  CHECK(t.qmax_half() == 12);
  CHECK(t.coefficient(0, 0) == 1);
  CHECK(t.coefficient(-1, 1) == 1);
  CHECK(t.coefficient(1, 3) == 1);
  CHECK(t.coefficient(1, 1) == 0);
  CHECK(t.coefficient(0, 4) == 1);   // phi_{-3/2} phi_{-1/2}|0>
  CHECK(t.coefficient(0, 8) == 2);
}

TEST_CASE("three character forms agree") {
  for (int q = 0; q <= 16; ++q) {
    const auto t = char_trace(Rational(q, 2));
    const auto p = char_product_form(q);
    const auto s = char_sum_form(q);
    CHECK(t == p);
    CHECK(p == s);
    CHECK_FALSE(CharacterSeries::first_difference(t, s).has_value());
  }
  CHECK(character_agreement_check(14).passed());
}

TEST_CASE("qmax 0 is the constant 1") {
  const auto p = char_product_form(0);
  CHECK(p.coefficients().size() == 1);
  CHECK(p.coefficient(0, 0) == 1);
  CHECK(char_sum_form(0) == CharacterSeries::one(0));
}

TEST_CASE("sector columns count partitions") {
  const auto s = char_sum_form(40);
  for (int k = 0; 4 * k <= 40; ++k) CHECK(s.coefficient(0, 4 * k) == partition_count(k));
  for (int n = -3; n <= 3; ++n) {
    for (int k = 0; n * (2 * n + 1) + 4 * k <= 40; ++k) {
      CHECK(s.coefficient(n, n * (2 * n + 1) + 4 * k) == static_cast<long>(sector_basis(n, k).size()));
    }
  }
  // Nothing sits between the sector steps.
  CHECK(s.coefficient(0, 2) == 0);
  CHECK(s.coefficient(1, 5) == 0);
}

TEST_CASE("series ring laws") {
  for (int seed = 1; seed <= 6; ++seed) {
    const auto a = pseudo_random(10, seed);
    const auto b = pseudo_random(10, seed + 10);
    const auto c = pseudo_random(10, seed + 20);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * CharacterSeries::one(10) == a);
  }
  // Truncation takes the smaller bound.
  CHECK((pseudo_random(10, 1) * pseudo_random(4, 2)).qmax_half() == 4);
}

TEST_CASE("binomial factors") {
  const auto f = CharacterSeries::binomial(1, 3, 1, 10);
  CHECK(f.coefficient(0, 0) == 1);
  CHECK(f.coefficient(1, 3) == 1);
  CHECK(CharacterSeries::binomial(1, 12, 1, 10) == CharacterSeries::one(10));
  const auto g = CharacterSeries::binomial(0, 4, -1, 10);
  CHECK(g.coefficient(0, 4) == -1);
}

TEST_CASE("JSON and text output") {
  const auto p = char_product_form(3);
  const std::string j = p.to_json();
  CHECK(j.find("{\"z\":-1,\"qhalf\":1,\"coeff\":1}") != std::string::npos);
  CHECK(p.to_text().find("-1 1 1") != std::string::npos);
}

TEST_CASE("Jacobi identities") {
  for (auto which : {JacobiKind::DA, JacobiKind::A}) {
    for (int q = 0; q <= 10; ++q) {
      const auto [lhs, rhs] = jacobi_sides(which, q);
      CHECK(lhs == rhs);
    }
    CHECK(jacobi_check(which, 12).passed());
  }
  CHECK(jacobi_check(JacobiKind::DA, 4).check == "jacobi:DA");
  CHECK(jacobi_check(JacobiKind::A, 4).check == "jacobi:A");
}

TEST_CASE("L^{1/2}_0 eigenvalues on Heisenberg words") { CHECK(virasoro_weight_check(3, 5).passed()); }
