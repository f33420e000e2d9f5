#include "fockda/virasoro.hpp"

#include <algorithm>
#include <stdexcept>

namespace fockda {

namespace {

int floor_div(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0)) ? 1 : 0); }

NeutralOperator scalar_if_zero(int n, const Rational& c) {
  return NeutralOperator::scalar(n == 0 ? c : Rational(0));
}

}  // namespace

QuadraticModeOperator l_half_mode(int n) {
  return bilinear_mode(FermionBilinear{Rational(1, 2), 0, 1, 0, 1, 1}, -n - 2);
}

QuadraticModeOperator l_half_tilde_mode(int n) {
  const auto base = l_half_mode(n);
  if (n % 2 == 0) return base;
  return {base.total_doubled(), [base](FermionModeIndex p) { return -base.coefficient(p); }};
}

NeutralOperator sugawara_l1_mode(int n) {
  auto action = [n](const FermionMonomial& v) {
    // h_r v = 0 once r > deg_h(v), so with the larger index r applied first only
    // ceil(n/2) <= r <= max(deg_h(v), ceil(n/2)) contributes.
    const int lo = -floor_div(-n, 2);
    const int hi = std::max(deg_h(v), lo);
    FockState out;
    for (int r = lo; r <= hi; ++r) {
      const int other = n - r;
      FockState s = h_mode(other).apply(h_mode(r).apply(v));
      // Pairs (r, n-r) with r != n-r occur twice in the sum over k.
      out.add_scaled(s, r == other ? Rational(1, 2) : Rational(1));
    }
    return out;
  };
  return NeutralOperator(action, -4 * n);
}

Rational lambda_b_constant(const Rational& lambda, const Rational& b) {
  const Rational t = Rational(1) - Rational(2) * lambda;
  return (Rational(16) * b * b + Rational(8) * b * t - Rational(3) * t * t) / Rational(32);
}

Rational lambda_central_charge(const Rational& lambda) {
  return Rational(-12) * lambda * lambda + Rational(12) * lambda - Rational(2);
}

NeutralOperator l_lambda_b_mode(const Rational& lambda, const Rational& b, int n) {
  const Rational hc = (Rational(1, 2) - lambda) * Rational(2 * n + 1, 2) + b;
  NeutralOperator op = sugawara_l1_mode(n) - hc * h_mode(n).as_operator();
  if (n == 0) op = op + NeutralOperator::scalar(lambda_b_constant(lambda, b));
  return op;
}

NeutralOperator l1_tilde_mode(int n) {
  NeutralOperator op = Rational(1, 2) * l_half_mode(2 * n).as_operator();
  if (n == 0) op = op + NeutralOperator::scalar(Rational(1, 32));
  return op;
}

NeutralFamily l_half_family() {
  return {"Lhalf", [](int n) { return l_half_mode(n).as_operator(); }};
}
NeutralFamily l_half_tilde_family() {
  return {"Lhalf~", [](int n) { return l_half_tilde_mode(n).as_operator(); }};
}
NeutralFamily sugawara_l1_family() { return {"L1", sugawara_l1_mode}; }
NeutralFamily l1_tilde_family() { return {"L1~", l1_tilde_mode}; }
NeutralFamily l_lambda_b_family(const Rational& lambda, const Rational& b) {
  return {"Llb(" + lambda.to_string() + "," + b.to_string() + ")",
          [lambda, b](int n) { return l_lambda_b_mode(lambda, b, n); }};
}

NeutralFamily doubling_construct(const NeutralFamily& base, const Rational& c, int N) {
  if (N < 1) throw std::invalid_argument("doubling_construct: N must be positive");
  const Rational shift = Rational(N * N - 1) * c / Rational(24 * N);
  return {base.name + "^(" + std::to_string(N) + ")", [base, shift, N](int n) {
            NeutralOperator op = Rational(1, N) * base(N * n);
            if (n == 0 && !shift.is_zero()) op = op + NeutralOperator::scalar(shift);
            return op;
          }};
}

NeutralFamily parity_flip(const NeutralFamily& base) {
  return {base.name + "^flip", [base](int n) { return n % 2 == 0 ? base(n) : Rational(-1) * base(n); }};
}

FermionBilinear weight2_bilinear(int variant) {
  switch (variant) {
    case 1: return {Rational(1), 0, 1, 0, 1, 1};
    case 2: return {Rational(1), 0, 1, 0, -1, -1};
    case 3: return {Rational(1), 0, 1, 0, 1, -1};
    case 4: return {Rational(1), 0, 1, 0, -1, 1};
    default: throw std::invalid_argument("weight-2 field variant must be 1..4");
  }
}

NeutralFamily weight2_field(int variant) {
  const auto f = weight2_bilinear(variant);
  return {"W" + std::to_string(variant), [f](int n) { return bilinear_mode(f, -n - 2).as_operator(); }};
}

BracketSpec<FermionMonomial> virasoro_spec(const NeutralFamily& f, const Rational& c) {
  return {"virasoro:" + f.name + " c=" + c.to_string(), BracketKind::commutator, f, f, [f, c](int m, int n) {
            NeutralOperator op = Rational(m - n) * f(m + n);
            if (m + n == 0) op = op + NeutralOperator::scalar(Rational(m * m * m - m) * c / Rational(12));
            return op;
          }};
}

std::pair<NeutralFamily, NeutralFamily> hderiv_identity() {
  // h(z) = sum h_n z^(-2n-1), so d/dz h has (e+1) h_n at z^e with e = -2n-2 and nothing at odd e.
  NeutralFamily lhs{"dh", [](int e) {
                      if (e % 2 != 0) return NeutralOperator::zero();
                      return Rational(e + 1) * h_mode((-e - 2) / 2).as_operator();
                    }};
  NeutralFamily rhs{"(W3+W4)/2", [](int e) {
                      auto f3 = weight2_bilinear(3);
                      auto f4 = weight2_bilinear(4);
                      f3.prefactor = f4.prefactor = Rational(1, 2);
                      return field_mode({f3, f4}, e);
                    }};
  return {lhs, rhs};
}

std::pair<NeutralFamily, NeutralFamily> h_normorder_identity() {
  NeutralFamily lhs{":hh:", [](int e) {
                      if (e % 2 != 0) return NeutralOperator::zero();
                      return Rational(2) * sugawara_l1_mode((-e - 2) / 2);
                    }};
  NeutralFamily rhs{"(W2+W1)/4-h/(2w)", [](int e) {
                      auto f1 = weight2_bilinear(1);
                      auto f2 = weight2_bilinear(2);
                      f1.prefactor = f2.prefactor = Rational(1, 4);
                      // (1/w) h(w) = (1/2) w^-1 :phi(w) phi(-w):
                      const FermionBilinear fh{Rational(-1, 4), -1, 0, 0, 1, -1};
                      return field_mode({f2, f1, fh}, e);
                    }};
  return {lhs, rhs};
}

NeutralFamily phi_phi_field() {
  return {":phiphi:", [](int e) { return bilinear_mode(FermionBilinear{Rational(1), 0, 0, 0, 1, 1}, e).as_operator(); }};
}

}  // namespace fockda
