#pragma once

#include "fockda/heisenberg.hpp"
#include "fockda/mode_operators.hpp"
#include "fockda/verify.hpp"

namespace fockda {

/// L^{1/2}_n: coefficient of z^(-n-2) in (1/2):dphi(z) phi(z):.
QuadraticModeOperator l_half_mode(int n);
/// (-1)^n L^{1/2}_n, the modes of (1/2):(d phi)(-z) phi(-z):.
QuadraticModeOperator l_half_tilde_mode(int n);

/// L^1_n = (1/2) sum_k :h_{n-k} h_k: with the larger Heisenberg index applied first.
NeutralOperator sugawara_l1_mode(int n);

/// Constant term of L^{lambda,b}_0: (16 b^2 + 8 b (1 - 2 lambda) - 3 (1 - 2 lambda)^2) / 32.
Rational lambda_b_constant(const Rational& lambda, const Rational& b);

/// -12 lambda^2 + 12 lambda - 2.
Rational lambda_central_charge(const Rational& lambda);

/// L^{lambda,b}_n = L^1_n - ((1/2 - lambda)(2n+1)/2 + b) h_n + delta_{n,0} lambda_b_constant.
NeutralOperator l_lambda_b_mode(const Rational& lambda, const Rational& b, int n);

/// (1/2) L^{1/2}_{2n} + delta_{n,0} / 32.
NeutralOperator l1_tilde_mode(int n);

NeutralFamily l_half_family();
NeutralFamily l_half_tilde_family();
NeutralFamily sugawara_l1_family();
NeutralFamily l1_tilde_family();
NeutralFamily l_lambda_b_family(const Rational& lambda, const Rational& b);

/// n -> (1/N) base(N n) + delta_{n,0} (N^2 - 1) c / (24 N).
NeutralFamily doubling_construct(const NeutralFamily& base, const Rational& c, int N);
/// n -> (-1)^n base(n).
NeutralFamily parity_flip(const NeutralFamily& base);

/// The four weight-2 fields, indexed 1..4:
///   1 :dphi(z) phi(z):   2 :(dphi)(-z) phi(-z):   3 :dphi(z) phi(-z):   4 :(dphi)(-z) phi(z):
FermionBilinear weight2_bilinear(int variant);
/// Modes W_n = coefficient of z^(-n-2).
NeutralFamily weight2_field(int variant);

/// [F_m, F_n] = (m - n) F_{m+n} + delta_{m,-n} (m^3 - m) c / 12.
BracketSpec<FermionMonomial> virasoro_spec(const NeutralFamily& f, const Rational& c);

/// Families indexed by the z-exponent e of both sides of
///   d/dz h(z) = (1/2)(:dphi(z) phi(-z): + :(dphi)(-z) phi(z):).
std::pair<NeutralFamily, NeutralFamily> hderiv_identity();

/// Families indexed by the w-exponent e of both sides of
///   :h(w) h(w): = (1/4):(dphi)(-w) phi(-w): + (1/4):dphi(w) phi(w): - (1/(2w)) h(w),
/// where the left side is built from the Heisenberg modes (its w^(-2N-2) coefficient is 2 L^1_N).
std::pair<NeutralFamily, NeutralFamily> h_normorder_identity();

/// Coefficient of z^e in :phi(z) phi(z):.
NeutralFamily phi_phi_field();

}  // namespace fockda
