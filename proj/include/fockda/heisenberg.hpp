#pragma once

#include "fockda/grading.hpp"
#include "fockda/mode_operators.hpp"
#include "fockda/verify.hpp"

namespace fockda {

/// h_n = (1/2) sum_i (-1)^(i+1) :phi_{-i-1/2} phi_{2n+1+i-1/2}: (explicit mode sum).
QuadraticModeOperator h_mode(int n);

/// The same operator extracted from (1/2):phi(z)phi(-z): at z^(-2n-1).
QuadraticModeOperator h_mode_from_field(int n);

/// Coefficient of z^e in (1/2):phi(z)phi(-z):, for any integer e (zero for even e).
QuadraticModeOperator heisenberg_field_mode(int e);

NeutralFamily h_family();
NeutralFamily h_family_from_field();

/// [h_m, h_n] = m delta_{m+n,0} Id.
BracketSpec<FermionMonomial> heisenberg_spec(const NeutralFamily& h);

/// h_{-k_l} ... h_{-k_1} v_n for a partition (applied smallest part first).
FockState heisenberg_word(int n, const Partition& lambda);

/// Rank of {h_{-lambda} v_n : lambda partition of k} inside sector (n, k) equals p(k) = dim.
VerificationReport spanning_check(int n, int k);

/// h_m v_n = 0 for 1 <= m <= mmax and h_0 v_n = n v_n.
VerificationReport highest_weight_check(int n, int mmax);

}  // namespace fockda
