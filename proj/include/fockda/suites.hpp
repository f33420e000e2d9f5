#pragma once

#include <string>
#include <vector>

#include "fockda/rational.hpp"
#include "fockda/verify.hpp"

namespace fockda {

/// {phi_m, phi_n} = delta_{m,-n} for |m|, |n| <= max_index on the weight <= weight_cut basis.
VerificationReport clifford_check(const Rational& max_index, const Rational& weight_cut, int jobs = 1);

/// Bracket law for h (mode sum and field extraction), their equality, and h_0 = dg.
std::vector<VerificationReport> heisenberg_suite(int mmax, const Rational& weight_cut, int jobs = 1);

/// One row of the sector decomposition table.
struct DecomposeRow {
  int n = 0;
  int k = 0;
  std::size_t dim = 0;
  std::int64_t partitions = 0;
  bool match() const { return static_cast<std::int64_t>(dim) == partitions; }
};
std::vector<DecomposeRow> decompose_table(int nmax, int kmax);

/// Sector dimensions, lemma_vector injectivity into (0, k), highest weight vectors and spanning ranks.
std::vector<VerificationReport> decomposition_suite(int dim_nmax, int dim_kmax, int hw_nmax, int hw_mmax, int span_nmax,
                                                    int span_kmax);

enum class VirasoroFamily { half, half_tilde, one, one_tilde, lambda };
/// Parses `half`, `half~`, `one`, `one~`, `lambda`; throws std::invalid_argument otherwise.
VirasoroFamily parse_virasoro_family(const std::string& name);

/// Bracket law for the selected family, plus the relations attached to it: constructions and
/// eigenvalues for `half`, the mode relation for `one~`, specialisations for `lambda` at 1/2.
std::vector<VerificationReport> virasoro_suite(VirasoroFamily family, const Rational& lambda, const Rational& b, int mmax,
                                               const Rational& weight_cut, int jobs = 1);

/// L^{1/2}_0 v_n = weight(v_n) v_n, h_0 v_n = n v_n, and simultaneous diagonality on monomials.
VerificationReport eigenvalue_check(int nmax, const Rational& weight_cut);

/// Doubling construction at N = 2 and N = 3 and the parity flip, applied to L^{1/2}.
std::vector<VerificationReport> construction_suite(int mmax, const Rational& weight_cut, int jobs = 1);

/// Field identities: derivative of h, normal-ordered square of h, :phi phi: = 0, the L~1 mode relation
/// and the two lambda-family specialisations.
std::vector<VerificationReport> identities_suite(int mmax, const Rational& weight_cut, int jobs = 1);

/// J^0 = h on both spaces, [J^0_m, J^0_-m] defect m for 1 <= m <= hmax, and scalar gl_infinity defects
/// for k <= kmax, |n| <= mmax.
std::vector<VerificationReport> winf_suite(int kmax, int mmax, int hmax, const Rational& weight_cut, int jobs = 1);

/// h^A and L^{A,lambda,b} bracket laws for every listed (lambda, b).
std::vector<VerificationReport> charged_suite(const std::vector<Rational>& lambdas, const std::vector<Rational>& bs,
                                              int mmax, const Rational& weight_cut, int jobs = 1);

}  // namespace fockda
