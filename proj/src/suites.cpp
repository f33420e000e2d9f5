#include "fockda/suites.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fockda/charged.hpp"
#include "fockda/grading.hpp"
#include "fockda/heisenberg.hpp"
#include "fockda/virasoro.hpp"
#include "fockda/winf.hpp"

namespace fockda {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

std::vector<int> symmetric_range(int bound) {
  std::vector<int> out;
  for (int n = -bound; n <= bound; ++n) out.push_back(n);
  return out;
}

Params grid_params(int mmax, const Rational& cut) {
  return {{"mmax", std::to_string(mmax)}, {"weight_cut", cut.to_string()}};
}

VerificationReport named(VerificationReport r, std::string name) {
  r.check = std::move(name);
  return r;
}

}  // namespace

VerificationReport clifford_check(const Rational& max_index, const Rational& weight_cut, int jobs) {
  const Rational twice = max_index * Rational(2);
  if (!twice.is_integer() || twice.to_int64() % 2 == 0 || twice.to_int64() < 1) {
    throw std::invalid_argument("max index must be a positive half-odd integer p/2, got " + max_index.to_string());
  }
  const int bound2 = static_cast<int>(twice.to_int64());
  std::vector<RelationCase<FermionMonomial>> cases;
  for (int a = -bound2; a <= bound2; a += 2) {
    for (int b = -bound2; b <= bound2; b += 2) {
      const auto pa = FermionModeIndex::from_doubled(a);
      const auto pb = FermionModeIndex::from_doubled(b);
      const auto lhs = anticommutator(fermion_mode_operator(pa), fermion_mode_operator(pb));
      const Rational delta(a == -b ? 1 : 0);
      cases.push_back({"{phi[" + pa.value().to_string() + "], phi[" + pb.value().to_string() + "]}",
                       [lhs](const FermionMonomial& v) { return lhs.apply(v); },
                       [delta](const FermionMonomial& v) { return FockState(v, delta); }});
    }
  }
  return relation_check("clifford", {{"max_index", max_index.to_string()}, {"weight_cut", weight_cut.to_string()}}, cases,
                        enumerate_basis(weight_cut), jobs);
}

std::vector<VerificationReport> heisenberg_suite(int mmax, const Rational& weight_cut, int jobs) {
  const auto basis = enumerate_basis(weight_cut);
  const auto pairs = square_mode_pairs(mmax);
  std::vector<VerificationReport> out;
  out.push_back(bracket_check(heisenberg_spec(h_family()), pairs, basis, grid_params(mmax, weight_cut), jobs));
  out.push_back(bracket_check(heisenberg_spec(h_family_from_field()), pairs, basis, grid_params(mmax, weight_cut), jobs));
  out.push_back(field_identity_check("heisenberg:mode_sum_vs_field", h_family(), h_family_from_field(),
                                     symmetric_range(mmax), basis, grid_params(mmax, weight_cut), jobs));
  const auto h0 = h_mode(0);
  out.push_back(relation_check("heisenberg:h0_is_dg", {{"weight_cut", weight_cut.to_string()}},
                               std::vector<RelationCase<FermionMonomial>>{
                                   {"h(0)", [h0](const FermionMonomial& v) { return h0.apply(v); },
                                    [](const FermionMonomial& v) { return FockState(v, Rational(dg(v))); }}},
                               basis, jobs));
  return out;
}

std::vector<DecomposeRow> decompose_table(int nmax, int kmax) {
  std::vector<DecomposeRow> rows;
  for (int n = -nmax; n <= nmax; ++n) {
    for (int k = 0; k <= kmax; ++k) rows.push_back({n, k, sector_basis(n, k).size(), partition_count(k)});
  }
  return rows;
}

std::vector<VerificationReport> decomposition_suite(int dim_nmax, int dim_kmax, int hw_nmax, int hw_mmax, int span_nmax,
                                                    int span_kmax) {
  std::vector<VerificationReport> out;
  {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.check = "sector_dimensions";
    r.params = {{"nmax", std::to_string(dim_nmax)}, {"kmax", std::to_string(dim_kmax)}};
    for (const auto& row : decompose_table(dim_nmax, dim_kmax)) {
      ++r.cases_run;
      if (!row.match()) {
        r.failures.push_back({"sector (" + std::to_string(row.n) + "," + std::to_string(row.k) + ")",
                              "dim " + std::to_string(row.dim), "p(k) " + std::to_string(row.partitions)});
      }
    }
    r.elapsed_ms = elapsed_ms_since(start);
    out.push_back(std::move(r));
  }
  {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.check = "lemma_vector_injective";
    r.params = {{"kmax", std::to_string(dim_kmax)}};
    for (int k = 0; k <= dim_kmax; ++k) {
      std::set<FermionMonomial> seen;
      for (const auto& lambda : partitions_of(k)) {
        ++r.cases_run;
        const auto v = lemma_vector(lambda);
        const auto g = grades(v);
        if (g.charge != 0 || g.energy != k) {
          r.failures.push_back({"lemma_vector" + lambda.to_string(), v.to_string(), "sector (0," + std::to_string(k) + ")"});
        } else if (!seen.insert(v).second) {
          r.failures.push_back({"lemma_vector" + lambda.to_string(), v.to_string(), "a vector not hit before"});
        }
      }
    }
    r.elapsed_ms = elapsed_ms_since(start);
    out.push_back(std::move(r));
  }
  VerificationReport hw;
  for (int n = -hw_nmax; n <= hw_nmax; ++n) hw.absorb(highest_weight_check(n, hw_mmax));
  hw.check = "highest_weight";
  hw.params = {{"nmax", std::to_string(hw_nmax)}, {"mmax", std::to_string(hw_mmax)}};
  out.push_back(std::move(hw));
  VerificationReport sp;
  for (int n = -span_nmax; n <= span_nmax; ++n) {
    for (int k = 0; k <= span_kmax; ++k) sp.absorb(spanning_check(n, k));
  }
  sp.check = "spanning";
  sp.params = {{"nmax", std::to_string(span_nmax)}, {"kmax", std::to_string(span_kmax)}};
  out.push_back(std::move(sp));
  return out;
}

VirasoroFamily parse_virasoro_family(const std::string& name) {
  if (name == "half") return VirasoroFamily::half;
  if (name == "half~") return VirasoroFamily::half_tilde;
  if (name == "one") return VirasoroFamily::one;
  if (name == "one~") return VirasoroFamily::one_tilde;
  if (name == "lambda") return VirasoroFamily::lambda;
  throw std::invalid_argument("unknown Virasoro family '" + name + "' (expected half, half~, one, one~ or lambda)");
}

VerificationReport eigenvalue_check(int nmax, const Rational& weight_cut) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.check = "eigenvalues";
  r.params = {{"nmax", std::to_string(nmax)}, {"weight_cut", weight_cut.to_string()}};
  const auto l0 = l_half_mode(0);
  const auto h0 = h_mode(0);
  auto expect = [&](const std::string& what, const FockState& lhs, const FockState& rhs) {
    ++r.cases_run;
    if (lhs != rhs) r.failures.push_back({what, render(lhs), render(rhs)});
  };
  for (int n = -nmax; n <= nmax; ++n) {
    const auto v = vacuum_like(n);
    // weight(v_n) = n^2 + n/2 for either sign of n.
    const Rational w = Rational(n * n) + Rational(n, 2);
    expect("Lhalf(0) on " + v.to_string(), l0.apply(v), FockState(v, w));
    expect("h(0) on " + v.to_string(), h0.apply(v), FockState(v, Rational(n)));
  }
  for (const auto& v : enumerate_basis(weight_cut)) {
    expect("Lhalf(0) on " + v.to_string(), l0.apply(v), FockState(v, weight(v)));
    expect("h(0) on " + v.to_string(), h0.apply(v), FockState(v, Rational(dg(v))));
  }
  r.elapsed_ms = elapsed_ms_since(start);
  return r;
}

std::vector<VerificationReport> construction_suite(int mmax, const Rational& weight_cut, int jobs) {
  const auto basis = enumerate_basis(weight_cut);
  const auto pairs = square_mode_pairs(mmax);
  const auto params = grid_params(mmax, weight_cut);
  std::vector<VerificationReport> out;
  const auto two = doubling_construct(l_half_family(), Rational(1, 2), 2);
  out.push_back(field_identity_check("doubling:N=2_is_L1~", two, l1_tilde_family(), symmetric_range(mmax), basis, params, jobs));
  const auto three = doubling_construct(l_half_family(), Rational(1, 2), 3);
  out.push_back(named(bracket_check(virasoro_spec(three, Rational(3, 2)), pairs, basis, params, jobs), "doubling:N=3 c=3/2"));
  out.push_back(named(bracket_check(virasoro_spec(parity_flip(l_half_family()), Rational(1, 2)), pairs, basis, params, jobs),
                      "parity_flip c=1/2"));
  return out;
}

std::vector<VerificationReport> virasoro_suite(VirasoroFamily family, const Rational& lambda, const Rational& b, int mmax,
                                               const Rational& weight_cut, int jobs) {
  const auto basis = enumerate_basis(weight_cut);
  const auto pairs = square_mode_pairs(mmax);
  auto params = grid_params(mmax, weight_cut);
  std::vector<VerificationReport> out;
  switch (family) {
    case VirasoroFamily::half:
      out.push_back(bracket_check(virasoro_spec(l_half_family(), Rational(1, 2)), pairs, basis, params, jobs));
      out.push_back(eigenvalue_check(5, weight_cut));
      for (auto& r : construction_suite(std::min(mmax, 2), weight_cut, jobs)) out.push_back(std::move(r));
      break;
    case VirasoroFamily::half_tilde:
      out.push_back(bracket_check(virasoro_spec(l_half_tilde_family(), Rational(1, 2)), pairs, basis, params, jobs));
      break;
    case VirasoroFamily::one:
      out.push_back(bracket_check(virasoro_spec(sugawara_l1_family(), Rational(1)), pairs, basis, params, jobs));
      break;
    case VirasoroFamily::one_tilde: {
      out.push_back(bracket_check(virasoro_spec(l1_tilde_family(), Rational(1)), pairs, basis, params, jobs));
      const NeutralFamily halved{"Lhalf(2n)/2+1/32", [](int n) {
                                   NeutralOperator op = Rational(1, 2) * l_half_mode(2 * n).as_operator();
                                   if (n == 0) op = op + NeutralOperator::scalar(Rational(1, 32));
                                   return op;
                                 }};
      out.push_back(field_identity_check("L1~_mode_relation", l1_tilde_family(), halved, symmetric_range(mmax), basis, params, jobs));
      break;
    }
    case VirasoroFamily::lambda: {
      params.emplace_back("lambda", lambda.to_string());
      params.emplace_back("b", b.to_string());
      out.push_back(bracket_check(virasoro_spec(l_lambda_b_family(lambda, b), lambda_central_charge(lambda)), pairs, basis,
                                  params, jobs));
      if (lambda == Rational(1, 2) && b.is_zero()) {
        out.push_back(field_identity_check("specialisation:L(1/2,0)=L1", l_lambda_b_family(lambda, b), sugawara_l1_family(),
                                           symmetric_range(mmax), basis, params, jobs));
      }
      if (lambda == Rational(1, 2) && b == Rational(-1, 4)) {
        out.push_back(field_identity_check("specialisation:L(1/2,-1/4)=L1~", l_lambda_b_family(lambda, b), l1_tilde_family(),
                                           symmetric_range(mmax), basis, params, jobs));
      }
      break;
    }
  }
  return out;
}

std::vector<VerificationReport> identities_suite(int mmax, const Rational& weight_cut, int jobs) {
  const auto basis = enumerate_basis(weight_cut);
  const auto params = grid_params(mmax, weight_cut);
  // Field identities are indexed by the z-exponent; |n| <= mmax covers e = -2n-1 and e = -2n-2.
  std::vector<int> exps;
  for (int e = -2 * mmax - 2; e <= 2 * mmax + 1; ++e) exps.push_back(e);
  std::vector<VerificationReport> out;
  {
    auto [l, r] = hderiv_identity();
    out.push_back(field_identity_check("identity:hderiv", l, r, exps, basis, params, jobs));
  }
  {
    auto [l, r] = h_normorder_identity();
    out.push_back(field_identity_check("identity:h_normorder", l, r, exps, basis, params, jobs));
  }
  {
    const NeutralFamily zero{"0", [](int) { return NeutralOperator::zero(); }};
    out.push_back(field_identity_check("identity:phi_phi_vanishes", phi_phi_field(), zero, exps, basis, params, jobs));
  }
  const NeutralFamily halved{"Lhalf(2n)/2+1/32", [](int n) {
                               NeutralOperator op = Rational(1, 2) * l_half_mode(2 * n).as_operator();
                               if (n == 0) op = op + NeutralOperator::scalar(Rational(1, 32));
                               return op;
                             }};
  out.push_back(field_identity_check("identity:L1~_mode_relation", l1_tilde_family(), halved, symmetric_range(mmax), basis,
                                     params, jobs));
  out.push_back(field_identity_check("specialisation:L(1/2,0)=L1", l_lambda_b_family(Rational(1, 2), Rational(0)),
                                     sugawara_l1_family(), symmetric_range(mmax), basis, params, jobs));
  out.push_back(field_identity_check("specialisation:L(1/2,-1/4)=L1~", l_lambda_b_family(Rational(1, 2), Rational(-1, 4)),
                                     l1_tilde_family(), symmetric_range(mmax), basis, params, jobs));
  return out;
}

std::vector<VerificationReport> winf_suite(int kmax, int mmax, int hmax, const Rational& weight_cut, int jobs) {
  const auto params = grid_params(mmax, weight_cut);
  std::vector<VerificationReport> out;
  out.push_back(field_identity_check("winf:J0=h", jk_family_neutral(0), h_family(), symmetric_range(mmax),
                                     enumerate_basis(weight_cut), params, jobs));
  out.push_back(field_identity_check("winf:J0=hA", jk_family_charged(0), hA_family(), symmetric_range(mmax),
                                     enumerate_charged_basis(weight_cut), params, jobs));
  {
    VerificationReport r;
    r.check = "winf:heisenberg_defect";
    r.params = {{"hmax", std::to_string(hmax)}, {"weight_cut", weight_cut.to_string()}};
    for (int m = 1; m <= hmax; ++m) {
      const auto d = scalar_defect_check(0, m, 0, -m, weight_cut, 0, jobs);
      r.absorb(d.report);
      if (d.report.passed() && (!d.scalar || *d.scalar != Rational(m))) {
        r.failures.push_back({"[J0(" + std::to_string(m) + "), J0(" + std::to_string(-m) + ")] defect",
                              d.scalar ? d.scalar->to_string() : "none", std::to_string(m)});
      }
    }
    out.push_back(std::move(r));
  }
  {
    VerificationReport r;
    r.check = "winf:scalar_defects";
    r.params = {{"kmax", std::to_string(kmax)}, {"mmax", std::to_string(mmax)}, {"weight_cut", weight_cut.to_string()}};
    for (int k1 = 0; k1 <= kmax; ++k1) {
      for (int n1 = -mmax; n1 <= mmax; ++n1) {
        for (int k2 = 0; k2 <= kmax; ++k2) {
          for (int n2 = -mmax; n2 <= mmax; ++n2) r.absorb(scalar_defect_check(k1, n1, k2, n2, weight_cut, 0, jobs).report);
        }
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> charged_suite(const std::vector<Rational>& lambdas, const std::vector<Rational>& bs, int mmax,
                                              const Rational& weight_cut, int jobs) {
  const auto basis = enumerate_charged_basis(weight_cut);
  const auto pairs = square_mode_pairs(mmax);
  std::vector<VerificationReport> out;
  out.push_back(bracket_check(charged_heisenberg_spec(hA_family()), pairs, basis, grid_params(mmax, weight_cut), jobs));
  for (const auto& l : lambdas) {
    for (const auto& b : bs) {
      auto params = grid_params(mmax, weight_cut);
      params.emplace_back("lambda", l.to_string());
      params.emplace_back("b", b.to_string());
      out.push_back(bracket_check(charged_virasoro_spec(lA_lambda_b_family(l, b), lambda_central_charge(l)), pairs, basis,
                                  params, jobs));
    }
  }
  return out;
}

}  // namespace fockda
