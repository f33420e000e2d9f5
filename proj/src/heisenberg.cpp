#include "fockda/heisenberg.hpp"

#include <map>

namespace fockda {

QuadraticModeOperator h_mode(int n) {
  // Summand i pairs p = -i-1/2 with q = 2n+1+i-1/2, so 2(p+q) = 4n.
  return {4 * n, [](FermionModeIndex p) {
            const int i = (-p.doubled() - 1) / 2;
            return (i % 2 != 0) ? Rational(1, 2) : Rational(-1, 2);
          }};
}

QuadraticModeOperator heisenberg_field_mode(int e) {
  return bilinear_mode(FermionBilinear{Rational(1, 2), 0, 0, 0, 1, -1}, e);
}

QuadraticModeOperator h_mode_from_field(int n) { return heisenberg_field_mode(-2 * n - 1); }

NeutralFamily h_family() {
  return {"h", [](int n) { return h_mode(n).as_operator(); }};
}

NeutralFamily h_family_from_field() {
  return {"h_field", [](int n) { return h_mode_from_field(n).as_operator(); }};
}

BracketSpec<FermionMonomial> heisenberg_spec(const NeutralFamily& h) {
  return {"heisenberg:" + h.name, BracketKind::commutator, h, h, [](int m, int n) {
            return NeutralOperator::scalar(m + n == 0 ? Rational(m) : Rational(0));
          }};
}

FockState heisenberg_word(int n, const Partition& lambda) {
  FockState s(vacuum_like(n));
  for (auto it = lambda.parts.rbegin(); it != lambda.parts.rend(); ++it) s = h_mode(-*it).apply(s);
  return s;
}

VerificationReport spanning_check(int n, int k) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.check = "spanning";
  report.params = {{"n", std::to_string(n)}, {"k", std::to_string(k)}};
  const auto basis = sector_basis(n, k);
  const auto parts = partitions_of(k);
  std::map<FermionMonomial, std::size_t> column;
  for (std::size_t i = 0; i < basis.size(); ++i) column[basis[i]] = i;

  std::vector<std::vector<Rational>> rows;
  for (const auto& lambda : parts) {
    ++report.cases_run;
    const FockState s = heisenberg_word(n, lambda);
    std::vector<Rational> row(basis.size());
    for (const auto& [v, c] : s) {
      auto it = column.find(v);
      if (it == column.end()) {
        report.failures.push_back({"h word " + lambda.to_string() + " leaves sector", render(s), "sector (" +
                                       std::to_string(n) + "," + std::to_string(k) + ")"});
        break;
      }
      row[it->second] = c;
    }
    rows.push_back(std::move(row));
  }
  const std::size_t rank = exact_rank(rows);
  const auto pk = static_cast<std::size_t>(partition_count(k));
  report.params.emplace_back("rank", std::to_string(rank));
  report.params.emplace_back("dim", std::to_string(basis.size()));
  if (rank != pk || basis.size() != pk) {
    std::string words;
    for (const auto& lambda : parts) words += lambda.to_string() + " ";
    report.failures.push_back({"partitions " + words, "rank " + std::to_string(rank) + " of dim " +
                                   std::to_string(basis.size()), "p(k) = " + std::to_string(pk)});
  }
  report.elapsed_ms = elapsed_ms_since(start);
  return report;
}

VerificationReport highest_weight_check(int n, int mmax) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.check = "highest_weight";
  report.params = {{"n", std::to_string(n)}, {"mmax", std::to_string(mmax)}};
  const FermionMonomial v = vacuum_like(n);
  for (int m = 0; m <= mmax; ++m) {
    ++report.cases_run;
    const FockState lhs = h_mode(m).apply(v);
    const FockState rhs = m == 0 ? FockState(v, Rational(n)) : FockState{};
    if (lhs != rhs) report.failures.push_back({"h(" + std::to_string(m) + ") on " + v.to_string(), render(lhs), render(rhs)});
  }
  report.elapsed_ms = elapsed_ms_since(start);
  return report;
}

}  // namespace fockda
