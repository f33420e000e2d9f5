#include "fockda/winf.hpp"

#include <mutex>

#include "fockda/grading.hpp"
#include "fockda/heisenberg.hpp"

namespace fockda {

ChargedQuadratic jk_mode_charged(int k, int n) {
  const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
  return charged_bilinear_mode(ChargedBilinear{sign, 0, 0, k, true}, -n - k - 1);
}

NeutralOperator jk_mode_neutral(int k, int n) { return transport_to_neutral(jk_mode_charged(k, n).as_operator()); }

ChargedFamily jk_family_charged(int k) {
  return {"J" + std::to_string(k) + "A", [k](int n) { return jk_mode_charged(k, n).as_operator(); }};
}

NeutralFamily jk_family_neutral(int k) {
  return {"J" + std::to_string(k), [k](int n) { return jk_mode_neutral(k, n); }};
}

Rational TruncatedMatrix::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Rational{} : it->second;
}

void TruncatedMatrix::add(int i, int j, const Rational& c) {
  if (!in_window(i) || !in_window(j) || c.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

TruncatedMatrix operator*(const TruncatedMatrix& a, const TruncatedMatrix& b) {
  TruncatedMatrix out(std::min(a.radius_, b.radius_));
  for (const auto& [ij, x] : a.entries_) {
    auto it = b.entries_.lower_bound({ij.second, std::numeric_limits<int>::min()});
    for (; it != b.entries_.end() && it->first.first == ij.second; ++it) out.add(ij.first, it->first.second, x * it->second);
  }
  return out;
}

TruncatedMatrix operator-(const TruncatedMatrix& a, const TruncatedMatrix& b) {
  TruncatedMatrix out(std::min(a.radius_, b.radius_));
  for (const auto& [ij, x] : a.entries_) out.add(ij.first, ij.second, x);
  for (const auto& [ij, x] : b.entries_) out.add(ij.first, ij.second, -x);
  return out;
}

TruncatedMatrix glinf_matrix(int k, int n, int radius) {
  TruncatedMatrix m(radius);
  for (int j = -radius; j <= radius; ++j) {
    // (-1)^k k! binom(-j, k) = (-1)^k (-j)(-j-1)...(-j-k+1)
    Rational c = falling_factorial(-j, k);
    if (k % 2 != 0) c = -c;
    m.add(j - n, j, c);
  }
  return m;
}

ChargedOperator lift(const TruncatedMatrix& m) {
  auto entries = m.entries();
  return ChargedOperator([entries](const ChargedMonomial& v) {
    ChargedState out;
    for (const auto& [ij, c] : entries) out.add_scaled(apply_charged_pair(-ij.first, ij.second - 1, v), c);
    return out;
  });
}

ScalarDefect scalar_defect_check(int k1, int n1, int k2, int n2, const Rational& weight_cut, int radius, int jobs) {
  const auto basis = enumerate_charged_basis(weight_cut);
  if (radius <= 0) {
    // Occupied slots at this cut are below weight_cut/2; the two shifts move them by |n1| + |n2|.
    radius = static_cast<int>((weight_cut * Rational(2)).to_int64()) + 2 * (std::abs(n1) + std::abs(n2)) + 8;
  }
  const auto g1 = glinf_matrix(k1, n1, radius);
  const auto g2 = glinf_matrix(k2, n2, radius);
  // Keep only entries whose products saw the full inner sum.
  TruncatedMatrix bracket = g1 * g2 - g2 * g1;
  const int safe = radius - std::abs(n1) - std::abs(n2);
  TruncatedMatrix trimmed(safe);
  for (const auto& [ij, c] : bracket.entries()) trimmed.add(ij.first, ij.second, c);

  const auto fock = commutator(jk_mode_charged(k1, n1).as_operator(), jk_mode_charged(k2, n2).as_operator());
  const auto lifted = lift(trimmed);

  std::vector<std::optional<Rational>> scalars(basis.size());
  std::mutex m;
  const std::string label = "[J" + std::to_string(k1) + "(" + std::to_string(n1) + "), J" + std::to_string(k2) + "(" +
                            std::to_string(n2) + ")] - lift";
  ScalarDefect out;
  out.report = grid_check(
      "winf:scalar_defect",
      {{"k1", std::to_string(k1)}, {"n1", std::to_string(n1)}, {"k2", std::to_string(k2)}, {"n2", std::to_string(n2)},
       {"weight_cut", weight_cut.to_string()}, {"radius", std::to_string(radius)}},
      1, basis.size(),
      [&](std::size_t, std::size_t i) -> std::optional<Failure> {
        const auto& v = basis[i];
        ChargedState d = fock.apply(v);
        d -= lifted.apply(v);
        const Rational s = d.coefficient(v);
        if (d != ChargedState(v, s)) return Failure{label + " on " + v.to_string(), render(d), "scalar multiple of the input"};
        std::lock_guard lock(m);
        scalars[i] = s;
        return std::nullopt;
      },
      jobs);
  if (out.report.passed() && !basis.empty()) {
    const Rational s0 = *scalars.front();
    for (std::size_t i = 1; i < basis.size(); ++i) {
      if (*scalars[i] != s0) {
        out.report.failures.push_back({label + " on " + basis.front().to_string() + " and " + basis[i].to_string(),
                                       s0.to_string(), scalars[i]->to_string()});
        break;
      }
    }
    if (out.report.passed()) out.scalar = s0;
  }
  if (out.scalar) out.report.params.emplace_back("scalar", out.scalar->to_string());
  return out;
}

VerificationReport orbit_spanning_check(int n, int max_deg, int kmax) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.check = "winf:orbit_spanning";
  report.params = {{"n", std::to_string(n)}, {"max_deg", std::to_string(max_deg)}, {"kmax", std::to_string(kmax)}};

  // Independent spanning vectors found so far, per degree.
  std::vector<std::vector<FockState>> level(static_cast<std::size_t>(max_deg) + 1);
  level[0].push_back(FockState(vacuum_like(n)));
  std::vector<std::vector<NeutralOperator>> ops(static_cast<std::size_t>(max_deg) + 1);
  for (int m = 1; m <= max_deg; ++m) {
    for (int k = 0; k <= kmax; ++k) ops[m].push_back(jk_mode_neutral(k, -m));
  }
  for (int d = 0; d <= max_deg; ++d) {
    const auto basis = sector_basis(n, d);
    std::map<FermionMonomial, std::size_t> column;
    for (std::size_t i = 0; i < basis.size(); ++i) column[basis[i]] = i;
    auto to_row = [&](const FockState& s, std::vector<Rational>& row) {
      row.assign(basis.size(), Rational{});
      for (const auto& [v, c] : s) {
        auto it = column.find(v);
        if (it == column.end()) return false;
        row[it->second] = c;
      }
      return true;
    };
    std::vector<std::vector<Rational>> rows;
    std::vector<FockState> kept;
    std::size_t rank = 0;
    auto consider = [&](const FockState& s) {
      ++report.cases_run;
      std::vector<Rational> row;
      if (!to_row(s, row)) {
        report.failures.push_back({"orbit vector leaves sector (" + std::to_string(n) + "," + std::to_string(d) + ")",
                                   render(s), "sector member"});
        return;
      }
      rows.push_back(row);
      const std::size_t r = exact_rank(rows);
      if (r > rank) {
        rank = r;
        kept.push_back(s);
      } else {
        rows.pop_back();
      }
    };
    if (d == 0) {
      consider(level[0].front());
    } else {
      for (int m = 1; m <= d; ++m) {
        for (const auto& s : level[d - m]) {
          for (const auto& op : ops[m]) consider(op(s));
        }
      }
    }
    level[d] = kept;
    const auto pk = static_cast<std::size_t>(partition_count(d));
    if (rank != basis.size() || rank != pk) {
      report.failures.push_back({"degree " + std::to_string(d), "rank " + std::to_string(rank),
                                 "dim " + std::to_string(basis.size()) + ", p(d) = " + std::to_string(pk)});
    }
  }
  report.elapsed_ms = elapsed_ms_since(start);
  return report;
}

}  // namespace fockda
