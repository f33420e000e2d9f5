#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fockda/linear.hpp"

namespace fockda {

/// One failing case: the input that exposed it and the two sides that disagreed.
struct Failure {
  std::string witness;
  std::string lhs;
  std::string rhs;
  friend bool operator==(const Failure&, const Failure&) = default;
};

/// Outcome of an exact relation check. Serialization is deterministic apart from elapsed_ms.
struct VerificationReport {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;
  std::int64_t cases_run = 0;
  std::vector<Failure> failures;
  double elapsed_ms = 0.0;

  bool passed() const { return failures.empty(); }

  /// Appends another report's cases and failures (params and name are kept).
  void absorb(const VerificationReport& other);

  /// Single-line JSON record {check, params, cases_run, failures[], elapsed_ms}.
  std::string to_json(bool include_timing = true) const;
  /// Human-readable summary, one line plus one line per failure (at most `max_failures`).
  std::string to_text(std::size_t max_failures = 5) const;
};

/// Serializes a list of reports as a JSON array (one record per check).
std::string reports_to_json(const std::vector<VerificationReport>& reports, bool include_timing = true);

/// Evaluates `evaluate(case_index, item_index)` over the full grid, optionally on `jobs` threads.
/// Failures are reported in grid order whatever the scheduling, and cases_run is the grid size.
VerificationReport grid_check(std::string name, std::vector<std::pair<std::string, std::string>> params,
                              std::size_t num_cases, std::size_t num_items,
                              const std::function<std::optional<Failure>(std::size_t, std::size_t)>& evaluate,
                              int jobs = 1);

/// A pair of operator expressions that must agree on every basis vector.
template <class M>
struct RelationCase {
  std::string label;
  std::function<LinearCombination<M>(const M&)> lhs;
  std::function<LinearCombination<M>(const M&)> rhs;
};

template <class M>
VerificationReport relation_check(std::string name, std::vector<std::pair<std::string, std::string>> params,
                                  const std::vector<RelationCase<M>>& cases, const std::vector<M>& basis,
                                  int jobs = 1) {
  return grid_check(
      std::move(name), std::move(params), cases.size(), basis.size(),
      [&](std::size_t c, std::size_t i) -> std::optional<Failure> {
        const auto& rc = cases[c];
        auto l = rc.lhs(basis[i]);
        auto r = rc.rhs(basis[i]);
        if (l == r) return std::nullopt;
        return Failure{rc.label + " on " + basis[i].to_string(), render(l), render(r)};
      },
      jobs);
}

enum class BracketKind { commutator, anticommutator };

/// kind(left_m, right_n) must equal expected(m, n) for every (m, n) in the mode range.
template <class M>
struct BracketSpec {
  std::string name;
  BracketKind kind = BracketKind::commutator;
  OperatorFamily<M> left;
  OperatorFamily<M> right;
  std::function<LinearOperator<M>(int m, int n)> expected;
};

template <class M>
VerificationReport bracket_check(const BracketSpec<M>& spec, const std::vector<std::pair<int, int>>& mode_pairs,
                                 const std::vector<M>& basis, std::vector<std::pair<std::string, std::string>> params,
                                 int jobs = 1) {
  std::vector<RelationCase<M>> cases;
  cases.reserve(mode_pairs.size());
  const char* br = spec.kind == BracketKind::commutator ? "[" : "{";
  const char* kt = spec.kind == BracketKind::commutator ? "]" : "}";
  for (auto [m, n] : mode_pairs) {
    const auto a = spec.left(m);
    const auto b = spec.right(n);
    const auto lhs = spec.kind == BracketKind::commutator ? commutator(a, b) : anticommutator(a, b);
    const auto rhs = spec.expected(m, n);
    cases.push_back({std::string(br) + spec.left.name + "(" + std::to_string(m) + "), " + spec.right.name + "(" +
                         std::to_string(n) + ")" + kt,
                     [lhs](const M& v) { return lhs.apply(v); }, [rhs](const M& v) { return rhs.apply(v); }});
  }
  return relation_check(spec.name, std::move(params), cases, basis, jobs);
}

/// a(n) v == b(n) v for every n in `modes` and v in `basis`.
template <class M>
VerificationReport field_identity_check(std::string name, const OperatorFamily<M>& a, const OperatorFamily<M>& b,
                                        const std::vector<int>& modes, const std::vector<M>& basis,
                                        std::vector<std::pair<std::string, std::string>> params, int jobs = 1) {
  std::vector<RelationCase<M>> cases;
  for (int n : modes) {
    const auto x = a(n);
    const auto y = b(n);
    cases.push_back({a.name + "(" + std::to_string(n) + ") vs " + b.name + "(" + std::to_string(n) + ")",
                     [x](const M& v) { return x.apply(v); }, [y](const M& v) { return y.apply(v); }});
  }
  return relation_check(std::move(name), std::move(params), cases, basis, jobs);
}

/// All (m, n) with |m|, |n| <= bound.
std::vector<std::pair<int, int>> square_mode_pairs(int bound);

/// Exact rank of a rational matrix (rows of equal length) by fraction-free Bareiss elimination.
std::size_t exact_rank(const std::vector<std::vector<Rational>>& rows);

/// Milliseconds since `start`.
double elapsed_ms_since(std::chrono::steady_clock::time_point start);

}  // namespace fockda
