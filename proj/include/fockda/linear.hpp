#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fockda/rational.hpp"

namespace fockda {

/// Finite sparse linear combination of basis monomials with exact coefficients.
/// Zero coefficients are never stored; the empty combination is the zero vector.
/// Iteration follows Monomial's ordering, so every traversal is deterministic.
template <class Monomial>
class LinearCombination {
 public:
  using Terms = std::map<Monomial, Rational>;

  LinearCombination() = default;
  explicit LinearCombination(const Monomial& m, Rational coeff = 1) { add(m, std::move(coeff)); }

  static LinearCombination zero() { return {}; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational{} : it->second;
  }

  void add(const Monomial& m, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// this += scale * other
  void add_scaled(const LinearCombination& other, const Rational& scale) {
    if (scale.is_zero()) return;
    for (const auto& [m, c] : other.terms_) add(m, c * scale);
  }

  LinearCombination& operator+=(const LinearCombination& rhs) {
    for (const auto& [m, c] : rhs.terms_) add(m, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& rhs) {
    for (const auto& [m, c] : rhs.terms_) add(m, -c);
    return *this;
  }
  LinearCombination& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Rational(-1); }
  friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// `c1 <m1> + c2 <m2> ...` using Monomial::to_string(), or `0`. Coefficients are always written.
template <class Monomial>
std::string render(const LinearCombination<Monomial>& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : s) {
    if (!out.empty()) out += " + ";
    out += c.to_string() + " " + m.to_string();
  }
  return out;
}

/// A linear operator on the span of `Monomial`, given by its action on basis monomials and
/// extended linearly. Values are immutable and cheap to copy; the action must be a pure function.
template <class Monomial>
class LinearOperator {
 public:
  using State = LinearCombination<Monomial>;
  using Action = std::function<State(const Monomial&)>;

  LinearOperator() : action_(std::make_shared<const Action>([](const Monomial&) { return State{}; })) {}
  explicit LinearOperator(Action action, std::optional<int> weight_shift2 = std::nullopt)
      : action_(std::make_shared<const Action>(std::move(action))), weight_shift2_(weight_shift2) {}

  static LinearOperator zero() { return LinearOperator(); }
  static LinearOperator scalar(Rational s) {
    return LinearOperator([s](const Monomial& m) { return State(m, s); }, 0);
  }
  static LinearOperator identity() { return scalar(Rational(1)); }

  /// Twice the weight shift, when the operator is homogeneous and the shift is known.
  std::optional<int> weight_shift2() const { return weight_shift2_; }

  State apply(const Monomial& m) const { return (*action_)(m); }

  State operator()(const State& s) const {
    State out;
    for (const auto& [m, c] : s) out.add_scaled((*action_)(m), c);
    return out;
  }

  friend LinearOperator operator+(const LinearOperator& a, const LinearOperator& b) {
    return LinearOperator(
        [a, b](const Monomial& m) {
          State out = a.apply(m);
          out += b.apply(m);
          return out;
        },
        common_shift(a, b));
  }

  friend LinearOperator operator*(const Rational& s, const LinearOperator& a) {
    if (s.is_zero()) return LinearOperator(Action([](const Monomial&) { return State{}; }), a.weight_shift2_);
    return LinearOperator(
        [s, a](const Monomial& m) {
          State out = a.apply(m);
          out *= s;
          return out;
        },
        a.weight_shift2_);
  }

  friend LinearOperator operator-(const LinearOperator& a, const LinearOperator& b) {
    return a + Rational(-1) * b;
  }

  /// Composition: (a * b)(v) = a(b(v)).
  friend LinearOperator operator*(const LinearOperator& a, const LinearOperator& b) {
    std::optional<int> shift;
    if (a.weight_shift2_ && b.weight_shift2_) shift = *a.weight_shift2_ + *b.weight_shift2_;
    return LinearOperator([a, b](const Monomial& m) { return a(b.apply(m)); }, shift);
  }

 private:
  static std::optional<int> common_shift(const LinearOperator& a, const LinearOperator& b) {
    if (a.weight_shift2_ && b.weight_shift2_ && *a.weight_shift2_ == *b.weight_shift2_) return a.weight_shift2_;
    return std::nullopt;
  }

  std::shared_ptr<const Action> action_;
  std::optional<int> weight_shift2_;
};

/// [a, b] = ab - ba
template <class Monomial>
LinearOperator<Monomial> commutator(const LinearOperator<Monomial>& a, const LinearOperator<Monomial>& b) {
  return a * b - b * a;
}

/// {a, b} = ab + ba
template <class Monomial>
LinearOperator<Monomial> anticommutator(const LinearOperator<Monomial>& a, const LinearOperator<Monomial>& b) {
  return a * b + b * a;
}

/// A named integer-indexed family of operators (h_n, L_n, J^k_n, ...).
template <class Monomial>
struct OperatorFamily {
  std::string name;
  std::function<LinearOperator<Monomial>(int)> mode;

  LinearOperator<Monomial> operator()(int n) const { return mode(n); }
};

/// Pointwise affine combination: n -> ca * a(n) + cb * b(n) + delta_{n,0} * scalar.
template <class Monomial>
OperatorFamily<Monomial> compose_families(const OperatorFamily<Monomial>& a, const Rational& ca,
                                          const OperatorFamily<Monomial>& b, const Rational& cb,
                                          const Rational& scalar_at_zero = Rational{}, std::string name = {}) {
  if (name.empty()) name = ca.to_string() + "*" + a.name + " + " + cb.to_string() + "*" + b.name;
  return {std::move(name), [a, ca, b, cb, scalar_at_zero](int n) {
            auto op = ca * a(n) + cb * b(n);
            if (n == 0 && !scalar_at_zero.is_zero()) op = op + LinearOperator<Monomial>::scalar(scalar_at_zero);
            return op;
          }};
}

}  // namespace fockda
