#include "fockda/mode_operators.hpp"

#include <algorithm>
#include <set>

namespace fockda {

NormalOrderedPair normal_order_pair(FermionModeIndex p, FermionModeIndex q) {
  if (p.is_annihilation() && q.is_creation()) {
    const bool paired = p.doubled() == -q.doubled();
    return {q, p, -1, paired ? Rational(1) : Rational(0)};
  }
  return {p, q, 1, Rational(0)};
}

FockState apply_normal_ordered_pair(FermionModeIndex p, FermionModeIndex q, const FermionMonomial& v) {
  const auto pair = normal_order_pair(p, q);
  FockState out = apply_fermion_mode(pair.first, apply_fermion_mode(pair.second, v));
  if (pair.sign < 0) out *= Rational(-1);
  return out;
}

QuadraticModeOperator::QuadraticModeOperator(int total_doubled, CoefficientRule rule, Rational scalar)
    : total2_(total_doubled), rule_(std::move(rule)), scalar_(std::move(scalar)) {
  if (total2_ % 2 != 0) throw std::invalid_argument("QuadraticModeOperator: p + q must be an integer");
}

QuadraticModeOperator QuadraticModeOperator::zero(int total_doubled) {
  return {total_doubled, [](FermionModeIndex) { return Rational{}; }};
}

QuadraticModeOperator QuadraticModeOperator::with_support_bound(SupportBound bound) const {
  QuadraticModeOperator out = *this;
  out.bound_ = std::move(bound);
  return out;
}

QuadraticModeOperator QuadraticModeOperator::with_scalar(Rational scalar) const {
  QuadraticModeOperator out = *this;
  out.scalar_ = std::move(scalar);
  return out;
}

std::vector<FermionModeIndex> QuadraticModeOperator::support(const FermionMonomial& v) const {
  if (bound_) return bound_(v);
  std::set<int> doubled;
  for (int n : v.indices()) {
    const int ann = 2 * n + 1;
    doubled.insert(ann);           // phi_p annihilates n
    doubled.insert(total2_ - ann);  // phi_q annihilates n
  }
  for (int p2 = total2_ + 1; p2 < 0; p2 += 2) doubled.insert(p2);  // both creators
  std::vector<FermionModeIndex> out;
  out.reserve(doubled.size());
  for (int p2 : doubled) out.push_back(FermionModeIndex::from_doubled(p2));
  return out;
}

FockState QuadraticModeOperator::summand(FermionModeIndex p, const FermionMonomial& v) const {
  const Rational c = rule_(p);
  if (c.is_zero()) return {};
  FockState out = apply_normal_ordered_pair(p, partner(p), v);
  out *= c;
  return out;
}

FockState QuadraticModeOperator::apply(const FermionMonomial& v) const {
  FockState out;
  for (FermionModeIndex p : support(v)) out += summand(p, v);
  if (!scalar_.is_zero()) out.add(v, scalar_);
  return out;
}

FockState QuadraticModeOperator::apply(const FockState& s) const {
  FockState out;
  for (const auto& [v, c] : s) out.add_scaled(apply(v), c);
  return out;
}

FockState QuadraticModeOperator::apply_checked(const FermionMonomial& v, int margin) const {
  const auto sup = support(v);
  std::set<int> inside;
  for (auto p : sup) inside.insert(p.doubled());
  int lo = std::min(total2_ - 2 * v.max_index() - 3, -2 * v.max_index() - 3);
  int hi = std::max(2 * v.max_index() + 3, total2_ + 2 * v.max_index() + 3);
  lo = std::min(lo, total2_ + 1) - 2 * margin;
  hi = std::max(hi, -1) + 2 * margin;
  if (lo % 2 == 0) --lo;
  for (int p2 = lo; p2 <= hi; p2 += 2) {
    if (inside.count(p2) != 0) continue;
    const auto p = FermionModeIndex::from_doubled(p2);
    if (!summand(p, v).is_zero()) {
      throw SupportViolation("summand p = " + p.to_string() + " acts nonzero on " + v.to_string() +
                             " but lies outside the declared support");
    }
  }
  return apply(v);
}

NeutralOperator QuadraticModeOperator::as_operator() const {
  auto self = *this;
  return NeutralOperator([self](const FermionMonomial& v) { return self.apply(v); }, weight_shift2());
}

Rational falling_factorial(std::int64_t k, int a) {
  Rational out(1);
  for (int i = 0; i < a; ++i) out *= Rational(k - i);
  return out;
}

QuadraticModeOperator bilinear_mode(const FermionBilinear& f, int e) {
  // phi(w) = sum_k phi_{-k-1/2} w^k, so (d^a phi)(s w) = sum_k ff(k, a) s^(k-a) phi_{-k-1/2} w^(k-a).
  // The z^e coefficient pairs k + l = e + a + b - zshift, i.e. p = -k-1/2, q = -l-1/2.
  const int total_kl = e + f.dleft + f.dright - f.zshift;
  const int total2 = -2 * total_kl - 2;
  auto rule = [f, total_kl](FermionModeIndex p) {
    const std::int64_t k = (-p.doubled() - 1) / 2;
    const std::int64_t l = total_kl - k;
    Rational c = f.prefactor * falling_factorial(k, f.dleft) * falling_factorial(l, f.dright);
    if (c.is_zero()) return c;
    if (f.sleft < 0 && (k - f.dleft) % 2 != 0) c = -c;
    if (f.sright < 0 && (l - f.dright) % 2 != 0) c = -c;
    return c;
  };
  return {total2, rule};
}

NeutralOperator field_mode(const std::vector<FermionBilinear>& field, int e) {
  NeutralOperator out;
  bool first = true;
  for (const auto& f : field) {
    auto op = bilinear_mode(f, e).as_operator();
    out = first ? op : out + op;
    first = false;
  }
  return out;
}

}  // namespace fockda
