#include "fockda/fock.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fockda {

namespace {

using Mask = FermionMonomial::Mask;

int popcount128(Mask m) {
  return std::popcount(static_cast<std::uint64_t>(m)) + std::popcount(static_cast<std::uint64_t>(m >> 64));
}

int lowest_bit(Mask m) {
  const auto lo = static_cast<std::uint64_t>(m);
  if (lo != 0) return std::countr_zero(lo);
  return 64 + std::countr_zero(static_cast<std::uint64_t>(m >> 64));
}

Mask bit(int n) { return Mask{1} << n; }

int weight2_of(Mask m) {
  int w = 0;
  while (m != 0) {
    const int n = lowest_bit(m);
    w += 2 * n + 1;
    m &= m - 1;
  }
  return w;
}

void check_index(int n) {
  if (n < 0 || n >= FermionMonomial::kMaxIndex) {
    throw std::out_of_range("fermion index " + std::to_string(n) + " outside [0, " +
                            std::to_string(FermionMonomial::kMaxIndex) + ")");
  }
}

}  // namespace

FermionModeIndex FermionModeIndex::from_doubled(int twice) {
  if (twice % 2 == 0) throw std::invalid_argument("fermion mode must be a half-odd integer, got " + std::to_string(twice) + "/2");
  return FermionModeIndex(twice);
}

FermionModeIndex FermionModeIndex::parse(std::string_view text) {
  const Rational r = Rational::parse(text);
  const Rational twice = r * Rational(2);
  if (!twice.is_integer() || r.is_integer()) {
    throw std::invalid_argument("fermion mode must be p/2 with p odd, got '" + std::string(text) + "'");
  }
  return from_doubled(static_cast<int>(twice.to_int64()));
}

std::string FermionModeIndex::to_string() const { return std::to_string(twice_) + "/2"; }

FermionMonomial FermionMonomial::from_indices(const std::vector<int>& indices) {
  Mask m = 0;
  for (int n : indices) {
    check_index(n);
    if ((m >> n) & 1U) throw std::invalid_argument("repeated fermion index " + std::to_string(n));
    m |= bit(n);
  }
  return from_mask(m);
}

FermionMonomial FermionMonomial::from_mask(Mask mask) {
  FermionMonomial v;
  v.mask_ = mask;
  v.weight2_ = weight2_of(mask);
  return v;
}

int FermionMonomial::length() const { return popcount128(mask_); }

std::vector<int> FermionMonomial::indices() const {
  std::vector<int> out;
  Mask m = mask_;
  while (m != 0) {
    out.push_back(lowest_bit(m));
    m &= m - 1;
  }
  return out;
}

int FermionMonomial::max_index() const {
  if (mask_ == 0) return -1;
  const auto hi = static_cast<std::uint64_t>(mask_ >> 64);
  if (hi != 0) return 127 - std::countl_zero(hi);
  return 63 - std::countl_zero(static_cast<std::uint64_t>(mask_));
}

int FermionMonomial::count_above(int n) const {
  if (n + 1 >= kMaxIndex) return 0;
  const Mask above = n < 0 ? mask_ : (mask_ & ~((bit(n + 1)) - 1));
  return popcount128(above);
}

FermionMonomial FermionMonomial::with(int n) const {
  check_index(n);
  FermionMonomial v;
  v.mask_ = mask_ | bit(n);
  v.weight2_ = weight2_ + (contains(n) ? 0 : 2 * n + 1);
  return v;
}

FermionMonomial FermionMonomial::without(int n) const {
  check_index(n);
  FermionMonomial v;
  v.mask_ = mask_ & ~bit(n);
  v.weight2_ = weight2_ - (contains(n) ? 2 * n + 1 : 0);
  return v;
}

std::string FermionMonomial::to_string() const {
  std::string out;
  auto idx = indices();
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
    out += "phi[" + FermionModeIndex::creator(*it).to_string() + "] ";
  }
  return out + "|0>";
}

std::strong_ordering operator<=>(const FermionMonomial& a, const FermionMonomial& b) {
  if (a.weight2_ != b.weight2_) return a.weight2_ <=> b.weight2_;
  const Mask diff = a.mask_ ^ b.mask_;
  if (diff == 0) return std::strong_ordering::equal;
  // Both increasing lists agree below the lowest differing index t. The list holding t is
  // smaller unless the other list has already ended (then the other is a proper prefix).
  const int t = lowest_bit(diff);
  const Mask above = ~(bit(t) - 1) & ~bit(t);
  const bool a_has = ((a.mask_ >> t) & 1U) != 0;
  const Mask other_rest = (a_has ? b.mask_ : a.mask_) & above;
  if (a_has) return other_rest == 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  return other_rest == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

FockState apply_fermion_mode(FermionModeIndex m, const FermionMonomial& v) {
  const int n = m.fock_index();
  // The new (or removed) factor sits leftmost and must pass every factor with a larger index.
  const Rational sign = (v.count_above(n) % 2 == 0) ? Rational(1) : Rational(-1);
  if (m.is_creation()) {
    if (v.contains(n)) return {};
    return FockState(v.with(n), sign);
  }
  if (!v.contains(n)) return {};
  return FockState(v.without(n), sign);
}

FockState apply_fermion_mode(FermionModeIndex m, const FockState& s) {
  FockState out;
  for (const auto& [v, c] : s) out.add_scaled(apply_fermion_mode(m, v), c);
  return out;
}

NeutralOperator fermion_mode_operator(FermionModeIndex m) {
  return NeutralOperator([m](const FermionMonomial& v) { return apply_fermion_mode(m, v); }, -m.doubled());
}

std::vector<FermionMonomial> enumerate_basis_doubled(int weight_cut2) {
  std::vector<FermionMonomial> out;
  if (weight_cut2 < 0) return out;
  // Depth-first over index sets; index n costs 2n+1 doubled weight units.
  struct Frame {
    Mask mask;
    int weight2;
    int start;
  };
  std::vector<Frame> frames{{0, 0, 0}};
  while (!frames.empty()) {
    Frame f = frames.back();
    frames.pop_back();
    out.push_back(FermionMonomial::from_mask(f.mask));
    for (int n = f.start; f.weight2 + 2 * n + 1 <= weight_cut2; ++n) {
      check_index(n);
      frames.push_back({f.mask | bit(n), f.weight2 + 2 * n + 1, n + 1});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FermionMonomial> enumerate_basis(const Rational& weight_cut) {
  if (weight_cut.sign() < 0) throw std::invalid_argument("weight cut must be non-negative");
  const Rational twice = weight_cut * Rational(2);
  if (!twice.is_integer()) throw std::invalid_argument("weight cut must be a multiple of 1/2");
  return enumerate_basis_doubled(static_cast<int>(twice.to_int64()));
}

std::string render_state(const FockState& s) { return render(s); }

}  // namespace fockda
