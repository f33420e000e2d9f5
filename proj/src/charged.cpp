#include "fockda/charged.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "fockda/grading.hpp"
#include "fockda/heisenberg.hpp"

namespace fockda {

namespace {

std::uint64_t bit64(int j) { return std::uint64_t{1} << j; }

int count_above(std::uint64_t mask, int j) {
  if (j + 1 >= 64) return 0;
  return std::popcount(mask & ~(bit64(j + 1) - 1));
}

void check_slot(int j) {
  if (j < 0 || j >= ChargedMonomial::kMaxSlot) throw std::out_of_range("charged slot " + std::to_string(j) + " out of range");
}

std::vector<int> indices_of(std::uint64_t mask) {
  std::vector<int> out;
  // Increasing index = decreasing slot.
  for (int j = 63; j >= 0; --j) {
    if ((mask >> j) & 1U) out.push_back(-j - 1);
  }
  return out;
}

int weight2_of(std::uint64_t plus, std::uint64_t minus) {
  int w = 0;
  for (int j = 0; j < 64; ++j) {
    if ((plus >> j) & 1U) w += 4 * j + 3;
    if ((minus >> j) & 1U) w += 4 * j + 1;
  }
  return w;
}

}  // namespace

std::string ChargedModeIndex::to_string() const {
  return std::string(species == Species::plus ? "psi+[" : "psi-[") + std::to_string(value) + "]";
}

ChargedMonomial ChargedMonomial::from_masks(std::uint64_t plus, std::uint64_t minus) {
  ChargedMonomial v;
  v.plus_ = plus;
  v.minus_ = minus;
  return v;
}

ChargedMonomial ChargedMonomial::from_indices(const std::vector<int>& plus, const std::vector<int>& minus) {
  auto build = [](const std::vector<int>& idx) {
    std::uint64_t m = 0;
    for (int n : idx) {
      if (n > -1) throw std::invalid_argument("charged creation index must be <= -1");
      const int j = -n - 1;
      check_slot(j);
      if ((m >> j) & 1U) throw std::invalid_argument("repeated charged index " + std::to_string(n));
      m |= bit64(j);
    }
    return m;
  };
  return from_masks(build(plus), build(minus));
}

bool ChargedMonomial::has(Species s, int slot) const {
  if (slot < 0 || slot >= kMaxSlot) return false;
  return (((s == Species::plus ? plus_ : minus_) >> slot) & 1U) != 0;
}

int ChargedMonomial::plus_count() const { return std::popcount(plus_); }
int ChargedMonomial::minus_count() const { return std::popcount(minus_); }
int ChargedMonomial::weight2() const { return weight2_of(plus_, minus_); }
std::vector<int> ChargedMonomial::plus_indices() const { return indices_of(plus_); }
std::vector<int> ChargedMonomial::minus_indices() const { return indices_of(minus_); }

std::string ChargedMonomial::to_string() const {
  std::string out;
  for (int n : plus_indices()) out += "psi+[" + std::to_string(n) + "] ";
  for (int n : minus_indices()) out += "psi-[" + std::to_string(n) + "] ";
  return out + "|0>";
}

std::strong_ordering operator<=>(const ChargedMonomial& a, const ChargedMonomial& b) {
  if (auto c = a.weight2() <=> b.weight2(); c != 0) return c;
  if (auto c = a.plus_ <=> b.plus_; c != 0) return c;
  return a.minus_ <=> b.minus_;
}

ChargedState apply_charged_mode(ChargedModeIndex m, const ChargedMonomial& v) {
  const int j = m.slot();
  if (j >= ChargedMonomial::kMaxSlot) {
    if (m.is_creation()) check_slot(j);
    return {};
  }
  std::uint64_t plus = v.plus_mask();
  std::uint64_t minus = v.minus_mask();
  int passes = 0;
  // Creators insert into their own block; annihilators remove the opposite species at the same slot.
  const bool touches_plus = (m.species == Species::plus) == m.is_creation();
  if (touches_plus) {
    passes = count_above(plus, j);
    if (m.is_creation() == (((plus >> j) & 1U) != 0)) return {};
    plus ^= bit64(j);
  } else {
    passes = std::popcount(plus) + count_above(minus, j);
    if (m.is_creation() == (((minus >> j) & 1U) != 0)) return {};
    minus ^= bit64(j);
  }
  return ChargedState(ChargedMonomial::from_masks(plus, minus), passes % 2 == 0 ? Rational(1) : Rational(-1));
}

ChargedState apply_charged_mode(ChargedModeIndex m, const ChargedState& s) {
  ChargedState out;
  for (const auto& [v, c] : s) out.add_scaled(apply_charged_mode(m, v), c);
  return out;
}

ChargedOperator charged_mode_operator(ChargedModeIndex m) {
  // Transported doubled weight: plus slot j costs 4j+3, minus slot j costs 4j+1.
  const int shift2 = m.species == Species::plus ? (m.is_creation() ? 4 * m.slot() + 3 : -(4 * m.slot() + 1))
                                                 : (m.is_creation() ? 4 * m.slot() + 1 : -(4 * m.slot() + 3));
  return ChargedOperator([m](const ChargedMonomial& v) { return apply_charged_mode(m, v); }, shift2);
}

ChargedState apply_charged_pair(int a, int b, const ChargedMonomial& v) {
  const ChargedModeIndex pa{Species::plus, a};
  const ChargedModeIndex mb{Species::minus, b};
  if (a >= 0 && b < 0) {
    ChargedState out = apply_charged_mode(mb, apply_charged_mode(pa, v));
    out *= Rational(-1);
    return out;
  }
  return apply_charged_mode(pa, apply_charged_mode(mb, v));
}

ChargedQuadratic::ChargedQuadratic(int total, Rule rule, Rational scalar)
    : total_(total), rule_(std::move(rule)), scalar_(std::move(scalar)) {}

std::vector<int> ChargedQuadratic::support(const ChargedMonomial& v) const {
  std::set<int> out;
  for (int j = 0; j < ChargedMonomial::kMaxSlot; ++j) {
    if (v.has(Species::minus, j)) out.insert(j);           // psi^+_a removes minus slot a
    if (v.has(Species::plus, j)) out.insert(total_ - j);   // psi^-_{T-a} removes plus slot T-a
  }
  for (int a = total_ + 1; a <= -1; ++a) out.insert(a);   // both creators
  return {out.begin(), out.end()};
}

ChargedState ChargedQuadratic::apply(const ChargedMonomial& v) const {
  ChargedState out;
  for (int a : support(v)) {
    const Rational c = rule_(a);
    if (c.is_zero()) continue;
    out.add_scaled(apply_charged_pair(a, total_ - a, v), c);
  }
  if (!scalar_.is_zero()) out.add(v, scalar_);
  return out;
}

ChargedState ChargedQuadratic::apply(const ChargedState& s) const {
  ChargedState out;
  for (const auto& [v, c] : s) out.add_scaled(apply(v), c);
  return out;
}

ChargedOperator ChargedQuadratic::as_operator() const {
  auto self = *this;
  return ChargedOperator([self](const ChargedMonomial& v) { return self.apply(v); }, weight_shift2());
}

ChargedQuadratic charged_bilinear_mode(const ChargedBilinear& f, int e) {
  // psi(w) = sum_k psi_{-k-1} w^k, so (d^a psi)(w) = sum_k ff(k, a) psi_{-k-1} w^(k-a).
  // At w^e the two free indices satisfy k + l = e + a + b - zshift.
  const int kl = e + f.dleft + f.dright - f.zshift;
  const int total = -kl - 2;
  auto rule = [f, kl](int a) {
    // a is the psi^+ index; recover the (k, l) of the left and right factors.
    const std::int64_t k_plus = -a - 1;
    const std::int64_t k_minus = kl - k_plus;
    if (f.plus_left) return f.prefactor * falling_factorial(k_plus, f.dleft) * falling_factorial(k_minus, f.dright);
    // :psi^-_b psi^+_a: = - :psi^+_a psi^-_b:
    return -(f.prefactor * falling_factorial(k_minus, f.dleft) * falling_factorial(k_plus, f.dright));
  };
  return {total, rule};
}

ChargedOperator charged_field_mode(const std::vector<ChargedBilinear>& field, int e) {
  ChargedOperator out;
  bool first = true;
  for (const auto& f : field) {
    auto op = charged_bilinear_mode(f, e).as_operator();
    out = first ? op : out + op;
    first = false;
  }
  return out;
}

ChargedQuadratic hA_mode(int n) { return charged_bilinear_mode(ChargedBilinear{Rational(1), 0, 0, 0, true}, -n - 1); }

ChargedQuadratic lA_lambda_mode(const Rational& lambda, int n) {
  const auto first = charged_bilinear_mode(ChargedBilinear{Rational(1) - lambda, 0, 1, 0, true}, -n - 2);
  const auto second = charged_bilinear_mode(ChargedBilinear{lambda, 0, 1, 0, false}, -n - 2);
  return {first.total(), [first, second](int a) { return first.coefficient(a) + second.coefficient(a); }};
}

ChargedOperator lA_lambda_b_mode(const Rational& lambda, const Rational& b, int n) {
  ChargedOperator op = lA_lambda_mode(lambda, n).as_operator() - b * hA_mode(n).as_operator();
  if (n == 0) op = op + ChargedOperator::scalar(b * (b - Rational(2) * lambda + Rational(1)) / Rational(2));
  return op;
}

ChargedFamily hA_family() {
  return {"hA", [](int n) { return hA_mode(n).as_operator(); }};
}

ChargedFamily lA_lambda_b_family(const Rational& lambda, const Rational& b) {
  return {"LA(" + lambda.to_string() + "," + b.to_string() + ")",
          [lambda, b](int n) { return lA_lambda_b_mode(lambda, b, n); }};
}

BracketSpec<ChargedMonomial> charged_heisenberg_spec(const ChargedFamily& h) {
  return {"heisenberg:" + h.name, BracketKind::commutator, h, h, [](int m, int n) {
            return ChargedOperator::scalar(m + n == 0 ? Rational(m) : Rational(0));
          }};
}

BracketSpec<ChargedMonomial> charged_virasoro_spec(const ChargedFamily& f, const Rational& c) {
  return {"virasoro:" + f.name + " c=" + c.to_string(), BracketKind::commutator, f, f, [f, c](int m, int n) {
            ChargedOperator op = Rational(m - n) * f(m + n);
            if (m + n == 0) op = op + ChargedOperator::scalar(Rational(m * m * m - m) * c / Rational(12));
            return op;
          }};
}

std::vector<ChargedMonomial> enumerate_charged_basis(const Rational& weight_cut) {
  const Rational twice = weight_cut * Rational(2);
  if (weight_cut.sign() < 0 || !twice.is_integer()) throw std::invalid_argument("weight cut must be a non-negative multiple of 1/2");
  const int cut2 = static_cast<int>(twice.to_int64());
  // Interleave the two species as slots of cost 4j+1 (minus) and 4j+3 (plus).
  std::vector<ChargedMonomial> out;
  struct Frame {
    std::uint64_t plus, minus;
    int w2, next_cost;
  };
  std::vector<Frame> stack{{0, 0, 0, 1}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    out.push_back(ChargedMonomial::from_masks(f.plus, f.minus));
    for (int cost = f.next_cost; f.w2 + cost <= cut2; cost += 2) {
      const int j = (cost - 1) / 4;
      check_slot(j);
      Frame g = f;
      if (cost % 4 == 3) g.plus |= bit64(j); else g.minus |= bit64(j);
      g.w2 += cost;
      g.next_cost = cost + 2;
      stack.push_back(g);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ChargedModeIndex da_mode_dict(FermionModeIndex d) {
  const int n = d.fock_index();
  const int j = n / 2;
  if (d.is_creation()) return n % 2 != 0 ? ChargedModeIndex{Species::plus, -j - 1} : ChargedModeIndex{Species::minus, -j - 1};
  return n % 2 == 0 ? ChargedModeIndex{Species::plus, j} : ChargedModeIndex{Species::minus, j};
}

FermionModeIndex da_mode_inverse(ChargedModeIndex c) {
  const int j = c.slot();
  if (c.is_creation()) return FermionModeIndex::creator(c.species == Species::plus ? 2 * j + 1 : 2 * j);
  return FermionModeIndex::annihilator(c.species == Species::plus ? 2 * j : 2 * j + 1);
}

ChargedState da_map(const FermionMonomial& v) {
  ChargedState s(ChargedMonomial{});
  for (int n : v.indices()) s = apply_charged_mode(da_mode_dict(FermionModeIndex::creator(n)), s);
  return s;
}

ChargedState da_map(const FockState& s) {
  ChargedState out;
  for (const auto& [v, c] : s) out.add_scaled(da_map(v), c);
  return out;
}

FockState da_inverse(const ChargedMonomial& c) {
  FockState s = vacuum_state();
  // Rightmost factor first: the minus block from its largest index, then the plus block.
  auto minus = c.minus_indices();
  auto plus = c.plus_indices();
  for (auto it = minus.rbegin(); it != minus.rend(); ++it) {
    s = apply_fermion_mode(da_mode_inverse({Species::minus, *it}), s);
  }
  for (auto it = plus.rbegin(); it != plus.rend(); ++it) {
    s = apply_fermion_mode(da_mode_inverse({Species::plus, *it}), s);
  }
  return s;
}

FockState da_inverse(const ChargedState& s) {
  FockState out;
  for (const auto& [v, c] : s) out.add_scaled(da_inverse(v), c);
  return out;
}

NeutralOperator transport_to_neutral(const ChargedOperator& op) {
  return NeutralOperator([op](const FermionMonomial& v) { return da_inverse(op(da_map(v))); }, op.weight_shift2());
}

ChargedOperator transport_to_charged(const NeutralOperator& op) {
  return ChargedOperator([op](const ChargedMonomial& v) { return da_map(op(da_inverse(v))); }, op.weight_shift2());
}

std::vector<VerificationReport> iso_checks(const Rational& weight_cut, int nmax, int jobs) {
  std::vector<VerificationReport> out;
  const auto basis = enumerate_basis(weight_cut);
  const std::vector<std::pair<std::string, std::string>> params{{"weight_cut", weight_cut.to_string()}};

  // Clifford relations carried through the dictionary: for neutral modes p, q the charged images
  // must anticommute to delta_{p,-q} on the charged basis.
  {
    const auto cbasis = enumerate_charged_basis(weight_cut);
    // Every index present at this cut is covered, plus one mode beyond.
    int bound2 = static_cast<int>((weight_cut * Rational(2)).to_int64()) + 2;
    if (bound2 % 2 == 0) ++bound2;
    std::vector<RelationCase<ChargedMonomial>> cases;
    for (int p2 = -bound2; p2 <= bound2; p2 += 2) {
      for (int q2 = -bound2; q2 <= bound2; q2 += 2) {
        const auto p = da_mode_dict(FermionModeIndex::from_doubled(p2));
        const auto q = da_mode_dict(FermionModeIndex::from_doubled(q2));
        const auto lhs = anticommutator(charged_mode_operator(p), charged_mode_operator(q));
        const Rational delta = p2 == -q2 ? Rational(1) : Rational(0);
        cases.push_back({"{" + p.to_string() + ", " + q.to_string() + "}", [lhs](const ChargedMonomial& v) { return lhs.apply(v); },
                         [delta](const ChargedMonomial& v) { return ChargedState(v, delta); }});
      }
    }
    auto params_c = params;
    params_c.emplace_back("max_index", std::to_string(bound2) + "/2");
    out.push_back(relation_check("iso:clifford_transport", params_c, cases, cbasis, jobs));
  }

  // Intertwining: h^A_n c = da_map(h_n da_inverse(c)) on the charged basis, which is the same as
  // da_map(h_n v) = h^A_n da_map(v) because da_map is a bijection on basis monomials.
  {
    const auto cbasis = enumerate_charged_basis(weight_cut);
    std::vector<RelationCase<ChargedMonomial>> cases;
    for (int n = -nmax; n <= nmax; ++n) {
      const auto h = h_mode(n);
      const auto ha = hA_mode(n);
      cases.push_back({"hA(" + std::to_string(n) + ") vs da . h(" + std::to_string(n) + ") . da^-1",
                       [ha](const ChargedMonomial& c) { return ha.apply(c); },
                       [h](const ChargedMonomial& c) { return da_map(h.apply(da_inverse(c))); }});
    }
    auto params_i = params;
    params_i.emplace_back("nmax", std::to_string(nmax));
    out.push_back(relation_check("iso:intertwining", params_i, cases, cbasis, jobs));
  }

  // Bijectivity: each basis monomial maps to +-1 times a distinct charged monomial of the same
  // transported weight, the images exhaust the charged truncation, and da_inverse undoes da_map.
  {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    r.check = "iso:bijection";
    r.params = params;
    const auto cbasis = enumerate_charged_basis(weight_cut);
    std::set<ChargedMonomial> images;
    for (const auto& v : basis) {
      ++r.cases_run;
      const ChargedState s = da_map(v);
      const bool single = s.size() == 1;
      const auto& [img, c] = *s.begin();
      if (!single || (c != Rational(1) && c != Rational(-1)) || img.weight2() != v.weight2() ||
          img.charge() != dg(v) ||
          da_inverse(s) != FockState(v)) {
        r.failures.push_back({v.to_string(), render(s), "signed basis monomial with inverse"});
        continue;
      }
      if (!images.insert(img).second) r.failures.push_back({v.to_string(), render(s), "image already taken"});
    }
    if (images.size() != cbasis.size() || !std::equal(images.begin(), images.end(), cbasis.begin())) {
      r.failures.push_back({"image set", std::to_string(images.size()) + " monomials",
                            "charged basis of " + std::to_string(cbasis.size())});
    }
    r.elapsed_ms = elapsed_ms_since(start);
    out.push_back(r);
  }
  return out;
}

}  // namespace fockda
