#include "fockda/qchar.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "fockda/grading.hpp"
#include "fockda/heisenberg.hpp"
#include "fockda/virasoro.hpp"

namespace fockda {

CharacterSeries CharacterSeries::one(int qmax_half) {
  CharacterSeries s(qmax_half);
  s.add(0, 0, 1);
  return s;
}

CharacterSeries CharacterSeries::binomial(int zexp, int qhalf, int sign, int qmax_half) {
  CharacterSeries s = one(qmax_half);
  s.add(zexp, qhalf, sign);
  return s;
}

mpz_class CharacterSeries::coefficient(int zexp, int qhalf) const {
  auto it = coeffs_.find({zexp, qhalf});
  return it == coeffs_.end() ? mpz_class(0) : it->second;
}

void CharacterSeries::add(int zexp, int qhalf, const mpz_class& c) {
  if (qhalf > qmax_half_ || c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace({zexp, qhalf}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

CharacterSeries operator*(const CharacterSeries& a, const CharacterSeries& b) {
  CharacterSeries out(std::min(a.qmax_half_, b.qmax_half_));
  for (const auto& [ka, ca] : a.coeffs_) {
    for (const auto& [kb, cb] : b.coeffs_) {
      if (ka.second + kb.second <= out.qmax_half_) out.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  }
  return out;
}

CharacterSeries operator+(const CharacterSeries& a, const CharacterSeries& b) {
  CharacterSeries out(std::min(a.qmax_half_, b.qmax_half_));
  for (const auto& [k, c] : a.coeffs_) out.add(k.first, k.second, c);
  for (const auto& [k, c] : b.coeffs_) out.add(k.first, k.second, c);
  return out;
}

std::optional<CharacterSeries::Key> CharacterSeries::first_difference(const CharacterSeries& a, const CharacterSeries& b) {
  const int bound = std::min(a.qmax_half_, b.qmax_half_);
  std::map<Key, int> keys;
  for (const auto& [k, c] : a.coeffs_) if (k.second <= bound) keys[{k.second, k.first}] = 0;
  for (const auto& [k, c] : b.coeffs_) if (k.second <= bound) keys[{k.second, k.first}] = 0;
  for (const auto& [qk, unused] : keys) {
    const int z = qk.second;
    const int q = qk.first;
    if (a.coefficient(z, q) != b.coefficient(z, q)) return Key{z, q};
  }
  return std::nullopt;
}

bool operator==(const CharacterSeries& a, const CharacterSeries& b) {
  return !CharacterSeries::first_difference(a, b).has_value();
}

std::string CharacterSeries::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [k, c] : coeffs_) {
    nlohmann::ordered_json rec;
    rec["z"] = k.first;
    rec["qhalf"] = k.second;
    if (c.fits_slong_p()) rec["coeff"] = c.get_si(); else rec["coeff"] = c.get_str();
    arr.push_back(rec);
  }
  return arr.dump();
}

std::string CharacterSeries::to_text() const {
  std::ostringstream os;
  os << "z qhalf coeff\n";
  for (const auto& [k, c] : coeffs_) os << k.first << ' ' << k.second << ' ' << c.get_str() << '\n';
  return os.str();
}

CharacterSeries char_trace(const Rational& weight_cut) {
  const int cut2 = static_cast<int>((weight_cut * Rational(2)).to_int64());
  CharacterSeries s(cut2);
  for (const auto& v : enumerate_basis_doubled(cut2)) s.add(dg(v), v.weight2(), 1);
  return s;
}

CharacterSeries char_product_form(int qmax_half) {
  CharacterSeries s = CharacterSeries::one(qmax_half);
  for (int i = 1; 4 * i - 3 <= qmax_half; ++i) {
    s = s * CharacterSeries::binomial(1, 4 * i - 1, 1, qmax_half);
    s = s * CharacterSeries::binomial(-1, 4 * i - 3, 1, qmax_half);
  }
  return s;
}

namespace {

/// 1 / prod_{i>=1} (1 - q^(step i)) expanded as a product of geometric series.
CharacterSeries euler_inverse(int step_half, int qmax_half) {
  CharacterSeries s = CharacterSeries::one(qmax_half);
  for (int i = 1; step_half * i <= qmax_half; ++i) {
    CharacterSeries geo(qmax_half);
    for (int t = 0; step_half * i * t <= qmax_half; ++t) geo.add(0, step_half * i * t, 1);
    s = s * geo;
  }
  return s;
}

/// prod_{i>=1} (1 - q^(step i)).
CharacterSeries euler_product(int step_half, int qmax_half) {
  CharacterSeries s = CharacterSeries::one(qmax_half);
  for (int i = 1; step_half * i <= qmax_half; ++i) s = s * CharacterSeries::binomial(0, step_half * i, -1, qmax_half);
  return s;
}

}  // namespace

CharacterSeries char_sum_form(int qmax_half) {
  CharacterSeries theta(qmax_half);
  for (int n = 0; n * (2 * n + 1) <= qmax_half; ++n) theta.add(n, n * (2 * n + 1), 1);
  for (int n = -1; n * (2 * n + 1) <= qmax_half; --n) theta.add(n, n * (2 * n + 1), 1);
  return euler_inverse(4, qmax_half) * theta;
}

std::pair<CharacterSeries, CharacterSeries> jacobi_sides(JacobiKind which, int qmax) {
  const int bound = 2 * qmax;
  if (which == JacobiKind::DA) {
    CharacterSeries lhs = euler_product(4, bound) * char_product_form(bound);
    CharacterSeries rhs(bound);
    for (int m = 0; m * (2 * m + 1) <= bound; ++m) rhs.add(m, m * (2 * m + 1), 1);
    for (int m = -1; m * (2 * m + 1) <= bound; --m) rhs.add(m, m * (2 * m + 1), 1);
    return {lhs, rhs};
  }
  // prod (1 - q^i)(1 - z q^(i-1))(1 - z^-1 q^i) = sum (-1)^m z^m q^(m(m-1)/2), in qhalf units.
  CharacterSeries lhs = euler_product(2, bound);
  for (int i = 1; 2 * i - 2 <= bound; ++i) {
    lhs = lhs * CharacterSeries::binomial(1, 2 * i - 2, -1, bound);
    lhs = lhs * CharacterSeries::binomial(-1, 2 * i, -1, bound);
  }
  CharacterSeries rhs(bound);
  for (int m = 0; m * (m - 1) <= bound; ++m) rhs.add(m, m * (m - 1), m % 2 == 0 ? 1 : -1);
  for (int m = -1; m * (m - 1) <= bound; --m) rhs.add(m, m * (m - 1), m % 2 == 0 ? 1 : -1);
  return {lhs, rhs};
}

VerificationReport jacobi_check(JacobiKind which, int qmax) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.check = which == JacobiKind::DA ? "jacobi:DA" : "jacobi:A";
  r.params = {{"qmax", std::to_string(qmax)}};
  const auto [lhs, rhs] = jacobi_sides(which, qmax);
  r.cases_run = static_cast<std::int64_t>(lhs.coefficients().size() + rhs.coefficients().size());
  if (auto d = CharacterSeries::first_difference(lhs, rhs)) {
    r.failures.push_back({"z^" + std::to_string(d->first) + " q^(" + std::to_string(d->second) + "/2)",
                          lhs.coefficient(d->first, d->second).get_str(), rhs.coefficient(d->first, d->second).get_str()});
  }
  r.elapsed_ms = elapsed_ms_since(start);
  return r;
}

VerificationReport character_agreement_check(int qmax_half) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.check = "character:trace=product=sum";
  r.params = {{"qmax_half", std::to_string(qmax_half)}};
  const auto trace = char_trace(Rational(qmax_half, 2));
  const auto product = char_product_form(qmax_half);
  const auto sum = char_sum_form(qmax_half);
  r.cases_run = static_cast<std::int64_t>(trace.coefficients().size());
  auto compare = [&](const CharacterSeries& a, const CharacterSeries& b, const std::string& what) {
    if (auto d = CharacterSeries::first_difference(a, b)) {
      r.failures.push_back({what + " at z^" + std::to_string(d->first) + " q^(" + std::to_string(d->second) + "/2)",
                            a.coefficient(d->first, d->second).get_str(), b.coefficient(d->first, d->second).get_str()});
    }
  };
  compare(trace, product, "trace vs product");
  compare(product, sum, "product vs sum");
  r.elapsed_ms = elapsed_ms_since(start);
  return r;
}

VerificationReport virasoro_weight_check(int nmax, int kmax) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.check = "character:l0_eigenvalues";
  r.params = {{"nmax", std::to_string(nmax)}, {"kmax", std::to_string(kmax)}};
  const auto l0 = l_half_mode(0);
  for (int n = -nmax; n <= nmax; ++n) {
    for (int k = 0; k <= kmax; ++k) {
      const Rational eigen = Rational(2 * k) + Rational(vacuum_like_weight2(n), 2);
      for (const auto& lambda : partitions_of(k)) {
        ++r.cases_run;
        const FockState s = heisenberg_word(n, lambda);
        const FockState lhs = l0.apply(s);
        const FockState rhs = eigen * s;
        if (lhs != rhs || s.is_zero()) {
          r.failures.push_back({"h word " + lambda.to_string() + " on v(" + std::to_string(n) + ")", render(lhs), render(rhs)});
        }
      }
    }
  }
  r.elapsed_ms = elapsed_ms_since(start);
  return r;
}

}  // namespace fockda
