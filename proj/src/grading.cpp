#include "fockda/grading.hpp"

#include <algorithm>
#include <stdexcept>

namespace fockda {

int dg(const FermionMonomial& v) {
  int out = 0;
  for (int n : v.indices()) out += (n % 2 != 0) ? 1 : -1;
  return out;
}

FermionMonomial vacuum_like(int n) {
  std::vector<int> idx;
  if (n > 0) {
    for (int i = 0; i < n; ++i) idx.push_back(2 * i + 1);
  } else {
    for (int i = 0; i < -n; ++i) idx.push_back(2 * i);
  }
  return FermionMonomial::from_indices(idx);
}

Rational weight(const FermionMonomial& v) { return v.weight(); }

int vacuum_like_weight2(int n) { return 2 * n * n + n; }

int deg_h(const FermionMonomial& v) {
  const int diff2 = v.weight2() - vacuum_like_weight2(dg(v));
  if (diff2 < 0 || diff2 % 4 != 0) {
    throw std::logic_error("deg_h of " + v.to_string() + " is not a non-negative integer");
  }
  return diff2 / 4;
}

GradeTriple grades(const FermionMonomial& v) { return {v.length(), dg(v), deg_h(v)}; }

std::vector<FermionMonomial> sector_basis(int n, int k) {
  if (k < 0) return {};
  const int target2 = 4 * k + vacuum_like_weight2(n);
  std::vector<FermionMonomial> out;
  for (const auto& v : enumerate_basis_doubled(target2)) {
    if (v.weight2() == target2 && dg(v) == n) out.push_back(v);
  }
  return out;
}

int Partition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

namespace {

void partitions_rec(int rest, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (rest == 0) {
    out.push_back({cur});
    return;
  }
  for (int p = std::min(rest, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(rest - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int k) {
  std::vector<Partition> out;
  if (k < 0) return out;
  std::vector<int> cur;
  partitions_rec(k, k, cur, out);
  return out;
}

std::int64_t partition_count(int k) {
  if (k < 0) return 0;
  // Euler's recurrence via pentagonal numbers.
  std::vector<std::int64_t> p(static_cast<std::size_t>(k) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= k; ++m) {
    std::int64_t acc = 0;
    for (int j = 1;; ++j) {
      const int g1 = j * (3 * j - 1) / 2;
      const int g2 = j * (3 * j + 1) / 2;
      if (g1 > m) break;
      const std::int64_t sgn = (j % 2 != 0) ? 1 : -1;
      acc += sgn * p[m - g1];
      if (g2 <= m) acc += sgn * p[m - g2];
    }
    p[m] = acc;
  }
  return p[k];
}

FermionMonomial lemma_vector(const Partition& lambda) {
  const auto& parts = lambda.parts;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1 || (i > 0 && parts[i] > parts[i - 1])) {
      throw std::invalid_argument("not a partition: " + lambda.to_string());
    }
  }
  auto conjugate_part = [&](int i) {  // lambda'_i, 1-based
    int c = 0;
    for (int p : parts) c += (p >= i) ? 1 : 0;
    return c;
  };
  std::vector<int> idx;
  for (int i = 1; i <= static_cast<int>(parts.size()) && parts[i - 1] >= i; ++i) {
    idx.push_back(2 * (parts[i - 1] - i) + 1);
    idx.push_back(2 * (conjugate_part(i) - i));
  }
  // Arms are odd and legs even, so from_indices only rejects a genuine collision.
  return FermionMonomial::from_indices(idx);
}

}  // namespace fockda
