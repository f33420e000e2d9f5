#pragma once

#include <vector>

#include "fockda/charged.hpp"
#include "fockda/fock.hpp"
#include "word_oracle.hpp"

namespace testutil {

using namespace fockda;

/// Creator word of a neutral monomial, leftmost factor first.
inline std::vector<int> word_of(const FermionMonomial& v) {
  std::vector<int> w;
  auto idx = v.indices();
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) w.push_back(-2 * *it - 1);
  return w;
}

inline FockState state_of(const oracle::WordSum<int>& sum) {
  FockState s;
  for (const auto& [word, c] : sum) {
    std::vector<int> idx;
    for (int x : word) idx.push_back((-x - 1) / 2);
    s.add(FermionMonomial::from_indices(idx), c);
  }
  return s;
}

/// The oracle's value of (word) v.
inline FockState oracle_apply(const std::vector<int>& ops, const FermionMonomial& v) {
  auto w = ops;
  const auto tail = word_of(v);
  w.insert(w.end(), tail.begin(), tail.end());
  return state_of(oracle::evaluate(oracle::neutral(), w));
}

inline std::vector<oracle::ChargedMode> word_of(const ChargedMonomial& v) {
  std::vector<oracle::ChargedMode> w;
  for (int n : v.plus_indices()) w.push_back({1, n});
  for (int n : v.minus_indices()) w.push_back({-1, n});
  return w;
}

inline ChargedState state_of(const oracle::WordSum<oracle::ChargedMode>& sum) {
  ChargedState s;
  for (const auto& [word, c] : sum) {
    std::vector<int> plus, minus;
    for (auto [sp, n] : word) (sp > 0 ? plus : minus).push_back(n);
    s.add(ChargedMonomial::from_indices(plus, minus), c);
  }
  return s;
}

inline ChargedState oracle_apply(const std::vector<oracle::ChargedMode>& ops, const ChargedMonomial& v) {
  auto w = ops;
  const auto tail = word_of(v);
  w.insert(w.end(), tail.begin(), tail.end());
  return state_of(oracle::evaluate(oracle::charged(), w));
}

inline FermionMonomial mono(std::vector<int> idx) { return FermionMonomial::from_indices(idx); }

}  // namespace testutil
