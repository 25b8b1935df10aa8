#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "grm/gr_measure.hpp"
#include "grm/json_io.hpp"

namespace grm::testing {

inline std::string fixture(const std::string& name) { return std::string(GRM_FIXTURES) + "/" + name; }

inline Poset iyama_poset() {
  std::vector<std::pair<ElementId, ElementId>> rel{{"d", "a"}, {"e", "a"}, {"e", "b"}, {"f", "b"}, {"f", "c"}};
  return Poset::from_relations({"d", "e", "f", "a", "b", "c"}, rel);
}

/// Integer labelling given in poset element order.
inline LengthFunction int_labels(const Poset& p, const std::vector<std::pair<std::string, int>>& labels) {
  std::vector<ChainValue> values(p.size());
  for (const auto& [id, v] : labels) values[p.index_of(id)] = ChainValue::scalar(v);
  return LengthFunction::make(p, values);
}

inline LengthFunction iyama_lambda0() {
  return int_labels(iyama_poset(), {{"a", 4}, {"b", 5}, {"c", 6}, {"d", 3}, {"e", 2}, {"f", 1}});
}

inline Poset total_order(int n) {
  std::vector<ElementId> ids;
  std::vector<std::pair<ElementId, ElementId>> rel;
  for (int i = 1; i <= n; ++i) {
    ids.push_back(std::to_string(i));
    if (i > 1) rel.emplace_back(std::to_string(i - 1), std::to_string(i));
  }
  return Poset::from_relations(ids, rel);
}

/// Random poset on n elements: a random DAG on a shuffled index order.
inline Poset random_poset(std::mt19937_64& rng, int n, double density) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution edge(density);
  std::vector<ElementId> ids;
  for (int i = 0; i < n; ++i) ids.push_back("x" + std::to_string(i));
  std::vector<std::pair<ElementId, ElementId>> rel;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng)) rel.emplace_back(ids[perm[i]], ids[perm[j]]);
  return Poset::from_relations(ids, rel);
}

/// Random rational values strictly increasing along the order. Small
/// numerators make ties between incomparable elements common.
inline LengthFunction random_length_function(std::mt19937_64& rng, const Poset& p) {
  std::uniform_int_distribution<int> num(1, 4), den(1, 3);
  std::vector<Rational> v(p.size());
  for (auto x : p.topological_order()) {
    Rational base(0);
    for (auto y : p.strictly_below(x)) base = std::max(base, v[y]);
    v[x] = base + Rational(num(rng), den(rng));
  }
  std::vector<ChainValue> values;
  for (const auto& r : v) values.push_back(ChainValue::scalar(r));
  return LengthFunction::make(p, values);
}

/// Brute-force lexicographic comparison of two chains, straight from the
/// definition: X <= Y iff min(Y - X) <= min(X - Y), min of the empty set on top.
inline CompareResult lex_oracle(const std::vector<std::size_t>& x, const std::vector<std::size_t>& y, const Poset& p) {
  auto minus = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    for (auto e : a)
      if (std::find(b.begin(), b.end(), e) == b.end()) out.push_back(e);
    return out;
  };
  auto minimum = [&](const std::vector<std::size_t>& s) {
    std::size_t m = s.front();
    for (auto e : s)
      if (p.leq(e, m)) m = e;
    return m;
  };
  auto leq = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    auto ba = minus(b, a), ab = minus(a, b);
    if (ba.empty()) return ab.empty();
    if (ab.empty()) return true;
    return p.leq(minimum(ba), minimum(ab));
  };
  bool xy = leq(x, y), yx = leq(y, x);
  if (xy && yx) return CompareResult::Equal;
  if (xy) return CompareResult::LessThan;
  if (yx) return CompareResult::GreaterThan;
  return CompareResult::Incomparable;
}

/// Every subset of p's elements that is a chain, by bitmask.
inline std::vector<std::vector<std::size_t>> brute_chains(const Poset& p) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = p.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(i);
    bool chain = true;
    for (auto a : s)
      for (auto b : s)
        if (!p.comparable(a, b)) chain = false;
    if (chain) out.push_back(s);
  }
  return out;
}

}  // namespace grm::testing
