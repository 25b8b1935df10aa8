#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "grm/error.hpp"
#include "grm/rational.hpp"

namespace grm {

using ElementId = std::string;

enum class CompareResult { LessThan, Equal, GreaterThan, Incomparable };

std::string_view to_string(CompareResult r);

inline bool is_leq(CompareResult r) {
  return r == CompareResult::LessThan || r == CompareResult::Equal;
}

inline CompareResult flip(CompareResult r) {
  switch (r) {
    case CompareResult::LessThan: return CompareResult::GreaterThan;
    case CompareResult::GreaterThan: return CompareResult::LessThan;
    default: return r;
  }
}

/// A finite partially ordered set.
///
/// Elements keep their input order; that order is the tie-break everywhere a
/// deterministic choice among elements is needed. The order relation is held
/// as its reflexive-transitive closure, and the cover relation is derived
/// from it.
class Poset {
 public:
  Poset() = default;

  /// Builds the poset generated by `pairs` (each pair (x, y) means x <= y).
  /// Throws DuplicateElement, UnknownElement or CycleDetected.
  static Poset from_relations(std::vector<ElementId> elements,
                              std::span<const std::pair<ElementId, ElementId>> pairs);

  static Poset from_index_relations(std::vector<ElementId> elements,
                                    std::span<const std::pair<std::size_t, std::size_t>> pairs);

  std::size_t size() const { return ids_.size(); }
  const std::vector<ElementId>& elements() const { return ids_; }
  const ElementId& id(std::size_t i) const { return ids_.at(i); }

  std::optional<std::size_t> find(std::string_view id) const;
  std::size_t index_of(std::string_view id) const;  // throws UnknownElement

  bool leq(std::size_t x, std::size_t y) const { return leq_[x * ids_.size() + y] != 0; }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }
  bool comparable(std::size_t x, std::size_t y) const { return leq(x, y) || leq(y, x); }
  bool is_minimal(std::size_t x) const { return below_[x].empty(); }

  /// Cover pairs (lower, upper), sorted by (lower, upper) index.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
  /// Strict predecessors of x in ascending index order.
  const std::vector<std::size_t>& strictly_below(std::size_t x) const { return below_[x]; }
  /// Elements in a linear extension; among available elements the lowest
  /// input index goes first.
  const std::vector<std::size_t>& topological_order() const { return topo_; }

  /// All (x, y) with x < y.
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.ids_ == b.ids_ && a.leq_ == b.leq_;
  }

 private:
  std::vector<ElementId> ids_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::vector<std::vector<std::size_t>> below_;
  std::vector<std::size_t> topo_;
};

/// A finite chain of a poset, stored as element indices ascending under the
/// ambient order. Construction validates pairwise comparability.
class Chain {
 public:
  Chain() = default;

  static Chain from_indices(const Poset& p, std::vector<std::size_t> members);
  static Chain from_ids(const Poset& p, std::span<const ElementId> ids);

  const std::vector<std::size_t>& members() const { return members_; }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  std::size_t min() const { return members_.front(); }
  std::size_t max() const { return members_.back(); }
  bool contains(std::size_t x) const;

  std::vector<ElementId> ids(const Poset& p) const;

  friend bool operator==(const Chain& a, const Chain& b) { return a.members_ == b.members_; }

 private:
  explicit Chain(std::vector<std::size_t> sorted) : members_(std::move(sorted)) {}
  friend Chain strip_max(const Chain& x);

  std::vector<std::size_t> members_;
};

/// X minus its maximum; the empty chain maps to itself.
Chain strip_max(const Chain& x);

/// Ch(S, x): every chain whose maximum is x.
std::vector<Chain> enumerate_chains_ending_at(const Poset& p, std::size_t x);
std::vector<Chain> enumerate_chains_ending_at(const Poset& p, std::string_view x);

/// Every chain of p, including the empty one.
std::vector<Chain> enumerate_all_chains(const Poset& p);

/// X <= Y iff min(Y \ X) <= min(X \ Y), where min of the empty set is a top
/// sentinel above every element.
CompareResult lex_compare(const Chain& x, const Chain& y, const Poset& p);

/// Sum of 2^-x over the members. Throws NonPositiveMember.
Rational dyadic_encode(std::span<const std::int64_t> members);

/// Hasse diagram in Graphviz DOT, one edge per cover pair (lower -> upper).
std::string hasse_dot(const Poset& p, std::string_view graph_name = "poset");

/// Recursively nested value: an exact rational, or a finite strictly
/// ascending chain of values that all share one depth.
class ChainValue {
 public:
  ChainValue() : ChainValue(Rational(0)) {}

  static ChainValue scalar(Rational r) { return ChainValue(std::move(r)); }
  static ChainValue scalar(std::int64_t n) { return ChainValue(Rational(n)); }
  /// Sorts the entries; throws DepthMismatch on mixed depths and NotAChain on
  /// repeated entries.
  static ChainValue chain(std::vector<ChainValue> entries);
  static ChainValue empty_chain(int depth);

  int depth() const { return depth_; }
  bool is_scalar() const { return std::holds_alternative<Rational>(data_); }
  const Rational& as_scalar() const { return std::get<Rational>(data_); }
  const std::vector<ChainValue>& entries() const { return std::get<std::vector<ChainValue>>(data_); }

  /// This chain with `top` added as its new maximum. `top` must exceed every
  /// entry; throws NotAChain otherwise.
  ChainValue with_appended(ChainValue top) const;

  /// "3/2" for scalars, "{1,{2,3}}"-style braces for chains.
  std::string to_string() const;

 private:
  explicit ChainValue(Rational r) : data_(std::move(r)), depth_(0) {}
  ChainValue(std::vector<ChainValue> entries, int depth) : data_(std::move(entries)), depth_(depth) {}

  std::variant<Rational, std::vector<ChainValue>> data_;
  int depth_;
};

/// Lexicographic comparison, applied recursively. Total on values of equal
/// depth. Throws DepthMismatch.
CompareResult compare_values(const ChainValue& v, const ChainValue& w);

inline bool operator==(const ChainValue& v, const ChainValue& w) {
  return v.depth() == w.depth() && compare_values(v, w) == CompareResult::Equal;
}

/// Strict-weak-order adaptor for std::sort and ordered containers.
struct ValueLess {
  bool operator()(const ChainValue& a, const ChainValue& b) const {
    return compare_values(a, b) == CompareResult::LessThan;
  }
};

}  // namespace grm
