#include "grm/order_core.hpp"

#include <algorithm>
#include <sstream>

namespace grm {

std::string_view to_string(CompareResult r) {
  switch (r) {
    case CompareResult::LessThan: return "LessThan";
    case CompareResult::Equal: return "Equal";
    case CompareResult::GreaterThan: return "GreaterThan";
    case CompareResult::Incomparable: return "Incomparable";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Poset

Poset Poset::from_relations(std::vector<ElementId> elements,
                            std::span<const std::pair<ElementId, ElementId>> pairs) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].empty()) throw Error(ErrorCode::UnknownElement, "empty element id");
    if (!index.emplace(elements[i], i).second)
      throw Error(ErrorCode::DuplicateElement, "element '" + elements[i] + "' listed twice");
  }
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  idx.reserve(pairs.size());
  for (const auto& [lo, hi] : pairs) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end()) throw Error(ErrorCode::UnknownElement, "relation mentions '" + lo + "'");
    if (b == index.end()) throw Error(ErrorCode::UnknownElement, "relation mentions '" + hi + "'");
    idx.emplace_back(a->second, b->second);
  }
  return from_index_relations(std::move(elements), idx);
}

Poset Poset::from_index_relations(std::vector<ElementId> elements,
                                  std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  Poset p;
  const std::size_t n = elements.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (elements[i].empty()) throw Error(ErrorCode::UnknownElement, "empty element id");
    if (!p.index_.emplace(elements[i], i).second)
      throw Error(ErrorCode::DuplicateElement, "element '" + elements[i] + "' listed twice");
  }
  p.ids_ = std::move(elements);
  p.leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) p.leq_[i * n + i] = 1;
  for (auto [lo, hi] : pairs) {
    if (lo >= n || hi >= n) throw Error(ErrorCode::UnknownElement, "relation index out of range");
    p.leq_[lo * n + hi] = 1;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (p.leq_[k * n + j]) p.leq_[i * n + j] = 1;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.leq_[i * n + j] && p.leq_[j * n + i])
        throw Error(ErrorCode::CycleDetected,
                    "'" + p.ids_[i] + "' and '" + p.ids_[j] + "' lie on a cycle");

  p.below_.assign(n, {});
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      if (p.less(x, y)) p.below_[y].push_back(x);

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!p.less(x, y)) continue;
      bool cover = true;
      for (std::size_t z = 0; z < n && cover; ++z)
        if (p.less(x, z) && p.less(z, y)) cover = false;
      if (cover) p.covers_.emplace_back(x, y);
    }

  std::vector<bool> placed(n, false);
  p.topo_.reserve(n);
  while (p.topo_.size() < n) {
    for (std::size_t x = 0; x < n; ++x) {
      if (placed[x]) continue;
      if (std::all_of(p.below_[x].begin(), p.below_[x].end(), [&](std::size_t y) { return placed[y]; })) {
        placed[x] = true;
        p.topo_.push_back(x);
        break;
      }
    }
  }
  return p;
}

std::optional<std::size_t> Poset::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Poset::index_of(std::string_view id) const {
  auto i = find(id);
  if (!i) throw Error(ErrorCode::UnknownElement, "no element '" + std::string(id) + "'");
  return *i;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::strict_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = 0; y < size(); ++y)
      if (less(x, y)) out.emplace_back(x, y);
  return out;
}

// ---------------------------------------------------------------------------
// Chains

Chain Chain::from_indices(const Poset& p, std::vector<std::size_t> members) {
  for (auto m : members)
    if (m >= p.size()) throw Error(ErrorCode::UnknownElement, "chain member index out of range");
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (members[i] == members[j])
        throw Error(ErrorCode::NotAChain, "repeated member '" + p.id(members[i]) + "'");
      if (!p.comparable(members[i], members[j]))
        throw Error(ErrorCode::NotAChain,
                    "'" + p.id(members[i]) + "' and '" + p.id(members[j]) + "' are incomparable");
    }
  std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) { return p.less(a, b); });
  return Chain(std::move(members));
}

Chain Chain::from_ids(const Poset& p, std::span<const ElementId> ids) {
  std::vector<std::size_t> members;
  members.reserve(ids.size());
  for (const auto& id : ids) members.push_back(p.index_of(id));
  return from_indices(p, std::move(members));
}

bool Chain::contains(std::size_t x) const {
  return std::find(members_.begin(), members_.end(), x) != members_.end();
}

std::vector<ElementId> Chain::ids(const Poset& p) const {
  std::vector<ElementId> out;
  out.reserve(members_.size());
  for (auto m : members_) out.push_back(p.id(m));
  return out;
}

Chain strip_max(const Chain& x) {
  if (x.empty()) return x;
  return Chain(std::vector<std::size_t>(x.members_.begin(), x.members_.end() - 1));
}

namespace {

void chains_ending_at(const Poset& p, std::size_t x, std::vector<std::size_t>& suffix,
                      std::vector<Chain>& out) {
  suffix.push_back(x);
  out.push_back(Chain::from_indices(p, std::vector<std::size_t>(suffix.rbegin(), suffix.rend())));
  for (auto y : p.strictly_below(x)) chains_ending_at(p, y, suffix, out);
  suffix.pop_back();
}

bool is_valid_chain(const Chain& c, const Poset& p) {
  const auto& m = c.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] >= p.size()) return false;
    if (i > 0 && !p.less(m[i - 1], m[i])) return false;
  }
  return true;
}

}  // namespace

std::vector<Chain> enumerate_chains_ending_at(const Poset& p, std::size_t x) {
  if (x >= p.size()) throw Error(ErrorCode::UnknownElement, "element index out of range");
  std::vector<Chain> out;
  std::vector<std::size_t> suffix;
  chains_ending_at(p, x, suffix, out);
  return out;
}

std::vector<Chain> enumerate_chains_ending_at(const Poset& p, std::string_view x) {
  return enumerate_chains_ending_at(p, p.index_of(x));
}

std::vector<Chain> enumerate_all_chains(const Poset& p) {
  std::vector<Chain> out{Chain{}};
  for (std::size_t x = 0; x < p.size(); ++x) {
    auto ending = enumerate_chains_ending_at(p, x);
    out.insert(out.end(), ending.begin(), ending.end());
  }
  return out;
}

CompareResult lex_compare(const Chain& x, const Chain& y, const Poset& p) {
  if (!is_valid_chain(x, p) || !is_valid_chain(y, p))
    throw Error(ErrorCode::NotAChain, "argument is not a chain of this poset");
  // Members of each difference stay in ascending order, so the front is the min.
  std::vector<std::size_t> y_minus_x, x_minus_y;
  for (auto m : y.members())
    if (!x.contains(m)) y_minus_x.push_back(m);
  for (auto m : x.members())
    if (!y.contains(m)) x_minus_y.push_back(m);

  if (y_minus_x.empty() && x_minus_y.empty()) return CompareResult::Equal;
  if (y_minus_x.empty()) return CompareResult::GreaterThan;  // min(Y\X) is the top sentinel
  if (x_minus_y.empty()) return CompareResult::LessThan;
  std::size_t a = y_minus_x.front();
  std::size_t b = x_minus_y.front();
  if (p.less(a, b)) return CompareResult::LessThan;
  if (p.less(b, a)) return CompareResult::GreaterThan;
  return CompareResult::Incomparable;
}

Rational dyadic_encode(std::span<const std::int64_t> members) {
  std::vector<std::int64_t> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  Rational sum(0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] <= 0)
      throw Error(ErrorCode::NonPositiveMember, "member " + std::to_string(sorted[i]) + " is not positive");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw Error(ErrorCode::NotAChain, "repeated member " + std::to_string(sorted[i]));
    if (sorted[i] > 62)
      throw Error(ErrorCode::BudgetExceeded, "member " + std::to_string(sorted[i]) + " exceeds 62");
    sum += Rational(1, std::int64_t{1} << sorted[i]);
  }
  return sum;
}

std::string hasse_dot(const Poset& p, std::string_view graph_name) {
  std::ostringstream os;
  os << "digraph \"" << graph_name << "\" {\n  rankdir=BT;\n";
  for (const auto& id : p.elements()) os << "  \"" << id << "\";\n";
  for (auto [lo, hi] : p.covers()) os << "  \"" << p.id(lo) << "\" -> \"" << p.id(hi) << "\";\n";
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// ChainValue

ChainValue ChainValue::chain(std::vector<ChainValue> entries) {
  if (entries.empty()) return empty_chain(1);
  const int d = entries.front().depth();
  for (const auto& e : entries)
    if (e.depth() != d) throw Error(ErrorCode::DepthMismatch, "chain entries of mixed depth");
  std::sort(entries.begin(), entries.end(), ValueLess{});
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (compare_values(entries[i - 1], entries[i]) == CompareResult::Equal)
      throw Error(ErrorCode::NotAChain, "repeated entry " + entries[i].to_string());
  return ChainValue(std::move(entries), d + 1);
}

ChainValue ChainValue::empty_chain(int depth) {
  if (depth < 1) throw Error(ErrorCode::DepthMismatch, "an empty chain has depth >= 1");
  return ChainValue(std::vector<ChainValue>{}, depth);
}

ChainValue ChainValue::with_appended(ChainValue top) const {
  if (is_scalar()) throw Error(ErrorCode::DepthMismatch, "cannot append to a scalar");
  if (top.depth() + 1 != depth_) throw Error(ErrorCode::DepthMismatch, "appended entry has wrong depth");
  const auto& es = entries();
  if (!es.empty() && compare_values(es.back(), top) != CompareResult::LessThan)
    throw Error(ErrorCode::NotAChain, "appended entry " + top.to_string() + " is not a new maximum");
  std::vector<ChainValue> next = es;
  next.push_back(std::move(top));
  return ChainValue(std::move(next), depth_);
}

std::string ChainValue::to_string() const {
  if (is_scalar()) return format_rational(as_scalar());
  std::string s = "{";
  const auto& es = entries();
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i) s += ",";
    s += es[i].to_string();
  }
  return s + "}";
}

CompareResult compare_values(const ChainValue& v, const ChainValue& w) {
  if (v.depth() != w.depth())
    throw Error(ErrorCode::DepthMismatch,
                "depth " + std::to_string(v.depth()) + " vs " + std::to_string(w.depth()));
  if (v.is_scalar()) {
    if (v.as_scalar() < w.as_scalar()) return CompareResult::LessThan;
    if (w.as_scalar() < v.as_scalar()) return CompareResult::GreaterThan;
    return CompareResult::Equal;
  }
  // Entries are totally ordered, so a merge walk finds the least element of
  // the symmetric difference. The chain lacking it is the larger one. If one
  // side runs out first it is a subset of the other, hence the smaller.
  const auto& a = v.entries();
  const auto& b = w.entries();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    switch (compare_values(a[i], b[j])) {
      case CompareResult::Equal: ++i; ++j; break;
      case CompareResult::LessThan: return CompareResult::GreaterThan;  // a[i] in X\Y is the least difference
      case CompareResult::GreaterThan: return CompareResult::LessThan;
      case CompareResult::Incomparable: return CompareResult::Incomparable;
    }
  }
  if (i == a.size() && j == b.size()) return CompareResult::Equal;
  return i == a.size() ? CompareResult::LessThan : CompareResult::GreaterThan;
}

}  // namespace grm
