#include "grm/length_functions.hpp"

#include <algorithm>

namespace grm {

std::size_t AxiomReport::count(std::string_view axiom) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(), [&](const Violation& v) { return v.axiom == axiom; }));
}

std::string AxiomReport::to_string() const {
  if (violations.empty()) return "no violations";
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    s += v.axiom + "(";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) s += ",";
      s += v.witness[i];
    }
    s += ")";
  }
  return s;
}

ValidationReport validate_length_function(const Poset& p,
                                          const std::function<CompareResult(std::size_t, std::size_t)>& compare_at) {
  ValidationReport report;
  const std::size_t n = p.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (p.less(x, y) && compare_at(x, y) != CompareResult::LessThan)
        report.violations.push_back({"L1", {p.id(x), p.id(y)}});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (compare_at(x, y) == CompareResult::Incomparable)
        report.violations.push_back({"L2", {p.id(x), p.id(y)}});
  return report;
}

ValidationReport validate_length_function(const Poset& p, const std::vector<ChainValue>& values) {
  if (values.size() != p.size())
    throw Error(ErrorCode::ValidationFailed, "expected " + std::to_string(p.size()) + " values, got " +
                                                 std::to_string(values.size()));
  for (const auto& v : values)
    if (v.depth() != values.front().depth())
      throw Error(ErrorCode::DepthMismatch, "values of a length function must share one depth");
  return validate_length_function(
      p, [&](std::size_t x, std::size_t y) { return compare_values(values[x], values[y]); });
}

LengthFunction LengthFunction::make(Poset poset, std::vector<ChainValue> values) {
  auto report = validate_length_function(poset, values);
  if (!report.ok()) throw ValidationError(std::move(report));
  LengthFunction f;
  f.depth_ = values.empty() ? 0 : values.front().depth();
  f.poset_ = std::move(poset);
  f.values_ = std::move(values);
  return f;
}

std::size_t lambda0(const LengthFunction& f, std::size_t x) {
  if (x >= f.size()) throw Error(ErrorCode::UnknownElement, "element index out of range");
  std::vector<ChainValue> below{f.value(x)};
  for (auto y : f.poset().strictly_below(x)) below.push_back(f.value(y));
  std::sort(below.begin(), below.end(), ValueLess{});
  auto last = std::unique(below.begin(), below.end(),
                          [](const ChainValue& a, const ChainValue& b) { return compare_values(a, b) == CompareResult::Equal; });
  return static_cast<std::size_t>(last - below.begin());
}

std::size_t lambda0(const LengthFunction& f, std::string_view x) {
  return lambda0(f, f.poset().index_of(x));
}

std::optional<std::pair<std::size_t, std::size_t>> equivalence_witness(const LengthFunction& f,
                                                                       const LengthFunction& g) {
  if (!(f.poset() == g.poset())) throw Error(ErrorCode::PosetMismatch, "length functions live on different posets");
  const std::size_t n = f.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (is_leq(compare_values(f.value(x), f.value(y))) != is_leq(compare_values(g.value(x), g.value(y))))
        return std::make_pair(x, y);
  return std::nullopt;
}

bool is_rank_function(const LengthFunction& f) {
  for (const auto& v : f.values())
    if (!v.is_scalar() || !is_integer(v.as_scalar()))
      throw Error(ErrorCode::NonIntegerValues, "rank functions take integer scalar values");
  const Poset& p = f.poset();
  std::optional<Rational> minimal_value;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (!p.is_minimal(x)) continue;
    if (minimal_value && *minimal_value != f.value(x).as_scalar()) return false;
    minimal_value = f.value(x).as_scalar();
  }
  for (auto [lo, hi] : p.covers())
    if (f.value(lo).as_scalar() != f.value(hi).as_scalar() - 1) return false;
  return true;
}

LengthFunction height_function(const Poset& p) {
  std::vector<ChainValue> values;
  values.reserve(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    std::size_t best = 0;
    for (const auto& c : enumerate_chains_ending_at(p, x)) best = std::max(best, c.size());
    values.push_back(ChainValue::scalar(static_cast<std::int64_t>(best)));
  }
  return LengthFunction::make(p, std::move(values));
}

}  // namespace grm
