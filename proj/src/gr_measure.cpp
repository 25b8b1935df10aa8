#include "grm/gr_measure.hpp"

#include <optional>

namespace grm {

namespace {

ChainValue values_along(const LengthFunction& base, const std::vector<std::size_t>& members) {
  // L1 makes base values strictly ascending along a chain.
  ChainValue out = ChainValue::empty_chain(base.depth() + 1);
  for (auto m : members) out = out.with_appended(base.value(m));
  return out;
}

// (M1)-(M3) share their shape with (C1)-(C3); only the tags differ.
void check_refinement_axioms(const LengthFunction& base, const std::vector<ChainValue>& mu,
                             const char* tag1, const char* tag2, const char* tag3, AxiomReport& report) {
  const Poset& p = base.poset();
  const std::size_t n = p.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (p.leq(x, y) && !is_leq(compare_values(mu[x], mu[y])))
        report.violations.push_back({tag1, {p.id(x), p.id(y)}});

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (compare_values(mu[x], mu[y]) == CompareResult::Equal &&
          compare_values(base.value(x), base.value(y)) != CompareResult::Equal)
        report.violations.push_back({tag2, {p.id(x), p.id(y)}});

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      auto base_cmp = compare_values(base.value(x), base.value(y));
      if (base_cmp != CompareResult::GreaterThan && base_cmp != CompareResult::Equal) continue;
      bool below_all_less = true;
      for (auto xp : p.strictly_below(x))
        if (compare_values(mu[xp], mu[y]) != CompareResult::LessThan) {
          below_all_less = false;
          break;
        }
      if (below_all_less && !is_leq(compare_values(mu[x], mu[y])))
        report.violations.push_back({tag3, {p.id(x), p.id(y)}});
    }
}

void require_uniform(const LengthFunction& base, const std::vector<ChainValue>& mu) {
  if (mu.size() != base.size())
    throw Error(ErrorCode::ValidationFailed, "candidate map must assign a value to every element");
  for (const auto& v : mu)
    if (v.depth() != mu.front().depth()) throw Error(ErrorCode::DepthMismatch, "candidate values of mixed depth");
}

}  // namespace

LengthFunction Measure::as_length_function() const { return LengthFunction::make(poset(), values_); }

Measure Measure::from_values(LengthFunction base, std::vector<ChainValue> values) {
  require_uniform(base, values);
  return Measure(std::move(base), std::move(values));
}

ChainValue measure_oracle(const LengthFunction& base, std::size_t x) {
  std::optional<ChainValue> best;
  for (const auto& chain : enumerate_chains_ending_at(base.poset(), x)) {
    ChainValue v = values_along(base, chain.members());
    if (!best || compare_values(*best, v) == CompareResult::LessThan) best = std::move(v);
  }
  return *best;  // {x} is always a chain ending at x
}

ChainValue measure_oracle(const LengthFunction& base, std::string_view x) {
  return measure_oracle(base, base.poset().index_of(x));
}

Measure measure_dp(const LengthFunction& base) {
  const Poset& p = base.poset();
  std::vector<std::optional<ChainValue>> values(p.size());
  for (auto x : p.topological_order()) {
    const ChainValue* best = nullptr;
    for (auto y : p.strictly_below(x))
      if (!best || compare_values(*best, *values[y]) == CompareResult::LessThan) best = &*values[y];
    ChainValue below = best ? *best : ChainValue::empty_chain(base.depth() + 1);
    values[x] = below.with_appended(base.value(x));
  }
  std::vector<ChainValue> out;
  out.reserve(values.size());
  for (auto& v : values) out.push_back(std::move(*v));
  return Measure(base, std::move(out));
}

LengthFunction iterate_measure(const LengthFunction& base, int n, int cap) {
  if (n < 0) throw Error(ErrorCode::IterationBudgetExceeded, "iteration count must be non-negative");
  if (n > cap)
    throw Error(ErrorCode::IterationBudgetExceeded,
                "n=" + std::to_string(n) + " exceeds the cap of " + std::to_string(cap));
  LengthFunction f = base;
  for (int i = 0; i < n; ++i) f = measure_dp(f).as_length_function();
  return f;
}

GRFiltration gr_filtration(const Measure& m, std::size_t x) {
  const Poset& p = m.poset();
  if (x >= p.size()) throw Error(ErrorCode::UnknownElement, "element index out of range");
  std::vector<std::size_t> down{x};
  std::size_t cur = x;
  while (!p.is_minimal(cur)) {
    std::size_t best = p.strictly_below(cur).front();
    for (auto y : p.strictly_below(cur))
      if (compare_values(m.value(best), m.value(y)) == CompareResult::LessThan) best = y;
    down.push_back(best);
    cur = best;
  }
  return GRFiltration{{down.rbegin(), down.rend()}};
}

GRFiltration gr_filtration(const Measure& m, std::string_view x) {
  return gr_filtration(m, m.poset().index_of(x));
}

bool is_gr_filtration(const Measure& m, const GRFiltration& filt) {
  const Poset& p = m.poset();
  const auto& s = filt.steps;
  if (s.empty()) return false;
  for (auto e : s)
    if (e >= p.size()) return false;
  if (!p.is_minimal(s.front())) return false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!p.less(s[i - 1], s[i])) return false;
    for (auto y : p.strictly_below(s[i]))
      if (compare_values(m.value(y), m.value(s[i - 1])) == CompareResult::GreaterThan) return false;
  }
  return true;
}

ChainValue measure_from_filtration(const LengthFunction& base, const GRFiltration& filt) {
  if (!is_gr_filtration(measure_dp(base), filt))
    throw Error(ErrorCode::InvalidFiltration, "sequence is not a Gabriel-Roiter filtration");
  return values_along(base, filt.steps);
}

AxiomReport check_M_axioms(const LengthFunction& base, const std::vector<ChainValue>& mu) {
  require_uniform(base, mu);
  AxiomReport report;
  check_refinement_axioms(base, mu, "M1", "M2", "M3", report);
  return report;
}

AxiomReport check_C_properties(const LengthFunction& base, const Measure& m) {
  if (!(base.poset() == m.poset())) throw Error(ErrorCode::PosetMismatch, "measure built over another poset");
  const Poset& p = base.poset();
  const auto& mu = m.values();
  require_uniform(base, mu);
  AxiomReport report;
  for (std::size_t x = 0; x < p.size(); ++x) {
    bool holds = mu[x].depth() == base.depth() + 1;
    if (holds) {
      const ChainValue* best = nullptr;
      for (auto y : p.strictly_below(x))
        if (!best || compare_values(*best, mu[y]) == CompareResult::LessThan) best = &mu[y];
      try {
        ChainValue below = best ? *best : ChainValue::empty_chain(base.depth() + 1);
        holds = compare_values(below.with_appended(base.value(x)), mu[x]) == CompareResult::Equal;
      } catch (const Error&) {
        holds = false;
      }
    }
    if (!holds) report.violations.push_back({"C0", {p.id(x)}});
  }
  check_refinement_axioms(base, mu, "C1", "C2", "C3", report);
  return report;
}

}  // namespace grm
