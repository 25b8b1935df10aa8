#include "grm/verify.hpp"

#include <algorithm>
#include <functional>

namespace grm {

std::string_view to_string(MainViolationKind k) {
  return k == MainViolationKind::InequalityFailed ? "InequalityFailed" : "SummandFailed";
}

Measure category_measure(const IndPoset& ip, const CategoryLengthFunction& l) { return measure_dp(ip.lengths(l)); }

void check_main_instance(const IndPoset& ip, const Measure& mu, std::size_t x, const std::vector<std::size_t>& ys,
                         MainPropertyReport& report, std::uint64_t seed) {
  if (ys.empty()) return;
  const Representation& xr = ip.cls(x).rep;
  Representation y = ip.cls(ys.front()).rep;
  for (std::size_t i = 1; i < ys.size(); ++i) y = direct_sum(y, ip.cls(ys[i]).rep);
  if (y.total_dim() > ip.max_len())
    throw Error(ErrorCode::BoundTooTight, "sum of total dimension " + std::to_string(y.total_dim()) +
                                              " exceeds the enumeration bound " + std::to_string(ip.max_len()));
  if (xr.total_dim() > y.total_dim() || !exists_mono(xr, y)) return;
  ++report.checked_triples;

  std::size_t top = ys.front();
  for (auto i : ys)
    if (compare_values(mu.value(i), mu.value(top)) == CompareResult::GreaterThan) top = i;
  auto cmp = compare_values(mu.value(x), mu.value(top));
  auto violation = [&](MainViolationKind kind) {
    MainPropertyViolation v{ip.cls(x).label, {}, kind};
    for (auto i : ys) v.ys.push_back(ip.cls(i).label);
    report.violations.push_back(std::move(v));
  };
  if (cmp == CompareResult::GreaterThan) {
    violation(MainViolationKind::InequalityFailed);
    return;
  }
  if (cmp != CompareResult::Equal) return;
  auto parts = decompose(y, seed);
  bool summand = std::any_of(parts.begin(), parts.end(), [&](const Representation& p) { return are_isomorphic(p, xr); });
  if (summand)
    for (const auto& phi : all_monomorphisms(xr, y))
      if (!is_split_mono(phi, xr, y)) {
        summand = false;
        break;
      }
  if (!summand) violation(MainViolationKind::SummandFailed);
}

MainPropertyReport check_main_property(const IndPoset& ip, const CategoryLengthFunction& l, int max_summands,
                                       std::uint64_t seed) {
  Measure mu = category_measure(ip, l);
  MainPropertyReport report;
  const std::size_t n = ip.size();
  std::vector<std::size_t> ys;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int budget) {
    if (!ys.empty())
      for (std::size_t x = 0; x < n; ++x) check_main_instance(ip, mu, x, ys, report, seed);
    if (static_cast<int>(ys.size()) == max_summands) return;
    for (std::size_t i = from; i < n; ++i) {
      int d = ip.cls(i).rep.total_dim();
      if (d > budget) continue;
      ys.push_back(i);
      rec(i, budget - d);
      ys.pop_back();
    }
  };
  rec(0, ip.max_len());
  return report;
}

namespace {

void require_complete(const IndPoset& ip, bool advisory) {
  if (!ip.complete() && !advisory)
    throw Error(ErrorCode::TruncatedCategory,
                "the enumeration does not contain every indecomposable; rerun as advisory to get a non-exact answer");
}

}  // namespace

DetectionResult detect_injectives(const IndPoset& ip, bool advisory) {
  require_complete(ip, advisory);
  DetectionResult out;
  out.advisory = !ip.complete();
  const std::size_t nv = ip.quiver().vertex_count();
  for (std::size_t q = 0; q < ip.size(); ++q) {
    const auto& rep = ip.cls(q).rep;
    if (socle_dimension(rep) != 1) continue;
    auto l = CategoryLengthFunction::socle_weighted(nv, socle_simples(rep).front());
    Measure mu = category_measure(ip, l);
    bool maximal = true;
    for (std::size_t x = 0; x < ip.size() && maximal; ++x)
      if (compare_values(mu.value(x), mu.value(q)) == CompareResult::GreaterThan) maximal = false;
    if (maximal) {
      out.detected.insert(ip.cls(q).label);
      out.witnesses.emplace(ip.cls(q).label, l);
    }
  }
  return out;
}

DetectionResult detect_simples(const IndPoset& ip, bool advisory) {
  require_complete(ip, advisory);
  DetectionResult out;
  out.advisory = !ip.complete();
  const std::size_t nv = ip.quiver().vertex_count();
  for (std::size_t v = 0; v < nv; ++v) {
    auto l = CategoryLengthFunction::socle_weighted(nv, v);
    Measure mu = category_measure(ip, l);
    for (std::size_t s = 0; s < ip.size(); ++s) {
      bool minimal = true;
      for (std::size_t x = 0; x < ip.size() && minimal; ++x)
        if (compare_values(mu.value(x), mu.value(s)) == CompareResult::LessThan) minimal = false;
      if (minimal && out.detected.insert(ip.cls(s).label).second) out.witnesses.emplace(ip.cls(s).label, l);
    }
  }
  return out;
}

AxiomReport check_socle_lemma(const IndPoset& ip, const CategoryLengthFunction& l) {
  Measure mu = category_measure(ip, l);
  std::vector<Rational> lo, hi;
  for (const auto& c : ip.classes()) {
    auto soc = socle_simples(c.rep);
    Rational a = l.simple_values[soc.front()], b = a;
    for (auto v : soc) {
      a = std::min(a, l.simple_values[v]);
      b = std::max(b, l.simple_values[v]);
    }
    lo.push_back(a);
    hi.push_back(b);
  }
  AxiomReport report;
  for (std::size_t x = 0; x < ip.size(); ++x)
    for (std::size_t y = 0; y < ip.size(); ++y)
      if (hi[x] < lo[y] && compare_values(mu.value(x), mu.value(y)) != CompareResult::GreaterThan)
        report.violations.push_back({"SOC", {ip.cls(x).label, ip.cls(y).label}});
  return report;
}

std::set<std::string> oracle_injectives(const IndPoset& ip) {
  require_complete(ip, false);
  std::set<std::string> out;
  const std::size_t n = ip.size();
  for (std::size_t q = 0; q < n; ++q) {
    const auto& qr = ip.cls(q).rep;
    const int r = socle_dimension(qr);
    bool injective = true;
    std::vector<std::size_t> ys;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      if (!injective) return;
      if (!ys.empty()) {
        Representation y = ip.cls(ys.front()).rep;
        for (std::size_t i = 1; i < ys.size(); ++i) y = direct_sum(y, ip.cls(ys[i]).rep);
        for (const auto& phi : all_monomorphisms(qr, y))
          if (!is_split_mono(phi, qr, y)) {
            injective = false;
            return;
          }
      }
      if (static_cast<int>(ys.size()) == r) return;
      for (std::size_t i = from; i < n; ++i) {
        ys.push_back(i);
        rec(i);
        ys.pop_back();
      }
    };
    rec(0);
    if (injective) out.insert(ip.cls(q).label);
  }
  return out;
}

std::set<std::string> oracle_injectives(const Quiver& q, const PrimeField& f, int max_len) {
  return oracle_injectives(enumerate_ind(q, f, max_len));
}

}  // namespace grm
