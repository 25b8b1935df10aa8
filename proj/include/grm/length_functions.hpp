#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grm/order_core.hpp"

namespace grm {

/// One failed axiom instance: the axiom tag ("L1", "M3", "C0", ...) and the
/// elements that witness the failure.
struct Violation {
  std::string axiom;
  std::vector<ElementId> witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct AxiomReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::size_t count(std::string_view axiom) const;
  std::string to_string() const;
};

using ValidationReport = AxiomReport;

/// Raised when eager validation of a length function fails; carries the
/// full report.
class ValidationError : public Error {
 public:
  explicit ValidationError(AxiomReport report)
      : Error(ErrorCode::ValidationFailed, report.to_string()), report_(std::move(report)) {}
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

/// Checks (L1) strict monotonicity and (L2) pairwise comparability of values.
/// (L3) holds on every finite poset and is never reported.
/// `compare_at(x, y)` compares the values at elements x and y.
ValidationReport validate_length_function(const Poset& p,
                                          const std::function<CompareResult(std::size_t, std::size_t)>& compare_at);

/// Throws DepthMismatch when the values do not share one depth.
ValidationReport validate_length_function(const Poset& p, const std::vector<ChainValue>& values);

/// A validated map from the elements of a poset to values of one depth.
class LengthFunction {
 public:
  /// Throws ValidationError, DepthMismatch, or ValidationFailed when the value
  /// count does not match the poset.
  static LengthFunction make(Poset poset, std::vector<ChainValue> values);

  const Poset& poset() const { return poset_; }
  const std::vector<ChainValue>& values() const { return values_; }
  const ChainValue& value(std::size_t x) const { return values_.at(x); }
  const ChainValue& value(std::string_view x) const { return values_.at(poset_.index_of(x)); }
  int depth() const { return depth_; }
  std::size_t size() const { return values_.size(); }

 private:
  LengthFunction() = default;

  Poset poset_;
  std::vector<ChainValue> values_;
  int depth_ = 0;
};

/// Number of distinct values on the down-set of x.
std::size_t lambda0(const LengthFunction& f, std::size_t x);
std::size_t lambda0(const LengthFunction& f, std::string_view x);

/// First ordered pair (x, y), scanning x then y in input order, on which f and
/// g order their values differently. Throws PosetMismatch.
std::optional<std::pair<std::size_t, std::size_t>> equivalence_witness(const LengthFunction& f,
                                                                       const LengthFunction& g);

inline bool are_equivalent(const LengthFunction& f, const LengthFunction& g) {
  return !equivalence_witness(f, g).has_value();
}

/// Equal integer values on minimal elements and +1 along every cover.
/// Throws NonIntegerValues unless values are integer scalars.
bool is_rank_function(const LengthFunction& f);

/// x -> max cardinality of a chain ending at x.
LengthFunction height_function(const Poset& p);

}  // namespace grm
