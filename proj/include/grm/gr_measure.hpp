#pragma once

#include <cstddef>
#include <vector>

#include "grm/length_functions.hpp"

namespace grm {

/// The chain length function lambda* of a base length function lambda.
/// Each value is the lex-largest chain of base values along a chain of the
/// poset ending at the element; its depth is one more than the base depth.
class Measure {
 public:
  const Poset& poset() const { return base_.poset(); }
  const LengthFunction& base() const { return base_; }
  const std::vector<ChainValue>& values() const { return values_; }
  const ChainValue& value(std::size_t x) const { return values_.at(x); }
  const ChainValue& value(std::string_view x) const { return values_.at(poset().index_of(x)); }

  /// The measure viewed as a length function in its own right.
  LengthFunction as_length_function() const;

  /// Bypasses the DP; used to feed hand-built or corrupted values to the
  /// property checkers.
  static Measure from_values(LengthFunction base, std::vector<ChainValue> values);

 private:
  friend Measure measure_dp(const LengthFunction& base);
  Measure(LengthFunction base, std::vector<ChainValue> values)
      : base_(std::move(base)), values_(std::move(values)) {}

  LengthFunction base_;
  std::vector<ChainValue> values_;
};

/// max{ lambda(X) : X a chain with max X = x }, by enumerating every chain.
ChainValue measure_oracle(const LengthFunction& base, std::size_t x);
ChainValue measure_oracle(const LengthFunction& base, std::string_view x);

/// One pass in topological order: the lex-max of the strict predecessors'
/// values (the empty chain when there are none), extended by lambda(x).
Measure measure_dp(const LengthFunction& base);

constexpr int kDefaultIterationCap = 8;

/// lambda^(0) = lambda, lambda^(n) = (lambda^(n-1))*. Throws
/// IterationBudgetExceeded when n > cap.
LengthFunction iterate_measure(const LengthFunction& base, int n, int cap = kDefaultIterationCap);

struct GRFiltration {
  std::vector<std::size_t> steps;  // x_1 < ... < x_gamma = x
  std::size_t gamma() const { return steps.size(); }
};

/// Walks down from x, each time taking the first strict predecessor (input
/// order) whose measure is maximal among all strict predecessors.
GRFiltration gr_filtration(const Measure& m, std::size_t x);
GRFiltration gr_filtration(const Measure& m, std::string_view x);

/// True if `filt` starts at a minimal element, is strictly increasing, and each
/// step attains the maximum measure below its successor.
bool is_gr_filtration(const Measure& m, const GRFiltration& filt);

/// The chain of base lengths along the filtration. Throws InvalidFiltration.
ChainValue measure_from_filtration(const LengthFunction& base, const GRFiltration& filt);

/// Checks (M1)-(M3) for an arbitrary candidate map mu over all element pairs.
AxiomReport check_M_axioms(const LengthFunction& base, const std::vector<ChainValue>& mu);

/// Checks (C0)-(C3) for a measure built over `base`. Throws PosetMismatch.
AxiomReport check_C_properties(const LengthFunction& base, const Measure& m);

}  // namespace grm
