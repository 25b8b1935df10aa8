#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "grm/gr_measure.hpp"
#include "grm/repcat.hpp"

namespace grm {

enum class MainViolationKind { InequalityFailed, SummandFailed };
std::string_view to_string(MainViolationKind k);

struct MainPropertyViolation {
  std::string x;
  std::vector<std::string> ys;
  MainViolationKind kind;
};

struct MainPropertyReport {
  std::size_t checked_triples = 0;  // (X, {Y_i}) pairs admitting a monomorphism
  std::vector<MainPropertyViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// The measure l* on the classes of ip.
Measure category_measure(const IndPoset& ip, const CategoryLengthFunction& l);

/// Checks one instance X -> Y_1 + ... + Y_r (class indices into ip): if a
/// monomorphism exists then mu(X) <= max mu(Y_i), and on equality X is a
/// summand of the sum and every monomorphism splits. Appends to `report`.
/// Throws BoundTooTight when the sum exceeds the enumeration bound.
void check_main_instance(const IndPoset& ip, const Measure& mu, std::size_t x, const std::vector<std::size_t>& ys,
                         MainPropertyReport& report, std::uint64_t seed = 0);

/// Runs check_main_instance over every class X and every multiset of at most
/// max_summands classes whose total dimension fits the enumeration bound.
/// `seed` shuffles the idempotent search used for summand checks.
MainPropertyReport check_main_property(const IndPoset& ip, const CategoryLengthFunction& l, int max_summands = 2,
                                       std::uint64_t seed = 0);

struct DetectionResult {
  std::set<std::string> detected;
  std::map<std::string, CategoryLengthFunction> witnesses;  // detected class -> l used
  bool advisory = false;  // computed on a truncation
};

/// Q is reported when Q has a simple socle S and l_S*(Q) is the maximum of
/// l_S* over all classes (l_S = 1 on S, 2 on every other simple).
/// Throws TruncatedCategory on incomplete enumerations unless `advisory`.
DetectionResult detect_injectives(const IndPoset& ip, bool advisory = false);

/// S is reported when it is the measure minimum for l = 1 at one vertex
/// simple and 2 at the others. Throws TruncatedCategory like
/// detect_injectives.
DetectionResult detect_simples(const IndPoset& ip, bool advisory = false);

/// Pairs (X, Y) whose socle values under l all lie strictly below those of Y
/// must satisfy l*(X) > l*(Y); failures are reported under the tag "SOC".
AxiomReport check_socle_lemma(const IndPoset& ip, const CategoryLengthFunction& l);

/// Labels of the injective classes, decided by testing whether every
/// monomorphism Q -> Y_1 + ... + Y_r splits, r = dim soc Q. Independent of
/// any measure. Throws TruncatedCategory unless the enumeration is complete.
std::set<std::string> oracle_injectives(const IndPoset& ip);
std::set<std::string> oracle_injectives(const Quiver& q, const PrimeField& f, int max_len);

}  // namespace grm
