#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grm/length_functions.hpp"
#include "grm/prime_field.hpp"

namespace grm {

struct Arrow {
  std::size_t source;
  std::size_t target;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A finite quiver without oriented cycles.
class Quiver {
 public:
  /// Throws InvalidQuiver on unknown endpoints, duplicate vertices or
  /// oriented cycles (including loops).
  static Quiver make(std::vector<std::string> vertices,
                     const std::vector<std::pair<std::string, std::string>>& arrows);

  /// Path quiver on vertices "1".."n"; forward[i] orients the edge between
  /// i+1 and i+2 as i+1 -> i+2, otherwise the reverse. Empty = all forward.
  static Quiver type_a(int n, std::vector<bool> forward = {});
  /// Vertices "1", "2" and two arrows 1 -> 2.
  static Quiver kronecker();

  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t vertex_index(std::string_view id) const;  // throws InvalidQuiver

  bool is_kronecker() const;
  /// Tits form positive definite, i.e. every connected component is a
  /// simply-laced Dynkin diagram.
  bool is_finite_type() const;
  /// Largest total dimension of a positive root; only meaningful for finite type.
  int max_root_height() const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// A representation: one vector space F_p^dims[v] per vertex and, per arrow
/// a: s -> t, a dims[t] x dims[s] matrix.
class Representation {
 public:
  /// Throws InvalidQuiver when dims or matrix shapes do not fit the quiver.
  Representation(std::shared_ptr<const Quiver> quiver, PrimeField field, std::vector<int> dims,
                 std::vector<Matrix> maps);

  static Representation zero(std::shared_ptr<const Quiver> quiver, PrimeField field);
  static Representation simple(std::shared_ptr<const Quiver> quiver, PrimeField field, std::size_t vertex);

  const Quiver& quiver() const { return *quiver_; }
  const std::shared_ptr<const Quiver>& quiver_ptr() const { return quiver_; }
  const PrimeField& field() const { return field_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim(std::size_t v) const { return dims_[v]; }
  const std::vector<Matrix>& maps() const { return maps_; }
  const Matrix& map(std::size_t arrow) const { return maps_[arrow]; }
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  friend bool operator==(const Representation& a, const Representation& b) {
    return *a.quiver_ == *b.quiver_ && a.field_ == b.field_ && a.dims_ == b.dims_ && a.maps_ == b.maps_;
  }

 private:
  std::shared_ptr<const Quiver> quiver_;
  PrimeField field_;
  std::vector<int> dims_;
  std::vector<Matrix> maps_;
};

Representation direct_sum(const Representation& a, const Representation& b);

/// Per-vertex blocks phi_v : A_v -> B_v (dims_B(v) x dims_A(v)).
struct Morphism {
  std::vector<Matrix> blocks;
  friend bool operator==(const Morphism&, const Morphism&) = default;
};

bool is_morphism(const Morphism& phi, const Representation& a, const Representation& b);
bool is_monomorphism(const Morphism& phi, const Representation& a);
Morphism compose(const PrimeField& f, const Morphism& second, const Morphism& first);

/// Basis of Hom(A, B). Throws QuiverMismatch.
std::vector<Morphism> hom_space(const Representation& a, const Representation& b);

/// Hom spaces larger than this many basis vectors are not scanned.
constexpr int kMaxScannedHomDim = 20;

/// Some monomorphism A -> B found by scanning all of Hom(A, B).
/// Throws HomSpaceTooLarge.
std::optional<Morphism> find_monomorphism(const Representation& a, const Representation& b);
inline bool exists_mono(const Representation& a, const Representation& b) {
  return find_monomorphism(a, b).has_value();
}
/// Every monomorphism A -> B. Throws HomSpaceTooLarge.
std::vector<Morphism> all_monomorphisms(const Representation& a, const Representation& b);

/// Whether some psi : B -> A has psi o phi = id_A.
bool is_split_mono(const Morphism& phi, const Representation& a, const Representation& b);

bool are_isomorphic(const Representation& a, const Representation& b);

/// End(A) has no idempotents besides 0 and 1. Throws ZeroRepresentation.
bool is_indecomposable(const Representation& a);

/// Krull-Remak-Schmidt decomposition into indecomposables, sorted by
/// dimension vector. A non-zero seed shuffles the idempotent search order.
std::vector<Representation> decompose(const Representation& a, std::uint64_t seed = 0);

/// Restriction of A to subspaces U_v (columns of bases[v]) that are stable
/// under every arrow.
Representation restrict_to(const Representation& a, const std::vector<Matrix>& bases);

/// A length function on the category, fixed by its positive values on the
/// vertex simples.
struct CategoryLengthFunction {
  std::vector<Rational> simple_values;

  static CategoryLengthFunction ones(std::size_t vertex_count);
  /// 1 on the simple at `vertex`, 2 on every other simple.
  static CategoryLengthFunction socle_weighted(std::size_t vertex_count, std::size_t vertex);
  /// Throws InvalidQuiver unless every value is positive.
  static CategoryLengthFunction make(std::vector<Rational> values);
};

/// sum_v dims(v) * l(S_v).
Rational module_length(const Representation& a, const CategoryLengthFunction& l);

/// Vertices v whose simple S_v embeds in A. Throws ZeroRepresentation.
std::vector<std::size_t> socle_simples(const Representation& a);
/// Total dimension of the socle, sum_v dim Hom(S_v, A).
int socle_dimension(const Representation& a);

struct IndClass {
  Representation rep;
  std::string label;   // display name, unique within the IndPoset
  std::string family;  // "S", "P", "Q", "R", "R*", "M"
  std::uint64_t canonical = 0;  // least tuple index in the base-change orbit
};

struct EnumerationOptions {
  /// Largest number of matrix tuples scanned for one dimension vector.
  std::uint64_t tuple_budget = std::uint64_t{1} << 22;
  int max_len_cap = 7;
};

/// Raised when a dimension vector has too many matrix tuples to enumerate.
class BudgetError : public Error {
 public:
  BudgetError(std::vector<int> dims, const std::string& what)
      : Error(ErrorCode::BudgetExceeded, what), dims_(std::move(dims)) {}
  const std::vector<int>& dims() const { return dims_; }

 private:
  std::vector<int> dims_;
};

/// The indecomposables of total dimension <= max_len up to isomorphism,
/// ordered by the subobject relation.
class IndPoset {
 public:
  const Quiver& quiver() const { return *quiver_; }
  const std::shared_ptr<const Quiver>& quiver_ptr() const { return quiver_; }
  const PrimeField& field() const { return field_; }
  int max_len() const { return max_len_; }
  /// Every indecomposable of the category is listed.
  bool complete() const { return complete_; }

  const std::vector<IndClass>& classes() const { return classes_; }
  const IndClass& cls(std::size_t i) const { return classes_.at(i); }
  std::size_t size() const { return classes_.size(); }
  /// Element ids are the class labels, in class order.
  const Poset& poset() const { return poset_; }
  std::size_t index_of(std::string_view label) const { return poset_.index_of(label); }

  /// Class of an indecomposable of total dimension <= max_len; nullopt when
  /// `rep` is decomposable. Throws BoundTooTight beyond the bound.
  std::optional<std::size_t> classify(const Representation& rep) const;

  /// l restricted to the listed classes, as a poset length function.
  LengthFunction lengths(const CategoryLengthFunction& l) const;

  /// Rebuilds an IndPoset from explicit classes (e.g. re-ingested JSON) and
  /// recomputes the subobject relation. Only enumerate_ind builds the
  /// classification tables, so classify() throws on such objects.
  static IndPoset from_classes(std::shared_ptr<const Quiver> quiver, PrimeField field, int max_len,
                               std::vector<IndClass> classes);

 private:
  friend IndPoset enumerate_ind(const Quiver&, const PrimeField&, int, const EnumerationOptions&);

  std::shared_ptr<const Quiver> quiver_;
  PrimeField field_;
  int max_len_ = 0;
  bool complete_ = false;
  std::vector<IndClass> classes_;
  Poset poset_;
  std::shared_ptr<const std::map<std::vector<int>, std::vector<std::int32_t>>> tables_;
};

/// Orbit enumeration of all representations up to total dimension max_len.
/// Throws BudgetError with the offending dimension vector.
IndPoset enumerate_ind(const Quiver& q, const PrimeField& f, int max_len, const EnumerationOptions& opts = {});

/// Least tuple index in the base-change orbit of `a` (the canonical form used
/// for class identity).
std::uint64_t canonical_index(const Representation& a);

}  // namespace grm
