#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "grm/repcat.hpp"
#include "helpers.hpp"

using namespace grm;

namespace {

// ---- Independent brute-force machinery over F_p (no library linear algebra).

using Mat = std::vector<std::vector<int>>;

Mat to_mat(const Matrix& m) {
  Mat out(m.rows, std::vector<int>(m.cols));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) out[r][c] = m.at(r, c);
  return out;
}

Mat mul(const Mat& a, const Mat& b, int rows, int inner, int cols, int p) {
  Mat out(rows, std::vector<int>(cols, 0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      int s = 0;
      for (int k = 0; k < inner; ++k) s += a[i][k] * b[k][j];
      out[i][j] = s % p;
    }
  return out;
}

// All rows x cols matrices over F_p.
std::vector<Mat> all_matrices(int rows, int cols, int p) {
  std::vector<Mat> out;
  int n = rows * cols, total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  for (int code = 0; code < total; ++code) {
    Mat m(rows, std::vector<int>(cols));
    int c = code;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        m[i][j] = c % p;
        c /= p;
      }
    out.push_back(m);
  }
  return out;
}

// Injective iff no non-zero vector maps to zero.
bool injective(const Mat& m, int rows, int cols, int p) {
  for (const auto& v : all_matrices(cols, 1, p)) {
    bool nonzero = false;
    for (int i = 0; i < cols; ++i) nonzero |= v[i][0] != 0;
    if (!nonzero) continue;
    auto img = mul(m, v, rows, cols, 1, p);
    bool zero = true;
    for (int i = 0; i < rows; ++i) zero &= img[i][0] == 0;
    if (zero) return false;
  }
  return true;
}

using Tuple = std::vector<Mat>;  // one block per vertex

// Every tuple of blocks phi_v : A_v -> B_v that intertwines the arrows.
std::vector<Tuple> brute_hom(const Representation& a, const Representation& b) {
  const auto& q = a.quiver();
  const int p = a.field().p();
  std::vector<Tuple> out{{}};
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    std::vector<Tuple> next;
    for (const auto& t : out)
      for (const auto& m : all_matrices(b.dim(v), a.dim(v), p)) {
        auto u = t;
        u.push_back(m);
        next.push_back(u);
      }
    out = std::move(next);
  }
  std::vector<Tuple> homs;
  for (const auto& phi : out) {
    bool ok = true;
    for (std::size_t k = 0; k < q.arrows().size() && ok; ++k) {
      auto [s, t] = q.arrows()[k];
      auto lhs = mul(phi[t], to_mat(a.map(k)), b.dim(t), a.dim(t), a.dim(s), p);
      auto rhs = mul(to_mat(b.map(k)), phi[s], b.dim(t), b.dim(s), a.dim(s), p);
      ok = lhs == rhs;
    }
    if (ok) homs.push_back(phi);
  }
  return homs;
}

bool brute_mono(const Representation& a, const Representation& b) {
  for (const auto& phi : brute_hom(a, b)) {
    bool inj = true;
    for (std::size_t v = 0; v < phi.size(); ++v) inj &= injective(phi[v], b.dim(v), a.dim(v), a.field().p());
    if (inj) return true;
  }
  return false;
}

bool brute_iso(const Representation& a, const Representation& b) {
  return a.dims() == b.dims() && brute_mono(a, b);
}

bool brute_indecomposable(const Representation& a) {
  const int p = a.field().p();
  for (const auto& e : brute_hom(a, a)) {
    bool zero = true, identity = true, idempotent = true;
    for (std::size_t v = 0; v < e.size(); ++v) {
      int n = a.dim(v);
      auto sq = mul(e[v], e[v], n, n, n, p);
      idempotent &= sq == e[v];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          zero &= e[v][i][j] == 0;
          identity &= e[v][i][j] == (i == j ? 1 : 0);
        }
    }
    if (idempotent && !zero && !identity) return false;
  }
  return true;
}

// Every representation with the given dimension vector.
std::vector<Representation> all_reps(const std::shared_ptr<const Quiver>& q, const PrimeField& f,
                                     const std::vector<int>& dims) {
  std::vector<std::vector<Matrix>> tuples{{}};
  for (const auto& arrow : q->arrows()) {
    std::vector<std::vector<Matrix>> next;
    for (const auto& t : tuples)
      for (const auto& m : all_matrices(dims[arrow.target], dims[arrow.source], f.p())) {
        Matrix mm(dims[arrow.target], dims[arrow.source]);
        for (int r = 0; r < mm.rows; ++r)
          for (int c = 0; c < mm.cols; ++c) mm.at(r, c) = static_cast<std::uint8_t>(m[r][c]);
        auto u = t;
        u.push_back(mm);
        next.push_back(u);
      }
    tuples = std::move(next);
  }
  std::vector<Representation> out;
  for (auto& t : tuples) out.emplace_back(q, f, dims, std::move(t));
  return out;
}

struct A2 {
  std::shared_ptr<const Quiver> q = std::make_shared<const Quiver>(Quiver::type_a(2));
  PrimeField f{2};
  Representation s1 = Representation::simple(q, f, 0);
  Representation s2 = Representation::simple(q, f, 1);
  Representation p = Representation(q, f, {1, 1}, {Matrix::identity(1)});
};

Representation kron(const std::shared_ptr<const Quiver>& q, const PrimeField& f, std::vector<int> dims, Matrix a, Matrix b) {
  return Representation(q, f, std::move(dims), {std::move(a), std::move(b)});
}

Matrix mat(int rows, int cols, std::vector<std::uint8_t> entries) {
  Matrix m(rows, cols);
  m.a = std::move(entries);
  return m;
}

}  // namespace

TEST(Field, Arithmetic) {
  for (int p : {2, 3, 5, 7}) {
    PrimeField f(p);
    for (int a = 1; a < p; ++a) EXPECT_EQ(f.mul(static_cast<std::uint8_t>(a), f.inv(static_cast<std::uint8_t>(a))), 1);
    // The primitive root generates the multiplicative group.
    std::set<int> powers;
    std::uint8_t x = 1;
    for (int k = 0; k < p - 1; ++k) {
      powers.insert(x);
      x = f.mul(x, f.primitive_root());
    }
    EXPECT_EQ(static_cast<int>(powers.size()), p - 1);
  }
  for (int bad : {0, 1, 4, 11}) {
    try {
      PrimeField f(bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidField);
    }
  }
}

TEST(Linalg, RankAndNullspaceAgreeWithBruteForce) {
  std::mt19937_64 rng(2);
  for (int p : {2, 3}) {
    PrimeField f(p);
    std::uniform_int_distribution<int> entry(0, p - 1);
    for (int t = 0; t < 40; ++t) {
      Matrix m(3, 4);
      for (auto& v : m.a) v = static_cast<std::uint8_t>(entry(rng));
      auto ns = linalg::nullspace(f, m);
      // |kernel| by enumeration equals p^(dim nullspace), and rank-nullity holds.
      int kernel = 0;
      for (const auto& v : all_matrices(4, 1, p)) {
        auto img = mul(to_mat(m), v, 3, 4, 1, p);
        if (img == Mat(3, std::vector<int>(1, 0))) ++kernel;
      }
      int expect = 1;
      for (std::size_t i = 0; i < ns.size(); ++i) expect *= p;
      EXPECT_EQ(kernel, expect);
      EXPECT_EQ(linalg::rank(f, m) + static_cast<int>(ns.size()), 4);
    }
  }
}

TEST(Quiver, Validation) {
  EXPECT_TRUE(Quiver::kronecker().is_kronecker());
  EXPECT_FALSE(Quiver::type_a(2).is_kronecker());
  try {
    Quiver::make({"1", "2"}, {{"1", "2"}, {"2", "1"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidQuiver);
  }
  EXPECT_THROW(Quiver::make({"1"}, {{"1", "1"}}), Error);
  EXPECT_THROW(Quiver::make({"1"}, {{"1", "9"}}), Error);
  EXPECT_TRUE(Quiver::type_a(3, {true, false}).is_finite_type());
  EXPECT_FALSE(Quiver::kronecker().is_finite_type());
  EXPECT_EQ(Quiver::type_a(3).max_root_height(), 3);
  // D4 has highest root 1,2,1,1.
  auto d4 = Quiver::make({"c", "x", "y", "z"}, {{"x", "c"}, {"y", "c"}, {"z", "c"}});
  EXPECT_TRUE(d4.is_finite_type());
  EXPECT_EQ(d4.max_root_height(), 5);
}

TEST(Hom, Examples) {
  A2 a;
  EXPECT_EQ(hom_space(a.s1, a.s1).size(), 1u);
  EXPECT_EQ(hom_space(a.s1, a.s2).size(), 0u);
  EXPECT_EQ(hom_space(a.p, a.s2).size(), 0u);  // no map P -> S_2 intertwines: P's top is S_1
  EXPECT_EQ(hom_space(a.s2, a.p).size(), 1u);
  EXPECT_EQ(hom_space(a.p, a.s1).size(), 1u);
  auto other = Representation::simple(std::make_shared<const Quiver>(Quiver::kronecker()), a.f, 0);
  try {
    hom_space(a.s1, other);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::QuiverMismatch);
  }
}

TEST(Hom, DimensionMatchesBruteForce) {
  auto q = std::make_shared<const Quiver>(Quiver::kronecker());
  PrimeField f(2);
  std::vector<Representation> reps;
  for (const auto& d : std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 1}, {0, 1}})
    for (auto& r : all_reps(q, f, d)) reps.push_back(r);
  std::mt19937_64 rng(4);
  std::shuffle(reps.begin(), reps.end(), rng);
  reps.erase(reps.begin() + std::min<std::size_t>(30, reps.size()), reps.end());
  for (const auto& a : reps)
    for (const auto& b : reps) {
      auto basis = hom_space(a, b);
      std::size_t expect = 1;
      for (std::size_t i = 0; i < basis.size(); ++i) expect *= 2;
      EXPECT_EQ(brute_hom(a, b).size(), expect);
      for (const auto& phi : basis) EXPECT_TRUE(is_morphism(phi, a, b));
      EXPECT_EQ(exists_mono(a, b), brute_mono(a, b));
    }
}

TEST(Mono, Examples) {
  A2 a;
  auto w = find_monomorphism(a.s2, a.p);
  ASSERT_TRUE(w);
  EXPECT_TRUE(is_morphism(*w, a.s2, a.p));
  EXPECT_TRUE(is_monomorphism(*w, a.s2));
  EXPECT_FALSE(exists_mono(a.s1, a.p));
  EXPECT_TRUE(exists_mono(a.p, a.p));
}

TEST(Mono, HomSpaceCap) {
  auto q = std::make_shared<const Quiver>(Quiver::type_a(1));
  PrimeField f(2);
  // Hom(k^5, k^5) has dimension 25.
  Representation big(q, f, {5}, {});
  try {
    exists_mono(big, big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::HomSpaceTooLarge);
  }
}

TEST(Indecomposable, Examples) {
  A2 a;
  EXPECT_TRUE(is_indecomposable(a.s1));
  EXPECT_FALSE(is_indecomposable(direct_sum(a.s1, a.s1)));
  EXPECT_TRUE(is_indecomposable(a.p));
  try {
    is_indecomposable(Representation::zero(a.q, a.f));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroRepresentation);
  }
}

TEST(Indecomposable, MatchesIdempotentBruteForce) {
  for (int p : {2, 3}) {
    auto q = std::make_shared<const Quiver>(Quiver::kronecker());
    PrimeField f(p);
    for (const auto& d : std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 1}, {2, 0}})
      for (const auto& r : all_reps(q, f, d)) EXPECT_EQ(is_indecomposable(r), brute_indecomposable(r));
  }
  auto q = std::make_shared<const Quiver>(Quiver::kronecker());
  PrimeField f(2);
  for (const auto& r : all_reps(q, f, {2, 2})) EXPECT_EQ(is_indecomposable(r), brute_indecomposable(r));
}

TEST(Decompose, Examples) {
  A2 a;
  EXPECT_TRUE(decompose(Representation::zero(a.q, a.f)).empty());
  auto parts = decompose(direct_sum(a.s1, a.p));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].dims(), (std::vector<int>{1, 0}));
  EXPECT_EQ(parts[1].dims(), (std::vector<int>{1, 1}));
}

TEST(Decompose, RoundTripAndSeedIndependence) {
  auto q = std::make_shared<const Quiver>(Quiver::kronecker());
  PrimeField f(3);
  auto r1 = kron(q, f, {1, 1}, mat(1, 1, {1}), mat(1, 1, {0}));
  auto r2 = kron(q, f, {1, 2}, mat(2, 1, {1, 0}), mat(2, 1, {0, 1}));
  auto r3 = kron(q, f, {1, 1}, mat(1, 1, {1}), mat(1, 1, {2}));
  auto big = direct_sum(direct_sum(r1, r2), direct_sum(r3, Representation::simple(q, f, 0)));
  std::multiset<std::vector<int>> expected;
  auto first = decompose(big);
  for (const auto& p : first) expected.insert(p.dims());
  EXPECT_EQ(expected.size(), 4u);
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    auto parts = decompose(big, seed);
    std::multiset<std::vector<int>> got;
    for (const auto& p : parts) {
      got.insert(p.dims());
      EXPECT_TRUE(is_indecomposable(p));
    }
    EXPECT_EQ(got, expected);
    Representation sum = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) sum = direct_sum(sum, parts[i]);
    EXPECT_TRUE(are_isomorphic(sum, big));
  }
}

TEST(SplitMono, Basics) {
  A2 a;
  auto incl = find_monomorphism(a.s2, a.p);
  ASSERT_TRUE(incl);
  EXPECT_FALSE(is_split_mono(*incl, a.s2, a.p));
  auto sum = direct_sum(a.s2, a.s1);
  auto into_sum = find_monomorphism(a.s2, sum);
  ASSERT_TRUE(into_sum);
  EXPECT_TRUE(is_split_mono(*into_sum, a.s2, sum));
}

TEST(Enumerate, A2) {
  auto ip = enumerate_ind(Quiver::type_a(2), PrimeField(2), 2);
  ASSERT_EQ(ip.size(), 3u);
  EXPECT_TRUE(ip.complete());
  std::set<std::string> labels;
  for (const auto& c : ip.classes()) labels.insert(c.label);
  EXPECT_EQ(labels, (std::set<std::string>{"S_1", "S_2", "I(1,2)"}));
  const auto& p = ip.poset();
  EXPECT_EQ(p.strict_pairs().size(), 1u);
  EXPECT_TRUE(p.less(ip.index_of("S_2"), ip.index_of("I(1,2)")));
}

TEST(Enumerate, A1AndKronecker) {
  auto a1 = enumerate_ind(Quiver::type_a(1), PrimeField(2), 3);
  ASSERT_EQ(a1.size(), 1u);
  EXPECT_EQ(a1.cls(0).label, "S_1");
  auto k = enumerate_ind(Quiver::kronecker(), PrimeField(2), 2);
  EXPECT_EQ(k.size(), 5u);
  EXPECT_FALSE(k.complete());
  int regular = 0;
  for (const auto& c : k.classes()) regular += c.family == "R";
  EXPECT_EQ(regular, 3);  // |P^1(F_2)|
}

TEST(Enumerate, ClassCountsMatchBruteForce) {
  struct Case {
    Quiver q;
    int p;
    int max_len;
  };
  std::vector<Case> cases{{Quiver::kronecker(), 2, 3}, {Quiver::kronecker(), 3, 3}, {Quiver::type_a(3, {true, false}), 2, 3},
                          {Quiver::type_a(3), 3, 3}};
  for (const auto& c : cases) {
    auto q = std::make_shared<const Quiver>(c.q);
    PrimeField f(c.p);
    auto ip = enumerate_ind(c.q, f, c.max_len);
    // Brute force: collect indecomposables of every dimension vector and
    // merge isomorphic ones.
    std::vector<Representation> reps;
    std::function<void(std::vector<int>&, std::size_t, int)> dims_rec = [&](std::vector<int>& d, std::size_t v, int left) {
      if (v == d.size()) {
        if (left == c.max_len) return;
        for (const auto& r : all_reps(q, f, d)) {
          if (!brute_indecomposable(r)) continue;
          if (std::none_of(reps.begin(), reps.end(), [&](const Representation& s) { return brute_iso(r, s); }))
            reps.push_back(r);
        }
        return;
      }
      for (int k = 0; k <= left; ++k) {
        d[v] = k;
        dims_rec(d, v + 1, left - k);
      }
      d[v] = 0;
    };
    std::vector<int> d(c.q.vertex_count(), 0);
    dims_rec(d, 0, c.max_len);
    ASSERT_EQ(ip.size(), reps.size());
    for (const auto& r : reps) {
      auto cls = ip.classify(r);
      ASSERT_TRUE(cls);
      EXPECT_TRUE(brute_iso(ip.cls(*cls).rep, r));
    }
    for (std::size_t i = 0; i < ip.size(); ++i)
      for (std::size_t j = 0; j < ip.size(); ++j)
        if (i != j) EXPECT_EQ(ip.poset().leq(i, j), brute_mono(ip.cls(i).rep, ip.cls(j).rep));
  }
}

TEST(Enumerate, ClassifyRejectsDecomposablesAndLargeObjects) {
  auto ip = enumerate_ind(Quiver::type_a(2), PrimeField(2), 2);
  A2 a;
  auto q = ip.quiver_ptr();
  auto s1 = Representation::simple(q, ip.field(), 0);
  EXPECT_FALSE(ip.classify(direct_sum(s1, Representation::simple(q, ip.field(), 1))));
  try {
    ip.classify(direct_sum(s1, direct_sum(s1, s1)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BoundTooTight);
  }
}

TEST(Enumerate, BudgetErrorCarriesDimensionVector) {
  EnumerationOptions opts;
  opts.tuple_budget = 100;
  try {
    enumerate_ind(Quiver::kronecker(), PrimeField(2), 4, opts);
    FAIL();
  } catch (const BudgetError& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
    EXPECT_EQ(e.dims(), (std::vector<int>{2, 2}));
  }
  EXPECT_THROW(enumerate_ind(Quiver::kronecker(), PrimeField(2), 8), BudgetError);
}

TEST(Enumerate, DownwardClosedAndPartialOrder) {
  for (const auto& q : {Quiver::kronecker(), Quiver::type_a(3, {false, true})}) {
    auto ip = enumerate_ind(q, PrimeField(2), 4);
    for (std::size_t i = 0; i < ip.size(); ++i)
      for (std::size_t j = 0; j < ip.size(); ++j) {
        if (i == j) continue;
        // Mutual monomorphisms only between isomorphic objects.
        bool ij = exists_mono(ip.cls(i).rep, ip.cls(j).rep), ji = exists_mono(ip.cls(j).rep, ip.cls(i).rep);
        EXPECT_FALSE(ij && ji);
        EXPECT_EQ(ij, ip.poset().leq(i, j));
      }
  }
}

TEST(Enumerate, TruncationExactness) {
  for (const auto& q : {Quiver::kronecker(), Quiver::type_a(3)}) {
    auto small = enumerate_ind(q, PrimeField(2), 3);
    auto large = enumerate_ind(q, PrimeField(2), 5);
    auto ones = CategoryLengthFunction::ones(q.vertex_count());
    auto ms = measure_dp(small.lengths(ones));
    auto ml = measure_dp(large.lengths(ones));
    for (std::size_t i = 0; i < small.size(); ++i) {
      auto j = large.index_of(small.cls(i).label);
      EXPECT_EQ(small.cls(i).canonical, large.cls(j).canonical);
      EXPECT_EQ(ms.value(i), ml.value(j));
    }
  }
}

TEST(Canonical, InvariantUnderBaseChange) {
  auto q = std::make_shared<const Quiver>(Quiver::kronecker());
  PrimeField f(3);
  auto r = kron(q, f, {2, 3}, mat(3, 2, {1, 0, 0, 1, 0, 0}), mat(3, 2, {0, 0, 1, 0, 0, 1}));
  // g_2 r g_1^{-1} with g_1 = [[1,1],[0,1]] (inverse [[1,2],[0,1]]) and g_2 = [[2,0,0],[0,1,0],[0,1,1]].
  Matrix g1inv = mat(2, 2, {1, 2, 0, 1});
  Matrix g2 = mat(3, 3, {2, 0, 0, 0, 1, 0, 0, 1, 1});
  auto conj = [&](const Matrix& m) { return linalg::multiply(f, linalg::multiply(f, g2, m), g1inv); };
  Representation s(q, f, {2, 3}, {conj(r.map(0)), conj(r.map(1))});
  EXPECT_FALSE(r == s);
  EXPECT_EQ(canonical_index(r), canonical_index(s));
  EXPECT_TRUE(are_isomorphic(r, s));
}

TEST(Lengths, ModuleLength) {
  A2 a;
  auto l = CategoryLengthFunction::make({Rational(2), Rational(1)});
  EXPECT_EQ(module_length(a.p, l), Rational(3));
  EXPECT_EQ(module_length(Representation::zero(a.q, a.f), l), Rational(0));
  EXPECT_EQ(module_length(direct_sum(a.p, a.s1), CategoryLengthFunction::ones(2)), Rational(3));
  EXPECT_THROW(CategoryLengthFunction::make({Rational(0), Rational(1)}), Error);
}

TEST(Lengths, AdditiveAndMonotone) {
  auto ip = enumerate_ind(Quiver::kronecker(), PrimeField(2), 4);
  auto l = CategoryLengthFunction::make({Rational(3, 2), Rational(2, 3)});
  for (const auto& x : ip.classes())
    for (const auto& y : ip.classes()) {
      EXPECT_EQ(module_length(direct_sum(x.rep, y.rep), l), module_length(x.rep, l) + module_length(y.rep, l));
      if (x.label != y.label && exists_mono(x.rep, y.rep)) EXPECT_LT(module_length(x.rep, l), module_length(y.rep, l));
    }
}

TEST(Socle, Examples) {
  A2 a;
  EXPECT_EQ(socle_simples(a.s1), (std::vector<std::size_t>{0}));
  EXPECT_EQ(socle_simples(a.p), (std::vector<std::size_t>{1}));
  auto q = std::make_shared<const Quiver>(Quiver::kronecker());
  auto r = kron(q, a.f, {1, 1}, mat(1, 1, {1}), mat(1, 1, {0}));
  EXPECT_EQ(socle_simples(r), (std::vector<std::size_t>{1}));
  EXPECT_EQ(socle_dimension(direct_sum(a.p, a.s2)), 2);
  EXPECT_THROW(socle_simples(Representation::zero(a.q, a.f)), Error);
}
