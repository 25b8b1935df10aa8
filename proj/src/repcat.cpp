#include "grm/repcat.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

namespace grm {

// ---------------------------------------------------------------------------
// Quiver

Quiver Quiver::make(std::vector<std::string> vertices,
                    const std::vector<std::pair<std::string, std::string>>& arrows) {
  Quiver q;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].empty()) throw Error(ErrorCode::InvalidQuiver, "empty vertex id");
    for (std::size_t j = 0; j < i; ++j)
      if (vertices[i] == vertices[j]) throw Error(ErrorCode::InvalidQuiver, "vertex '" + vertices[i] + "' listed twice");
  }
  q.vertices_ = std::move(vertices);
  for (const auto& [s, t] : arrows) q.arrows_.push_back({q.vertex_index(s), q.vertex_index(t)});

  // Kahn: every vertex must be removable.
  std::vector<int> indegree(q.vertex_count(), 0);
  for (const auto& a : q.arrows_) ++indegree[a.target];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    auto v = ready.back();
    ready.pop_back();
    ++removed;
    for (const auto& a : q.arrows_)
      if (a.source == v && --indegree[a.target] == 0) ready.push_back(a.target);
  }
  if (removed != q.vertex_count()) throw Error(ErrorCode::InvalidQuiver, "quiver has an oriented cycle");
  return q;
}

Quiver Quiver::type_a(int n, std::vector<bool> forward) {
  if (n < 1) throw Error(ErrorCode::InvalidQuiver, "type A needs at least one vertex");
  if (forward.empty()) forward.assign(static_cast<std::size_t>(n - 1), true);
  if (forward.size() != static_cast<std::size_t>(n - 1))
    throw Error(ErrorCode::InvalidQuiver, "orientation vector must have n-1 entries");
  std::vector<std::string> vs;
  for (int i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
  std::vector<std::pair<std::string, std::string>> arrows;
  for (int i = 0; i + 1 < n; ++i) {
    if (forward[i]) arrows.emplace_back(vs[i], vs[i + 1]);
    else arrows.emplace_back(vs[i + 1], vs[i]);
  }
  return make(std::move(vs), arrows);
}

Quiver Quiver::kronecker() { return make({"1", "2"}, {{"1", "2"}, {"1", "2"}}); }

std::size_t Quiver::vertex_index(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == id) return i;
  throw Error(ErrorCode::InvalidQuiver, "unknown vertex '" + std::string(id) + "'");
}

bool Quiver::is_kronecker() const {
  return vertices_.size() == 2 && arrows_.size() == 2 && arrows_[0] == arrows_[1] &&
         arrows_[0].source != arrows_[0].target;
}

namespace {

// Symmetrised Tits form 2I - (A + A^T).
std::vector<std::vector<std::int64_t>> cartan_matrix(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  std::vector<std::vector<std::int64_t>> c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
  for (const auto& a : q.arrows()) {
    c[a.source][a.target] -= 1;
    c[a.target][a.source] -= 1;
  }
  return c;
}

std::int64_t tits_form_doubled(const std::vector<std::vector<std::int64_t>>& c, const std::vector<int>& x) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) s += c[i][j] * x[i] * x[j];
  return s;
}

}  // namespace

bool Quiver::is_finite_type() const {
  auto c = cartan_matrix(*this);
  const std::size_t n = c.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(c[i][j]);
  // Symmetric Gaussian elimination: positive definite iff every pivot > 0.
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational factor = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= factor * m[k][j];
    }
  }
  return true;
}

int Quiver::max_root_height() const {
  auto c = cartan_matrix(*this);
  const std::size_t n = vertex_count();
  std::set<std::vector<int>> roots;
  std::deque<std::vector<int>> frontier;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<int> e(n, 0);
    e[v] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  int best = n ? 1 : 0;
  while (!frontier.empty()) {
    auto x = frontier.front();
    frontier.pop_front();
    for (std::size_t v = 0; v < n; ++v) {
      auto y = x;
      ++y[v];
      if (tits_form_doubled(c, y) != 2 || roots.count(y)) continue;
      best = std::max(best, std::accumulate(y.begin(), y.end(), 0));
      if (best > 64) return best;  // not finite type
      roots.insert(y);
      frontier.push_back(std::move(y));
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Representations

Representation::Representation(std::shared_ptr<const Quiver> quiver, PrimeField field, std::vector<int> dims,
                               std::vector<Matrix> maps)
    : quiver_(std::move(quiver)), field_(field), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (!quiver_) throw Error(ErrorCode::InvalidQuiver, "representation without a quiver");
  if (dims_.size() != quiver_->vertex_count())
    throw Error(ErrorCode::InvalidQuiver, "dimension vector does not match the vertex count");
  for (int d : dims_)
    if (d < 0) throw Error(ErrorCode::InvalidQuiver, "negative dimension");
  if (maps_.size() != quiver_->arrows().size())
    throw Error(ErrorCode::InvalidQuiver, "need exactly one matrix per arrow");
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const auto& arrow = quiver_->arrows()[a];
    if (maps_[a].rows != dims_[arrow.target] || maps_[a].cols != dims_[arrow.source])
      throw Error(ErrorCode::InvalidQuiver, "matrix for arrow " + std::to_string(a) + " has the wrong shape");
    for (auto v : maps_[a].a)
      if (v >= field_.p()) throw Error(ErrorCode::InvalidField, "matrix entry outside F_p");
  }
}

Representation Representation::zero(std::shared_ptr<const Quiver> quiver, PrimeField field) {
  std::vector<int> dims(quiver->vertex_count(), 0);
  std::vector<Matrix> maps(quiver->arrows().size());
  return Representation(std::move(quiver), field, std::move(dims), std::move(maps));
}

Representation Representation::simple(std::shared_ptr<const Quiver> quiver, PrimeField field, std::size_t vertex) {
  std::vector<int> dims(quiver->vertex_count(), 0);
  dims.at(vertex) = 1;
  std::vector<Matrix> maps;
  for (const auto& a : quiver->arrows()) maps.emplace_back(dims[a.target], dims[a.source]);
  return Representation(std::move(quiver), field, std::move(dims), std::move(maps));
}

int Representation::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

namespace {

void require_compatible(const Representation& a, const Representation& b) {
  if (!(a.quiver() == b.quiver())) throw Error(ErrorCode::QuiverMismatch, "representations of different quivers");
  if (!(a.field() == b.field())) throw Error(ErrorCode::QuiverMismatch, "representations over different fields");
}

}  // namespace

Representation direct_sum(const Representation& a, const Representation& b) {
  require_compatible(a, b);
  const auto& q = a.quiver();
  std::vector<int> dims(q.vertex_count());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = a.dim(v) + b.dim(v);
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& arrow = q.arrows()[k];
    Matrix m(dims[arrow.target], dims[arrow.source]);
    const Matrix& ma = a.map(k);
    const Matrix& mb = b.map(k);
    for (int r = 0; r < ma.rows; ++r)
      for (int c = 0; c < ma.cols; ++c) m.at(r, c) = ma.at(r, c);
    for (int r = 0; r < mb.rows; ++r)
      for (int c = 0; c < mb.cols; ++c) m.at(ma.rows + r, ma.cols + c) = mb.at(r, c);
    maps.push_back(std::move(m));
  }
  return Representation(a.quiver_ptr(), a.field(), std::move(dims), std::move(maps));
}

bool is_morphism(const Morphism& phi, const Representation& a, const Representation& b) {
  require_compatible(a, b);
  const auto& q = a.quiver();
  if (phi.blocks.size() != q.vertex_count()) return false;
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (phi.blocks[v].rows != b.dim(v) || phi.blocks[v].cols != a.dim(v)) return false;
  const auto& f = a.field();
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto& arrow = q.arrows()[k];
    auto lhs = linalg::multiply(f, phi.blocks[arrow.target], a.map(k));
    auto rhs = linalg::multiply(f, b.map(k), phi.blocks[arrow.source]);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool is_monomorphism(const Morphism& phi, const Representation& a) {
  for (std::size_t v = 0; v < phi.blocks.size(); ++v)
    if (linalg::rank(a.field(), phi.blocks[v]) != a.dim(v)) return false;
  return true;
}

Morphism compose(const PrimeField& f, const Morphism& second, const Morphism& first) {
  Morphism out;
  for (std::size_t v = 0; v < first.blocks.size(); ++v)
    out.blocks.push_back(linalg::multiply(f, second.blocks[v], first.blocks[v]));
  return out;
}

std::vector<Morphism> hom_space(const Representation& a, const Representation& b) {
  require_compatible(a, b);
  const auto& q = a.quiver();
  const auto& f = a.field();
  const std::size_t n = q.vertex_count();
  // Unknown phi_v[r][c] lives at offset[v] + r * dim_A(v) + c.
  std::vector<int> offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + b.dim(v) * a.dim(v);
  const int unknowns = offset[n];

  int equations = 0;
  for (const auto& arrow : q.arrows()) equations += b.dim(arrow.target) * a.dim(arrow.source);
  Matrix system(equations, unknowns);
  int row = 0;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto [s, t] = q.arrows()[k];
    const Matrix& am = a.map(k);
    const Matrix& bm = b.map(k);
    // (phi_t A_k - B_k phi_s)[r][c] = 0
    for (int r = 0; r < b.dim(t); ++r)
      for (int c = 0; c < a.dim(s); ++c, ++row) {
        for (int j = 0; j < a.dim(t); ++j) {
          int col = offset[t] + r * a.dim(t) + j;
          system.at(row, col) = f.add(system.at(row, col), am.at(j, c));
        }
        for (int j = 0; j < b.dim(s); ++j) {
          int col = offset[s] + j * a.dim(s) + c;
          system.at(row, col) = f.sub(system.at(row, col), bm.at(r, j));
        }
      }
  }
  std::vector<Morphism> basis;
  for (const auto& vec : linalg::nullspace(f, std::move(system))) {
    Morphism phi;
    for (std::size_t v = 0; v < n; ++v) {
      Matrix block(b.dim(v), a.dim(v));
      std::copy(vec.begin() + offset[v], vec.begin() + offset[v + 1], block.a.begin());
      phi.blocks.push_back(std::move(block));
    }
    basis.push_back(std::move(phi));
  }
  return basis;
}

namespace {

std::uint64_t checked_power(int p, std::size_t k, std::uint64_t limit) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (out > limit / static_cast<std::uint64_t>(p)) return limit + 1;
    out *= static_cast<std::uint64_t>(p);
  }
  return out;
}

// Calls fn on every non-zero linear combination of `basis` until fn returns
// true. Coefficients run through F_p^k in base-p counting order.
template <class Fn>
bool scan_combinations(const PrimeField& f, const std::vector<Morphism>& basis, std::uint64_t limit, Fn&& fn) {
  const std::size_t k = basis.size();
  if (k == 0) return false;
  std::uint64_t total = checked_power(f.p(), k, limit);
  std::vector<std::uint8_t> coeff(k, 0);
  for (std::uint64_t idx = 1; idx < total && idx <= limit; ++idx) {
    for (std::size_t i = 0; i < k; ++i) {  // increment base-p counter
      if (++coeff[i] < f.p()) break;
      coeff[i] = 0;
    }
    Morphism phi = basis.front();
    for (auto& blk : phi.blocks) std::fill(blk.a.begin(), blk.a.end(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (!coeff[i]) continue;
      for (std::size_t v = 0; v < phi.blocks.size(); ++v) {
        auto& dst = phi.blocks[v].a;
        const auto& src = basis[i].blocks[v].a;
        for (std::size_t e = 0; e < dst.size(); ++e) dst[e] = f.add(dst[e], f.mul(coeff[i], src[e]));
      }
    }
    if (fn(phi)) return true;
  }
  return false;
}

bool dims_fit(const Representation& a, const Representation& b) {
  for (std::size_t v = 0; v < a.dims().size(); ++v)
    if (a.dim(v) > b.dim(v)) return false;
  return true;
}

Morphism zero_morphism(const Representation& a, const Representation& b) {
  Morphism phi;
  for (std::size_t v = 0; v < a.dims().size(); ++v) phi.blocks.emplace_back(b.dim(v), a.dim(v));
  return phi;
}

std::vector<Morphism> scannable_hom(const Representation& a, const Representation& b) {
  auto basis = hom_space(a, b);
  if (basis.size() > static_cast<std::size_t>(kMaxScannedHomDim))
    throw Error(ErrorCode::HomSpaceTooLarge, "dim Hom = " + std::to_string(basis.size()) + " exceeds " +
                                                 std::to_string(kMaxScannedHomDim));
  return basis;
}

}  // namespace

std::optional<Morphism> find_monomorphism(const Representation& a, const Representation& b) {
  require_compatible(a, b);
  if (a.is_zero()) return zero_morphism(a, b);
  if (!dims_fit(a, b)) return std::nullopt;
  auto basis = scannable_hom(a, b);
  std::optional<Morphism> found;
  scan_combinations(a.field(), basis, UINT64_MAX - 1, [&](const Morphism& phi) {
    if (!is_monomorphism(phi, a)) return false;
    found = phi;
    return true;
  });
  return found;
}

std::vector<Morphism> all_monomorphisms(const Representation& a, const Representation& b) {
  require_compatible(a, b);
  if (a.is_zero()) return {zero_morphism(a, b)};
  if (!dims_fit(a, b)) return {};
  auto basis = scannable_hom(a, b);
  std::vector<Morphism> out;
  scan_combinations(a.field(), basis, UINT64_MAX - 1, [&](const Morphism& phi) {
    if (is_monomorphism(phi, a)) out.push_back(phi);
    return false;
  });
  return out;
}

bool is_split_mono(const Morphism& phi, const Representation& a, const Representation& b) {
  require_compatible(a, b);
  if (a.is_zero()) return true;
  const auto& f = a.field();
  auto back = hom_space(b, a);
  const std::size_t n = a.dims().size();
  int rows = 0;
  for (std::size_t v = 0; v < n; ++v) rows += a.dim(v) * a.dim(v);
  Matrix system(rows, static_cast<int>(back.size()));
  std::vector<std::uint8_t> rhs(rows, 0);
  for (std::size_t i = 0; i < back.size(); ++i) {
    int row = 0;
    for (std::size_t v = 0; v < n; ++v) {
      auto prod = linalg::multiply(f, back[i].blocks[v], phi.blocks[v]);
      for (int r = 0; r < a.dim(v); ++r)
        for (int c = 0; c < a.dim(v); ++c, ++row) system.at(row, static_cast<int>(i)) = prod.at(r, c);
    }
  }
  int row = 0;
  for (std::size_t v = 0; v < n; ++v)
    for (int r = 0; r < a.dim(v); ++r)
      for (int c = 0; c < a.dim(v); ++c, ++row) rhs[row] = r == c ? 1 : 0;
  return linalg::solve(f, system, rhs).has_value();
}

// ---------------------------------------------------------------------------
// Matrix tuples and base change

namespace {

// All representations with a fixed dimension vector, encoded as integers:
// the concatenated arrow matrices (row-major) read as base-p digits, first
// entry most significant, so the least index is the lexicographically least
// tuple. GL(dims) acts by M_a -> g_t M_a g_s^{-1}; the generators below are
// elementary row/column operations at one vertex.
class TupleSpace {
 public:
  TupleSpace(const Quiver& q, const PrimeField& f, std::vector<int> dims) : field_(f), dims_(std::move(dims)) {
    const auto& arrows = q.arrows();
    arrows_ = arrows;
    offset_.resize(arrows.size() + 1, 0);
    for (std::size_t a = 0; a < arrows.size(); ++a)
      offset_[a + 1] = offset_[a] + dims_[arrows[a].target] * dims_[arrows[a].source];
    entries_ = offset_.back();
    count_ = checked_power(f.p(), static_cast<std::size_t>(entries_), std::uint64_t{1} << 62);
    weight_.assign(entries_, 1);
    for (int k = entries_ - 2; k >= 0; --k) weight_[k] = weight_[k + 1] * static_cast<std::uint64_t>(f.p());
    build_generators();
    build_splits();
  }

  int entries() const { return entries_; }
  std::uint64_t count() const { return count_; }  // > 2^62 means "too many"
  const std::vector<int>& dims() const { return dims_; }

  std::uint64_t encode(const Representation& r) const {
    std::uint64_t idx = 0;
    for (std::size_t a = 0; a < r.maps().size(); ++a)
      for (std::size_t e = 0; e < r.map(a).a.size(); ++e) idx += weight_[offset_[a] + e] * r.map(a).a[e];
    return idx;
  }

  void digits(std::uint64_t idx, std::uint8_t* out) const {
    for (int k = entries_ - 1; k >= 0; --k) {
      out[k] = static_cast<std::uint8_t>(idx % static_cast<std::uint64_t>(field_.p()));
      idx /= static_cast<std::uint64_t>(field_.p());
    }
  }

  Representation decode(std::uint64_t idx, std::shared_ptr<const Quiver> q) const {
    std::vector<std::uint8_t> d(entries_);
    digits(idx, d.data());
    return from_digits(d.data(), std::move(q));
  }

  Representation from_digits(const std::uint8_t* d, std::shared_ptr<const Quiver> q) const {
    std::vector<Matrix> maps;
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
      Matrix m(dims_[arrows_[a].target], dims_[arrows_[a].source]);
      std::copy(d + offset_[a], d + offset_[a + 1], m.a.begin());
      maps.push_back(std::move(m));
    }
    return Representation(std::move(q), field_, dims_, std::move(maps));
  }

  template <class Fn>
  void for_each_neighbor(const std::uint8_t* d, std::uint64_t idx, Fn&& fn) const {
    const auto p = static_cast<std::uint64_t>(field_.p());
    for (const auto& gen : generators_) {
      std::uint64_t next = idx;
      for (const auto& op : gen) {
        std::uint64_t nv = (op.a * d[op.k] + (op.b ? op.b * d[op.k2] : 0)) % p;
        next = next - weight_[op.k] * d[op.k] + weight_[op.k] * nv;
      }
      fn(next);
    }
  }

  /// Index into splits() of a block-diagonal pattern the tuple matches.
  std::optional<std::size_t> block_split(const std::uint8_t* d) const {
    if (entries_ > 64) return std::nullopt;
    std::uint64_t nonzero = 0;
    for (int k = 0; k < entries_; ++k)
      if (d[k]) nonzero |= std::uint64_t{1} << k;
    for (std::size_t s = 0; s < split_masks_.size(); ++s)
      if ((nonzero & split_masks_[s]) == 0) return s;
    return std::nullopt;
  }

  const std::vector<std::vector<int>>& splits() const { return splits_; }

  /// The two diagonal blocks of a tuple matching split s.
  std::pair<Representation, Representation> split_blocks(const std::uint8_t* d, std::size_t s,
                                                         const std::shared_ptr<const Quiver>& q) const {
    const auto& lo = splits_[s];
    std::vector<int> hi(dims_.size());
    for (std::size_t v = 0; v < dims_.size(); ++v) hi[v] = dims_[v] - lo[v];
    std::vector<Matrix> m1, m2;
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
      const auto [src, tgt] = arrows_[a];
      Matrix x(lo[tgt], lo[src]), y(hi[tgt], hi[src]);
      const int cols = dims_[src];
      for (int r = 0; r < dims_[tgt]; ++r)
        for (int c = 0; c < cols; ++c) {
          std::uint8_t e = d[offset_[a] + r * cols + c];
          if (r < lo[tgt] && c < lo[src]) x.at(r, c) = e;
          else if (r >= lo[tgt] && c >= lo[src]) y.at(r - lo[tgt], c - lo[src]) = e;
        }
      m1.push_back(std::move(x));
      m2.push_back(std::move(y));
    }
    return {Representation(q, field_, lo, std::move(m1)), Representation(q, field_, hi, std::move(m2))};
  }

 private:
  struct Op {
    int k;
    int k2;
    std::uint64_t a;
    std::uint64_t b;
  };

  int pos(std::size_t arrow, int r, int c) const { return offset_[arrow] + r * dims_[arrows_[arrow].source] + c; }

  void build_generators() {
    const int p = field_.p();
    for (std::size_t v = 0; v < dims_.size(); ++v) {
      const int n = dims_[v];
      if (p > 2)
        for (int i = 0; i < n; ++i) {
          // g = diag(.., w, ..): rows i of incoming maps times w, columns i of
          // outgoing maps times w^-1.
          std::vector<Op> gen;
          for (std::size_t a = 0; a < arrows_.size(); ++a) {
            if (arrows_[a].target == v)
              for (int c = 0; c < dims_[arrows_[a].source]; ++c) gen.push_back({pos(a, i, c), 0, field_.primitive_root(), 0});
            if (arrows_[a].source == v)
              for (int r = 0; r < dims_[arrows_[a].target]; ++r)
                gen.push_back({pos(a, r, i), 0, field_.inv(field_.primitive_root()), 0});
          }
          if (!gen.empty()) generators_.push_back(std::move(gen));
        }
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          // g = I + E_ij: row_i += row_j on incoming maps; g^-1 = I - E_ij:
          // col_j -= col_i on outgoing maps.
          std::vector<Op> gen;
          for (std::size_t a = 0; a < arrows_.size(); ++a) {
            if (arrows_[a].target == v)
              for (int c = 0; c < dims_[arrows_[a].source]; ++c) gen.push_back({pos(a, i, c), pos(a, j, c), 1, 1});
            if (arrows_[a].source == v)
              for (int r = 0; r < dims_[arrows_[a].target]; ++r)
                gen.push_back({pos(a, r, j), pos(a, r, i), 1, static_cast<std::uint64_t>(p - 1)});
          }
          if (!gen.empty()) generators_.push_back(std::move(gen));
        }
    }
  }

  void build_splits() {
    std::vector<int> lo(dims_.size(), 0);
    const int total = std::accumulate(dims_.begin(), dims_.end(), 0);
    while (true) {
      std::size_t v = 0;
      while (v < lo.size() && lo[v] == dims_[v]) lo[v++] = 0;
      if (v == lo.size()) break;
      ++lo[v];
      const int sum = std::accumulate(lo.begin(), lo.end(), 0);
      if (sum == 0 || sum == total) continue;
      std::uint64_t mask = 0;
      for (std::size_t a = 0; a < arrows_.size(); ++a) {
        const auto [src, tgt] = arrows_[a];
        for (int r = 0; r < dims_[tgt]; ++r)
          for (int c = 0; c < dims_[src]; ++c)
            if ((r < lo[tgt]) != (c < lo[src]) && pos(a, r, c) < 64) mask |= std::uint64_t{1} << pos(a, r, c);
      }
      splits_.push_back(lo);
      split_masks_.push_back(mask);
    }
  }

  PrimeField field_;
  std::vector<int> dims_;
  std::vector<Arrow> arrows_;
  std::vector<int> offset_;
  int entries_ = 0;
  std::uint64_t count_ = 1;
  std::vector<std::uint64_t> weight_;
  std::vector<std::vector<Op>> generators_;
  std::vector<std::vector<int>> splits_;
  std::vector<std::uint64_t> split_masks_;
};

constexpr std::uint64_t kOrbitBudget = std::uint64_t{1} << 22;

struct OrbitResult {
  std::uint64_t least;
  std::optional<std::pair<Representation, Representation>> split;
};

// BFS over the orbit of `a`. Stops early at a block-diagonal tuple when
// `stop_at_split` is set.
OrbitResult explore_orbit(const Representation& a, bool stop_at_split) {
  TupleSpace space(a.quiver(), a.field(), a.dims());
  if (space.entries() > 64 || space.count() > (std::uint64_t{1} << 62))
    throw BudgetError(a.dims(), "matrix tuples do not fit a 64-bit index");
  std::uint64_t start = space.encode(a);
  std::unordered_set<std::uint64_t> seen{start};
  std::deque<std::uint64_t> queue{start};
  std::vector<std::uint8_t> d(std::max(space.entries(), 1));
  OrbitResult result{start, std::nullopt};
  while (!queue.empty()) {
    std::uint64_t idx = queue.front();
    queue.pop_front();
    result.least = std::min(result.least, idx);
    space.digits(idx, d.data());
    if (stop_at_split && !result.split) {
      if (auto s = space.block_split(d.data())) {
        result.split = space.split_blocks(d.data(), *s, a.quiver_ptr());
        return result;
      }
    }
    space.for_each_neighbor(d.data(), idx, [&](std::uint64_t next) {
      if (seen.insert(next).second) queue.push_back(next);
    });
    if (seen.size() > kOrbitBudget) throw BudgetError(a.dims(), "orbit exceeds the exploration budget");
  }
  return result;
}

}  // namespace

std::uint64_t canonical_index(const Representation& a) { return explore_orbit(a, false).least; }

bool are_isomorphic(const Representation& a, const Representation& b) {
  require_compatible(a, b);
  if (a.dims() != b.dims()) return false;
  if (a.is_zero()) return true;
  auto basis = hom_space(a, b);
  const std::uint64_t limit = std::uint64_t{1} << 16;
  if (checked_power(a.field().p(), basis.size(), limit) <= limit) {
    return scan_combinations(a.field(), basis, limit, [&](const Morphism& phi) {
      for (std::size_t v = 0; v < phi.blocks.size(); ++v)
        if (linalg::rank(a.field(), phi.blocks[v]) != a.dim(v)) return false;
      return true;
    });
  }
  return canonical_index(a) == canonical_index(b);
}

// ---------------------------------------------------------------------------
// Decomposition

Representation restrict_to(const Representation& a, const std::vector<Matrix>& bases) {
  const auto& q = a.quiver();
  const auto& f = a.field();
  std::vector<int> dims(q.vertex_count());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = bases[v].cols;
  std::vector<Matrix> maps;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const auto [s, t] = q.arrows()[k];
    Matrix image = linalg::multiply(f, a.map(k), bases[s]);
    Matrix m(dims[t], dims[s]);
    for (int c = 0; c < dims[s]; ++c) {
      std::vector<std::uint8_t> col(image.rows);
      for (int r = 0; r < image.rows; ++r) col[r] = image.at(r, c);
      auto coords = linalg::solve(f, bases[t], col);
      if (!coords) throw Error(ErrorCode::InvalidQuiver, "subspaces are not stable under the arrows");
      for (int r = 0; r < dims[t]; ++r) m.at(r, c) = (*coords)[r];
    }
    maps.push_back(std::move(m));
  }
  return Representation(a.quiver_ptr(), f, std::move(dims), std::move(maps));
}

namespace {

// Fitting: for an endomorphism f and N >= every dim, A = Im f^N + Ker f^N.
// Both parts are non-zero iff f is neither nilpotent nor invertible.
std::optional<std::pair<Representation, Representation>> fitting_split(const Representation& a, const Morphism& f) {
  const auto& field = a.field();
  const int n = *std::max_element(a.dims().begin(), a.dims().end());
  bool nilpotent = true, invertible = true;
  std::vector<Matrix> powers;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) {
    powers.push_back(linalg::power(field, f.blocks[v], n));
    if (!powers.back().is_zero()) nilpotent = false;
    if (linalg::rank(field, f.blocks[v]) < a.dim(v)) invertible = false;
  }
  if (nilpotent || invertible) return std::nullopt;
  std::vector<Matrix> image, kernel;
  for (const auto& m : powers) {
    image.push_back(linalg::image_basis(field, m));
    kernel.push_back(linalg::kernel_basis(field, m));
  }
  return std::make_pair(restrict_to(a, image), restrict_to(a, kernel));
}

constexpr std::uint64_t kEndScanLimit = std::uint64_t{1} << 16;

std::optional<std::pair<Representation, Representation>> split_once(const Representation& a, std::uint64_t seed) {
  auto basis = hom_space(a, a);
  if (seed) std::shuffle(basis.begin(), basis.end(), std::mt19937_64(seed));
  std::optional<std::pair<Representation, Representation>> found;
  auto try_element = [&](const Morphism& f) {
    found = fitting_split(a, f);
    return found.has_value();
  };
  for (const auto& b : basis)
    if (try_element(b)) return found;
  // Every element nilpotent or invertible <=> End(A) local <=> A indecomposable.
  const bool exhaustive = checked_power(a.field().p(), basis.size(), kEndScanLimit) <= kEndScanLimit;
  if (scan_combinations(a.field(), basis, kEndScanLimit, try_element)) return found;
  if (exhaustive) return std::nullopt;
  return explore_orbit(a, true).split;
}

}  // namespace

bool is_indecomposable(const Representation& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroRepresentation, "the zero representation is not indecomposable");
  return !split_once(a, 0).has_value();
}

std::vector<Representation> decompose(const Representation& a, std::uint64_t seed) {
  std::vector<Representation> out;
  std::vector<Representation> pending;
  if (!a.is_zero()) pending.push_back(a);
  while (!pending.empty()) {
    Representation cur = std::move(pending.back());
    pending.pop_back();
    if (auto parts = split_once(cur, seed)) {
      pending.push_back(std::move(parts->first));
      pending.push_back(std::move(parts->second));
    } else {
      out.push_back(std::move(cur));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Representation& x, const Representation& y) {
    if (x.total_dim() != y.total_dim()) return x.total_dim() < y.total_dim();
    return x.dims() < y.dims();
  });
  return out;
}

// ---------------------------------------------------------------------------
// Lengths and socles

CategoryLengthFunction CategoryLengthFunction::ones(std::size_t vertex_count) {
  return {std::vector<Rational>(vertex_count, Rational(1))};
}

CategoryLengthFunction CategoryLengthFunction::socle_weighted(std::size_t vertex_count, std::size_t vertex) {
  std::vector<Rational> values(vertex_count, Rational(2));
  values.at(vertex) = Rational(1);
  return {std::move(values)};
}

CategoryLengthFunction CategoryLengthFunction::make(std::vector<Rational> values) {
  for (const auto& v : values)
    if (v <= 0) throw Error(ErrorCode::InvalidQuiver, "simple lengths must be positive");
  return {std::move(values)};
}

Rational module_length(const Representation& a, const CategoryLengthFunction& l) {
  if (l.simple_values.size() != a.dims().size())
    throw Error(ErrorCode::QuiverMismatch, "length function has the wrong number of simple values");
  Rational sum(0);
  for (std::size_t v = 0; v < a.dims().size(); ++v) sum += l.simple_values[v] * a.dim(v);
  return sum;
}

std::vector<std::size_t> socle_simples(const Representation& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroRepresentation, "the zero representation has no socle");
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < a.quiver().vertex_count(); ++v)
    if (exists_mono(Representation::simple(a.quiver_ptr(), a.field(), v), a)) out.push_back(v);
  return out;
}

int socle_dimension(const Representation& a) {
  int total = 0;
  for (std::size_t v = 0; v < a.quiver().vertex_count(); ++v)
    total += static_cast<int>(hom_space(Representation::simple(a.quiver_ptr(), a.field(), v), a).size());
  return total;
}


// ---------------------------------------------------------------------------
// Enumeration of ind

namespace {

bool support_connected(const Quiver& q, const std::vector<int>& dims) {
  std::vector<std::size_t> support;
  for (std::size_t v = 0; v < dims.size(); ++v)
    if (dims[v] > 0) support.push_back(v);
  if (support.empty()) return false;
  std::vector<bool> reached(dims.size(), false);
  std::vector<std::size_t> stack{support.front()};
  reached[support.front()] = true;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (const auto& a : q.arrows()) {
      std::size_t w;
      if (a.source == v) w = a.target;
      else if (a.target == v) w = a.source;
      else continue;
      if (dims[w] > 0 && !reached[w]) {
        reached[w] = true;
        stack.push_back(w);
      }
    }
  }
  for (auto v : support)
    if (!reached[v]) return false;
  return true;
}

// Dimension vectors of total 1..max_len, by total then lexicographically.
std::vector<std::vector<int>> dimension_vectors(std::size_t n, int max_len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
    if (v == n) {
      if (left < max_len) out.push_back(cur);
      return;
    }
    for (int d = 0; d <= left; ++d) {
      cur[v] = d;
      rec(v + 1, left - d);
    }
    cur[v] = 0;
  };
  rec(0, max_len);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int sa = std::accumulate(a.begin(), a.end(), 0), sb = std::accumulate(b.begin(), b.end(), 0);
    if (sa != sb) return sa < sb;
    return a < b;
  });
  return out;
}

bool is_path_quiver(const Quiver& q) {
  std::vector<int> degree(q.vertex_count(), 0);
  for (const auto& a : q.arrows()) {
    ++degree[a.source];
    ++degree[a.target];
  }
  for (int d : degree)
    if (d > 2) return false;
  return q.arrows().size() + 1 == q.vertex_count();
}

// Rational points (x:y) of P^1 at which x A + y B is singular.
std::vector<std::pair<int, int>> singular_points(const Representation& r) {
  const auto& f = r.field();
  std::vector<std::pair<int, int>> points{{0, 1}};
  for (int y = 0; y < f.p(); ++y) points.emplace_back(1, y);
  std::vector<std::pair<int, int>> out;
  for (auto [x, y] : points) {
    Matrix m = linalg::add(f, linalg::scale(f, static_cast<std::uint8_t>(x), r.map(0)),
                           linalg::scale(f, static_cast<std::uint8_t>(y), r.map(1)));
    if (linalg::rank(f, m) < r.dim(0)) out.emplace_back(x, y);
  }
  return out;
}

std::pair<std::string, std::string> class_label(const Representation& r) {
  const auto& q = r.quiver();
  const auto& d = r.dims();
  if (q.is_kronecker()) {
    int a = d[0], b = d[1];
    if (b == a + 1) return {"P_" + std::to_string(b), "P"};
    if (a == b + 1) return {"Q_" + std::to_string(a), "Q"};
    if (a == b) {
      auto pts = singular_points(r);
      if (pts.size() == 1)
        return {"R_" + std::to_string(a) + "(" + std::to_string(pts[0].first) + ":" + std::to_string(pts[0].second) + ")",
                "R"};
      return {"R_" + std::to_string(a) + "[1]", "R*"};
    }
  }
  if (r.total_dim() == 1) {
    for (std::size_t v = 0; v < d.size(); ++v)
      if (d[v]) return {"S_" + q.vertices()[v], "S"};
  }
  bool thin = std::all_of(d.begin(), d.end(), [](int x) { return x <= 1; });
  if (thin && is_path_quiver(q)) {
    std::string label = "I(";
    bool first = true;
    for (std::size_t v = 0; v < d.size(); ++v)
      if (d[v]) {
        label += (first ? "" : ",") + q.vertices()[v];
        first = false;
      }
    return {label + ")", "I"};
  }
  std::string label = "M(";
  for (std::size_t v = 0; v < d.size(); ++v) label += (v ? "," : "") + std::to_string(d[v]);
  return {label + ")", "M"};
}

// Makes labels unique: repeated "R_n[1]" become "R_n[2]", ...; any other
// repeat gets a "#k" suffix.
void uniquify_labels(std::vector<IndClass>& classes) {
  std::map<std::string, int> seen;
  for (auto& c : classes) {
    int k = ++seen[c.label];
    if (k == 1) continue;
    if (c.family == "R*") {
      auto base = c.label.substr(0, c.label.find('['));
      c.label = base + "[" + std::to_string(k) + "]";
    } else {
      c.label += "#" + std::to_string(k);
    }
  }
}

bool category_complete(const Quiver& q, int max_len) {
  return q.is_finite_type() && max_len >= q.max_root_height();
}

Poset subobject_poset(const std::vector<IndClass>& classes) {
  std::vector<ElementId> ids;
  for (const auto& c : classes) ids.push_back(c.label);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j) {
      if (classes[i].rep.total_dim() >= classes[j].rep.total_dim()) continue;
      if (exists_mono(classes[i].rep, classes[j].rep)) pairs.emplace_back(i, j);
    }
  return Poset::from_index_relations(std::move(ids), pairs);
}

}  // namespace

IndPoset enumerate_ind(const Quiver& q, const PrimeField& f, int max_len, const EnumerationOptions& opts) {
  if (max_len < 1) throw Error(ErrorCode::InvalidQuiver, "maxLen must be positive");
  if (max_len > opts.max_len_cap)
    throw BudgetError({}, "maxLen " + std::to_string(max_len) + " exceeds the cap of " + std::to_string(opts.max_len_cap));
  auto quiver = std::make_shared<const Quiver>(q);
  auto tables = std::make_shared<std::map<std::vector<int>, std::vector<std::int32_t>>>();
  std::vector<IndClass> classes;

  for (const auto& dims : dimension_vectors(q.vertex_count(), max_len)) {
    if (!support_connected(q, dims)) continue;
    TupleSpace space(q, f, dims);
    if (space.count() > opts.tuple_budget) {
      std::string dv;
      for (std::size_t v = 0; v < dims.size(); ++v) dv += (v ? "," : "") + std::to_string(dims[v]);
      throw BudgetError(dims, "dimension vector (" + dv + ") has " +
                                  (space.count() > (std::uint64_t{1} << 62) ? std::string("too many")
                                                                             : std::to_string(space.count())) +
                                  " matrix tuples, budget " + std::to_string(opts.tuple_budget));
    }
    const auto count = static_cast<std::size_t>(space.count());
    // Orbit number per tuple while exploring; class index or -1 afterwards.
    std::vector<std::int32_t> table(count, -1);
    std::vector<std::int32_t> orbit_class;
    std::vector<std::uint8_t> d(std::max(space.entries(), 1));
    std::vector<std::uint64_t> queue;
    for (std::uint64_t start = 0; start < count; ++start) {
      if (table[start] >= 0) continue;
      const auto orbit = static_cast<std::int32_t>(orbit_class.size());
      bool decomposable = false;
      queue.assign(1, start);
      table[start] = orbit;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        auto idx = queue[head];
        space.digits(idx, d.data());
        if (!decomposable && space.block_split(d.data())) decomposable = true;
        space.for_each_neighbor(d.data(), idx, [&](std::uint64_t next) {
          if (table[next] < 0) {
            table[next] = orbit;
            queue.push_back(next);
          }
        });
      }
      if (decomposable) {
        orbit_class.push_back(-1);
        continue;
      }
      orbit_class.push_back(static_cast<std::int32_t>(classes.size()));
      Representation rep = space.decode(start, quiver);
      auto [label, family] = class_label(rep);
      classes.push_back({std::move(rep), std::move(label), std::move(family), start});
    }
    for (auto& t : table) t = orbit_class[t];
    (*tables)[dims] = std::move(table);
  }
  uniquify_labels(classes);

  IndPoset out;
  out.quiver_ = quiver;
  out.field_ = f;
  out.max_len_ = max_len;
  out.complete_ = category_complete(q, max_len);
  out.poset_ = subobject_poset(classes);
  out.classes_ = std::move(classes);
  out.tables_ = std::move(tables);
  return out;
}

IndPoset IndPoset::from_classes(std::shared_ptr<const Quiver> quiver, PrimeField field, int max_len,
                                std::vector<IndClass> classes) {
  IndPoset out;
  for (const auto& c : classes)
    if (!(c.rep.quiver() == *quiver) || !(c.rep.field() == field))
      throw Error(ErrorCode::QuiverMismatch, "class '" + c.label + "' belongs to another category");
  out.complete_ = category_complete(*quiver, max_len);
  out.quiver_ = std::move(quiver);
  out.field_ = field;
  out.max_len_ = max_len;
  out.poset_ = subobject_poset(classes);
  out.classes_ = std::move(classes);
  return out;
}

std::optional<std::size_t> IndPoset::classify(const Representation& rep) const {
  if (!(rep.quiver() == *quiver_) || !(rep.field() == field_))
    throw Error(ErrorCode::QuiverMismatch, "representation of another category");
  if (rep.is_zero()) return std::nullopt;
  if (rep.total_dim() > max_len_)
    throw Error(ErrorCode::BoundTooTight, "total dimension " + std::to_string(rep.total_dim()) +
                                              " exceeds the enumeration bound " + std::to_string(max_len_));
  if (!support_connected(*quiver_, rep.dims())) return std::nullopt;
  if (!tables_) throw Error(ErrorCode::BoundTooTight, "no classification tables for this IndPoset");
  TupleSpace space(*quiver_, field_, rep.dims());
  auto cls = tables_->at(rep.dims())[space.encode(rep)];
  if (cls < 0) return std::nullopt;
  return static_cast<std::size_t>(cls);
}

LengthFunction IndPoset::lengths(const CategoryLengthFunction& l) const {
  std::vector<ChainValue> values;
  for (const auto& c : classes_) values.push_back(ChainValue::scalar(module_length(c.rep, l)));
  return LengthFunction::make(poset_, std::move(values));
}

}  // namespace grm
