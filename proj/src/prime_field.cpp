#include "grm/prime_field.hpp"

#include <string>
#include <utility>

#include "grm/error.hpp"

namespace grm {

PrimeField::PrimeField(int p) : p_(p) {
  switch (p) {
    case 2: root_ = 1; break;
    case 3: root_ = 2; break;
    case 5: root_ = 2; break;
    case 7: root_ = 3; break;
    default: throw Error(ErrorCode::InvalidField, "characteristic must be a prime <= 7, got " + std::to_string(p));
  }
  for (int a = 1; a < p; ++a)
    for (int b = 1; b < p; ++b)
      if (a * b % p == 1) inverse_[a] = static_cast<std::uint8_t>(b);
}

bool Matrix::is_zero() const {
  for (auto v : a)
    if (v) return false;
  return true;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace linalg {

Matrix multiply(const PrimeField& f, const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) throw Error(ErrorCode::QuiverMismatch, "matrix shapes do not compose");
  Matrix out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      std::uint8_t xv = x.at(i, k);
      if (!xv) continue;
      for (int j = 0; j < y.cols; ++j) out.at(i, j) = f.add(out.at(i, j), f.mul(xv, y.at(k, j)));
    }
  return out;
}

Matrix add(const PrimeField& f, const Matrix& x, const Matrix& y) {
  Matrix out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = f.add(x.a[i], y.a[i]);
  return out;
}

Matrix subtract(const PrimeField& f, const Matrix& x, const Matrix& y) {
  Matrix out = x;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = f.sub(x.a[i], y.a[i]);
  return out;
}

Matrix scale(const PrimeField& f, std::uint8_t c, const Matrix& x) {
  Matrix out = x;
  for (auto& v : out.a) v = f.mul(c, v);
  return out;
}

Matrix power(const PrimeField& f, const Matrix& x, int k) {
  Matrix result = Matrix::identity(x.rows);
  Matrix base = x;
  while (k > 0) {
    if (k & 1) result = multiply(f, result, base);
    base = multiply(f, base, base);
    k >>= 1;
  }
  return result;
}

std::vector<int> rref(const PrimeField& f, Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int sel = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, col)) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
    std::uint8_t inv = f.inv(m.at(row, col));
    for (int c = 0; c < m.cols; ++c) m.at(row, c) = f.mul(inv, m.at(row, c));
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || !m.at(r, col)) continue;
      std::uint8_t factor = m.at(r, col);
      for (int c = 0; c < m.cols; ++c) m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(const PrimeField& f, Matrix m) { return static_cast<int>(rref(f, m).size()); }

std::vector<std::vector<std::uint8_t>> nullspace(const PrimeField& f, Matrix m) {
  auto pivots = rref(f, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint8_t>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint8_t> v(m.cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m.at(static_cast<int>(r), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix image_basis(const PrimeField& f, const Matrix& m) {
  Matrix reduced = m;
  auto pivots = rref(f, reduced);
  Matrix out(m.rows, static_cast<int>(pivots.size()));
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (int r = 0; r < m.rows; ++r) out.at(r, static_cast<int>(j)) = m.at(r, pivots[j]);
  return out;
}

Matrix kernel_basis(const PrimeField& f, const Matrix& m) {
  auto basis = nullspace(f, m);
  Matrix out(m.cols, static_cast<int>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (int r = 0; r < m.cols; ++r) out.at(r, static_cast<int>(j)) = basis[j][r];
  return out;
}

std::optional<std::vector<std::uint8_t>> solve(const PrimeField& f, const Matrix& m,
                                               const std::vector<std::uint8_t>& b) {
  Matrix aug(m.rows, m.cols + 1);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols) = b[r];
  }
  auto pivots = rref(f, aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  std::vector<std::uint8_t> x(m.cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), m.cols);
  return x;
}

}  // namespace linalg
}  // namespace grm
