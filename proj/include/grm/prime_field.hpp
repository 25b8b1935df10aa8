#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace grm {

/// The prime field F_p for a small prime p (at most 7).
class PrimeField {
 public:
  explicit PrimeField(int p = 2);  // throws InvalidField

  int p() const { return p_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return static_cast<std::uint8_t>((a + b) % p_); }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return static_cast<std::uint8_t>((a + p_ - b) % p_); }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return static_cast<std::uint8_t>((a * b) % p_); }
  std::uint8_t neg(std::uint8_t a) const { return static_cast<std::uint8_t>((p_ - a) % p_); }
  std::uint8_t inv(std::uint8_t a) const { return inverse_[a]; }
  /// A generator of the multiplicative group.
  std::uint8_t primitive_root() const { return root_; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  int p_;
  std::uint8_t root_;
  std::uint8_t inverse_[8] = {};
};

/// Dense row-major matrix over a prime field.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  std::uint8_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  std::uint8_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  bool is_zero() const;
  static Matrix identity(int n);

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

namespace linalg {

Matrix multiply(const PrimeField& f, const Matrix& x, const Matrix& y);
Matrix add(const PrimeField& f, const Matrix& x, const Matrix& y);
Matrix subtract(const PrimeField& f, const Matrix& x, const Matrix& y);
Matrix scale(const PrimeField& f, std::uint8_t c, const Matrix& x);
Matrix power(const PrimeField& f, const Matrix& x, int k);

int rank(const PrimeField& f, Matrix m);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(const PrimeField& f, Matrix& m);

/// Basis of { x : m x = 0 }, one vector per free column.
std::vector<std::vector<std::uint8_t>> nullspace(const PrimeField& f, Matrix m);

/// Columns spanning the image (a maximal independent subset of m's columns).
Matrix image_basis(const PrimeField& f, const Matrix& m);
/// Columns spanning the kernel.
Matrix kernel_basis(const PrimeField& f, const Matrix& m);

/// Some solution of m x = b, if one exists.
std::optional<std::vector<std::uint8_t>> solve(const PrimeField& f, const Matrix& m, const std::vector<std::uint8_t>& b);

}  // namespace linalg
}  // namespace grm
