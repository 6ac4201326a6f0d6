#pragma once

// Dense exact linear algebra over a prime field. Square matrices model both
// gl_n and points of GL_n; rectangular ones show up as linear systems.

#include "infsub/fields.hpp"
#include "infsub/random.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace infsub {

class Matrix {
public:
  /// Zero matrix. `field` must be a prime field.
  Matrix(Field field, std::size_t rows, std::size_t cols);
  /// Square zero matrix.
  Matrix(Field field, std::size_t n) : Matrix(field, n, n) {}
  /// Entries given row by row as integers, reduced mod p.
  Matrix(Field field, std::initializer_list<std::initializer_list<long long>> rows);

  static Matrix identity(Field field, std::size_t n);
  /// E_{ij}, zero-based indices.
  static Matrix elementary(Field field, std::size_t n, std::size_t i, std::size_t j);
  static Matrix diagonal(Field field, std::span<const long long> diag);
  /// Nilpotent Jordan block of size n (ones on the superdiagonal).
  static Matrix jordan_block(Field field, std::size_t n);

  const Field &field() const { return field_; }
  Residue p() const { return field_.p(); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  /// Dimension of a square matrix; UsageError otherwise.
  std::size_t n() const;

  Residue operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Residue &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, long long v) {
    data_[i * cols_ + j] = modp::from_int(v, field_.p());
  }
  std::span<const Residue> data() const { return data_; }

  Matrix operator+(const Matrix &o) const;
  Matrix operator-(const Matrix &o) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix &o) const;
  Matrix scaled(Residue c) const;
  Matrix &operator+=(const Matrix &o);

  Matrix pow(std::uint64_t e) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;
  Residue trace() const;
  Residue determinant() const;
  std::size_t rank() const;
  bool is_invertible() const { return determinant() != 0; }
  /// Throws DomainError for singular input.
  Matrix inverse() const;

  friend bool operator==(const Matrix &, const Matrix &) = default;

  std::string to_string() const;

private:
  void require_compatible(const Matrix &o, const char *op) const;

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

/// [a, b] = ab - ba.
Matrix commutator(const Matrix &a, const Matrix &b);

/// g x g^{-1}. DomainError if g is singular.
Matrix conjugate(const Matrix &g, const Matrix &x);

/// a^p = 0, with p the characteristic (the [p]-map of gl_n is the p-th power).
bool is_p_nilpotent(const Matrix &a);
/// (g - 1)^p = 0.
bool is_p_unipotent(const Matrix &g);

/// Reduced row echelon form with leftmost pivots. Returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix &a);

/// Null-space basis of A (vectors x with A x = 0), one basis vector per free
/// column of the reduced echelon form, with a 1 in that free coordinate.
std::vector<std::vector<Residue>> kernel_basis(const Matrix &a);

/// Basis of the centralizer {Y : XY = YX}, as the kernel of Y -> [X, Y] in
/// row-major coordinates.
std::vector<Matrix> centralizer_basis(const Matrix &x);

/// Reshape a length n*n vector (row-major) into a square matrix.
Matrix matrix_from_vector(const Field &field, std::size_t n, std::span<const Residue> v);

/// A square matrix known to satisfy X^p = 0.
class NilpotentWitness {
public:
  /// DomainError unless `m` is square and m^p = 0.
  explicit NilpotentWitness(Matrix m);

  const Matrix &matrix() const { return m_; }
  Residue checked_power() const { return m_.p(); }

  friend bool operator==(const NilpotentWitness &, const NilpotentWitness &) = default;

private:
  Matrix m_;
};

/// r pairwise-commuting p-nilpotent matrices of common size: a point of
/// C_r(N_1(gl_n)).
class CommutingTuple {
public:
  /// DomainError if any element fails p-nilpotency or pairwise commutation;
  /// UsageError on an empty list or mismatched sizes and fields.
  explicit CommutingTuple(std::vector<Matrix> layers);

  std::size_t r() const { return layers_.size(); }
  std::size_t n() const { return layers_.front().matrix().n(); }
  const Field &field() const { return layers_.front().matrix().field(); }
  const Matrix &operator[](std::size_t i) const { return layers_[i].matrix(); }
  std::vector<Matrix> matrices() const;

  friend bool operator==(const CommutingTuple &, const CommutingTuple &) = default;

private:
  std::vector<NilpotentWitness> layers_;
};

/// Uniform random matrix.
Matrix random_matrix(const Field &field, std::size_t rows, std::size_t cols,
                     SplitMix64 &rng);
/// Uniform random strictly upper-triangular n x n matrix.
Matrix random_strict_upper(const Field &field, std::size_t n, SplitMix64 &rng);
/// Random invertible matrix (rejection sampling on the determinant).
Matrix random_invertible(const Field &field, std::size_t n, SplitMix64 &rng);

/// Deterministic random commuting tuple. Even seeds draw polynomials
/// without constant term in one random strictly upper-triangular matrix;
/// odd seeds draw each layer from the strictly upper-triangular matrices
/// commuting with all previous layers. Requires n <= p so that every
/// strictly upper-triangular sample is p-nilpotent (UsageError otherwise).
CommutingTuple random_commuting_tuple(const Field &field, std::size_t n,
                                      std::size_t r, std::uint64_t seed);

} // namespace infsub
