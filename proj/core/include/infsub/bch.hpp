#pragma once

// Unipotent radicals of standard parabolics of GL_n and the group law on
// their Lie algebras transported through the truncated exponential:
//
//   x * y = log(exp(x) exp(y))
//
// which is the Baker-Campbell-Hausdorff product whenever the nilpotence
// class (number of blocks minus one) is below p.

#include "infsub/matrix.hpp"
#include "infsub/report.hpp"

#include <cstdint>
#include <vector>

namespace infsub {

/// Standard parabolic P_J of GL_n given by a composition of n into diagonal
/// blocks, with radical u = block-strictly-upper matrices.
class UnipotentRadicalModel {
public:
  /// UsageError for an empty/zero composition; DomainError if the
  /// nilpotence class (#blocks - 1) is not below p.
  UnipotentRadicalModel(Field field, std::vector<std::size_t> block_sizes);

  const Field &field() const { return field_; }
  std::size_t n() const { return n_; }
  const std::vector<std::size_t> &block_sizes() const { return blocks_; }
  std::size_t nilpotence_class() const { return blocks_.size() - 1; }
  /// Block index of row/column i.
  std::size_t block_of(std::size_t i) const { return block_of_[i]; }

  /// Position (i, j) lies strictly above the block diagonal.
  bool in_radical_position(std::size_t i, std::size_t j) const;
  /// Position (i, j) lies on or above the block diagonal.
  bool in_parabolic_position(std::size_t i, std::size_t j) const;

  bool contains(const Matrix &x) const;          // x in u
  bool contains_unipotent(const Matrix &g) const; // g in U = 1 + u
  bool contains_parabolic(const Matrix &g) const; // g in P, invertible

  /// All E_ij with (i, j) a radical position (root vectors of u).
  std::vector<Matrix> root_vectors() const;

  Matrix random_element(SplitMix64 &rng) const;
  /// Invertible block-upper-triangular matrix.
  Matrix random_parabolic(SplitMix64 &rng) const;

private:
  Field field_;
  std::size_t n_ = 0;
  std::vector<std::size_t> blocks_;
  std::vector<std::size_t> block_of_;
};

/// Element of u, membership checked against its model.
class BCHElement {
public:
  /// UsageError if x is not supported on radical positions.
  BCHElement(const UnipotentRadicalModel &model, Matrix x);

  const Matrix &matrix() const { return x_; }

  friend bool operator==(const BCHElement &a, const BCHElement &b) { return a.x_ == b.x_; }

private:
  Matrix x_;
};

/// log(exp(x) exp(y)).
BCHElement bch_mul(const UnipotentRadicalModel &model, const BCHElement &x, const BCHElement &y);

/// The equivariant isomorphism u -> U (truncated exponential). Throws
/// InternalConsistencyError if the image leaves U.
Matrix epsilon_P(const UnipotentRadicalModel &model, const BCHElement &x);
/// Inverse of epsilon_P. UsageError if u is not in U.
BCHElement epsilon_P_inverse(const UnipotentRadicalModel &model, const Matrix &u);

/// Group axioms, exp homomorphism, class-2 closed form (when the class is 2
/// or less), root clause, tangent identity, on `samples` random triples.
Report check_bch_group(const UnipotentRadicalModel &model, std::size_t samples,
                       std::uint64_t seed, unsigned jobs = 1);

/// epsilon(g x g^{-1}) = g epsilon(x) g^{-1} for random g in P and x in u.
Report check_P_equivariance(const UnipotentRadicalModel &model, std::size_t samples,
                            std::uint64_t seed, unsigned jobs = 1);

/// For g = p_I w p_J (w a permutation) and x in u_J with g x g^{-1} in u_I:
/// epsilon_I(g x g^{-1}) = g epsilon_J(x) g^{-1}. x is drawn from the linear
/// subspace u_J cap g^{-1} u_I g, so many samples are nonzero.
Report check_cross_parabolic(const UnipotentRadicalModel &model_i,
                             const UnipotentRadicalModel &model_j, std::size_t samples,
                             std::uint64_t seed, unsigned jobs = 1);

} // namespace infsub
