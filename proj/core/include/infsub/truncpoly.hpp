#pragma once

// Truncated polynomial rings k[t]/(t^L) and k[s,t]/(s^L, t^L), L = p^r,
// scalar- and matrix-valued. A matrix over k[t]/(t^L) is stored as its
// list of coefficient matrices A_0, ..., A_{L-1}.

#include "infsub/fields.hpp"
#include "infsub/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace infsub {

/// Upper bound on the scalar length p^r. Two-variable grids hold
/// (p^r)^2 coefficients, so this also bounds their memory.
inline constexpr std::size_t kDefaultTruncLengthCap = 343;

/// p^r, checked against `cap` (CapacityError).
std::size_t trunc_length(Residue p, unsigned r, std::size_t cap = kDefaultTruncLengthCap);

class TruncPoly2;

/// Element of k[t]/(t^{p^r}) over a prime field.
class TruncPoly {
public:
  /// The zero polynomial.
  TruncPoly(Field field, unsigned r);
  /// Coefficients c_0, c_1, ... (reduced mod p); missing ones are zero,
  /// surplus ones must be zero (anything at degree >= p^r is a usage error).
  TruncPoly(Field field, unsigned r, std::vector<long long> coeffs);

  static TruncPoly monomial(Field field, unsigned r, std::size_t degree, Residue c = 1);

  const Field &field() const { return field_; }
  Residue p() const { return field_.p(); }
  unsigned r() const { return r_; }
  std::size_t length() const { return coeffs_.size(); }
  Residue operator[](std::size_t m) const { return coeffs_[m]; }
  Residue &operator[](std::size_t m) { return coeffs_[m]; }
  const std::vector<Residue> &coeffs() const { return coeffs_; }
  Residue counit() const { return coeffs_[0]; }
  bool is_zero() const;

  TruncPoly operator+(const TruncPoly &o) const;
  TruncPoly operator-(const TruncPoly &o) const;
  TruncPoly operator*(const TruncPoly &o) const;
  TruncPoly scaled(Residue c) const;
  TruncPoly pow(std::uint64_t e) const;

  friend bool operator==(const TruncPoly &, const TruncPoly &) = default;

  void require_compatible(const TruncPoly &o, const char *op) const;

private:
  Field field_;
  unsigned r_;
  std::vector<Residue> coeffs_;
};

TruncPoly poly_add(const TruncPoly &a, const TruncPoly &b);
TruncPoly poly_mul(const TruncPoly &a, const TruncPoly &b);

/// a(s + t), expanded with binomial coefficients mod p.
TruncPoly2 subst_sum(const TruncPoly &a);
/// a(t^{p^i}), truncated.
TruncPoly frobenius_twist(const TruncPoly &a, unsigned i);
/// a(c t).
TruncPoly scale_variable(const TruncPoly &a, Residue c);
/// a(c) for the stored representative.
Residue evaluate(const TruncPoly &a, Residue c);

/// a(s + t) = a(s) + a(t).
bool is_primitive(const TruncPoly &a);
/// Basis of the primitive subspace of k[t]/(t^{p^r}), as the kernel of
/// a -> a(s + t) - a(s) - a(t). It is span{t^{p^j} : j < r}.
std::vector<TruncPoly> primitive_poly_basis(const Field &field, unsigned r);

/// Element of k[s,t]/(s^L, t^L), stored row-major by s-degree.
class TruncPoly2 {
public:
  TruncPoly2(Field field, unsigned r);

  const Field &field() const { return field_; }
  unsigned r() const { return r_; }
  std::size_t length() const { return length_; }
  Residue operator()(std::size_t s_deg, std::size_t t_deg) const {
    return grid_[s_deg * length_ + t_deg];
  }
  Residue &operator()(std::size_t s_deg, std::size_t t_deg) {
    return grid_[s_deg * length_ + t_deg];
  }

  /// a(s) * b(t).
  static TruncPoly2 outer(const TruncPoly &a, const TruncPoly &b);
  /// a(s), i.e. a (x) 1.
  static TruncPoly2 in_s(const TruncPoly &a);
  /// a(t), i.e. 1 (x) a.
  static TruncPoly2 in_t(const TruncPoly &a);

  TruncPoly2 operator+(const TruncPoly2 &o) const;
  TruncPoly2 operator-(const TruncPoly2 &o) const;
  TruncPoly2 operator*(const TruncPoly2 &o) const;
  TruncPoly2 scaled(Residue c) const;

  friend bool operator==(const TruncPoly2 &, const TruncPoly2 &) = default;

private:
  void require_compatible(const TruncPoly2 &o) const;

  Field field_;
  unsigned r_;
  std::size_t length_;
  std::vector<Residue> grid_;
};

class PolyMatrix2;

/// n x n matrix over k[t]/(t^{p^r}), phi(t) = sum_m A_m t^m.
class PolyMatrix {
public:
  /// Zero matrix.
  PolyMatrix(Field field, std::size_t n, unsigned r);
  /// From coefficient matrices A_0, A_1, ...; missing degrees are zero.
  PolyMatrix(unsigned r, std::vector<Matrix> coefficients);

  /// Constant polynomial matrix equal to `m`.
  static PolyMatrix constant(const Matrix &m, unsigned r);
  /// Entry-wise view: entries[i*n + j] is the (i, j) polynomial.
  static PolyMatrix from_entries(std::size_t n, const std::vector<TruncPoly> &entries);

  const Field &field() const { return field_; }
  Residue p() const { return field_.p(); }
  std::size_t n() const { return n_; }
  unsigned r() const { return r_; }
  std::size_t length() const { return coeffs_.size(); }
  const std::vector<Matrix> &coefficients() const { return coeffs_; }
  Matrix &coefficient(std::size_t m) { return coeffs_.at(m); }
  TruncPoly entry(std::size_t i, std::size_t j) const;

  PolyMatrix operator+(const PolyMatrix &o) const;
  PolyMatrix operator-(const PolyMatrix &o) const;
  PolyMatrix operator*(const PolyMatrix &o) const;

  friend bool operator==(const PolyMatrix &, const PolyMatrix &) = default;

private:
  void require_compatible(const PolyMatrix &o, const char *op) const;

  Field field_;
  std::size_t n_;
  unsigned r_;
  std::vector<Matrix> coeffs_;
};

/// The degree-m coefficient matrix A_m. UsageError if m >= p^r.
Matrix coefficient_matrix(const PolyMatrix &phi, std::size_t m);
/// phi(c).
Matrix evaluate(const PolyMatrix &phi, Residue c);
PolyMatrix frobenius_twist(const PolyMatrix &phi, unsigned i);
PolyMatrix scale_variable(const PolyMatrix &phi, Residue c);
/// g phi(t) g^{-1}, coefficient-wise.
PolyMatrix conjugate(const Matrix &g, const PolyMatrix &phi);
/// phi(s + t).
PolyMatrix2 subst_sum(const PolyMatrix &phi);

/// n x n matrix over k[s,t]/(s^L, t^L), stored as L*L coefficient matrices
/// indexed row-major by (s-degree, t-degree).
class PolyMatrix2 {
public:
  PolyMatrix2(Field field, std::size_t n, unsigned r);

  /// phi(s) * psi(t).
  static PolyMatrix2 outer(const PolyMatrix &phi, const PolyMatrix &psi);

  std::size_t n() const { return n_; }
  std::size_t length() const { return length_; }
  const Matrix &operator()(std::size_t s_deg, std::size_t t_deg) const {
    return grid_[s_deg * length_ + t_deg];
  }
  Matrix &operator()(std::size_t s_deg, std::size_t t_deg) {
    return grid_[s_deg * length_ + t_deg];
  }

  friend bool operator==(const PolyMatrix2 &, const PolyMatrix2 &) = default;

private:
  std::size_t n_;
  unsigned r_;
  std::size_t length_;
  std::vector<Matrix> grid_;
};

} // namespace infsub
