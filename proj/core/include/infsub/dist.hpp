#pragma once

// The distribution algebra of the r-th Frobenius kernel of G_a, on its
// divided-power basis gamma_0, ..., gamma_{p^r - 1}:
//
//   gamma_i * gamma_j = C(i + j, i) gamma_{i+j}   (zero once i + j >= p^r)
//   Delta(gamma_m)    = sum_{i+j=m} gamma_i (x) gamma_j
//
// gamma_m is dual to t^m in k[t]/(t^{p^r}); u_j = gamma_{p^j}.

#include "infsub/fields.hpp"
#include "infsub/matrix.hpp"
#include "infsub/report.hpp"
#include "infsub/truncpoly.hpp"

#include <cstddef>
#include <vector>

namespace infsub {

class DistElement {
public:
  /// Zero element.
  DistElement(Field field, unsigned r);
  DistElement(Field field, unsigned r, std::vector<long long> coeffs);

  /// gamma_m (zero when m >= p^r).
  static DistElement basis(Field field, unsigned r, std::size_t m);
  static DistElement unit(Field field, unsigned r) { return basis(field, r, 0); }

  const Field &field() const { return field_; }
  Residue p() const { return field_.p(); }
  unsigned r() const { return r_; }
  std::size_t length() const { return coeffs_.size(); }
  Residue operator[](std::size_t m) const { return coeffs_[m]; }
  Residue &operator[](std::size_t m) { return coeffs_[m]; }
  const std::vector<Residue> &coeffs() const { return coeffs_; }
  bool is_zero() const;

  DistElement operator+(const DistElement &o) const;
  DistElement operator-(const DistElement &o) const;
  DistElement operator*(const DistElement &o) const;
  DistElement scaled(Residue c) const;
  DistElement pow(std::uint64_t e) const;

  friend bool operator==(const DistElement &, const DistElement &) = default;

  void require_compatible(const DistElement &o, const char *op) const;

private:
  Field field_;
  unsigned r_;
  std::vector<Residue> coeffs_;
};

/// Element of Dist (x) Dist as a dense p^r x p^r grid, row index = left factor.
class DistTensor {
public:
  DistTensor(Field field, unsigned r);

  static DistTensor outer(const DistElement &a, const DistElement &b);

  std::size_t length() const { return length_; }
  Residue operator()(std::size_t i, std::size_t j) const { return grid_[i * length_ + j]; }
  Residue &operator()(std::size_t i, std::size_t j) { return grid_[i * length_ + j]; }
  const std::vector<Residue> &grid() const { return grid_; }
  bool is_zero() const;
  /// Swaps the tensor factors.
  DistTensor flipped() const;

  DistTensor operator+(const DistTensor &o) const;
  DistTensor operator-(const DistTensor &o) const;

  friend bool operator==(const DistTensor &, const DistTensor &) = default;

private:
  Field field_;
  unsigned r_;
  std::size_t length_;
  std::vector<Residue> grid_;
};

DistElement dist_mul(const DistElement &a, const DistElement &b);

/// u_j = gamma_{p^j}. UsageError when j >= r.
DistElement u_generator(const Field &field, unsigned r, unsigned j);

/// u_0^{m_0} ... u_q^{m_q} / (m_0! ... m_q!) for the base-p digits m_i of m,
/// computed through dist_mul. Equals gamma_m.
DistElement padic_monomial(const Field &field, unsigned r, std::size_t m);

DistTensor dist_coproduct(const DistElement &a);

/// Delta(a) == a (x) 1 + 1 (x) a.
bool is_primitive(const DistElement &a);

/// Basis of the primitive subspace, as the kernel of a -> Delta(a) - a(x)1 - 1(x)a.
std::vector<DistElement> primitive_subspace_basis(const Field &field, unsigned r);

/// <a, f> = sum_m a_m f_m (gamma_m dual to t^m).
Residue pairing(const DistElement &a, const TruncPoly &f);
/// <a (x) b, F> for F in k[s,t]/(s^L, t^L), s paired with the left factor.
Residue pairing(const DistElement &a, const DistElement &b, const TruncPoly2 &f);

/// Exhaustive and sampled checks of the algebra at (p, r):
///   padic_identity   padic_monomial(m) = gamma_m for every m < p^r
///   u_nilpotent      u_j^p = 0 for every j < r
///   primitive_space  primitives of k[t]/(t^{p^r}) = span{t^{p^j}}, the
///                    functionals dual to u_0, ..., u_{r-1}
///   lie_algebra      primitives of Dist itself = span{u_0}
///   associativity, cocommutativity, coassociativity on random elements
///   duality          <a b, f> = <a (x) b, f(s + t)> on the full basis
Report dist_check(const Field &field, unsigned r, std::size_t samples, std::uint64_t seed);

} // namespace infsub
