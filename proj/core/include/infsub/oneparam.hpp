#pragma once

// Height-r infinitesimal one-parameter subgroups of GL_n, i.e. matrices
// phi over k[t]/(t^{p^r}) with phi(0) = 1 and phi(s + t) = phi(s) phi(t),
// and the correspondence with commuting tuples of p-nilpotent matrices:
//
//   lift(X_0, ..., X_{r-1})(t) = exp(t X_0) exp(t^p X_1) ... exp(t^{p^{r-1}} X_{r-1})
//
// with exp the truncated exponential series. decompose inverts lift by
// peeling off one Frobenius layer at a time.

#include "infsub/matrix.hpp"
#include "infsub/report.hpp"
#include "infsub/truncpoly.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace infsub {

/// phi(0) = 1 and phi(s + t) = phi(s) phi(t) in k[s,t]/(s^L, t^L).
bool verify_homomorphism(const PolyMatrix &phi);

/// A PolyMatrix satisfying verify_homomorphism.
class OneParamSubgroup {
public:
  /// DomainError if `phi` is not a homomorphism.
  explicit OneParamSubgroup(PolyMatrix phi);

  const PolyMatrix &poly() const { return phi_; }
  std::size_t n() const { return phi_.n(); }
  unsigned r() const { return phi_.r(); }
  const Field &field() const { return phi_.field(); }

  friend bool operator==(const OneParamSubgroup &, const OneParamSubgroup &) = default;

private:
  PolyMatrix phi_;
};

/// sum_{i<p} X^i / i!. DomainError unless X^p = 0.
Matrix exp_p(const Matrix &x);
inline Matrix exp_p(const NilpotentWitness &x) { return exp_p(x.matrix()); }

/// sum_{i<p} X^i t^i / i! at height r. DomainError unless X^p = 0.
PolyMatrix exp_line(const Matrix &x, unsigned r);

/// sum_{0<i<p} (-1)^{i+1} (g - 1)^i / i. DomainError unless (g - 1)^p = 0.
Matrix log_p(const Matrix &g);

/// Product of frobenius-twisted exponential lines; layers may be zero.
/// `layers` must pairwise commute and be p-nilpotent (not rechecked).
PolyMatrix lift_layers(const std::vector<Matrix> &layers, unsigned r);

/// The map from C_r(N_1(gl_n)) to height-r one-parameter subgroups; r is
/// the tuple length.
OneParamSubgroup lift(const CommutingTuple &tuple);

/// Inverse of lift. Throws DomainError when `phi` is not a homomorphism and
/// InternalConsistencyError if a recovered layer is not p-nilpotent, fails
/// to commute, or does not lift back to phi.
CommutingTuple decompose(const PolyMatrix &phi);
inline CommutingTuple decompose(const OneParamSubgroup &phi) { return decompose(phi.poly()); }

/// phi_g(t) = exp(t log g): the one-parameter subgroup through g.
/// Requires (g - 1)^p = 0 (DomainError) and n <= p (UsageError).
OneParamSubgroup saturate(const Matrix &g, unsigned r = 1);

/// A candidate exponential map N_1(gl_n) -> GL_n, given by its value on a
/// point and by its line s -> E(sX) as a polynomial matrix.
struct ExponentialCandidate {
  std::string name;
  Field field;
  std::size_t n;
  std::function<Matrix(const Matrix &)> point;
  std::function<PolyMatrix(const Matrix &, unsigned)> line;

  static ExponentialCandidate truncated_series(const Field &field, std::size_t n);
};

struct AxiomSamples {
  std::vector<Matrix> nilpotents;
  std::vector<Matrix> conjugators;
  std::vector<Residue> scalars;
  std::vector<std::pair<Matrix, Matrix>> commuting_pairs;
};

/// Random p-nilpotent matrices (conjugates of strictly upper-triangular
/// ones), invertible conjugators, scalars and commuting pairs. Requires n <= p.
AxiomSamples make_axiom_samples(const Field &field, std::size_t n, std::size_t nilpotents,
                                std::size_t conjugators, std::size_t scalars,
                                std::size_t pairs, std::uint64_t seed);

/// Checks the exponential-map axioms on the samples:
///   one_parameter_law  E_X passes verify_homomorphism
///   differential       the degree-1 coefficient of E_X is X
///   adjoint_trivial    E(sX) B E(sX)^{-1} = B for B in a centralizer basis of X
///   equivariance       E(g X g^{-1}) = g E(X) g^{-1}
///   injectivity        distinct samples have distinct images
///   commuting_lemma    [X, Y] = 0 implies E(X) E(Y) = E(Y) E(X)
Report verify_exponential_axioms(const ExponentialCandidate &cand, const AxiomSamples &samples,
                                 unsigned jobs = 1);

/// Rebuilds phi_1 = 1 + tX, phi_2 = 1 + t^p X, phi_3 = phi_1 phi_2 for
/// X = E_12 in gl_2 at height 2 and checks the differential identities.
Report sl2_example_check(unsigned p);

/// For trace-zero p-nilpotent samples: det exp(X) = 1; for lifts of
/// trace-zero commuting tuples: det phi(c) = 1 for every c in F_p.
Report sl_n_compatibility_check(const Field &field, std::size_t n, unsigned r,
                                std::size_t samples, std::uint64_t seed, unsigned jobs = 1);

/// Property suite for lift/decompose at (p, n, r):
///   round_trip, homomorphism, equivariance, frobenius_layering.
Report bijection_check(const Field &field, std::size_t n, unsigned r, std::size_t samples,
                       std::uint64_t seed, unsigned jobs = 1);

/// For phi_g with g random p-unipotent: phi_g(1) = g, the homomorphism law,
/// and phi_{h g h^{-1}} = h phi_g h^{-1} on `conjugators` sampled h.
Report saturation_check(const Field &field, std::size_t n, std::size_t samples,
                        std::size_t conjugators, std::uint64_t seed, unsigned jobs = 1);

/// Random p-unipotent g = conjugate of 1 + (strictly upper). Requires n <= p.
Matrix random_p_unipotent(const Field &field, std::size_t n, SplitMix64 &rng);

} // namespace infsub
