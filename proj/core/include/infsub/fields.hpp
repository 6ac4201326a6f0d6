#pragma once

// Exact arithmetic in F_p and small extensions F_p[x]/(f), deg f <= 3.
//
// Residues are stored as least nonnegative representatives. Prime-field
// code paths (matrices, truncated polynomials) work directly on raw
// residues through the helpers in namespace modp; FieldElement is the
// general value type used where extension fields are needed.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace infsub {

using Residue = std::uint32_t;

inline constexpr unsigned kDefaultPrimeCap = 97;
inline constexpr unsigned kMaxExtensionDegree = 3;

namespace modp {

inline Residue add(Residue a, Residue b, Residue p) {
  Residue s = a + b;
  return s >= p ? s - p : s;
}
inline Residue sub(Residue a, Residue b, Residue p) {
  return a >= b ? a - b : a + p - b;
}
inline Residue neg(Residue a, Residue p) { return a == 0 ? 0 : p - a; }
inline Residue mul(Residue a, Residue b, Residue p) {
  return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p);
}
Residue pow(Residue a, std::uint64_t e, Residue p);
/// Throws DomainError on zero.
Residue inv(Residue a, Residue p);
/// Reduces any signed integer into [0, p).
Residue from_int(long long v, Residue p);

} // namespace modp

bool is_prime(unsigned n);

/// C(m, i) mod p by Lucas' theorem (digit-wise product of small binomials).
Residue binom_mod_p(std::uint64_t m, std::uint64_t i, Residue p);

/// m! mod p, 0 <= m < p. Throws DomainError when m >= p.
Residue factorial_mod_p(std::uint64_t m, Residue p);
/// (m!)^{-1} mod p, 0 <= m < p. Throws DomainError when m >= p.
Residue inv_factorial_mod_p(std::uint64_t m, Residue p);

class FieldElement;

/// F_p (k = 1) or F_p[x]/(f) with f monic irreducible of degree k <= 3.
/// Cheap to copy; two fields compare equal iff (p, k, f) agree.
class Field {
public:
  /// Throws UsageError unless p is prime and p <= cap.
  static Field prime(unsigned p, unsigned cap = kDefaultPrimeCap);
  /// `poly` is little-endian and monic of degree k in [1, 3]; irreducibility
  /// is checked by exhaustive root search. Degree 1 yields F_p itself.
  static Field extension(unsigned p, std::span<const long long> poly,
                         unsigned cap = kDefaultPrimeCap);

  Residue p() const { return p_; }
  unsigned degree() const { return k_; }
  bool is_prime_field() const { return k_ == 1; }
  /// Number of elements, p^k.
  std::uint64_t order() const;
  /// Monic defining polynomial, little-endian, length k + 1 (just {0, 1}
  /// for prime fields).
  std::vector<Residue> defining_poly() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long long v) const;
  /// The class of x (generator of the extension). UsageError for k = 1.
  FieldElement generator() const;
  /// Coefficients little-endian in the generator; reduced mod p.
  FieldElement element(std::span<const long long> coeffs) const;
  /// Enumerates all p^k elements in lexicographic coefficient order.
  std::vector<FieldElement> elements() const;

  friend bool operator==(const Field &, const Field &) = default;

  std::string to_string() const;

private:
  Field(Residue p, unsigned k, std::array<Residue, 4> poly)
      : p_(p), k_(k), poly_(poly) {}

  Residue p_ = 2;
  unsigned k_ = 1;
  std::array<Residue, 4> poly_{}; // monic, little-endian

  friend class FieldElement;
};

class FieldElement {
public:
  const Field &field() const { return field_; }
  std::span<const Residue> coeffs() const { return {coeffs_.data(), field_.k_}; }
  /// The residue of a prime-field element. UsageError for k > 1.
  Residue value() const;
  bool is_zero() const;

  FieldElement operator+(const FieldElement &o) const;
  FieldElement operator-(const FieldElement &o) const;
  FieldElement operator*(const FieldElement &o) const;
  FieldElement operator-() const;
  FieldElement pow(std::uint64_t e) const;
  /// Throws DomainError on zero.
  FieldElement inv() const;

  friend bool operator==(const FieldElement &, const FieldElement &) = default;

  std::string to_string() const;

private:
  FieldElement(Field f, std::array<Residue, 3> c) : field_(f), coeffs_(c) {}
  void require_same(const FieldElement &o) const;

  Field field_;
  std::array<Residue, 3> coeffs_{};

  friend class Field;
};

inline FieldElement add(const FieldElement &a, const FieldElement &b) { return a + b; }
inline FieldElement sub(const FieldElement &a, const FieldElement &b) { return a - b; }
inline FieldElement mul(const FieldElement &a, const FieldElement &b) { return a * b; }
inline FieldElement neg(const FieldElement &a) { return -a; }
inline FieldElement inv(const FieldElement &a) { return a.inv(); }

} // namespace infsub
