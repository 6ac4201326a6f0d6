#include "infsub/fields.hpp"

#include "infsub/errors.hpp"

#include <sstream>

namespace infsub {

namespace modp {

Residue pow(Residue a, std::uint64_t e, Residue p) {
  Residue result = 1 % p;
  Residue base = a % p;
  while (e > 0) {
    if (e & 1U)
      result = mul(result, base, p);
    base = mul(base, base, p);
    e >>= 1U;
  }
  return result;
}

Residue inv(Residue a, Residue p) {
  if (a % p == 0)
    throw DomainError("inverse of zero in F_" + std::to_string(p));
  return pow(a, p - 2, p);
}

Residue from_int(long long v, Residue p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0)
    r += p;
  return static_cast<Residue>(r);
}

} // namespace modp

bool is_prime(unsigned n) {
  if (n < 2)
    return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

Residue binom_mod_p(std::uint64_t m, std::uint64_t i, Residue p) {
  if (i > m)
    return 0;
  Residue result = 1 % p;
  while (m > 0 || i > 0) {
    const auto md = static_cast<Residue>(m % p);
    const auto id = static_cast<Residue>(i % p);
    if (id > md)
      return 0;
    // C(md, id) with md < p: every factorial involved is invertible.
    const Residue num = factorial_mod_p(md, p);
    const Residue den =
        modp::mul(inv_factorial_mod_p(id, p), inv_factorial_mod_p(md - id, p), p);
    result = modp::mul(result, modp::mul(num, den, p), p);
    m /= p;
    i /= p;
  }
  return result;
}

Residue factorial_mod_p(std::uint64_t m, Residue p) {
  if (m >= p)
    throw DomainError("factorial_mod_p: " + std::to_string(m) +
                      "! is not invertible mod " + std::to_string(p));
  Residue f = 1 % p;
  for (std::uint64_t j = 2; j <= m; ++j)
    f = modp::mul(f, static_cast<Residue>(j), p);
  return f;
}

Residue inv_factorial_mod_p(std::uint64_t m, Residue p) {
  return modp::inv(factorial_mod_p(m, p), p);
}

// ---------------------------------------------------------------- Field

Field Field::prime(unsigned p, unsigned cap) {
  if (!is_prime(p))
    throw UsageError("field modulus " + std::to_string(p) + " is not prime");
  if (p > cap)
    throw UsageError("prime " + std::to_string(p) + " exceeds cap " +
                     std::to_string(cap));
  return Field(p, 1, {0, 1, 0, 0});
}

Field Field::extension(unsigned p, std::span<const long long> poly, unsigned cap) {
  Field base = prime(p, cap);
  if (poly.size() < 2 || poly.size() > kMaxExtensionDegree + 1)
    throw UsageError("defining polynomial must have degree 1.." +
                     std::to_string(kMaxExtensionDegree));
  const unsigned k = static_cast<unsigned>(poly.size() - 1);
  std::array<Residue, 4> f{};
  for (unsigned i = 0; i <= k; ++i)
    f[i] = modp::from_int(poly[i], p);
  if (f[k] != 1)
    throw UsageError("defining polynomial must be monic");
  if (k == 1)
    return base;
  // Degree 2 and 3 polynomials are irreducible iff they have no root.
  for (Residue x = 0; x < p; ++x) {
    Residue v = 0;
    for (unsigned i = k + 1; i-- > 0;)
      v = modp::add(modp::mul(v, x, p), f[i], p);
    if (v == 0)
      throw UsageError("defining polynomial has root " + std::to_string(x) +
                       " mod " + std::to_string(p) + "; not irreducible");
  }
  return Field(p, k, f);
}

std::uint64_t Field::order() const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k_; ++i)
    q *= p_;
  return q;
}

std::vector<Residue> Field::defining_poly() const {
  return {poly_.begin(), poly_.begin() + k_ + 1};
}

FieldElement Field::zero() const { return FieldElement(*this, {}); }

FieldElement Field::one() const { return FieldElement(*this, {1 % p_, 0, 0}); }

FieldElement Field::from_int(long long v) const {
  return FieldElement(*this, {modp::from_int(v, p_), 0, 0});
}

FieldElement Field::generator() const {
  if (k_ == 1)
    throw UsageError("prime field has no extension generator");
  return FieldElement(*this, {0, 1, 0});
}

FieldElement Field::element(std::span<const long long> coeffs) const {
  if (coeffs.size() > k_)
    throw UsageError("element has " + std::to_string(coeffs.size()) +
                     " coefficients, field degree is " + std::to_string(k_));
  std::array<Residue, 3> c{};
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    c[i] = modp::from_int(coeffs[i], p_);
  return FieldElement(*this, c);
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  const std::uint64_t q = order();
  out.reserve(q);
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    std::array<Residue, 3> c{};
    std::uint64_t rest = idx;
    for (unsigned i = k_; i-- > 0;) {
      c[i] = static_cast<Residue>(rest % p_);
      rest /= p_;
    }
    out.push_back(FieldElement(*this, c));
  }
  return out;
}

std::string Field::to_string() const {
  std::ostringstream os;
  os << "F_" << p_;
  if (k_ > 1) {
    os << "[x]/(";
    bool first = true;
    for (unsigned i = k_ + 1; i-- > 0;) {
      if (poly_[i] == 0)
        continue;
      if (!first)
        os << " + ";
      first = false;
      if (poly_[i] != 1 || i == 0)
        os << poly_[i];
      if (i >= 1)
        os << "x";
      if (i >= 2)
        os << "^" << i;
    }
    os << ")";
  }
  return os.str();
}

// --------------------------------------------------------- FieldElement

Residue FieldElement::value() const {
  if (field_.k_ != 1)
    throw UsageError("value() requires a prime-field element");
  return coeffs_[0];
}

bool FieldElement::is_zero() const {
  return coeffs_[0] == 0 && coeffs_[1] == 0 && coeffs_[2] == 0;
}

void FieldElement::require_same(const FieldElement &o) const {
  if (!(field_ == o.field_))
    throw UsageError("mismatched parent fields: " + field_.to_string() + " vs " +
                     o.field_.to_string());
}

FieldElement FieldElement::operator+(const FieldElement &o) const {
  require_same(o);
  std::array<Residue, 3> c{};
  for (unsigned i = 0; i < field_.k_; ++i)
    c[i] = modp::add(coeffs_[i], o.coeffs_[i], field_.p_);
  return FieldElement(field_, c);
}

FieldElement FieldElement::operator-(const FieldElement &o) const {
  require_same(o);
  std::array<Residue, 3> c{};
  for (unsigned i = 0; i < field_.k_; ++i)
    c[i] = modp::sub(coeffs_[i], o.coeffs_[i], field_.p_);
  return FieldElement(field_, c);
}

FieldElement FieldElement::operator-() const {
  std::array<Residue, 3> c{};
  for (unsigned i = 0; i < field_.k_; ++i)
    c[i] = modp::neg(coeffs_[i], field_.p_);
  return FieldElement(field_, c);
}

FieldElement FieldElement::operator*(const FieldElement &o) const {
  require_same(o);
  const Residue p = field_.p_;
  const unsigned k = field_.k_;
  std::array<Residue, 5> prod{};
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j)
      prod[i + j] = modp::add(prod[i + j], modp::mul(coeffs_[i], o.coeffs_[j], p), p);
  // x^k = -(f_0 + f_1 x + ... + f_{k-1} x^{k-1})
  for (unsigned d = 2 * k - 1; d-- > k;) {
    const Residue lead = prod[d];
    if (lead == 0)
      continue;
    prod[d] = 0;
    for (unsigned i = 0; i < k; ++i)
      prod[d - k + i] =
          modp::sub(prod[d - k + i], modp::mul(lead, field_.poly_[i], p), p);
  }
  return FieldElement(field_, {prod[0], prod[1], prod[2]});
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement result = field_.one();
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1U)
      result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

FieldElement FieldElement::inv() const {
  if (is_zero())
    throw DomainError("inverse of zero in " + field_.to_string());
  return pow(field_.order() - 2);
}

std::string FieldElement::to_string() const {
  if (field_.k_ == 1)
    return std::to_string(coeffs_[0]);
  std::ostringstream os;
  os << "[";
  for (unsigned i = 0; i < field_.k_; ++i)
    os << (i ? "," : "") << coeffs_[i];
  os << "]";
  return os.str();
}

} // namespace infsub
