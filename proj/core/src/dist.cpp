#include "infsub/dist.hpp"

#include "infsub/errors.hpp"

namespace infsub {

DistElement::DistElement(Field field, unsigned r)
    : field_(field), r_(r), coeffs_(trunc_length(field.p(), r), 0) {
  if (!field_.is_prime_field())
    throw UsageError("distribution algebra is modeled over prime fields only");
}

DistElement::DistElement(Field field, unsigned r, std::vector<long long> coeffs)
    : DistElement(field, r) {
  if (coeffs.size() > coeffs_.size())
    throw UsageError("too many coefficients for p^r = " + std::to_string(coeffs_.size()));
  for (std::size_t m = 0; m < coeffs.size(); ++m)
    coeffs_[m] = modp::from_int(coeffs[m], field_.p());
}

DistElement DistElement::basis(Field field, unsigned r, std::size_t m) {
  DistElement a(field, r);
  if (m < a.length())
    a.coeffs_[m] = 1;
  return a;
}

bool DistElement::is_zero() const {
  for (Residue v : coeffs_)
    if (v != 0)
      return false;
  return true;
}

void DistElement::require_compatible(const DistElement &o, const char *op) const {
  if (!(field_ == o.field_) || r_ != o.r_)
    throw UsageError(std::string(op) + ": distributions differ in (p, r, field)");
}

DistElement DistElement::operator+(const DistElement &o) const {
  require_compatible(o, "dist_add");
  DistElement out = *this;
  for (std::size_t m = 0; m < length(); ++m)
    out.coeffs_[m] = modp::add(coeffs_[m], o.coeffs_[m], p());
  return out;
}

DistElement DistElement::operator-(const DistElement &o) const {
  require_compatible(o, "dist_sub");
  DistElement out = *this;
  for (std::size_t m = 0; m < length(); ++m)
    out.coeffs_[m] = modp::sub(coeffs_[m], o.coeffs_[m], p());
  return out;
}

DistElement DistElement::operator*(const DistElement &o) const {
  require_compatible(o, "dist_mul");
  DistElement out(field_, r_);
  const Residue p = this->p();
  for (std::size_t i = 0; i < length(); ++i) {
    if (coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; i + j < length(); ++j) {
      if (o.coeffs_[j] == 0)
        continue;
      const Residue c = binom_mod_p(i + j, i, p);
      out.coeffs_[i + j] = modp::add(
          out.coeffs_[i + j], modp::mul(c, modp::mul(coeffs_[i], o.coeffs_[j], p), p), p);
    }
  }
  return out;
}

DistElement DistElement::scaled(Residue c) const {
  DistElement out = *this;
  for (auto &v : out.coeffs_)
    v = modp::mul(v, c, p());
  return out;
}

DistElement DistElement::pow(std::uint64_t e) const {
  DistElement result = unit(field_, r_);
  for (std::uint64_t k = 0; k < e; ++k)
    result = result * *this;
  return result;
}

DistTensor::DistTensor(Field field, unsigned r)
    : field_(field), r_(r), length_(trunc_length(field.p(), r)), grid_(length_ * length_, 0) {}

DistTensor DistTensor::outer(const DistElement &a, const DistElement &b) {
  a.require_compatible(b, "tensor");
  DistTensor out(a.field(), a.r());
  for (std::size_t i = 0; i < a.length(); ++i)
    for (std::size_t j = 0; j < b.length(); ++j)
      out(i, j) = modp::mul(a[i], b[j], a.p());
  return out;
}

bool DistTensor::is_zero() const {
  for (Residue v : grid_)
    if (v != 0)
      return false;
  return true;
}

DistTensor DistTensor::flipped() const {
  DistTensor out(field_, r_);
  for (std::size_t i = 0; i < length_; ++i)
    for (std::size_t j = 0; j < length_; ++j)
      out(j, i) = (*this)(i, j);
  return out;
}

DistTensor DistTensor::operator+(const DistTensor &o) const {
  DistTensor out = *this;
  for (std::size_t k = 0; k < grid_.size(); ++k)
    out.grid_[k] = modp::add(grid_[k], o.grid_[k], field_.p());
  return out;
}

DistTensor DistTensor::operator-(const DistTensor &o) const {
  DistTensor out = *this;
  for (std::size_t k = 0; k < grid_.size(); ++k)
    out.grid_[k] = modp::sub(grid_[k], o.grid_[k], field_.p());
  return out;
}

DistElement dist_mul(const DistElement &a, const DistElement &b) { return a * b; }

DistElement u_generator(const Field &field, unsigned r, unsigned j) {
  if (j >= r)
    throw UsageError("u_" + std::to_string(j) + " requires j < r = " + std::to_string(r));
  std::size_t index = 1;
  for (unsigned k = 0; k < j; ++k)
    index *= field.p();
  return DistElement::basis(field, r, index);
}

DistElement padic_monomial(const Field &field, unsigned r, std::size_t m) {
  const Residue p = field.p();
  DistElement result = DistElement::unit(field, r);
  if (m >= result.length())
    throw UsageError("padic_monomial: degree out of range");
  Residue denominator_inv = 1;
  std::size_t rest = m;
  for (unsigned j = 0; j < r; ++j) {
    const auto digit = static_cast<std::size_t>(rest % p);
    rest /= p;
    result = result * u_generator(field, r, j).pow(digit);
    denominator_inv = modp::mul(denominator_inv, inv_factorial_mod_p(digit, p), p);
  }
  return result.scaled(denominator_inv);
}

DistTensor dist_coproduct(const DistElement &a) {
  DistTensor out(a.field(), a.r());
  for (std::size_t m = 0; m < a.length(); ++m)
    if (a[m] != 0)
      for (std::size_t i = 0; i <= m; ++i)
        out(i, m - i) = modp::add(out(i, m - i), a[m], a.p());
  return out;
}

namespace {

DistTensor trivial_part(const DistElement &a) {
  const DistElement one = DistElement::unit(a.field(), a.r());
  return DistTensor::outer(a, one) + DistTensor::outer(one, a);
}

} // namespace

bool is_primitive(const DistElement &a) { return dist_coproduct(a) == trivial_part(a); }

std::vector<DistElement> primitive_subspace_basis(const Field &field, unsigned r) {
  const std::size_t len = trunc_length(field.p(), r);
  Matrix system(field, len * len, len);
  for (std::size_t m = 0; m < len; ++m) {
    const DistElement g = DistElement::basis(field, r, m);
    const DistTensor defect = dist_coproduct(g) - trivial_part(g);
    for (std::size_t k = 0; k < len * len; ++k)
      system(k, m) = defect.grid()[k];
  }
  std::vector<DistElement> out;
  for (const auto &v : kernel_basis(system)) {
    DistElement a(field, r);
    for (std::size_t m = 0; m < len; ++m)
      a[m] = v[m];
    out.push_back(std::move(a));
  }
  return out;
}

Residue pairing(const DistElement &a, const TruncPoly &f) {
  if (!(a.field() == f.field()) || a.r() != f.r())
    throw UsageError("pairing: mismatched (p, r, field)");
  Residue acc = 0;
  for (std::size_t m = 0; m < a.length(); ++m)
    acc = modp::add(acc, modp::mul(a[m], f[m], a.p()), a.p());
  return acc;
}

Residue pairing(const DistElement &a, const DistElement &b, const TruncPoly2 &f) {
  a.require_compatible(b, "pairing");
  if (!(a.field() == f.field()) || a.r() != f.r())
    throw UsageError("pairing: mismatched (p, r, field)");
  Residue acc = 0;
  for (std::size_t i = 0; i < a.length(); ++i)
    for (std::size_t j = 0; j < b.length(); ++j)
      acc = modp::add(acc, modp::mul(modp::mul(a[i], b[j], a.p()), f(i, j), a.p()), a.p());
  return acc;
}

} // namespace infsub

namespace infsub {

namespace {

DistElement random_dist(const Field &field, unsigned r, SplitMix64 &rng) {
  DistElement a(field, r);
  for (std::size_t m = 0; m < a.length(); ++m)
    a[m] = static_cast<Residue>(rng.below(field.p()));
  return a;
}

// (Delta (x) id) Delta(a) and (id (x) Delta) Delta(a) as L^3 arrays.
std::vector<Residue> iterated_coproduct(const DistElement &a, bool left) {
  const std::size_t len = a.length();
  const Residue p = a.p();
  const DistTensor d = dist_coproduct(a);
  std::vector<Residue> out(len * len * len, 0);
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = 0; j < len; ++j) {
      const Residue c = d(i, j);
      if (c == 0)
        continue;
      // Split the left factor gamma_i (or the right factor gamma_j).
      const std::size_t split = left ? i : j;
      for (std::size_t a1 = 0; a1 <= split; ++a1) {
        const std::size_t a2 = split - a1;
        const std::size_t idx = left ? (a1 * len + a2) * len + j : (i * len + a1) * len + a2;
        out[idx] = modp::add(out[idx], c, p);
      }
    }
  return out;
}

} // namespace

Report dist_check(const Field &field, unsigned r, std::size_t samples, std::uint64_t seed) {
  Report report("dist");
  const std::size_t len = trunc_length(field.p(), r);
  const Residue p = field.p();
  report.set_fact("p", p);
  report.set_fact("r", r);
  report.set_fact("length", static_cast<long long>(len));

  for (std::size_t m = 0; m < len; ++m)
    report.record("padic_identity", m,
                  padic_monomial(field, r, m) == DistElement::basis(field, r, m),
                  [&] { return "padic monomial differs from gamma_" + std::to_string(m); });

  for (unsigned j = 0; j < r; ++j)
    report.record("u_nilpotent", j, u_generator(field, r, j).pow(p).is_zero());

  const auto is_p_power = [&](std::size_t m) {
    for (std::size_t d = 1; d < len; d *= p)
      if (d == m)
        return true;
    return false;
  };

  // Primitives of k[t]/(t^{p^r}) are span{t^{p^j}}: exactly the functionals
  // dual to u_0, ..., u_{r-1}. Each kernel vector must pair to zero with every
  // gamma_m, m not a p-power, and each t^{p^j} must be primitive.
  const auto coord_prim = primitive_poly_basis(field, r);
  bool dual_to_u = coord_prim.size() == r;
  for (const auto &f : coord_prim)
    for (std::size_t m = 0; m < len; ++m)
      dual_to_u = dual_to_u && (is_p_power(m) || pairing(DistElement::basis(field, r, m), f) == 0);
  for (unsigned j = 0; j < r; ++j) {
    const DistElement u = u_generator(field, r, j);
    std::size_t degree = 0;
    while (u[degree] == 0)
      ++degree;
    const TruncPoly dual = TruncPoly::monomial(field, r, degree, 1);
    dual_to_u = dual_to_u && is_primitive(dual) && pairing(u, dual) == 1;
  }
  report.record("primitive_space", 0, dual_to_u,
                [] { return "primitives of k[t]/(t^{p^r}) are not dual to span{u_j}"; });
  report.set_fact("primitive_dimension", static_cast<long long>(coord_prim.size()));

  // In Dist itself the primitives form the Lie algebra: span{u_0}.
  const auto dist_prim = primitive_subspace_basis(field, r);
  bool lie = dist_prim.size() == 1 && is_primitive(u_generator(field, r, 0));
  for (const auto &v : dist_prim)
    for (std::size_t m = 0; m < len; ++m)
      lie = lie && (m == 1 || v[m] == 0);
  for (unsigned j = 1; j < r; ++j)
    lie = lie && !is_primitive(u_generator(field, r, j));
  report.record("lie_algebra", 0, lie,
                [] { return "primitives of Dist differ from span{u_0}"; });
  report.set_fact("lie_dimension", static_cast<long long>(dist_prim.size()));

  SplitMix64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const DistElement a = random_dist(field, r, rng);
    const DistElement b = random_dist(field, r, rng);
    const DistElement c = random_dist(field, r, rng);
    report.record("associativity", s, (a * b) * c == a * (b * c));
    report.record("commutativity", s, a * b == b * a);
    const DistTensor d = dist_coproduct(a);
    report.record("cocommutativity", s, d == d.flipped());
    report.record("coassociativity", s, iterated_coproduct(a, true) == iterated_coproduct(a, false));
  }

  // <gamma_a gamma_b, t^m> = <gamma_a (x) gamma_b, (s + t)^m>.
  bool dual = true;
  for (std::size_t a = 0; a < len && dual; ++a)
    for (std::size_t b = 0; b < len && dual; ++b) {
      const DistElement ga = DistElement::basis(field, r, a);
      const DistElement gb = DistElement::basis(field, r, b);
      for (std::size_t m = 0; m < len && dual; ++m) {
        const TruncPoly tm = TruncPoly::monomial(field, r, m, 1);
        dual = pairing(ga * gb, tm) == pairing(ga, gb, subst_sum(tm));
      }
    }
  report.record("duality", 0, dual);
  return report;
}

} // namespace infsub
