#include "infsub/truncpoly.hpp"

#include "infsub/errors.hpp"

#include <utility>

namespace infsub {

std::size_t trunc_length(Residue p, unsigned r, std::size_t cap) {
  if (r == 0)
    throw UsageError("height r must be at least 1");
  std::size_t len = 1;
  for (unsigned i = 0; i < r; ++i) {
    len *= p;
    if (len > cap)
      throw CapacityError("p^r = " + std::to_string(p) + "^" + std::to_string(r) +
                          " exceeds truncation cap " + std::to_string(cap));
  }
  return len;
}

// ------------------------------------------------------------ TruncPoly

TruncPoly::TruncPoly(Field field, unsigned r)
    : field_(field), r_(r), coeffs_(trunc_length(field.p(), r), 0) {
  if (!field_.is_prime_field())
    throw UsageError("truncated polynomials are supported over prime fields only");
}

TruncPoly::TruncPoly(Field field, unsigned r, std::vector<long long> coeffs)
    : TruncPoly(field, r) {
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    const Residue v = modp::from_int(coeffs[m], field_.p());
    if (m >= coeffs_.size()) {
      if (v != 0)
        throw UsageError("coefficient at degree " + std::to_string(m) +
                         " is beyond truncation p^r = " + std::to_string(coeffs_.size()));
      continue;
    }
    coeffs_[m] = v;
  }
}

TruncPoly TruncPoly::monomial(Field field, unsigned r, std::size_t degree, Residue c) {
  TruncPoly a(field, r);
  if (degree < a.length())
    a.coeffs_[degree] = c % field.p();
  return a;
}

bool TruncPoly::is_zero() const {
  for (Residue v : coeffs_)
    if (v != 0)
      return false;
  return true;
}

void TruncPoly::require_compatible(const TruncPoly &o, const char *op) const {
  if (!(field_ == o.field_) || r_ != o.r_)
    throw UsageError(std::string(op) + ": truncated polynomials differ in (p, r, field)");
}

TruncPoly TruncPoly::operator+(const TruncPoly &o) const {
  require_compatible(o, "poly_add");
  TruncPoly out = *this;
  for (std::size_t m = 0; m < length(); ++m)
    out.coeffs_[m] = modp::add(coeffs_[m], o.coeffs_[m], p());
  return out;
}

TruncPoly TruncPoly::operator-(const TruncPoly &o) const {
  require_compatible(o, "poly_sub");
  TruncPoly out = *this;
  for (std::size_t m = 0; m < length(); ++m)
    out.coeffs_[m] = modp::sub(coeffs_[m], o.coeffs_[m], p());
  return out;
}

TruncPoly TruncPoly::operator*(const TruncPoly &o) const {
  require_compatible(o, "poly_mul");
  TruncPoly out(field_, r_);
  const std::size_t len = length();
  for (std::size_t i = 0; i < len; ++i) {
    if (coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; i + j < len; ++j)
      out.coeffs_[i + j] =
          modp::add(out.coeffs_[i + j], modp::mul(coeffs_[i], o.coeffs_[j], p()), p());
  }
  return out;
}

TruncPoly TruncPoly::scaled(Residue c) const {
  TruncPoly out = *this;
  for (auto &v : out.coeffs_)
    v = modp::mul(v, c, p());
  return out;
}

TruncPoly TruncPoly::pow(std::uint64_t e) const {
  TruncPoly result = monomial(field_, r_, 0, 1);
  TruncPoly base = *this;
  while (e > 0) {
    if (e & 1U)
      result = result * base;
    e >>= 1U;
    if (e > 0)
      base = base * base;
  }
  return result;
}

TruncPoly poly_add(const TruncPoly &a, const TruncPoly &b) { return a + b; }
TruncPoly poly_mul(const TruncPoly &a, const TruncPoly &b) { return a * b; }

TruncPoly2 subst_sum(const TruncPoly &a) {
  TruncPoly2 out(a.field(), a.r());
  const Residue p = a.p();
  for (std::size_t m = 0; m < a.length(); ++m) {
    if (a[m] == 0)
      continue;
    for (std::size_t i = 0; i <= m; ++i) {
      const Residue b = binom_mod_p(m, i, p);
      if (b != 0)
        out(i, m - i) = modp::add(out(i, m - i), modp::mul(b, a[m], p), p);
    }
  }
  return out;
}

TruncPoly frobenius_twist(const TruncPoly &a, unsigned i) {
  std::size_t step = 1;
  for (unsigned k = 0; k < i && step < a.length(); ++k)
    step *= a.p();
  TruncPoly out(a.field(), a.r());
  for (std::size_t m = 0; m < a.length() && m * step < a.length(); ++m)
    out[m * step] = a[m];
  return out;
}

TruncPoly scale_variable(const TruncPoly &a, Residue c) {
  TruncPoly out = a;
  Residue cm = 1;
  for (std::size_t m = 0; m < a.length(); ++m) {
    out[m] = modp::mul(a[m], cm, a.p());
    cm = modp::mul(cm, c, a.p());
  }
  return out;
}

Residue evaluate(const TruncPoly &a, Residue c) {
  Residue acc = 0;
  for (std::size_t m = a.length(); m-- > 0;)
    acc = modp::add(modp::mul(acc, c, a.p()), a[m], a.p());
  return acc;
}

// ----------------------------------------------------------- TruncPoly2

TruncPoly2::TruncPoly2(Field field, unsigned r)
    : field_(field), r_(r), length_(trunc_length(field.p(), r)),
      grid_(length_ * length_, 0) {}

void TruncPoly2::require_compatible(const TruncPoly2 &o) const {
  if (!(field_ == o.field_) || r_ != o.r_)
    throw UsageError("two-variable polynomials differ in (p, r, field)");
}

TruncPoly2 TruncPoly2::outer(const TruncPoly &a, const TruncPoly &b) {
  a.require_compatible(b, "outer");
  TruncPoly2 out(a.field(), a.r());
  for (std::size_t i = 0; i < a.length(); ++i)
    for (std::size_t j = 0; j < b.length(); ++j)
      out(i, j) = modp::mul(a[i], b[j], a.p());
  return out;
}

TruncPoly2 TruncPoly2::in_s(const TruncPoly &a) {
  return outer(a, TruncPoly::monomial(a.field(), a.r(), 0, 1));
}

TruncPoly2 TruncPoly2::in_t(const TruncPoly &a) {
  return outer(TruncPoly::monomial(a.field(), a.r(), 0, 1), a);
}

TruncPoly2 TruncPoly2::operator+(const TruncPoly2 &o) const {
  require_compatible(o);
  TruncPoly2 out = *this;
  for (std::size_t k = 0; k < grid_.size(); ++k)
    out.grid_[k] = modp::add(grid_[k], o.grid_[k], field_.p());
  return out;
}

TruncPoly2 TruncPoly2::operator-(const TruncPoly2 &o) const {
  require_compatible(o);
  TruncPoly2 out = *this;
  for (std::size_t k = 0; k < grid_.size(); ++k)
    out.grid_[k] = modp::sub(grid_[k], o.grid_[k], field_.p());
  return out;
}

TruncPoly2 TruncPoly2::operator*(const TruncPoly2 &o) const {
  require_compatible(o);
  TruncPoly2 out(field_, r_);
  const Residue p = field_.p();
  const std::size_t len = length_;
  for (std::size_t a = 0; a < len; ++a)
    for (std::size_t b = 0; b < len; ++b) {
      const Residue x = (*this)(a, b);
      if (x == 0)
        continue;
      for (std::size_t c = 0; a + c < len; ++c)
        for (std::size_t d = 0; b + d < len; ++d)
          out(a + c, b + d) = modp::add(out(a + c, b + d), modp::mul(x, o(c, d), p), p);
    }
  return out;
}

TruncPoly2 TruncPoly2::scaled(Residue c) const {
  TruncPoly2 out = *this;
  for (auto &v : out.grid_)
    v = modp::mul(v, c, field_.p());
  return out;
}

// ----------------------------------------------------------- PolyMatrix

PolyMatrix::PolyMatrix(Field field, std::size_t n, unsigned r)
    : field_(field), n_(n), r_(r),
      coeffs_(trunc_length(field.p(), r), Matrix(field, n, n)) {}

PolyMatrix::PolyMatrix(unsigned r, std::vector<Matrix> coefficients)
    : PolyMatrix(coefficients.at(0).field(), coefficients.at(0).n(), r) {
  if (coefficients.size() > coeffs_.size()) {
    for (std::size_t m = coeffs_.size(); m < coefficients.size(); ++m)
      if (!coefficients[m].is_zero())
        throw UsageError("coefficient at degree " + std::to_string(m) +
                         " is beyond truncation");
    coefficients.resize(coeffs_.size(), coeffs_.front());
  }
  for (std::size_t m = 0; m < coefficients.size(); ++m) {
    if (!(coefficients[m].field() == field_) || !coefficients[m].is_square() ||
        coefficients[m].n() != n_)
      throw UsageError("coefficient matrices must share size and field");
    coeffs_[m] = std::move(coefficients[m]);
  }
}

PolyMatrix PolyMatrix::constant(const Matrix &m, unsigned r) {
  return PolyMatrix(r, std::vector<Matrix>{m});
}

PolyMatrix PolyMatrix::from_entries(std::size_t n, const std::vector<TruncPoly> &entries) {
  if (entries.size() != n * n || n == 0)
    throw UsageError("from_entries expects n*n polynomials");
  const TruncPoly &first = entries.front();
  PolyMatrix out(first.field(), n, first.r());
  for (std::size_t idx = 0; idx < entries.size(); ++idx) {
    first.require_compatible(entries[idx], "from_entries");
    for (std::size_t m = 0; m < out.length(); ++m)
      out.coeffs_[m](idx / n, idx % n) = entries[idx][m];
  }
  return out;
}

TruncPoly PolyMatrix::entry(std::size_t i, std::size_t j) const {
  TruncPoly a(field_, r_);
  for (std::size_t m = 0; m < length(); ++m)
    a[m] = coeffs_[m](i, j);
  return a;
}

void PolyMatrix::require_compatible(const PolyMatrix &o, const char *op) const {
  if (!(field_ == o.field_) || n_ != o.n_ || r_ != o.r_)
    throw UsageError(std::string(op) + ": polynomial matrices differ in (n, p, r, field)");
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix &o) const {
  require_compatible(o, "add");
  PolyMatrix out = *this;
  for (std::size_t m = 0; m < length(); ++m)
    out.coeffs_[m] += o.coeffs_[m];
  return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix &o) const {
  require_compatible(o, "sub");
  PolyMatrix out = *this;
  for (std::size_t m = 0; m < length(); ++m)
    out.coeffs_[m] = coeffs_[m] - o.coeffs_[m];
  return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix &o) const {
  require_compatible(o, "mul");
  PolyMatrix out(field_, n_, r_);
  const std::size_t len = length();
  for (std::size_t i = 0; i < len; ++i) {
    if (coeffs_[i].is_zero())
      continue;
    for (std::size_t j = 0; i + j < len; ++j) {
      if (o.coeffs_[j].is_zero())
        continue;
      out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return out;
}

Matrix coefficient_matrix(const PolyMatrix &phi, std::size_t m) {
  if (m >= phi.length())
    throw UsageError("coefficient degree " + std::to_string(m) +
                     " out of range for p^r = " + std::to_string(phi.length()));
  return phi.coefficients()[m];
}

Matrix evaluate(const PolyMatrix &phi, Residue c) {
  Matrix acc(phi.field(), phi.n(), phi.n());
  c %= phi.p();
  for (std::size_t m = phi.length(); m-- > 0;)
    acc = acc.scaled(c) + phi.coefficients()[m];
  return acc;
}

PolyMatrix frobenius_twist(const PolyMatrix &phi, unsigned i) {
  std::size_t step = 1;
  for (unsigned k = 0; k < i && step < phi.length(); ++k)
    step *= phi.p();
  PolyMatrix out(phi.field(), phi.n(), phi.r());
  for (std::size_t m = 0; m < phi.length() && m * step < phi.length(); ++m)
    out.coefficient(m * step) = phi.coefficients()[m];
  return out;
}

PolyMatrix scale_variable(const PolyMatrix &phi, Residue c) {
  PolyMatrix out = phi;
  Residue cm = 1;
  for (std::size_t m = 0; m < phi.length(); ++m) {
    out.coefficient(m) = phi.coefficients()[m].scaled(cm);
    cm = modp::mul(cm, c % phi.p(), phi.p());
  }
  return out;
}

PolyMatrix conjugate(const Matrix &g, const PolyMatrix &phi) {
  const Matrix ginv = g.inverse();
  PolyMatrix out = phi;
  for (std::size_t m = 0; m < phi.length(); ++m)
    out.coefficient(m) = g * phi.coefficients()[m] * ginv;
  return out;
}

// ---------------------------------------------------------- PolyMatrix2

PolyMatrix2::PolyMatrix2(Field field, std::size_t n, unsigned r)
    : n_(n), r_(r), length_(trunc_length(field.p(), r)),
      grid_(length_ * length_, Matrix(field, n, n)) {}

PolyMatrix2 subst_sum(const PolyMatrix &phi) {
  PolyMatrix2 out(phi.field(), phi.n(), phi.r());
  const Residue p = phi.p();
  for (std::size_t m = 0; m < phi.length(); ++m) {
    const Matrix &a = phi.coefficients()[m];
    if (a.is_zero())
      continue;
    for (std::size_t i = 0; i <= m; ++i) {
      const Residue b = binom_mod_p(m, i, p);
      if (b != 0)
        out(i, m - i) += a.scaled(b);
    }
  }
  return out;
}

PolyMatrix2 PolyMatrix2::outer(const PolyMatrix &phi, const PolyMatrix &psi) {
  if (!(phi.field() == psi.field()) || phi.n() != psi.n() || phi.r() != psi.r())
    throw UsageError("outer: polynomial matrices differ in (n, p, r, field)");
  PolyMatrix2 out(phi.field(), phi.n(), phi.r());
  for (std::size_t a = 0; a < phi.length(); ++a) {
    const Matrix &left = phi.coefficients()[a];
    if (left.is_zero())
      continue;
    for (std::size_t b = 0; b < psi.length(); ++b) {
      const Matrix &right = psi.coefficients()[b];
      if (!right.is_zero())
        out(a, b) = left * right;
    }
  }
  return out;
}

} // namespace infsub

namespace infsub {

namespace {

TruncPoly2 primitivity_defect(const TruncPoly &a) {
  return subst_sum(a) - TruncPoly2::in_s(a) - TruncPoly2::in_t(a);
}

} // namespace

bool is_primitive(const TruncPoly &a) {
  return primitivity_defect(a) == TruncPoly2(a.field(), a.r());
}

std::vector<TruncPoly> primitive_poly_basis(const Field &field, unsigned r) {
  const std::size_t len = trunc_length(field.p(), r);
  Matrix system(field, len * len, len);
  for (std::size_t m = 0; m < len; ++m) {
    const TruncPoly2 defect = primitivity_defect(TruncPoly::monomial(field, r, m, 1));
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t j = 0; j < len; ++j)
        system(i * len + j, m) = defect(i, j);
  }
  std::vector<TruncPoly> out;
  for (const auto &v : kernel_basis(system)) {
    TruncPoly a(field, r);
    for (std::size_t m = 0; m < len; ++m)
      a[m] = v[m];
    out.push_back(std::move(a));
  }
  return out;
}

} // namespace infsub
