#include "infsub/matrix.hpp"

#include "infsub/errors.hpp"

#include <sstream>
#include <utility>

namespace infsub {

namespace {

void require_prime_field(const Field &f) {
  if (!f.is_prime_field())
    throw UsageError("matrices are supported over prime fields only, got " +
                     f.to_string());
}

} // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  require_prime_field(field_);
}

Matrix::Matrix(Field field, std::initializer_list<std::initializer_list<long long>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  require_prime_field(field_);
  data_.reserve(rows_ * cols_);
  for (const auto &row : rows) {
    if (row.size() != cols_)
      throw UsageError("ragged matrix literal");
    for (long long v : row)
      data_.push_back(modp::from_int(v, field_.p()));
  }
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Matrix Matrix::elementary(Field field, std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n)
    throw UsageError("elementary matrix index out of range");
  Matrix m(field, n, n);
  m(i, j) = 1;
  return m;
}

Matrix Matrix::diagonal(Field field, std::span<const long long> diag) {
  Matrix m(field, diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i)
    m.set(i, i, diag[i]);
  return m;
}

Matrix Matrix::jordan_block(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    m(i, i + 1) = 1;
  return m;
}

std::size_t Matrix::n() const {
  if (!is_square())
    throw UsageError("expected a square matrix");
  return rows_;
}

void Matrix::require_compatible(const Matrix &o, const char *op) const {
  if (!(field_ == o.field_))
    throw UsageError(std::string(op) + ": mismatched fields");
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw UsageError(std::string(op) + ": dimension mismatch");
}

Matrix Matrix::operator+(const Matrix &o) const {
  Matrix r = *this;
  r += o;
  return r;
}

Matrix &Matrix::operator+=(const Matrix &o) {
  require_compatible(o, "add");
  const Residue p = field_.p();
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] = modp::add(data_[i], o.data_[i], p);
  return *this;
}

Matrix Matrix::operator-(const Matrix &o) const {
  require_compatible(o, "sub");
  Matrix r = *this;
  const Residue p = field_.p();
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = modp::sub(data_[i], o.data_[i], p);
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto &v : r.data_)
    v = modp::neg(v, field_.p());
  return r;
}

Matrix Matrix::operator*(const Matrix &o) const {
  if (!(field_ == o.field_))
    throw UsageError("mul: mismatched fields");
  if (cols_ != o.rows_)
    throw UsageError("mul: dimension mismatch");
  const std::uint64_t p = field_.p();
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < cols_; ++k)
        acc += static_cast<std::uint64_t>((*this)(i, k)) * o(k, j) % p;
      r(i, j) = static_cast<Residue>(acc % p);
    }
  return r;
}

Matrix Matrix::scaled(Residue c) const {
  Matrix r = *this;
  for (auto &v : r.data_)
    v = modp::mul(v, c, field_.p());
  return r;
}

Matrix Matrix::pow(std::uint64_t e) const {
  Matrix result = identity(field_, n());
  Matrix base = *this;
  while (e > 0) {
    if (e & 1U)
      result = result * base;
    e >>= 1U;
    if (e > 0)
      base = base * base;
  }
  return result;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (Residue v : data_)
    if (v != 0)
      return false;
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square())
    return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1U : 0U))
        return false;
  return true;
}

Residue Matrix::trace() const {
  Residue t = 0;
  for (std::size_t i = 0; i < n(); ++i)
    t = modp::add(t, (*this)(i, i), field_.p());
  return t;
}

Residue Matrix::determinant() const {
  const std::size_t dim = n();
  const Residue p = field_.p();
  Matrix a = *this;
  Residue det = 1;
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = col;
    while (pivot < dim && a(pivot, col) == 0)
      ++pivot;
    if (pivot == dim)
      return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < dim; ++j)
        std::swap(a(pivot, j), a(col, j));
      det = modp::neg(det, p);
    }
    det = modp::mul(det, a(col, col), p);
    const Residue pinv = modp::inv(a(col, col), p);
    for (std::size_t i = col + 1; i < dim; ++i) {
      const Residue f = modp::mul(a(i, col), pinv, p);
      if (f == 0)
        continue;
      for (std::size_t j = col; j < dim; ++j)
        a(i, j) = modp::sub(a(i, j), modp::mul(f, a(col, j), p), p);
    }
  }
  return det;
}

std::size_t Matrix::rank() const {
  Matrix a = *this;
  return row_reduce(a).size();
}

Matrix Matrix::inverse() const {
  const std::size_t dim = n();
  Matrix aug(field_, dim, 2 * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j)
      aug(i, j) = (*this)(i, j);
    aug(i, dim + i) = 1;
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < dim || pivots[dim - 1] != dim - 1)
    throw DomainError("matrix is singular");
  Matrix inv(field_, dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      inv(i, j) = aug(i, dim + j);
  return inv;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? "," : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix commutator(const Matrix &a, const Matrix &b) { return a * b - b * a; }

Matrix conjugate(const Matrix &g, const Matrix &x) { return g * x * g.inverse(); }

bool is_p_nilpotent(const Matrix &a) { return a.pow(a.p()).is_zero(); }

bool is_p_unipotent(const Matrix &g) {
  return (g - Matrix::identity(g.field(), g.n())).pow(g.p()).is_zero();
}

std::vector<std::size_t> row_reduce(Matrix &a) {
  const Residue p = a.p();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col) == 0)
      ++pivot;
    if (pivot == a.rows())
      continue;
    if (pivot != row)
      for (std::size_t j = 0; j < a.cols(); ++j)
        std::swap(a(pivot, j), a(row, j));
    const Residue pinv = modp::inv(a(row, col), p);
    for (std::size_t j = col; j < a.cols(); ++j)
      a(row, j) = modp::mul(a(row, j), pinv, p);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0)
        continue;
      const Residue f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        a(i, j) = modp::sub(a(i, j), modp::mul(f, a(row, j), p), p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Residue>> kernel_basis(const Matrix &a) {
  Matrix rref = a;
  const auto pivots = row_reduce(rref);
  const Residue p = a.p();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots)
    is_pivot[c] = true;
  std::vector<std::vector<Residue>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free])
      continue;
    std::vector<Residue> v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = modp::neg(rref(r, free), p);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix matrix_from_vector(const Field &field, std::size_t n, std::span<const Residue> v) {
  if (v.size() != n * n)
    throw UsageError("vector length does not match n*n");
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n * n; ++i)
    m(i / n, i % n) = v[i];
  return m;
}

std::vector<Matrix> centralizer_basis(const Matrix &x) {
  const std::size_t n = x.n();
  const Residue p = x.p();
  // Column (a, b) of ad_x is [x, E_ab] = x E_ab - E_ab x.
  Matrix ad(x.field(), n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t col = a * n + b;
      for (std::size_t i = 0; i < n; ++i) {
        // (x E_ab)_{ib} = x_{ia}
        ad(i * n + b, col) = modp::add(ad(i * n + b, col), x(i, a), p);
        // (E_ab x)_{aj} = x_{bj}
        ad(a * n + i, col) = modp::sub(ad(a * n + i, col), x(b, i), p);
      }
    }
  std::vector<Matrix> out;
  for (const auto &v : kernel_basis(ad))
    out.push_back(matrix_from_vector(x.field(), n, v));
  return out;
}

// ------------------------------------------------------- tuple types

NilpotentWitness::NilpotentWitness(Matrix m) : m_(std::move(m)) {
  if (!m_.is_square())
    throw UsageError("nilpotent witness must be square");
  if (!is_p_nilpotent(m_))
    throw DomainError("matrix is not p-nilpotent: " + m_.to_string());
}

CommutingTuple::CommutingTuple(std::vector<Matrix> layers) {
  if (layers.empty())
    throw UsageError("commuting tuple needs at least one layer");
  for (const auto &m : layers) {
    if (!m.is_square() || m.rows() != layers.front().rows() ||
        !(m.field() == layers.front().field()))
      throw UsageError("tuple layers must share size and field");
  }
  for (std::size_t i = 0; i < layers.size(); ++i)
    for (std::size_t j = i + 1; j < layers.size(); ++j)
      if (!commutator(layers[i], layers[j]).is_zero())
        throw DomainError("tuple layers " + std::to_string(i) + " and " +
                          std::to_string(j) + " do not commute");
  layers_.reserve(layers.size());
  for (auto &m : layers)
    layers_.emplace_back(std::move(m));
}

std::vector<Matrix> CommutingTuple::matrices() const {
  std::vector<Matrix> out;
  out.reserve(layers_.size());
  for (const auto &w : layers_)
    out.push_back(w.matrix());
  return out;
}

// --------------------------------------------------------- sampling

Matrix random_matrix(const Field &field, std::size_t rows, std::size_t cols,
                     SplitMix64 &rng) {
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = static_cast<Residue>(rng.below(field.p()));
  return m;
}

Matrix random_strict_upper(const Field &field, std::size_t n, SplitMix64 &rng) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      m(i, j) = static_cast<Residue>(rng.below(field.p()));
  return m;
}

Matrix random_invertible(const Field &field, std::size_t n, SplitMix64 &rng) {
  for (;;) {
    Matrix m = random_matrix(field, n, n, rng);
    if (m.determinant() != 0)
      return m;
  }
}

CommutingTuple random_commuting_tuple(const Field &field, std::size_t n, std::size_t r,
                                      std::uint64_t seed) {
  if (n > field.p())
    throw UsageError("random_commuting_tuple requires n <= p");
  if (r == 0)
    throw UsageError("random_commuting_tuple requires r >= 1");
  SplitMix64 rng(seed);
  std::vector<Matrix> layers;
  layers.reserve(r);
  if (seed % 2 == 0) {
    const Matrix base = random_strict_upper(field, n, rng);
    std::vector<Matrix> powers{base};
    for (std::size_t k = 1; k + 1 < n; ++k)
      powers.push_back(powers.back() * base);
    for (std::size_t layer = 0; layer < r; ++layer) {
      Matrix x(field, n, n);
      for (const auto &pw : powers)
        x += pw.scaled(static_cast<Residue>(rng.below(field.p())));
      layers.push_back(std::move(x));
    }
  } else {
    for (std::size_t layer = 0; layer < r; ++layer) {
      // Strictly upper-triangular Y with [X_j, Y] = 0 for previous layers:
      // solve the linear conditions in the free upper coordinates.
      std::vector<std::pair<std::size_t, std::size_t>> coords;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          coords.emplace_back(i, j);
      Matrix system(field, std::max<std::size_t>(1, layers.size() * n * n), coords.size());
      for (std::size_t c = 0; c < coords.size(); ++c) {
        const Matrix e = Matrix::elementary(field, n, coords[c].first, coords[c].second);
        for (std::size_t l = 0; l < layers.size(); ++l) {
          const Matrix br = commutator(layers[l], e);
          for (std::size_t k = 0; k < n * n; ++k)
            system(l * n * n + k, c) = br.data()[k];
        }
      }
      Matrix y(field, n, n);
      for (const auto &v : kernel_basis(system)) {
        const auto coef = static_cast<Residue>(rng.below(field.p()));
        for (std::size_t c = 0; c < coords.size(); ++c)
          y(coords[c].first, coords[c].second) = modp::add(
              y(coords[c].first, coords[c].second), modp::mul(coef, v[c], field.p()),
              field.p());
      }
      layers.push_back(std::move(y));
    }
  }
  return CommutingTuple(std::move(layers));
}

} // namespace infsub
