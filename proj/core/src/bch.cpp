#include "infsub/bch.hpp"

#include "infsub/errors.hpp"
#include "infsub/oneparam.hpp"

#include <numeric>
#include <utility>

namespace infsub {

UnipotentRadicalModel::UnipotentRadicalModel(Field field, std::vector<std::size_t> block_sizes)
    : field_(field), blocks_(std::move(block_sizes)) {
  if (blocks_.empty())
    throw UsageError("parabolic needs at least one block");
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b] == 0)
      throw UsageError("block sizes must be positive");
    for (std::size_t k = 0; k < blocks_[b]; ++k)
      block_of_.push_back(b);
  }
  n_ = block_of_.size();
  if (nilpotence_class() >= field_.p())
    throw DomainError("nilpotence class " + std::to_string(nilpotence_class()) +
                      " is not below p = " + std::to_string(field_.p()));
}

bool UnipotentRadicalModel::in_radical_position(std::size_t i, std::size_t j) const {
  return block_of_[i] < block_of_[j];
}

bool UnipotentRadicalModel::in_parabolic_position(std::size_t i, std::size_t j) const {
  return block_of_[i] <= block_of_[j];
}

bool UnipotentRadicalModel::contains(const Matrix &x) const {
  if (!x.is_square() || x.n() != n_ || !(x.field() == field_))
    return false;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (x(i, j) != 0 && !in_radical_position(i, j))
        return false;
  return true;
}

bool UnipotentRadicalModel::contains_unipotent(const Matrix &g) const {
  if (!g.is_square() || g.n() != n_)
    return false;
  return contains(g - Matrix::identity(field_, n_));
}

bool UnipotentRadicalModel::contains_parabolic(const Matrix &g) const {
  if (!g.is_square() || g.n() != n_ || !(g.field() == field_))
    return false;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (g(i, j) != 0 && !in_parabolic_position(i, j))
        return false;
  return g.is_invertible();
}

std::vector<Matrix> UnipotentRadicalModel::root_vectors() const {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (in_radical_position(i, j))
        out.push_back(Matrix::elementary(field_, n_, i, j));
  return out;
}

Matrix UnipotentRadicalModel::random_element(SplitMix64 &rng) const {
  Matrix x(field_, n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (in_radical_position(i, j))
        x(i, j) = static_cast<Residue>(rng.below(field_.p()));
  return x;
}

Matrix UnipotentRadicalModel::random_parabolic(SplitMix64 &rng) const {
  for (;;) {
    Matrix g(field_, n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (in_parabolic_position(i, j))
          g(i, j) = static_cast<Residue>(rng.below(field_.p()));
    if (g.is_invertible())
      return g;
  }
}

BCHElement::BCHElement(const UnipotentRadicalModel &model, Matrix x) : x_(std::move(x)) {
  if (!model.contains(x_))
    throw UsageError("matrix is not in the unipotent radical: " + x_.to_string());
}

BCHElement bch_mul(const UnipotentRadicalModel &model, const BCHElement &x, const BCHElement &y) {
  return BCHElement(model, log_p(exp_p(x.matrix()) * exp_p(y.matrix())));
}

Matrix epsilon_P(const UnipotentRadicalModel &model, const BCHElement &x) {
  Matrix u = exp_p(x.matrix());
  if (!model.contains_unipotent(u))
    throw InternalConsistencyError("epsilon_P image left the unipotent radical");
  return u;
}

BCHElement epsilon_P_inverse(const UnipotentRadicalModel &model, const Matrix &u) {
  if (!model.contains_unipotent(u))
    throw UsageError("epsilon_P_inverse: matrix is not in U: " + u.to_string());
  return BCHElement(model, log_p(u));
}

Report check_bch_group(const UnipotentRadicalModel &model, std::size_t samples,
                       std::uint64_t seed, unsigned jobs) {
  Report report("bch");
  for (const char *c : {"associativity", "identity", "inverse", "exp_homomorphism",
                        "log_inverse", "tangent_identity", "root_clause"})
    report.declare(c);
  const bool class_two = model.nilpotence_class() <= 2;
  if (class_two)
    report.declare("class2_closed_form");
  report.set_fact("n", static_cast<long long>(model.n()));
  report.set_fact("nilpotence_class", static_cast<long long>(model.nilpotence_class()));
  report.set_fact("samples", static_cast<long long>(samples));

  const Field &field = model.field();
  const Residue p = field.p();
  const Matrix one = Matrix::identity(field, model.n());
  const Matrix zero(field, model.n(), model.n());
  const Residue half = modp::inv(2 % p, p);

  run_samples(report, samples, jobs, [&](std::size_t i, Report &out) {
    SplitMix64 rng = sample_stream(seed, i);
    const BCHElement x(model, model.random_element(rng));
    const BCHElement y(model, model.random_element(rng));
    const BCHElement z(model, model.random_element(rng));
    const BCHElement e(model, zero);
    const BCHElement xy = bch_mul(model, x, y);
    out.record("associativity", i,
               bch_mul(model, xy, z) == bch_mul(model, x, bch_mul(model, y, z)));
    out.record("identity", i, bch_mul(model, x, e) == x && bch_mul(model, e, x) == x);
    out.record("inverse", i, bch_mul(model, x, BCHElement(model, -x.matrix())) == e);
    out.record("exp_homomorphism", i,
               epsilon_P(model, xy) == epsilon_P(model, x) * epsilon_P(model, y));
    const Matrix u = one + model.random_element(rng);
    out.record("log_inverse", i,
               epsilon_P_inverse(model, epsilon_P(model, x)) == x &&
                   epsilon_P(model, epsilon_P_inverse(model, u)) == u);
    out.record("tangent_identity", i,
               coefficient_matrix(exp_line(x.matrix(), 1), 1) == x.matrix());
    if (class_two) {
      const Matrix closed =
          x.matrix() + y.matrix() + commutator(x.matrix(), y.matrix()).scaled(half);
      out.record("class2_closed_form", i, xy.matrix() == closed, [&] {
        return "x*y = " + xy.matrix().to_string() + ", closed form " + closed.to_string();
      });
    }
  });

  // epsilon(s E_a) = 1 + s E_a for every root vector and every s in F_p.
  std::size_t idx = 0;
  for (const auto &root : model.root_vectors()) {
    for (Residue s = 0; s < p; ++s) {
      const Matrix sx = root.scaled(s);
      report.record("root_clause", idx, epsilon_P(model, BCHElement(model, sx)) == one + sx);
    }
    ++idx;
  }
  return report;
}

Report check_P_equivariance(const UnipotentRadicalModel &model, std::size_t samples,
                            std::uint64_t seed, unsigned jobs) {
  Report report("P-equivariance");
  report.declare("equivariance");
  report.declare("conjugate_stays_in_u");
  report.set_fact("samples", static_cast<long long>(samples));
  run_samples(report, samples, jobs, [&](std::size_t i, Report &out) {
    SplitMix64 rng = sample_stream(seed, i);
    const Matrix g = model.random_parabolic(rng);
    const BCHElement x(model, model.random_element(rng));
    const Matrix gx = conjugate(g, x.matrix());
    const bool stays = model.contains(gx);
    out.record("conjugate_stays_in_u", i, stays);
    if (!stays)
      return;
    out.record("equivariance", i,
               epsilon_P(model, BCHElement(model, gx)) == conjugate(g, epsilon_P(model, x)),
               [&] { return "g = " + g.to_string() + ", x = " + x.matrix().to_string(); });
  });
  return report;
}

namespace {

Matrix random_permutation(const Field &field, std::size_t n, SplitMix64 &rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i)
    std::swap(perm[i - 1], perm[rng.below(i)]);
  Matrix w(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    w(i, perm[i]) = 1;
  return w;
}

} // namespace

Report check_cross_parabolic(const UnipotentRadicalModel &model_i,
                             const UnipotentRadicalModel &model_j, std::size_t samples,
                             std::uint64_t seed, unsigned jobs) {
  if (model_i.n() != model_j.n() || !(model_i.field() == model_j.field()))
    throw UsageError("cross-parabolic check needs models of the same GL_n");
  const Field &field = model_i.field();
  const std::size_t n = model_i.n();
  Report report("cross-parabolic");
  report.declare("agreement");
  report.set_fact("samples", static_cast<long long>(samples));

  std::vector<int> nonzero(samples, 0);
  run_samples(report, samples, jobs, [&](std::size_t s, Report &out) {
    SplitMix64 rng = sample_stream(seed, s);
    const Matrix g =
        model_i.random_parabolic(rng) * random_permutation(field, n, rng) *
        model_j.random_parabolic(rng);
    const Matrix ginv = g.inverse();

    // Coordinates of x on radical positions of J; constrain every entry of
    // g x g^{-1} outside the radical of I to vanish.
    std::vector<std::pair<std::size_t, std::size_t>> coords;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (model_j.in_radical_position(i, j))
          coords.emplace_back(i, j);
    Matrix system(field, n * n, coords.size());
    for (std::size_t c = 0; c < coords.size(); ++c) {
      const Matrix img = g * Matrix::elementary(field, n, coords[c].first, coords[c].second) * ginv;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (!model_i.in_radical_position(a, b))
            system(a * n + b, c) = img(a, b);
    }
    Matrix x(field, n, n);
    for (const auto &v : kernel_basis(system)) {
      const auto coef = static_cast<Residue>(rng.below(field.p()));
      for (std::size_t c = 0; c < coords.size(); ++c)
        x(coords[c].first, coords[c].second) =
            modp::add(x(coords[c].first, coords[c].second),
                      modp::mul(coef, v[c], field.p()), field.p());
    }
    nonzero[s] = x.is_zero() ? 0 : 1;
    const BCHElement xj(model_j, x);
    const BCHElement yi(model_i, g * x * ginv);
    out.record("agreement", s,
               epsilon_P(model_i, yi) == g * epsilon_P(model_j, xj) * ginv,
               [&] { return "g = " + g.to_string() + ", x = " + x.to_string(); });
  });
  report.set_fact("nonzero_samples", std::accumulate(nonzero.begin(), nonzero.end(), 0LL));
  return report;
}

} // namespace infsub
