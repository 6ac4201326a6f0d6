#include "infsub/oneparam.hpp"

#include "infsub/errors.hpp"

#include <utility>

namespace infsub {

namespace {

std::size_t layer_degree(Residue p, unsigned i) {
  std::size_t d = 1;
  for (unsigned k = 0; k < i; ++k)
    d *= p;
  return d;
}

void require_n_at_most_p(const Field &field, std::size_t n, const char *what) {
  if (n > field.p())
    throw UsageError(std::string(what) + " requires n <= p (n = " + std::to_string(n) +
                     ", p = " + std::to_string(field.p()) + ")");
}

} // namespace

bool verify_homomorphism(const PolyMatrix &phi) {
  if (!phi.coefficients().front().is_identity())
    return false;
  return subst_sum(phi) == PolyMatrix2::outer(phi, phi);
}

OneParamSubgroup::OneParamSubgroup(PolyMatrix phi) : phi_(std::move(phi)) {
  if (!verify_homomorphism(phi_))
    throw DomainError("polynomial matrix is not a one-parameter subgroup");
}

Matrix exp_p(const Matrix &x) {
  if (!is_p_nilpotent(x))
    throw DomainError("exp_p: matrix is not p-nilpotent: " + x.to_string());
  const Residue p = x.p();
  Matrix result = Matrix::identity(x.field(), x.n());
  Matrix power = result;
  for (Residue i = 1; i < p; ++i) {
    power = power * x;
    if (power.is_zero())
      break;
    result += power.scaled(inv_factorial_mod_p(i, p));
  }
  return result;
}

PolyMatrix exp_line(const Matrix &x, unsigned r) {
  if (!is_p_nilpotent(x))
    throw DomainError("exp_line: matrix is not p-nilpotent: " + x.to_string());
  const Residue p = x.p();
  PolyMatrix phi(x.field(), x.n(), r);
  Matrix power = Matrix::identity(x.field(), x.n());
  phi.coefficient(0) = power;
  for (Residue i = 1; i < p && i < phi.length(); ++i) {
    power = power * x;
    if (power.is_zero())
      break;
    phi.coefficient(i) = power.scaled(inv_factorial_mod_p(i, p));
  }
  return phi;
}

Matrix log_p(const Matrix &g) {
  if (!is_p_unipotent(g))
    throw DomainError("log_p: matrix is not p-unipotent: " + g.to_string());
  const Residue p = g.p();
  const Matrix nil = g - Matrix::identity(g.field(), g.n());
  Matrix result(g.field(), g.n(), g.n());
  Matrix power = Matrix::identity(g.field(), g.n());
  for (Residue i = 1; i < p; ++i) {
    power = power * nil;
    if (power.is_zero())
      break;
    Residue c = modp::inv(i, p);
    if (i % 2 == 0)
      c = modp::neg(c, p);
    result += power.scaled(c);
  }
  return result;
}

PolyMatrix lift_layers(const std::vector<Matrix> &layers, unsigned r) {
  if (layers.empty())
    throw UsageError("lift needs at least one layer");
  const Matrix &first = layers.front();
  PolyMatrix phi = PolyMatrix::constant(Matrix::identity(first.field(), first.n()), r);
  for (unsigned i = 0; i < layers.size(); ++i) {
    if (layers[i].is_zero())
      continue;
    phi = phi * frobenius_twist(exp_line(layers[i], r), i);
  }
  return phi;
}

OneParamSubgroup lift(const CommutingTuple &tuple) {
  const auto r = static_cast<unsigned>(tuple.r());
  return OneParamSubgroup(lift_layers(tuple.matrices(), r));
}

CommutingTuple decompose(const PolyMatrix &phi) {
  if (!verify_homomorphism(phi))
    throw DomainError("decompose: input is not a one-parameter subgroup");
  const unsigned r = phi.r();
  const Field &field = phi.field();
  std::vector<Matrix> layers(r, Matrix(field, phi.n(), phi.n()));
  for (unsigned i = 0; i < r; ++i) {
    const std::size_t deg = layer_degree(field.p(), i);
    Matrix layer = coefficient_matrix(phi, deg);
    if (i > 0)
      layer = layer - coefficient_matrix(lift_layers(layers, r), deg);
    if (!is_p_nilpotent(layer))
      throw InternalConsistencyError("decompose: layer " + std::to_string(i) +
                                     " is not p-nilpotent");
    for (unsigned j = 0; j < i; ++j)
      if (!commutator(layers[j], layer).is_zero())
        throw InternalConsistencyError("decompose: layers " + std::to_string(j) + " and " +
                                       std::to_string(i) + " do not commute");
    layers[i] = std::move(layer);
  }
  if (!(lift_layers(layers, r) == phi))
    throw InternalConsistencyError("decompose: recovered tuple does not lift back to input");
  return CommutingTuple(std::move(layers));
}

OneParamSubgroup saturate(const Matrix &g, unsigned r) {
  require_n_at_most_p(g.field(), g.n(), "saturate");
  return OneParamSubgroup(exp_line(log_p(g), r));
}

Matrix random_p_unipotent(const Field &field, std::size_t n, SplitMix64 &rng) {
  require_n_at_most_p(field, n, "random_p_unipotent");
  const Matrix h = random_invertible(field, n, rng);
  const Matrix u = Matrix::identity(field, n) + random_strict_upper(field, n, rng);
  return conjugate(h, u);
}

// ----------------------------------------------------------------- axioms

ExponentialCandidate ExponentialCandidate::truncated_series(const Field &field, std::size_t n) {
  return ExponentialCandidate{
      "truncated-series", field, n, [](const Matrix &x) { return exp_p(x); },
      [](const Matrix &x, unsigned r) { return exp_line(x, r); }};
}

AxiomSamples make_axiom_samples(const Field &field, std::size_t n, std::size_t nilpotents,
                                std::size_t conjugators, std::size_t scalars,
                                std::size_t pairs, std::uint64_t seed) {
  require_n_at_most_p(field, n, "make_axiom_samples");
  SplitMix64 rng(seed);
  AxiomSamples s;
  for (std::size_t i = 0; i < nilpotents; ++i) {
    const Matrix h = random_invertible(field, n, rng);
    s.nilpotents.push_back(conjugate(h, random_strict_upper(field, n, rng)));
  }
  for (std::size_t i = 0; i < conjugators; ++i)
    s.conjugators.push_back(random_invertible(field, n, rng));
  for (std::size_t i = 0; i < scalars; ++i)
    s.scalars.push_back(static_cast<Residue>(rng.below(field.p())));
  for (std::size_t i = 0; i < pairs; ++i) {
    const CommutingTuple t = random_commuting_tuple(field, n, 2, rng.next());
    const Matrix h = random_invertible(field, n, rng);
    s.commuting_pairs.emplace_back(conjugate(h, t[0]), conjugate(h, t[1]));
  }
  return s;
}

Report verify_exponential_axioms(const ExponentialCandidate &cand, const AxiomSamples &samples,
                                 unsigned jobs) {
  Report report("exponential-axioms");
  for (const char *c : {"one_parameter_law", "differential", "adjoint_trivial", "equivariance",
                        "injectivity", "commuting_lemma"})
    report.declare(c);
  report.set_fact("nilpotent_samples", static_cast<long long>(samples.nilpotents.size()));
  report.set_fact("conjugator_samples", static_cast<long long>(samples.conjugators.size()));
  report.set_fact("scalar_samples", static_cast<long long>(samples.scalars.size()));
  report.set_fact("commuting_pairs", static_cast<long long>(samples.commuting_pairs.size()));

  const auto &xs = samples.nilpotents;
  std::vector<Matrix> images;
  images.reserve(xs.size());
  for (const auto &x : xs)
    images.push_back(cand.point(x));

  std::size_t basis_vectors = 0;
  for (const auto &x : xs)
    basis_vectors += centralizer_basis(x).size();
  report.set_fact("centralizer_basis_vectors", static_cast<long long>(basis_vectors));

  run_samples(report, xs.size(), jobs, [&](std::size_t i, Report &out) {
    const Matrix &x = xs[i];
    // Lines have degree < p in s, so height 1 already checks the full law.
    const PolyMatrix line = cand.line(x, 1);
    out.record("one_parameter_law", i, verify_homomorphism(line),
               [&] { return "E_X fails phi(s+t) = phi(s)phi(t) for X = " + x.to_string(); });
    out.record("differential", i, coefficient_matrix(line, 1) == x,
               [&] { return "degree-1 coefficient differs from X = " + x.to_string(); });
    const auto basis = centralizer_basis(x);
    for (Residue s : samples.scalars) {
      const Matrix e = cand.point(x.scaled(s));
      for (const auto &b : basis)
        out.record("adjoint_trivial", i, conjugate(e, b) == b, [&] {
          return "E(" + std::to_string(s) + "X) moves centralizer element " + b.to_string();
        });
    }
    bool injective = true;
    for (std::size_t j = 0; j < i; ++j)
      if (!(xs[j] == x) && images[j] == images[i])
        injective = false;
    out.record("injectivity", i, injective,
               [&] { return "image of sample collides with an earlier sample"; });
  });

  run_samples(report, samples.conjugators.size(), jobs, [&](std::size_t j, Report &out) {
    if (xs.empty())
      return;
    const Matrix &g = samples.conjugators[j];
    const Matrix &x = xs[j % xs.size()];
    out.record("equivariance", j, cand.point(conjugate(g, x)) == conjugate(g, cand.point(x)),
               [&] { return "E(gXg^-1) != gE(X)g^-1 for g = " + g.to_string(); });
  });

  run_samples(report, samples.commuting_pairs.size(), jobs, [&](std::size_t j, Report &out) {
    const auto &[x, y] = samples.commuting_pairs[j];
    const Matrix ex = cand.point(x);
    const Matrix ey = cand.point(y);
    out.record("commuting_lemma", j, ex * ey == ey * ex, [&] {
      return "E(X), E(Y) do not commute for X = " + x.to_string() + ", Y = " + y.to_string();
    });
  });
  return report;
}

// ------------------------------------------------------------- examples

Report sl2_example_check(unsigned p) {
  const Field field = Field::prime(p);
  const unsigned r = 2;
  const Matrix one = Matrix::identity(field, 2);
  const Matrix x = Matrix::elementary(field, 2, 0, 1);
  const Matrix zero(field, 2, 2);

  PolyMatrix phi1(r, {one, x});
  PolyMatrix phi2 = PolyMatrix::constant(one, r);
  phi2.coefficient(p) = x;
  const PolyMatrix phi3 = phi1 * phi2;

  Report report("sl2-example");
  report.set_fact("p", p);
  int idx = 0;
  for (const PolyMatrix *phi : std::initializer_list<const PolyMatrix *>{&phi1, &phi2, &phi3}) {
    report.record("homomorphism", idx, verify_homomorphism(*phi));
    bool det_one = true;
    for (Residue c = 0; c < p; ++c)
      det_one = det_one && evaluate(*phi, c).determinant() == 1;
    report.record("lands_in_sl2", idx, det_one);
    ++idx;
  }
  // Degree p^j coefficient is d phi(u_j).
  const Matrix d1_u0 = coefficient_matrix(phi1, 1);
  const Matrix d3_u0 = coefficient_matrix(phi3, 1);
  const Matrix d1_u1 = coefficient_matrix(phi1, p);
  const Matrix d2_u1 = coefficient_matrix(phi2, p);
  const Matrix d3_u1 = coefficient_matrix(phi3, p);
  report.record("dphi1_u0_is_X", 0, d1_u0 == x);
  report.record("dphi1_u0_eq_dphi3_u0", 0, d1_u0 == d3_u0);
  // X^(p) = d phi_1(gamma_p) vanishes for the 2x2 line 1 + tX.
  report.record("dphi1_u1_is_X_p", 0, d1_u1 == zero);
  report.record("dphi2_u1_is_X", 0, d2_u1 == x);
  report.record("dphi3_u1_is_sum", 0, d3_u1 == d1_u1 + x);
  const Matrix diff = d3_u1 - d1_u1;
  report.record("difference_is_X", 0, diff == x);
  report.record("difference_trace_zero", 0, diff.trace() == 0);
  return report;
}

Report sl_n_compatibility_check(const Field &field, std::size_t n, unsigned r,
                                std::size_t samples, std::uint64_t seed, unsigned jobs) {
  require_n_at_most_p(field, n, "sl_n_compatibility_check");
  Report report("sl-n");
  report.declare("trace_zero");
  report.declare("exp_det_one");
  report.declare("lift_det_one");
  report.set_fact("samples", static_cast<long long>(samples));
  run_samples(report, samples, jobs, [&](std::size_t i, Report &out) {
    SplitMix64 rng = sample_stream(seed, i);
    const Matrix h = random_invertible(field, n, rng);
    const Matrix x = conjugate(h, random_strict_upper(field, n, rng));
    out.record("trace_zero", i, x.trace() == 0);
    out.record("exp_det_one", i, exp_p(x).determinant() == 1,
               [&] { return "det exp(X) != 1 for X = " + x.to_string(); });
    const CommutingTuple t = random_commuting_tuple(field, n, r, rng.next());
    std::vector<Matrix> layers;
    for (std::size_t k = 0; k < t.r(); ++k)
      layers.push_back(conjugate(h, t[k]));
    const PolyMatrix phi = lift(CommutingTuple(std::move(layers))).poly();
    bool det_one = true;
    for (Residue c = 0; c < field.p(); ++c)
      det_one = det_one && evaluate(phi, c).determinant() == 1;
    out.record("lift_det_one", i, det_one);
  });
  return report;
}

Report bijection_check(const Field &field, std::size_t n, unsigned r, std::size_t samples,
                       std::uint64_t seed, unsigned jobs) {
  Report report("bijection");
  for (const char *c : {"homomorphism", "round_trip", "equivariance", "frobenius_layering"})
    report.declare(c);
  report.set_fact("p", field.p());
  report.set_fact("n", static_cast<long long>(n));
  report.set_fact("r", r);
  report.set_fact("samples", static_cast<long long>(samples));
  run_samples(report, samples, jobs, [&](std::size_t i, Report &out) {
    SplitMix64 rng = sample_stream(seed, i);
    const CommutingTuple t = random_commuting_tuple(field, n, r, rng.next());
    const PolyMatrix phi = lift_layers(t.matrices(), r);
    out.record("homomorphism", i, verify_homomorphism(phi));
    bool round_trip = false;
    try {
      round_trip = decompose(phi) == t;
    } catch (const std::exception &) {
      round_trip = false;
    }
    out.record("round_trip", i, round_trip, [&] {
      std::string s = "decompose(lift(T)) != T for T =";
      for (std::size_t k = 0; k < t.r(); ++k)
        s += " " + t[k].to_string();
      return s;
    });
    const Matrix g = random_invertible(field, n, rng);
    std::vector<Matrix> conj;
    for (std::size_t k = 0; k < t.r(); ++k)
      conj.push_back(conjugate(g, t[k]));
    out.record("equivariance", i, lift_layers(conj, r) == conjugate(g, phi));
    const Matrix zero(field, n, n);
    const PolyMatrix base = lift_layers({t[0]}, r);
    bool layering = true;
    for (unsigned k = 0; k < r; ++k) {
      std::vector<Matrix> single(r, zero);
      single[k] = t[0];
      layering = layering && lift_layers(single, r) == frobenius_twist(base, k);
    }
    out.record("frobenius_layering", i, layering);
  });
  return report;
}

Report saturation_check(const Field &field, std::size_t n, std::size_t samples,
                        std::size_t conjugators, std::uint64_t seed, unsigned jobs) {
  require_n_at_most_p(field, n, "saturation_check");
  Report report("saturation");
  for (const char *c : {"passes_through_g", "homomorphism", "equivariance"})
    report.declare(c);
  report.set_fact("samples", static_cast<long long>(samples));
  report.set_fact("conjugators", static_cast<long long>(conjugators));
  run_samples(report, samples, jobs, [&](std::size_t i, Report &out) {
    SplitMix64 rng = sample_stream(seed, i);
    const Matrix g = random_p_unipotent(field, n, rng);
    const PolyMatrix phi = exp_line(log_p(g), 1);
    out.record("passes_through_g", i, evaluate(phi, 1) == g,
               [&] { return "phi_g(1) != g for g = " + g.to_string(); });
    out.record("homomorphism", i, verify_homomorphism(phi));
    bool equivariant = true;
    for (std::size_t k = 0; k < conjugators; ++k) {
      const Matrix h = random_invertible(field, n, rng);
      equivariant = equivariant && saturate(conjugate(h, g)).poly() == conjugate(h, phi);
    }
    out.record("equivariance", i, equivariant);
  });
  return report;
}

} // namespace infsub
