#include "infsub/heisenberg.hpp"

#include "infsub/errors.hpp"
#include "infsub/parallel.hpp"

#include <algorithm>
#include <limits>

namespace infsub {

namespace {

void require_odd(unsigned p) {
  if (p == 2)
    throw DomainError("the fake Heisenberg group needs p > 2 (the law divides by 2)");
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (v > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    v *= base;
  }
  return v;
}

// The zero-constant polynomial with index `idx` in base p: coefficient of
// t^m is digit m - 1.
TruncPoly zero_constant_poly(const Field &field, unsigned r, std::uint64_t idx) {
  TruncPoly a(field, r);
  for (std::size_t m = 1; m < a.length() && idx > 0; ++m) {
    a[m] = static_cast<Residue>(idx % field.p());
    idx /= field.p();
  }
  return a;
}

// Delta(f) - f (x) 1 - 1 (x) f: the non-primitive part of f under t -> s + t.
TruncPoly2 coproduct_defect(const TruncPoly &f) {
  return subst_sum(f) - TruncPoly2::in_s(f) - TruncPoly2::in_t(f);
}

// (fX^p (x) fX - fX (x) fX^p) / 2.
TruncPoly2 twist_term(const TruncPoly &fx) {
  const Residue p = fx.p();
  const TruncPoly fxp = fx.pow(p);
  const Residue half = modp::inv(2, p);
  return (TruncPoly2::outer(fxp, fx) - TruncPoly2::outer(fx, fxp)).scaled(half);
}

bool canonical_less(const HopfMapCandidate &a, const HopfMapCandidate &b) {
  if (a.fx.coeffs() != b.fx.coeffs())
    return a.fx.coeffs() < b.fx.coeffs();
  return a.fy.coeffs() < b.fy.coeffs();
}

std::vector<TruncPoly> primitive_polys(const Field &field, unsigned r, std::uint64_t cap) {
  const std::size_t len = trunc_length(field.p(), r);
  const std::uint64_t count = saturating_pow(field.p(), len - 1);
  if (count > cap)
    throw CapacityError("enumerating all " + std::to_string(len - 1) +
                        "-coefficient polynomials exceeds the search cap; use verify_family");
  std::vector<TruncPoly> out;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    TruncPoly f = zero_constant_poly(field, r, idx);
    if (coproduct_defect(f) == TruncPoly2(field, r))
      out.push_back(std::move(f));
  }
  return out;
}

} // namespace

HeisenbergPoint group_law(const HeisenbergPoint &u, const HeisenbergPoint &v) {
  const Field &field = u.a.field();
  require_odd(field.p());
  const FieldElement half = field.from_int(2).inv();
  const FieldElement ap = u.a.pow(field.p());
  const FieldElement cp = v.a.pow(field.p());
  return HeisenbergPoint{u.a + v.a, u.b + v.b + half * (ap * v.a - u.a * cp)};
}

HeisenbergPoint heisenberg_identity(const Field &field) {
  return HeisenbergPoint{field.zero(), field.zero()};
}

HeisenbergPoint heisenberg_inverse(const HeisenbergPoint &u) {
  return HeisenbergPoint{-u.a, -u.b};
}

bool is_hopf_map(const HopfMapCandidate &c) {
  require_odd(c.fx.p());
  c.fx.require_compatible(c.fy, "is_hopf_map");
  if (c.fx.counit() != 0 || c.fy.counit() != 0)
    return false;
  if (!(coproduct_defect(c.fx) == TruncPoly2(c.fx.field(), c.fx.r())))
    return false;
  return coproduct_defect(c.fy) == twist_term(c.fx);
}

std::uint64_t hopf_search_space(unsigned p, unsigned r) {
  const Field field = Field::prime(p);
  const std::size_t len = trunc_length(p, r);
  const std::uint64_t per_fx = saturating_pow(p, len - 1);
  if (per_fx > kHopfSearchCap)
    return std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t prim = primitive_polys(field, r, kHopfSearchCap).size();
  if (prim != 0 && per_fx > std::numeric_limits<std::uint64_t>::max() / prim)
    return std::numeric_limits<std::uint64_t>::max();
  return prim * per_fx;
}

std::vector<HopfMapCandidate> enumerate_hopf_maps(unsigned p, unsigned r, unsigned jobs,
                                                  std::uint64_t cap) {
  require_odd(p);
  const Field field = Field::prime(p);
  const std::size_t len = trunc_length(p, r);
  const std::vector<TruncPoly> prims = primitive_polys(field, r, cap);
  const std::uint64_t per_fx = saturating_pow(p, len - 1);
  if (per_fx > cap / std::max<std::uint64_t>(1, prims.size()))
    throw CapacityError("Hopf map search space at (p, r) = (" + std::to_string(p) + ", " +
                        std::to_string(r) + ") exceeds " + std::to_string(cap) +
                        "; use verify_family for a soundness-only check");

  std::vector<HopfMapCandidate> maps;
  for (const auto &fx : prims) {
    const TruncPoly2 twist = twist_term(fx);
    std::vector<char> hit(per_fx, 0);
    parallel_for(per_fx, jobs, [&](std::size_t idx) {
      hit[idx] = coproduct_defect(zero_constant_poly(field, r, idx)) == twist ? 1 : 0;
    });
    for (std::uint64_t idx = 0; idx < per_fx; ++idx)
      if (hit[idx])
        maps.push_back(HopfMapCandidate{fx, zero_constant_poly(field, r, idx)});
  }
  std::sort(maps.begin(), maps.end(), canonical_less);
  return maps;
}

std::vector<HopfMapCandidate> closed_form_family(unsigned p, unsigned r) {
  require_odd(p);
  const Field field = Field::prime(p);
  const std::size_t len = trunc_length(p, r);
  std::vector<std::size_t> layer_degrees;
  for (std::size_t d = 1; d < len; d *= p)
    layer_degrees.push_back(d);
  const std::uint64_t count = saturating_pow(p, r + 1);
  std::vector<HopfMapCandidate> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    TruncPoly fy(field, r);
    for (std::size_t d : layer_degrees) {
      fy[d] = static_cast<Residue>(rest % p);
      rest /= p;
    }
    TruncPoly fx = TruncPoly::monomial(field, r, layer_degrees.back(),
                                       static_cast<Residue>(rest % p));
    out.push_back(HopfMapCandidate{std::move(fx), std::move(fy)});
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool is_closed_form(const HopfMapCandidate &c) {
  const std::size_t len = c.fx.length();
  const Residue p = c.fx.p();
  std::size_t top = 1;
  while (top * p < len)
    top *= p;
  for (std::size_t m = 0; m < len; ++m) {
    if (m != top && c.fx[m] != 0)
      return false;
    bool power_of_p = false;
    for (std::size_t d = 1; d < len; d *= p)
      power_of_p = power_of_p || d == m;
    if (!power_of_p && c.fy[m] != 0)
      return false;
  }
  return true;
}

FamilyReport verify_family(unsigned p, unsigned r, unsigned jobs) {
  const auto family = closed_form_family(p, r);
  std::vector<char> ok(family.size(), 0);
  parallel_for(family.size(), jobs, [&](std::size_t i) { ok[i] = is_hopf_map(family[i]) ? 1 : 0; });
  FamilyReport rep;
  rep.p = p;
  rep.r = r;
  rep.checked = family.size();
  rep.passed = static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 1));
  return rep;
}

CounterexampleReport counterexample_report(unsigned p, unsigned r, unsigned jobs) {
  require_odd(p);
  CounterexampleReport rep;
  rep.p = p;
  rep.r = r;
  rep.tuple_count = saturating_pow(p, 2ULL * r);
  try {
    rep.maps = enumerate_hopf_maps(p, r, jobs);
    rep.complete_search = true;
  } catch (const CapacityError &) {
    for (auto &c : closed_form_family(p, r))
      if (is_hopf_map(c))
        rep.maps.push_back(std::move(c));
    rep.complete_search = false;
  }
  rep.hom_count = rep.maps.size();
  return rep;
}

} // namespace infsub
