#include "infsub/errors.hpp"
#include "infsub/heisenberg.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <array>
#include <set>

using namespace infsub;

namespace {

Field f9() {
  const std::array<long long, 3> x2_plus_1{1, 0, 1};
  return Field::extension(3, x2_plus_1);
}

using Grid = std::vector<std::vector<long long>>;

// a(s + t) as a grid.
Grid expand(const oracle::Poly &a, long long p) {
  const std::size_t L = a.size();
  const auto C = oracle::pascal(L, p);
  Grid g(L, std::vector<long long>(L, 0));
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; i + j < L; ++j)
      g[i][j] = oracle::mod(a[i + j] * C[i + j][i], p);
  return g;
}

oracle::Poly power(const oracle::Poly &a, long long e, long long p) {
  oracle::Poly out(a.size(), 0);
  out[0] = 1;
  for (long long k = 0; k < e; ++k)
    out = oracle::poly_mul(out, a, p);
  return out;
}

// Independent statement of the Hopf conditions on plain coefficient vectors.
bool hopf_oracle(const oracle::Poly &fx, const oracle::Poly &fy, long long p) {
  const std::size_t L = fx.size();
  if (fx[0] != 0 || fy[0] != 0)
    return false;
  const Grid ex = expand(fx, p), ey = expand(fy, p);
  const oracle::Poly fxp = power(fx, p, p);
  const long long half = oracle::inverse(2, p);
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) {
      const long long x_rhs = (j == 0 ? fx[i] : 0) + (i == 0 ? fx[j] : 0);
      if (oracle::mod(ex[i][j] - x_rhs, p) != 0)
        return false;
      const long long twist = half * (fxp[i] * fx[j] - fx[i] * fxp[j]);
      const long long y_rhs = (j == 0 ? fy[i] : 0) + (i == 0 ? fy[j] : 0) + twist;
      if (oracle::mod(ey[i][j] - y_rhs, p) != 0)
        return false;
    }
  return true;
}

std::vector<oracle::Poly> zero_constant_polys(long long p, std::size_t L) {
  std::vector<oracle::Poly> out;
  std::size_t total = 1;
  for (std::size_t k = 1; k < L; ++k)
    total *= p;
  for (std::size_t code = 0; code < total; ++code) {
    oracle::Poly a(L, 0);
    std::size_t c = code;
    for (std::size_t k = 1; k < L; ++k, c /= p)
      a[k] = static_cast<long long>(c % p);
    out.push_back(a);
  }
  return out;
}

std::size_t oracle_count(long long p, unsigned r) {
  std::size_t L = 1;
  for (unsigned k = 0; k < r; ++k)
    L *= p;
  const auto all = zero_constant_polys(p, L);
  const oracle::Poly zero(L, 0);
  std::size_t count = 0;
  for (const auto &fx : all) {
    // X-condition alone, as the Y-condition with fY = 0 need not hold.
    const Grid ex = expand(fx, p);
    bool primitive = true;
    for (std::size_t i = 0; i < L && primitive; ++i)
      for (std::size_t j = 0; j < L && primitive; ++j)
        primitive = oracle::mod(ex[i][j] - ((j == 0 ? fx[i] : 0) + (i == 0 ? fx[j] : 0)), p) == 0;
    if (!primitive)
      continue;
    for (const auto &fy : all)
      count += hopf_oracle(fx, fy, p) ? 1 : 0;
  }
  return count;
}

oracle::Poly plain(const TruncPoly &a) { return oracle::Poly(a.coeffs().begin(), a.coeffs().end()); }

} // namespace

TEST(GroupLaw, AxiomsOverF3AndF9) {
  for (const Field &f : {Field::prime(3), f9()}) {
    const auto elems = f.elements();
    std::vector<HeisenbergPoint> pts;
    for (const auto &a : elems)
      for (const auto &b : elems)
        pts.push_back({a, b});
    const HeisenbergPoint e = heisenberg_identity(f);
    for (const auto &u : pts) {
      EXPECT_EQ(group_law(u, e), u);
      EXPECT_EQ(group_law(e, u), u);
      EXPECT_EQ(group_law(u, heisenberg_inverse(u)), e);
      EXPECT_EQ(group_law(heisenberg_inverse(u), u), e);
    }
    for (std::size_t i = 0; i < pts.size(); i += 3)
      for (std::size_t j = 0; j < pts.size(); j += 5)
        for (std::size_t k = 0; k < pts.size(); k += 7)
          EXPECT_EQ(group_law(group_law(pts[i], pts[j]), pts[k]),
                    group_law(pts[i], group_law(pts[j], pts[k])));
  }
}

TEST(GroupLaw, AbelianOverPrimeFieldOnly) {
  const Field f3 = Field::prime(3);
  for (const auto &a : f3.elements())
    for (const auto &c : f3.elements()) {
      const HeisenbergPoint u{a, f3.one()}, v{c, f3.zero()};
      EXPECT_EQ(group_law(u, v), group_law(v, u));
    }
  const Field f = f9();
  const HeisenbergPoint u{f.generator(), f.zero()}, v{f.one(), f.zero()};
  EXPECT_NE(group_law(u, v), group_law(v, u));
}

TEST(GroupLaw, CharacteristicTwoRejected) {
  const Field f2 = Field::prime(2);
  EXPECT_THROW(group_law({f2.one(), f2.zero()}, {f2.one(), f2.zero()}), DomainError);
}

TEST(HopfMaps, ClosedFormIsSoundAndRecognised) {
  for (auto [p, r] : {std::pair<unsigned, unsigned>{3, 1}, {3, 2}, {5, 1}}) {
    for (const auto &c : closed_form_family(p, r)) {
      EXPECT_TRUE(is_hopf_map(c));
      EXPECT_TRUE(is_closed_form(c));
      EXPECT_TRUE(hopf_oracle(plain(c.fx), plain(c.fy), p));
    }
  }
  const Field f = Field::prime(3);
  EXPECT_FALSE(is_hopf_map({TruncPoly(f, 1, {0, 1, 1}), TruncPoly(f, 1)}));
  EXPECT_FALSE(is_hopf_map({TruncPoly(f, 1, {1, 1}), TruncPoly(f, 1)}));
  // At r = 2, fX = t is primitive but fX^p = t^3 != 0 breaks the Y-condition.
  EXPECT_FALSE(is_hopf_map({TruncPoly(f, 2, {0, 1}), TruncPoly(f, 2)}));
}

TEST(HopfMaps, ExhaustiveCountsMatchOracle) {
  const auto m31 = enumerate_hopf_maps(3, 1);
  EXPECT_EQ(m31.size(), 9u);
  EXPECT_EQ(m31.size(), oracle_count(3, 1));
  const auto m32 = enumerate_hopf_maps(3, 2);
  EXPECT_EQ(m32.size(), 27u);
  EXPECT_EQ(m32.size(), oracle_count(3, 2));
  for (const auto &c : m32) {
    EXPECT_TRUE(is_closed_form(c));
    EXPECT_TRUE(hopf_oracle(plain(c.fx), plain(c.fy), 3));
  }
  EXPECT_EQ(enumerate_hopf_maps(5, 1).size(), 25u);
}

TEST(HopfMaps, EnumerationIsSortedAndParallelStable) {
  const auto serial = enumerate_hopf_maps(3, 2, 1);
  EXPECT_EQ(enumerate_hopf_maps(3, 2, 4), serial);
  for (std::size_t k = 1; k < serial.size(); ++k) {
    const auto key = [](const HopfMapCandidate &c) { return std::make_pair(c.fx.coeffs(), c.fy.coeffs()); };
    EXPECT_LT(key(serial[k - 1]), key(serial[k]));
  }
}

TEST(HopfMaps, ClosedUnderAdditionInY) {
  const auto maps = enumerate_hopf_maps(3, 2);
  std::set<std::pair<std::vector<Residue>, std::vector<Residue>>> in;
  for (const auto &c : maps)
    in.insert({c.fx.coeffs(), c.fy.coeffs()});
  for (const auto &a : maps)
    for (const auto &b : maps)
      if (a.fx == b.fx) {
        EXPECT_TRUE(in.count({a.fx.coeffs(), (a.fy + b.fy).coeffs()}));
      }
}

TEST(HopfMaps, CapacityBeyondTheSearchCap) {
  EXPECT_GT(hopf_search_space(3, 3), kHopfSearchCap);
  EXPECT_THROW(enumerate_hopf_maps(3, 3), CapacityError);
  EXPECT_THROW(enumerate_hopf_maps(5, 2), CapacityError);
}

TEST(Counterexample, CountsAndFamilies) {
  const CounterexampleReport r32 = counterexample_report(3, 2);
  EXPECT_EQ(r32.hom_count, 27u);
  EXPECT_EQ(r32.tuple_count, 81u);
  EXPECT_TRUE(r32.complete_search);
  EXPECT_TRUE(r32.mismatch());

  const CounterexampleReport r31 = counterexample_report(3, 1);
  EXPECT_EQ(r31.hom_count, 9u);
  EXPECT_EQ(r31.tuple_count, 9u);
  EXPECT_FALSE(r31.mismatch());

  const CounterexampleReport r33 = counterexample_report(3, 3);
  EXPECT_FALSE(r33.complete_search);
  EXPECT_EQ(r33.hom_count, 81u);

  const FamilyReport f33 = verify_family(3, 3), f52 = verify_family(5, 2);
  EXPECT_EQ(f33.checked, 81u);
  EXPECT_EQ(f52.checked, 125u);
  EXPECT_TRUE(f33.all_pass());
  EXPECT_TRUE(f52.all_pass());
}
