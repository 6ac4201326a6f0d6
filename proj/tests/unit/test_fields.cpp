#include "infsub/errors.hpp"
#include "infsub/fields.hpp"
#include "infsub/random.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <array>
#include <set>

using namespace infsub;

namespace {

bool trial_division_prime(unsigned n) {
  if (n < 2)
    return false;
  for (unsigned d = 2; d < n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

FieldElement random_element(const Field &f, SplitMix64 &rng) {
  std::vector<long long> c(f.degree());
  for (auto &v : c)
    v = static_cast<long long>(rng.below(f.p()));
  return f.element(c);
}

Field f9() {
  const std::array<long long, 3> x2_plus_1{1, 0, 1};
  return Field::extension(3, x2_plus_1);
}

} // namespace

TEST(Primes, MatchesTrialDivision) {
  for (unsigned n = 0; n < 500; ++n)
    EXPECT_EQ(is_prime(n), trial_division_prime(n)) << n;
}

TEST(Binomial, LucasMatchesPascalTriangle) {
  for (long long p : {3, 5, 7}) {
    const auto table = oracle::pascal(200, p);
    for (std::size_t m = 0; m <= 200; ++m)
      for (std::size_t i = 0; i <= 200; ++i)
        ASSERT_EQ(binom_mod_p(m, i, static_cast<Residue>(p)), i <= m ? table[m][i] : 0)
            << "C(" << m << "," << i << ") mod " << p;
  }
}

TEST(Binomial, PinnedValues) {
  EXPECT_EQ(binom_mod_p(6, 3, 3), 2u);
  EXPECT_EQ(binom_mod_p(3, 1, 3), 0u);
  EXPECT_EQ(binom_mod_p(9, 3, 3), 0u);
  EXPECT_EQ(binom_mod_p(10, 5, 7), 0u); // 252 = 36 * 7
}

TEST(Factorial, InverseFactorialsAndDomain) {
  for (Residue p : {3u, 5u, 7u, 97u})
    for (Residue m = 0; m < p; ++m) {
      long long f = 1;
      for (Residue k = 2; k <= m; ++k)
        f = f * k % p;
      EXPECT_EQ(factorial_mod_p(m, p), f);
      EXPECT_EQ(modp::mul(inv_factorial_mod_p(m, p), static_cast<Residue>(f), p), 1u);
    }
  EXPECT_THROW(inv_factorial_mod_p(5, 5), DomainError);
  EXPECT_THROW(modp::inv(0, 7), DomainError);
}

TEST(Field, RejectsBadConstruction) {
  EXPECT_THROW(Field::prime(4), UsageError);
  EXPECT_THROW(Field::prime(1), UsageError);
  EXPECT_THROW(Field::prime(101), UsageError);
  EXPECT_NO_THROW(Field::prime(101, 101));
  const std::array<long long, 3> reducible{1, 2, 1}; // (x + 1)^2
  EXPECT_THROW(Field::extension(3, reducible), UsageError);
  const std::array<long long, 3> not_monic{1, 0, 2};
  EXPECT_THROW(Field::extension(3, not_monic), UsageError);
  const std::array<long long, 5> too_big{2, 0, 0, 0, 1};
  EXPECT_THROW(Field::extension(3, too_big), UsageError);
}

TEST(Field, ElementCountsAndOrders) {
  EXPECT_EQ(Field::prime(7).order(), 7u);
  EXPECT_EQ(f9().order(), 9u);
  const std::array<long long, 4> cubic{1, 2, 0, 1}; // x^3 + 2x + 1 over F_3
  const Field f27 = Field::extension(3, cubic);
  EXPECT_EQ(f27.order(), 27u);
  std::set<std::vector<Residue>> seen;
  for (const auto &a : f27.elements())
    seen.insert(std::vector<Residue>(a.coeffs().begin(), a.coeffs().end()));
  EXPECT_EQ(seen.size(), 27u);
}

TEST(Field, InverseOfZeroIsDomainError) {
  EXPECT_THROW(Field::prime(5).zero().inv(), DomainError);
  EXPECT_THROW(f9().zero().inv(), DomainError);
}

TEST(Field, MixedFieldsRejected) {
  EXPECT_THROW(Field::prime(3).one() + Field::prime(5).one(), UsageError);
  EXPECT_THROW(Field::prime(3).one() * f9().one(), UsageError);
}

TEST(Field, F9MultiplicationMatchesGaussianOracle) {
  // F_9 = F_3[i], i^2 = -1.
  const Field f = f9();
  for (long long a0 = 0; a0 < 3; ++a0)
    for (long long a1 = 0; a1 < 3; ++a1)
      for (long long b0 = 0; b0 < 3; ++b0)
        for (long long b1 = 0; b1 < 3; ++b1) {
          const std::array<long long, 2> a{a0, a1}, b{b0, b1};
          const FieldElement prod = f.element(a) * f.element(b);
          EXPECT_EQ(prod.coeffs()[0], oracle::mod(a0 * b0 - a1 * b1, 3));
          EXPECT_EQ(prod.coeffs()[1], oracle::mod(a0 * b1 + a1 * b0, 3));
        }
}

class FieldAxioms : public ::testing::TestWithParam<std::pair<unsigned, unsigned>> {
protected:
  Field make() const {
    const auto [p, k] = GetParam();
    if (k == 1)
      return Field::prime(p);
    return f9();
  }
};

TEST_P(FieldAxioms, RandomTriples) {
  const Field f = make();
  SplitMix64 rng(GetParam().first * 31 + GetParam().second);
  const FieldElement zero = f.zero(), one = f.one();
  for (int s = 0; s < 500; ++s) {
    const FieldElement a = random_element(f, rng), b = random_element(f, rng),
                       c = random_element(f, rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + zero, a);
    EXPECT_EQ(a * one, a);
    EXPECT_EQ(a + (-a), zero);
    EXPECT_EQ(a - b, a + (-b));
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inv(), one);
    }
    // Frobenius is additive, and x^q = x.
    EXPECT_EQ((a + b).pow(f.p()), a.pow(f.p()) + b.pow(f.p()));
    EXPECT_EQ(a.pow(f.order()), a);
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldAxioms,
                         ::testing::Values(std::make_pair(3u, 1u), std::make_pair(5u, 1u),
                                           std::make_pair(7u, 1u), std::make_pair(3u, 2u)));

TEST(Field, GeneratorOfF9IsARootOfTheModulus) {
  const Field f = f9();
  const FieldElement x = f.generator();
  EXPECT_EQ(x * x + f.one(), f.zero());
  EXPECT_THROW(Field::prime(3).generator(), UsageError);
}

TEST(Field, PrimeFieldValueRoundTrip) {
  const Field f = Field::prime(7);
  EXPECT_EQ(f.from_int(-1).value(), 6u);
  EXPECT_EQ(f.from_int(15).value(), 1u);
  EXPECT_THROW(f9().one().value(), UsageError);
}

TEST(SplitMix64, DeterministicAndUnbiasedRange) {
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 100; ++i)
    EXPECT_EQ(a.next(), b.next());
  SplitMix64 r(7);
  std::array<int, 5> counts{};
  for (int i = 0; i < 5000; ++i)
    ++counts[r.below(5)];
  for (int c : counts)
    EXPECT_GT(c, 800);
  EXPECT_NE(sample_stream(1, 0).next(), sample_stream(1, 1).next());
}
