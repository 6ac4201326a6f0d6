#pragma once

// Root data, Smith normal form over Z, and the good / pretty good prime
// predicates.
//
//   good:        p > 2 for B, C, D components; p > 3 for E6, E7, F4, G2;
//                p > 5 for E8; type A imposes nothing.
//   pretty good: X / Z Phi' and Y / Z Phi'^vee have no p-torsion for every
//                subset Phi' of Phi (enumerated literally).

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace infsub {

using IntMatrix = std::vector<std::vector<mpz_class>>;

struct SNFResult {
  /// Nonzero invariant factors d_1 | d_2 | ... (all positive), followed by
  /// as many zeros as the rank deficit min(rows, cols) - rank.
  std::vector<mpz_class> factors;

  std::size_t rank() const;
  /// True if some nonzero invariant factor is divisible by p.
  bool has_torsion_at(unsigned long p) const;
};

/// Invariant factors via exact integer row/column reduction. Accepts any
/// rectangular matrix (rows may be empty).
SNFResult smith_normal_form(IntMatrix a);

struct RootDatum {
  std::string name;
  std::size_t rank = 0;                           // d, with X = Y = Z^d
  std::vector<std::vector<long long>> roots;      // in X coordinates
  std::vector<std::vector<long long>> coroots;    // in Y coordinates, matched
  std::vector<std::size_t> simple;                // indices of simple roots
  std::vector<std::string> type_labels;           // e.g. {"A2"}, {"G2"}

  /// Throws UsageError unless lengths agree and <alpha, alpha^vee> = 2.
  void validate() const;
  /// <alpha_i, alpha_j^vee> for simple roots.
  std::vector<std::vector<long long>> cartan_matrix() const;
};

long long pairing(const std::vector<long long> &x, const std::vector<long long> &y);

/// Built-in data: GL1..GL8, SL2..SL8, Sp4 (alias C2), B2, G2. UsageError
/// on unknown names.
RootDatum builtin_datum(const std::string &name);
std::vector<std::string> builtin_datum_names();

/// Case-list predicate, conjunctively over labels of the form A<n>, B<n>,
/// C<n>, D<n>, E6, E7, E8, F4, G2. UsageError on unknown labels.
bool is_good_prime(const std::vector<std::string> &labels, unsigned p);

/// Maximum number of roots for the exhaustive subset enumeration.
inline constexpr std::size_t kPrettyGoodRootCap = 16;

/// Torsion test over all 2^|Phi| subsets. CapacityError when |Phi| exceeds
/// kPrettyGoodRootCap.
bool is_pretty_good(const RootDatum &datum, unsigned p);

/// Primes dividing some invariant factor of X / Z Phi' or Y / Z Phi'^vee
/// over all subsets (the primes at which the datum fails pretty-goodness).
std::vector<unsigned long> torsion_primes(const RootDatum &datum);

/// Primes dividing the torsion of X / Z Phi and Y / Z Phi^vee (full set).
std::vector<unsigned long> full_set_torsion_primes(const RootDatum &datum);

} // namespace infsub
