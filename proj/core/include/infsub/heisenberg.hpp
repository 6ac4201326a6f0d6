#pragma once

// The "fake Heisenberg" group H = A^2 with
//
//   (a, b) (c, d) = (a + c, b + d + (a^p c - a c^p) / 2),      p > 2,
//
// whose coordinate ring k[X, Y] has X primitive and
//
//   Delta(Y) = Y (x) 1 + 1 (x) Y + (X^p (x) X - X (x) X^p) / 2.
//
// Hopf maps k[H] -> k[t]/(t^{p^r}) are the height-r one-parameter
// subgroups of H; counting them against r-tuples in Lie(H) (two-dimensional,
// abelian, zero p-map) exhibits the mismatch between the two varieties.

#include "infsub/fields.hpp"
#include "infsub/truncpoly.hpp"

#include <cstdint>
#include <vector>

namespace infsub {

struct HeisenbergPoint {
  FieldElement a;
  FieldElement b;

  friend bool operator==(const HeisenbergPoint &, const HeisenbergPoint &) = default;
};

/// DomainError for p = 2; UsageError on mismatched fields.
HeisenbergPoint group_law(const HeisenbergPoint &u, const HeisenbergPoint &v);
HeisenbergPoint heisenberg_identity(const Field &field);
HeisenbergPoint heisenberg_inverse(const HeisenbergPoint &u);

/// Images of the coordinate functions X and Y.
struct HopfMapCandidate {
  TruncPoly fx;
  TruncPoly fy;

  friend bool operator==(const HopfMapCandidate &, const HopfMapCandidate &) = default;
};

/// Counit compatibility (zero constant terms), X primitive, and the twisted
/// coproduct rule for Y, all as identities in k[s,t]/(s^L, t^L).
bool is_hopf_map(const HopfMapCandidate &c);

/// Default bound on the brute-force search space (#primitive fX) * p^(p^r - 1).
inline constexpr std::uint64_t kHopfSearchCap = 1'000'000;

/// Complete list of Hopf maps over F_p, sorted canonically (by fX then fY
/// coefficients). fX ranges over the solutions of the primitivity equation
/// (found by enumerating all zero-constant fX), fY over every zero-constant
/// polynomial. CapacityError (suggesting verify_family) beyond `cap`.
std::vector<HopfMapCandidate> enumerate_hopf_maps(unsigned p, unsigned r, unsigned jobs = 1,
                                                  std::uint64_t cap = kHopfSearchCap);

/// Size of the brute-force search space at (p, r), saturating at UINT64_MAX.
std::uint64_t hopf_search_space(unsigned p, unsigned r);

/// The closed-form family fX = a t^{p^{r-1}}, fY = sum_i b_i t^{p^i}.
std::vector<HopfMapCandidate> closed_form_family(unsigned p, unsigned r);

/// True iff fX = a t^{p^{r-1}} and fY = sum_i b_i t^{p^i} for some a, b_i.
bool is_closed_form(const HopfMapCandidate &c);

struct FamilyReport {
  unsigned p = 0;
  unsigned r = 0;
  std::size_t checked = 0;
  std::size_t passed = 0;
  bool all_pass() const { return checked == passed; }
};

/// Soundness: every closed-form candidate passes is_hopf_map.
FamilyReport verify_family(unsigned p, unsigned r, unsigned jobs = 1);

struct CounterexampleReport {
  unsigned p = 0;
  unsigned r = 0;
  std::uint64_t hom_count = 0;
  /// p^{2r}: r-tuples in a 2-dimensional abelian Lie algebra with zero p-map.
  std::uint64_t tuple_count = 0;
  /// True when hom_count comes from exhaustive enumeration, false when it
  /// is the size of the verified closed-form family.
  bool complete_search = false;
  bool mismatch() const { return hom_count != tuple_count; }
  std::vector<HopfMapCandidate> maps;
};

CounterexampleReport counterexample_report(unsigned p, unsigned r, unsigned jobs = 1);

} // namespace infsub
