#include "infsub/rootdata.hpp"

#include "infsub/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace infsub {

std::size_t SNFResult::rank() const {
  return static_cast<std::size_t>(
      std::count_if(factors.begin(), factors.end(), [](const mpz_class &d) { return d != 0; }));
}

bool SNFResult::has_torsion_at(unsigned long p) const {
  for (const auto &d : factors)
    if (d != 0 && mpz_divisible_ui_p(d.get_mpz_t(), p) != 0)
      return true;
  return false;
}

SNFResult smith_normal_form(IntMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  for (const auto &row : a)
    if (row.size() != cols)
      throw UsageError("smith_normal_form: ragged matrix");
  const std::size_t diag = std::min(rows, cols);

  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows)
        break; // trailing block is zero
      std::swap(a[t], a[pr]);
      for (auto &row : a)
        std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0)
          continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < cols; ++j)
          a[i][j] -= q * a[t][j];
        if (a[i][t] != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0)
          continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i)
          a[i][j] -= q * a[i][t];
        if (a[t][j] != 0)
          clean = false;
      }
      if (clean)
        break;
    }
  }

  SNFResult out;
  std::vector<mpz_class> nonzero;
  for (std::size_t t = 0; t < diag; ++t)
    if (a[t][t] != 0)
      nonzero.push_back(abs(a[t][t]));
  // A diagonal matrix diag(a, b) is equivalent to diag(gcd, lcm); sweeping
  // this over all pairs yields the divisibility chain.
  for (std::size_t i = 0; i < nonzero.size(); ++i)
    for (std::size_t j = i + 1; j < nonzero.size(); ++j) {
      mpz_class g, l;
      mpz_gcd(g.get_mpz_t(), nonzero[i].get_mpz_t(), nonzero[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), nonzero[i].get_mpz_t(), nonzero[j].get_mpz_t());
      nonzero[i] = g;
      nonzero[j] = l;
    }
  out.factors = std::move(nonzero);
  out.factors.resize(diag, mpz_class(0));
  return out;
}

long long pairing(const std::vector<long long> &x, const std::vector<long long> &y) {
  if (x.size() != y.size())
    throw UsageError("pairing: dimension mismatch");
  long long s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    s += x[i] * y[i];
  return s;
}

void RootDatum::validate() const {
  if (roots.size() != coroots.size())
    throw UsageError("root datum: roots and coroots differ in number");
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (roots[k].size() != rank || coroots[k].size() != rank)
      throw UsageError("root datum: vector of wrong length");
    if (pairing(roots[k], coroots[k]) != 2)
      throw UsageError("root datum: <alpha, alpha^vee> != 2 for root " + std::to_string(k));
  }
  for (auto s : simple)
    if (s >= roots.size())
      throw UsageError("root datum: simple root index out of range");
}

std::vector<std::vector<long long>> RootDatum::cartan_matrix() const {
  std::vector<std::vector<long long>> c(simple.size(), std::vector<long long>(simple.size()));
  for (std::size_t i = 0; i < simple.size(); ++i)
    for (std::size_t j = 0; j < simple.size(); ++j)
      c[i][j] = pairing(roots[simple[i]], coroots[simple[j]]);
  return c;
}

namespace {

RootDatum general_linear(std::size_t n) {
  RootDatum d;
  d.name = "GL" + std::to_string(n);
  d.rank = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        continue;
      std::vector<long long> v(n, 0);
      v[i] = 1;
      v[j] = -1;
      if (j == i + 1)
        d.simple.push_back(d.roots.size());
      d.roots.push_back(v);
      d.coroots.push_back(v);
    }
  if (n >= 2)
    d.type_labels.push_back("A" + std::to_string(n - 1));
  return d;
}

// Simply connected datum of a Cartan matrix c[i][j] = <alpha_i, alpha_j^vee>.
// X has the fundamental-weight basis (so alpha_i = row i of c), Y the simple
// coroot basis. Roots are the orbit of the simple (root, coroot) pairs under
// the simple reflections.
RootDatum simply_connected(std::string name, const std::vector<std::vector<long long>> &c,
                           std::string label) {
  const std::size_t d = c.size();
  using Pair = std::pair<std::vector<long long>, std::vector<long long>>;
  std::map<std::vector<long long>, std::vector<long long>> found;
  std::vector<Pair> queue;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<long long> coroot(d, 0);
    coroot[i] = 1;
    queue.emplace_back(c[i], coroot);
    found.emplace(c[i], coroot);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Pair cur = queue[head];
    for (std::size_t j = 0; j < d; ++j) {
      Pair next = cur;
      const long long lj = cur.first[j]; // <lambda, alpha_j^vee>
      for (std::size_t k = 0; k < d; ++k)
        next.first[k] -= lj * c[j][k];
      const long long mj = pairing(c[j], cur.second); // <alpha_j, mu>
      next.second[j] -= mj;
      if (found.emplace(next.first, next.second).second)
        queue.push_back(std::move(next));
    }
  }
  RootDatum out;
  out.name = std::move(name);
  out.rank = d;
  for (std::size_t i = 0; i < d; ++i) {
    out.simple.push_back(i);
    out.roots.push_back(queue[i].first);
    out.coroots.push_back(queue[i].second);
  }
  for (std::size_t k = d; k < queue.size(); ++k) {
    out.roots.push_back(queue[k].first);
    out.coroots.push_back(queue[k].second);
  }
  out.type_labels.push_back(std::move(label));
  return out;
}

std::vector<std::vector<long long>> cartan_a(std::size_t n) {
  std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    c[i][i] = 2;
    if (i + 1 < n)
      c[i][i + 1] = c[i + 1][i] = -1;
  }
  return c;
}

bool parse_suffix(const std::string &name, const std::string &prefix, std::size_t &value) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
    return false;
  const std::string digits = name.substr(prefix.size());
  if (!std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    return false;
  if (digits.size() > 3)
    return false;
  value = std::stoul(digits);
  return true;
}

std::vector<unsigned long> prime_factors(mpz_class v) {
  std::vector<unsigned long> out;
  v = abs(v);
  for (unsigned long q = 2; v > 1; ++q) {
    if (mpz_divisible_ui_p(v.get_mpz_t(), q) != 0) {
      out.push_back(q);
      while (mpz_divisible_ui_p(v.get_mpz_t(), q) != 0)
        v /= q;
    }
  }
  return out;
}

IntMatrix rows_of(const std::vector<std::vector<long long>> &vectors, std::size_t rank,
                  std::size_t mask) {
  IntMatrix m;
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (((mask >> k) & 1U) == 0)
      continue;
    std::vector<mpz_class> row;
    row.reserve(rank);
    for (long long v : vectors[k])
      row.emplace_back(static_cast<long>(v));
    m.push_back(std::move(row));
  }
  return m;
}

// Torsion of Z^rank / (span of the selected rows) = nonzero invariant factors.
std::vector<unsigned long> quotient_torsion_primes(const std::vector<std::vector<long long>> &vectors,
                                                   std::size_t rank, std::size_t mask) {
  std::set<unsigned long> primes;
  const IntMatrix m = rows_of(vectors, rank, mask);
  if (m.empty())
    return {};
  for (const auto &d : smith_normal_form(m).factors)
    if (d > 1)
      for (auto q : prime_factors(d))
        primes.insert(q);
  return {primes.begin(), primes.end()};
}

void require_subset_capacity(const RootDatum &datum) {
  if (datum.roots.size() > kPrettyGoodRootCap)
    throw CapacityError("pretty-good test enumerates 2^|Phi| subsets; |Phi| = " +
                        std::to_string(datum.roots.size()) + " exceeds cap " +
                        std::to_string(kPrettyGoodRootCap));
}

} // namespace

RootDatum builtin_datum(const std::string &name) {
  std::size_t n = 0;
  RootDatum d;
  if (parse_suffix(name, "GL", n) && n >= 1 && n <= 8) {
    d = general_linear(n);
  } else if (parse_suffix(name, "SL", n) && n >= 2 && n <= 8) {
    d = simply_connected(name, cartan_a(n - 1), "A" + std::to_string(n - 1));
  } else if (name == "Sp4" || name == "C2") {
    d = simply_connected(name, {{2, -1}, {-2, 2}}, "C2");
  } else if (name == "B2") {
    d = simply_connected(name, {{2, -2}, {-1, 2}}, "B2");
  } else if (name == "G2") {
    d = simply_connected(name, {{2, -1}, {-3, 2}}, "G2");
  } else {
    throw UsageError("unknown root datum '" + name + "'");
  }
  d.validate();
  return d;
}

std::vector<std::string> builtin_datum_names() {
  return {"GL1", "GL2", "GL3", "GL4", "SL2", "SL3", "SL4", "Sp4", "B2", "G2"};
}

bool is_good_prime(const std::vector<std::string> &labels, unsigned p) {
  bool good = true;
  for (const auto &label : labels) {
    std::size_t n = 0;
    if (parse_suffix(label, "A", n) && n >= 1) {
      // no restriction
    } else if ((parse_suffix(label, "B", n) || parse_suffix(label, "C", n) ||
                parse_suffix(label, "D", n)) &&
               n >= 1) {
      good = good && p > 2;
    } else if (label == "E6" || label == "E7" || label == "F4" || label == "G2") {
      good = good && p > 3;
    } else if (label == "E8") {
      good = good && p > 5;
    } else {
      throw UsageError("unknown root system label '" + label + "'");
    }
  }
  return good;
}

bool is_pretty_good(const RootDatum &datum, unsigned p) {
  require_subset_capacity(datum);
  datum.validate();
  const std::size_t subsets = std::size_t{1} << datum.roots.size();
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    const IntMatrix x = rows_of(datum.roots, datum.rank, mask);
    if (smith_normal_form(x).has_torsion_at(p))
      return false;
    const IntMatrix y = rows_of(datum.coroots, datum.rank, mask);
    if (smith_normal_form(y).has_torsion_at(p))
      return false;
  }
  return true;
}

std::vector<unsigned long> torsion_primes(const RootDatum &datum) {
  require_subset_capacity(datum);
  std::set<unsigned long> primes;
  const std::size_t subsets = std::size_t{1} << datum.roots.size();
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    for (auto q : quotient_torsion_primes(datum.roots, datum.rank, mask))
      primes.insert(q);
    for (auto q : quotient_torsion_primes(datum.coroots, datum.rank, mask))
      primes.insert(q);
  }
  return {primes.begin(), primes.end()};
}

std::vector<unsigned long> full_set_torsion_primes(const RootDatum &datum) {
  if (datum.roots.empty())
    return {};
  const std::size_t all = (datum.roots.size() >= 64) ? ~std::size_t{0}
                                                     : (std::size_t{1} << datum.roots.size()) - 1;
  std::set<unsigned long> primes;
  for (auto q : quotient_torsion_primes(datum.roots, datum.rank, all))
    primes.insert(q);
  for (auto q : quotient_torsion_primes(datum.coroots, datum.rank, all))
    primes.insert(q);
  return {primes.begin(), primes.end()};
}

} // namespace infsub
