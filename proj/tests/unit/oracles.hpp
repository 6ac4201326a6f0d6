#pragma once

// Reference implementations used as test oracles. Deliberately naive and
// independent of the library: plain integer vectors, schoolbook loops.

#include <cstdint>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<long long>>;
using Poly = std::vector<long long>;

inline long long mod(long long a, long long p) { return ((a % p) + p) % p; }

/// Pascal's triangle mod p, rows 0..n.
inline std::vector<std::vector<long long>> pascal(std::size_t n, long long p) {
  std::vector<std::vector<long long>> c(n + 1, std::vector<long long>(n + 1, 0));
  for (std::size_t m = 0; m <= n; ++m) {
    c[m][0] = 1 % p;
    for (std::size_t i = 1; i <= m; ++i)
      c[m][i] = (c[m - 1][i - 1] + (i <= m - 1 ? c[m - 1][i] : 0)) % p;
  }
  return c;
}

inline long long inverse(long long a, long long p) {
  a = mod(a, p);
  for (long long x = 1; x < p; ++x)
    if (a * x % p == 1)
      return x;
  return 0;
}

inline Mat identity(std::size_t n) {
  Mat m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    m[i][i] = 1;
  return m;
}

inline Mat mul(const Mat &a, const Mat &b, long long p) {
  Mat c(a.size(), std::vector<long long>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j) {
      long long s = 0;
      for (std::size_t k = 0; k < b.size(); ++k)
        s += a[i][k] * b[k][j];
      c[i][j] = mod(s, p);
    }
  return c;
}

inline Mat add(const Mat &a, const Mat &b, long long p) {
  Mat c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      c[i][j] = mod(a[i][j] + b[i][j], p);
  return c;
}

inline Mat scale(const Mat &a, long long c, long long p) {
  Mat out = a;
  for (auto &row : out)
    for (auto &v : row)
      v = mod(v * c, p);
  return out;
}

/// sum_{i<p} x^i / i!, term by term.
inline Mat exp_series(const Mat &x, long long p) {
  Mat acc = identity(x.size());
  Mat power = identity(x.size());
  long long fact = 1;
  for (long long i = 1; i < p; ++i) {
    power = mul(power, x, p);
    fact = fact * i % p;
    acc = add(acc, scale(power, inverse(fact, p), p), p);
  }
  return acc;
}

/// Schoolbook product truncated at length L.
inline Poly poly_mul(const Poly &a, const Poly &b, long long p) {
  Poly c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j)
      c[i + j] = mod(c[i + j] + a[i] * b[j], p);
  return c;
}

/// Determinant by cofactor expansion (small n only).
inline long long det(const Mat &a, long long p) {
  const std::size_t n = a.size();
  if (n == 1)
    return mod(a[0][0], p);
  long long s = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Mat minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c)
          row.push_back(a[i][j]);
      minor.push_back(row);
    }
    const long long term = a[0][c] * det(minor, p);
    s += (c % 2 == 0) ? term : -term;
  }
  return mod(s, p);
}

} // namespace oracle

namespace oracle {

/// Rank by Gaussian elimination over F_p.
inline std::size_t rank(Mat a, long long p) {
  std::size_t r = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && mod(a[piv][c], p) == 0)
      ++piv;
    if (piv == rows)
      continue;
    std::swap(a[piv], a[r]);
    const long long inv = inverse(a[r][c], p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r)
        continue;
      const long long f = mod(a[i][c] * inv, p);
      for (std::size_t j = 0; j < cols; ++j)
        a[i][j] = mod(a[i][j] - f * a[r][j], p);
    }
    ++r;
  }
  return r;
}

} // namespace oracle
