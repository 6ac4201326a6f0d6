#pragma once

#include "infsub/matrix.hpp"
#include "oracles.hpp"

namespace testing_helpers {

inline oracle::Mat to_plain(const infsub::Matrix &m) {
  oracle::Mat out(m.rows(), std::vector<long long>(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i][j] = m(i, j);
  return out;
}

inline infsub::Matrix from_plain(const infsub::Field &f, const oracle::Mat &a) {
  infsub::Matrix m(f, a.size(), a.empty() ? 0 : a[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      m.set(i, j, a[i][j]);
  return m;
}

} // namespace testing_helpers
