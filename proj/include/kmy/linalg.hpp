#pragma once

#include <optional>
#include <vector>

#include "scalar.hpp"

namespace kmy {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<int> row_reduce(RationalMatrix& m) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int rank(RationalMatrix m) { return static_cast<int>(row_reduce(m).size()); }

// Solves a x = b for a possibly overdetermined full-column-rank a; nullopt if
// b is outside the column span.
inline std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  RationalMatrix aug(rows, std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

inline Rational det(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational out = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      out = -out;
    }
    out *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return out;
}

// Positive definite iff every leading principal minor is positive.
inline bool is_positive_definite(const RationalMatrix& m) {
  for (std::size_t k = 1; k <= m.size(); ++k) {
    RationalMatrix lead(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = m[i][j];
    if (det(lead) <= 0) return false;
  }
  return true;
}

inline bool is_symmetric(const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m[i][j] != m[j][i]) return false;
  return true;
}

}  // namespace kmy
