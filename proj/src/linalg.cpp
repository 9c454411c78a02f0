#include "mm/linalg.hpp"

#include <algorithm>
#include <random>

namespace mm {

IntMat identity_mat(size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  IntMat c(n, IntVec(p, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j)
      if (a[i][j] != 0)
        for (size_t t = 0; t < p; ++t) c[i][t] += a[i][j] * b[j][t];
  return c;
}

IntVec mat_vec(const IntMat& a, const IntVec& v) {
  IntVec r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

Int mat_det(IntMat a) {
  size_t n = a.size();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination keeps every intermediate an integer.
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

namespace {

void row_op(IntMat& m, size_t dst, size_t src, const Int& c) {
  for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += c * m[src][j];
}
void col_op(IntMat& m, size_t dst, size_t src, const Int& c) {
  for (size_t i = 0; i < m.size(); ++i) m[i][dst] += c * m[i][src];
}
void row_swap(IntMat& m, size_t i, size_t j) { std::swap(m[i], m[j]); }
void col_swap(IntMat& m, size_t i, size_t j) {
  for (auto& row : m) std::swap(row[i], row[j]);
}
void row_neg(IntMat& m, size_t i) {
  for (auto& x : m[i]) x = -x;
}
}  // namespace

Smith smith_normal_form(const IntMat& a0) {
  size_t rows = a0.size(), cols = rows ? a0[0].size() : 0;
  Smith s;
  s.d = a0;
  s.u = identity_mat(rows);
  s.v = identity_mat(cols);
  IntMat& d = s.d;

  size_t t = 0;
  while (t < rows && t < cols) {
    // Find a nonzero pivot of minimal absolute value in the trailing block.
    size_t pi = t, pj = t;
    bool found = false;
    Int best = 0;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (d[i][j] != 0 && (!found || abs(d[i][j]) < best)) {
          found = true;
          best = abs(d[i][j]);
          pi = i;
          pj = j;
        }
    if (!found) break;
    if (pi != t) { row_swap(d, t, pi); row_swap(s.u, t, pi); }
    if (pj != t) { col_swap(d, t, pj); col_swap(s.v, t, pj); }
    if (d[t][t] < 0) { row_neg(d, t); row_neg(s.u, t); }

    bool clean = true;
    for (size_t i = t + 1; i < rows; ++i)
      if (d[i][t] != 0) {
        Int q = d[i][t] / d[t][t];
        row_op(d, i, t, -q);
        row_op(s.u, i, t, -q);
        if (d[i][t] != 0) clean = false;
      }
    for (size_t j = t + 1; j < cols; ++j)
      if (d[t][j] != 0) {
        Int q = d[t][j] / d[t][t];
        col_op(d, j, t, -q);
        col_op(s.v, j, t, -q);
        if (d[t][j] != 0) clean = false;
      }
    if (!clean) continue;  // remainder became the new minimal pivot; loop again

    // Divisibility fix-up: pivot must divide the whole trailing block.
    bool fixed = false;
    for (size_t i = t + 1; i < rows && !fixed; ++i)
      for (size_t j = t + 1; j < cols && !fixed; ++j)
        if (d[i][j] % d[t][t] != 0) {
          row_op(d, t, i, 1);
          row_op(s.u, t, i, 1);
          fixed = true;
        }
    if (fixed) continue;
    ++t;
  }
  for (size_t i = 0; i < std::min(rows, cols); ++i)
    if (d[i][i] != 0) {
      s.divisors.push_back(d[i][i]);
      ++s.rank;
    }
  return s;
}

IntMat random_unimodular(size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  IntMat m = identity_mat(n);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<size_t> idx(0, n ? n - 1 : 0);
  for (int step = 0; step < 12; ++step) {
    size_t i = idx(rng), j = idx(rng);
    if (i == j) {
      if (step % 3 == 0) row_neg(m, i);
      continue;
    }
    row_op(m, i, j, Int(coef(rng)));
  }
  return m;
}

size_t rat_rank(std::vector<std::vector<Rat>> m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0, rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t p = rank;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[rank], m[p]);
    for (size_t i = 0; i < rows; ++i)
      if (i != rank && m[i][col] != 0) {
        Rat f = m[i][col] / m[rank][col];
        for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
      }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<Rat>> rat_solve(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
  size_t n = a.size();
  for (size_t col = 0; col < n; ++col) {
    size_t p = col;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[col], a[p]);
    std::swap(b[col], b[p]);
    for (size_t i = 0; i < n; ++i)
      if (i != col && a[i][col] != 0) {
        Rat f = a[i][col] / a[col][col];
        for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        b[i] -= f * b[col];
      }
  }
  std::vector<Rat> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace mm
