#include "cubiclines/linalg.hpp"

#include "cubiclines/error.hpp"

namespace cubiclines {

RrefResult rref(FMat m) {
  std::size_t rows = m.size();
  std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!m[i][c].is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    FieldElement inv = m[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      FieldElement f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots), r};
}

std::size_t matrix_rank(const FMat& m) { return rref(m).rank; }

FieldElement det(FMat m) {
  std::size_t n = m.size();
  FieldElement result(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = n;
    for (std::size_t i = c; i < n; ++i) {
      if (!m[i][c].is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == n) return FieldElement(0);
    if (sel != c) {
      std::swap(m[c], m[sel]);
      result = -result;
    }
    result *= m[c][c];
    FieldElement inv = m[c][c].inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      FieldElement f = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return result;
}

std::vector<FVec> kernel_basis(const FMat& m, std::size_t ncols) {
  RrefResult r = m.empty() ? RrefResult{{}, {}, 0} : rref(m);
  std::vector<FVec> basis;
  std::size_t next_pivot = 0;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (next_pivot < r.pivots.size() && r.pivots[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    FVec v(ncols, FieldElement(0));
    v[c] = FieldElement(1);
    for (std::size_t pr = 0; pr < r.pivots.size(); ++pr) {
      v[r.pivots[pr]] = -r.mat[pr][c];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

FMat mat_inverse(const FMat& m) {
  std::size_t n = m.size();
  FMat aug(n, FVec(2 * n, FieldElement(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = FieldElement(1);
  }
  RrefResult r = rref(std::move(aug));
  // The left block is invertible iff its columns are all pivots.
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= r.pivots.size() || r.pivots[i] != i) {
      throw DivisionByZeroError("matrix is singular");
    }
  }
  FMat inv(n, FVec(n, FieldElement(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = r.mat[i][n + j];
  }
  return inv;
}

FVec mat_vec(const FMat& m, const FVec& v) {
  FVec out(m.size(), FieldElement(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

FMat mat_mul(const FMat& a, const FMat& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  FMat out(n, FVec(m, FieldElement(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t l = 0; l < k; ++l) out[i][j] += a[i][l] * b[l][j];
    }
  }
  return out;
}

FMat identity_matrix(std::size_t n) {
  FMat out(n, FVec(n, FieldElement(0)));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = FieldElement(1);
  return out;
}

}  // namespace cubiclines
