#pragma once
// Small dense matrices over exact scalars.  Row major, sized at runtime;
// everything here is tiny (dimension <= 18) so no cleverness is attempted.

#include <rtq/rational.hpp>
#include <optional>

namespace rtq {

template <class T>
struct Mat {
  size_t rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c, T(0)) {}

  T& operator()(size_t i, size_t j) { return a[i * cols + j]; }
  const T& operator()(size_t i, size_t j) const { return a[i * cols + j]; }

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

  Mat operator*(const Mat& o) const {
    Mat out(rows, o.cols);
    for (size_t i = 0; i < rows; ++i)
      for (size_t k = 0; k < cols; ++k) {
        const T& x = (*this)(i, k);
        if (x == T(0)) continue;
        for (size_t j = 0; j < o.cols; ++j) out(i, j) += x * o(k, j);
      }
    return out;
  }

  Mat operator+(const Mat& o) const {
    Mat out = *this;
    for (size_t i = 0; i < a.size(); ++i) out.a[i] += o.a[i];
    return out;
  }

  Mat operator-(const Mat& o) const {
    Mat out = *this;
    for (size_t i = 0; i < a.size(); ++i) out.a[i] -= o.a[i];
    return out;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    std::vector<T> out(rows, T(0));
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;
using QVec = std::vector<Rat>;
using IVec = std::vector<Int>;

inline QMat to_qmat(const IMat& m) {
  QMat out(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = Rat(m.a[i]);
  return out;
}

// integral with unit denominator everywhere?
inline bool is_integral(const QMat& m) {
  for (const auto& x : m.a)
    if (!is_integer(x)) return false;
  return true;
}

inline std::optional<IMat> to_imat(const QMat& m) {
  if (!is_integral(m)) return std::nullopt;
  IMat out(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = rat_num(m.a[i]);
  return out;
}

// Gauss-Jordan inverse; nullopt when singular
inline std::optional<QMat> q_inverse(QMat m) {
  if (m.rows != m.cols) return std::nullopt;
  size_t n = m.rows;
  QMat inv = QMat::identity(n);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = n;
    for (size_t r = c; r < n; ++r)
      if (m(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv == n) return std::nullopt;
    for (size_t j = 0; j < n; ++j) {
      std::swap(m.a[c * n + j], m.a[piv * n + j]);
      std::swap(inv.a[c * n + j], inv.a[piv * n + j]);
    }
    Rat d = m(c, c);
    for (size_t j = 0; j < n; ++j) {
      m(c, j) /= d;
      inv(c, j) /= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c) == 0) continue;
      Rat f = m(r, c);
      for (size_t j = 0; j < n; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

inline Rat q_det(QMat m) {
  if (m.rows != m.cols) throw std::invalid_argument("q_det: not square");
  size_t n = m.rows;
  Rat det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = n;
    for (size_t r = c; r < n; ++r)
      if (m(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv == n) return Rat(0);
    if (piv != c) {
      for (size_t j = 0; j < n; ++j) std::swap(m.a[c * n + j], m.a[piv * n + j]);
      det = -det;
    }
    det *= m(c, c);
    for (size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      Rat f = m(r, c) / m(c, c);
      for (size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

// Solve M x = b exactly.  M may be rectangular; returns nullopt when
// inconsistent; when the solution is not unique an arbitrary solution is
// returned (callers that care check uniqueness themselves).
inline std::optional<QVec> q_solve(QMat m, QVec b) {
  size_t rows = m.rows, cols = m.cols;
  std::vector<size_t> pivot_col;
  size_t pr = 0;
  for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
    size_t piv = rows;
    for (size_t r = pr; r < rows; ++r)
      if (m(r, pc) != 0) {
        piv = r;
        break;
      }
    if (piv == rows) continue;
    for (size_t j = 0; j < cols; ++j) std::swap(m.a[pr * cols + j], m.a[piv * cols + j]);
    std::swap(b[pr], b[piv]);
    Rat d = m(pr, pc);
    for (size_t j = 0; j < cols; ++j) m(pr, j) /= d;
    b[pr] /= d;
    for (size_t r = 0; r < rows; ++r) {
      if (r == pr || m(r, pc) == 0) continue;
      Rat f = m(r, pc);
      for (size_t j = 0; j < cols; ++j) m(r, j) -= f * m(pr, j);
      b[r] -= f * b[pr];
    }
    pivot_col.push_back(pc);
    ++pr;
  }
  for (size_t r = pr; r < rows; ++r)
    if (b[r] != 0) return std::nullopt;
  QVec x(cols, Rat(0));
  for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace rtq
