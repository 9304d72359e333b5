#include "origami/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace origami {

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = checked::add(out(i, j), checked::mul(aik, b(k, j)));
    }
  return out;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  IntVector out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (x[k] != 0) out[i] = checked::add(out[i], checked::mul(a(i, k), x[k]));
  return out;
}

QMatrix to_rational(const IntMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) q(r, c) = Rational(m(r, c));
  return q;
}

IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t length) {
  IntMatrix m(length, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != length) throw std::invalid_argument("from_columns: length mismatch");
    for (std::size_t r = 0; r < length; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

QMatrix rref(QMatrix m, std::vector<std::size_t>* pivots) {
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const Rational inv = Rational(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    piv.push_back(col);
    ++row;
  }
  if (pivots) *pivots = std::move(piv);
  return m;
}

std::size_t rank(const QMatrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

std::vector<IntVector> integer_nullspace(const IntMatrix& m) {
  std::vector<std::size_t> piv;
  const QMatrix r = rref(to_rational(m), &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;

  std::vector<IntVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols(), Rational(0));
    v[free] = Rational(1);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, free);
    std::int64_t lcm = 1;
    for (const auto& x : v) lcm = std::lcm(lcm, x.den());
    IntVector iv(m.cols());
    std::int64_t g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      iv[i] = checked::mul(v[i].num(), lcm / v[i].den());
      g = std::gcd(g, iv[i]);
    }
    if (g > 1)
      for (auto& x : iv) x /= g;
    basis.push_back(std::move(iv));
  }
  return basis;
}

std::vector<std::int64_t> smith_invariants(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::int64_t> diag;
  std::size_t t = 0;
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols; ++c) std::swap(m(a, c), m(b, c));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(m(r, a), m(r, b));
  };

  while (t < rows && t < cols) {
    // Pivot on the smallest nonzero entry of the trailing block.
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (m(r, c) != 0 && (pr == rows || std::llabs(m(r, c)) < std::llabs(m(pr, pc)))) {
          pr = r;
          pc = c;
        }
    if (pr == rows) break;
    swap_rows(t, pr);
    swap_cols(t, pc);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        const std::int64_t q = m(r, t) / m(t, t);
        if (q != 0)
          for (std::size_t c = t; c < cols; ++c) m(r, c) = checked::sub(m(r, c), checked::mul(q, m(t, c)));
        if (m(r, t) != 0) {
          swap_rows(t, r);
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        const std::int64_t q = m(t, c) / m(t, t);
        if (q != 0)
          for (std::size_t r = t; r < rows; ++r) m(r, c) = checked::sub(m(r, c), checked::mul(q, m(r, t)));
        if (m(t, c) != 0) {
          swap_cols(t, c);
          clean = false;
        }
      }
      if (clean) {
        // Divisibility: fold any entry not divisible by the pivot into row t.
        for (std::size_t r = t + 1; r < rows && clean; ++r)
          for (std::size_t c = t + 1; c < cols; ++c)
            if (m(r, c) % m(t, t) != 0) {
              for (std::size_t k = t; k < cols; ++k) m(t, k) = checked::add(m(t, k), m(r, k));
              clean = false;
              break;
            }
      }
    }
    diag.push_back(std::llabs(m(t, t)));
    ++t;
  }
  return diag;
}

std::int64_t determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<__int128> a(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = m(r, c);
  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t sel = k + 1;
      while (sel < n && a[sel * n + k] == 0) ++sel;
      if (sel == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a[k * n + c], a[sel * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
    prev = a[k * n + k];
  }
  const __int128 det = sign * a[(n - 1) * n + (n - 1)];
  if (det > INT64_MAX || det < INT64_MIN) throw std::overflow_error("determinant: result exceeds 64 bits");
  return static_cast<std::int64_t>(det);
}

std::int64_t dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s = checked::add(s, checked::mul(a[i], b[i]));
  return s;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace origami
