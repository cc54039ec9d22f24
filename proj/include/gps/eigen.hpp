#pragma once

// Full eigendecomposition of dense real symmetric matrices: Householder
// reduction to tridiagonal form followed by the implicit-shift QL iteration.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gps/errors.hpp"
#include "gps/matrix.hpp"

namespace gps {

struct EigenDecomposition {
  std::vector<double> values;           // ascending
  std::optional<SquareMatrix> vectors;  // column k pairs with values[k]

  [[nodiscard]] std::vector<double> vector(std::size_t k) const {
    std::vector<double> v(vectors->dim());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (*vectors)(i, k);
    return v;
  }
};

namespace detail {

// Householder tridiagonalization working upward from the last row. On exit
// d holds the diagonal, e[1..n-1] the subdiagonal and z the accumulated
// orthogonal transform (when accumulate is set).
inline void tridiagonalize(SquareMatrix& z, std::vector<double>& d, std::vector<double>& e,
                           bool accumulate) {
  const std::size_t n = z.dim();
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (std::size_t k = 0; k <= l; ++k) scale += std::abs(z(i, k));
      if (scale == 0.0) {
        e[i] = z(i, l);
      } else {
        for (std::size_t k = 0; k <= l; ++k) {
          z(i, k) /= scale;
          h += z(i, k) * z(i, k);
        }
        double f = z(i, l);
        const double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        z(i, l) = f - g;
        f = 0.0;
        for (std::size_t j = 0; j <= l; ++j) {
          if (accumulate) z(j, i) = z(i, j) / h;
          double acc = 0.0;
          for (std::size_t k = 0; k <= j; ++k) acc += z(j, k) * z(i, k);
          for (std::size_t k = j + 1; k <= l; ++k) acc += z(k, j) * z(i, k);
          e[j] = acc / h;
          f += e[j] * z(i, j);
        }
        const double hh = f / (h + h);
        for (std::size_t j = 0; j <= l; ++j) {
          const double fj = z(i, j);
          const double gj = e[j] - hh * fj;
          e[j] = gj;
          for (std::size_t k = 0; k <= j; ++k) z(j, k) -= fj * e[k] + gj * z(i, k);
        }
      }
    } else {
      e[i] = z(i, l);
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;

  for (std::size_t i = 0; i < n; ++i) {
    if (accumulate) {
      if (d[i] != 0.0) {
        for (std::size_t j = 0; j < i; ++j) {
          double g = 0.0;
          for (std::size_t k = 0; k < i; ++k) g += z(i, k) * z(k, j);
          for (std::size_t k = 0; k < i; ++k) z(k, j) -= g * z(k, i);
        }
      }
      d[i] = z(i, i);
      z(i, i) = 1.0;
      for (std::size_t j = 0; j < i; ++j) z(j, i) = z(i, j) = 0.0;
    } else {
      d[i] = z(i, i);
    }
  }
}

// Implicit QL on the tridiagonal (d, e). Deflation uses a local test
// |e_m| <= eps (|d_m| + |d_{m+1}|) so small eigenvalues of graded matrices
// keep their relative accuracy.
inline void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, SquareMatrix* z) {
  const std::size_t n = d.size();
  if (n < 2) return;
  constexpr int kMaxSweeps = 60;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  for (std::size_t l = 0; l < n; ++l) {
    int sweeps = 0;
    std::size_t m = l;
    for (;;) {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++sweeps > kMaxSweeps) {
        throw NumericError("eigh: QL iteration did not converge for eigenvalue " +
                           std::to_string(l));
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (std::size_t ii = m; ii-- > l;) {
        double f = s * e[ii];
        const double b = c * e[ii];
        r = std::hypot(f, g);
        e[ii + 1] = r;
        if (r == 0.0) {
          d[ii + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[ii + 1] - p;
        r = (d[ii] - g) * s + 2.0 * c * b;
        p = s * r;
        d[ii + 1] = g + p;
        g = c * r - b;
        if (z != nullptr) {
          for (std::size_t k = 0; k < n; ++k) {
            f = (*z)(k, ii + 1);
            (*z)(k, ii + 1) = s * (*z)(k, ii) + c * f;
            (*z)(k, ii) = c * (*z)(k, ii) - s * f;
          }
        }
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
}

}  // namespace detail

/// Eigenvalues (ascending) and optionally orthonormal eigenvectors of a
/// symmetric matrix. Each eigenvector is signed so that its component of
/// largest magnitude (first such index on ties) is positive.
///
/// The reduction works best with the large entries in the lower right, so
/// matrices whose leading diagonal entry dominates the trailing one are
/// processed in reversed index order.
inline EigenDecomposition eigh(const SquareMatrix& m, bool want_vectors) {
  const std::size_t n = m.dim();
  if (n == 0) throw std::invalid_argument("eigh: empty matrix");
  if (!m.is_symmetric()) throw std::invalid_argument("eigh: matrix is not symmetric");

  const bool reversed = std::abs(m(0, 0)) > std::abs(m(n - 1, n - 1));
  auto idx = [&](std::size_t i) { return reversed ? n - 1 - i : i; };

  SquareMatrix z(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) z(i, j) = m(idx(i), idx(j));

  std::vector<double> d(n, 0.0);
  std::vector<double> e(n, 0.0);
  detail::tridiagonalize(z, d, e, want_vectors);
  detail::tridiagonal_ql(d, e, want_vectors ? &z : nullptr);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  EigenDecomposition out;
  out.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.values[k] = d[order[k]];
  if (!want_vectors) return out;

  SquareMatrix vecs(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t col = order[k];
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (std::abs(z(idx(i), col)) > std::abs(z(idx(pivot), col))) pivot = i;
    const double sign = z(idx(pivot), col) < 0.0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) vecs(i, k) = sign * z(idx(i), col);
  }
  out.vectors = std::move(vecs);
  return out;
}

}  // namespace gps
