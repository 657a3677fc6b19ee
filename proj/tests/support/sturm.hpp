#pragma once

// Reference eigenvalues for dense symmetric matrices, used only by tests.
// Householder reduction to tridiagonal form, then bisection driven by the
// Sturm sequence of leading-principal-minor characteristic polynomials
// (sign changes of the d_i recurrence count eigenvalues below a shift).
// Deliberately a different route from the production rotation solver.

#include <cmath>
#include <cstddef>
#include <vector>

namespace testsupport {

struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  // size n-1
};

inline Tridiagonal householder_tridiagonalize(int n, std::vector<double> a) {
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  for (int k = 0; k + 2 < n; ++k) {
    double scale = 0;
    for (int i = k + 1; i < n; ++i) scale += std::abs(at(i, k));
    if (scale == 0) continue;

    std::vector<double> u(n, 0.0);
    double h = 0;
    for (int i = k + 1; i < n; ++i) {
      u[i] = at(i, k) / scale;
      h += u[i] * u[i];
    }
    const double f = u[k + 1];
    const double g = (f >= 0) ? -std::sqrt(h) : std::sqrt(h);
    h -= f * g;  // = |u - g e1|^2 / 2
    u[k + 1] = f - g;

    std::vector<double> p(n, 0.0);
    for (int i = k + 1; i < n; ++i) {
      double s = 0;
      for (int j = k + 1; j < n; ++j) s += at(i, j) * u[j];
      p[i] = s / h;
    }
    double kk = 0;
    for (int i = k + 1; i < n; ++i) kk += u[i] * p[i];
    kk /= 2 * h;
    for (int i = k + 1; i < n; ++i) p[i] -= kk * u[i];

    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) at(i, j) -= u[i] * p[j] + p[i] * u[j];

    at(k + 1, k) = at(k, k + 1) = g * scale;
    for (int i = k + 2; i < n; ++i) at(i, k) = at(k, i) = 0.0;
  }

  Tridiagonal t;
  t.diag.resize(n);
  t.off.resize(n > 0 ? n - 1 : 0);
  for (int i = 0; i < n; ++i) t.diag[i] = at(i, i);
  for (int i = 0; i + 1 < n; ++i) t.off[i] = at(i + 1, i);
  return t;
}

// Number of eigenvalues strictly below x.
inline int sturm_count_below(const Tridiagonal& t, double x) {
  int count = 0;
  double q = 1.0;
  const int n = static_cast<int>(t.diag.size());
  for (int i = 0; i < n; ++i) {
    const double sub = (i > 0) ? t.off[i - 1] * t.off[i - 1] / q : 0.0;
    q = t.diag[i] - x - sub;
    if (q == 0.0) q = -1e-300;
    if (q < 0) ++count;
  }
  return count;
}

/// All eigenvalues, ascending, each located by bisection on the Sturm count.
inline std::vector<double> sturm_eigenvalues(int n, const std::vector<double>& dense) {
  if (n == 0) return {};
  const Tridiagonal t = householder_tridiagonalize(n, dense);

  double lo = t.diag[0], hi = t.diag[0];
  for (int i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) +
                     (i + 1 < n ? std::abs(t.off[i]) : 0.0);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  lo -= 1.0;
  hi += 1.0;

  std::vector<double> values(n);
  for (int j = 0; j < n; ++j) {
    double a = lo, b = hi;
    for (int iter = 0; iter < 100; ++iter) {
      const double mid = (a + b) / 2;
      if (sturm_count_below(t, mid) >= j + 1)
        b = mid;
      else
        a = mid;
    }
    values[j] = (a + b) / 2;
  }
  return values;
}

}  // namespace testsupport
