#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathmat/path_matrix.hpp"

namespace pathmat {

/// Dense real symmetric matrix, full row-major storage, exact symmetry
/// required at construction.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int n)
      : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {
    if (n < 0) throw std::invalid_argument("matrix order must be nonnegative");
  }

  SymmetricMatrix(int n, std::vector<double> row_major) : n_(n), a_(std::move(row_major)) {
    if (n < 0 || a_.size() != static_cast<std::size_t>(n) * n)
      throw std::invalid_argument("matrix storage does not match order");
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (at(i, j) != at(j, i))
          throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i) +
                                      "," + std::to_string(j) + ")");
  }

  static SymmetricMatrix from_path_matrix(const PathMatrix& pm) {
    SymmetricMatrix m(pm.order());
    const auto& d = pm.data();
    for (std::size_t i = 0; i < d.size(); ++i) m.a_[i] = static_cast<double>(d[i]);
    return m;
  }

  int order() const { return n_; }
  double at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  void set(int i, int j, double value) {
    a_[static_cast<std::size_t>(i) * n_ + j] = value;
    a_[static_cast<std::size_t>(j) * n_ + i] = value;
  }

  const std::vector<double>& data() const { return a_; }

 private:
  int n_ = 0;
  std::vector<double> a_;
};

/// Real eigenvalues in nonincreasing order.
struct Spectrum {
  std::vector<double> values;
  int size() const { return static_cast<int>(values.size()); }
};

namespace detail {

inline std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", x);
  return buf;
}

}  // namespace detail

/// All eigenvalues by cyclic Jacobi rotations. Sweeps run until the
/// off-diagonal Frobenius norm falls below tol times the matrix Frobenius
/// norm; symmetric input converges long before the 100-sweep cap, so hitting
/// it is reported as an error.
inline Spectrum eigenvalues(const SymmetricMatrix& m, double tol = 1e-10) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  const int n = m.order();
  if (n == 0) return {};

  std::vector<double> a = m.data();
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  double frob2 = 0;
  for (double x : a) frob2 += x * x;
  const double frob = std::sqrt(frob2);
  Spectrum spec;
  if (frob == 0) {
    spec.values.assign(n, 0.0);
    return spec;
  }

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0;; ++sweep) {
    double off2 = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off2 += at(i, j) * at(i, j);
    if (std::sqrt(2 * off2) < tol * frob) break;
    if (sweep == kMaxSweeps)
      throw std::runtime_error("eigensolver did not converge within 100 sweeps");

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 1 / (2 * theta);  // avoid overflow in theta*theta
        } else {
          t = ((theta >= 0) ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        }
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        const double tau = s / (1 + c);
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          at(r, p) = at(p, r) = arp - s * (arq + tau * arp);
          at(r, q) = at(q, r) = arq + s * (arp - tau * arq);
        }
      }
    }
  }

  spec.values.resize(n);
  for (int i = 0; i < n; ++i) spec.values[i] = at(i, i);
  std::sort(spec.values.begin(), spec.values.end(), std::greater<>());
  return spec;
}

/// Sum of absolute eigenvalues.
inline double path_energy(const Spectrum& spec) {
  double e = 0;
  for (double v : spec.values) e += std::abs(v);
  return e;
}

inline double spectral_radius(const Spectrum& spec) {
  if (spec.values.empty()) throw std::invalid_argument("empty spectrum has no spectral radius");
  return spec.values.front();
}

/// JSON array, nonincreasing, nine decimal places per entry.
inline std::string spectrum_to_json(const Spectrum& spec) {
  std::string out = "[";
  for (std::size_t i = 0; i < spec.values.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += detail::format_real(spec.values[i]);
  }
  out.push_back(']');
  return out;
}

}  // namespace pathmat
