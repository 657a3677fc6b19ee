#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "pathmat/spectral.hpp"

namespace pathmat {

namespace detail {

inline void check_unicyclic_range(int n, int k, int k_max) {
  if (k < 3 || k > k_max)
    throw std::invalid_argument("cycle length out of range: need 3 <= k <= " +
                                std::to_string(k_max) + ", got k=" + std::to_string(k) +
                                " for n=" + std::to_string(n));
}

// g(k) = k^2 - nk + 2n - 2, evaluated exactly.
inline long long unicyclic_g(long long n, long long k) { return k * k - n * k + 2 * n - 2; }

}  // namespace detail

struct UnicyclicRho {
  double rho1;
  double rho2;
};

/// The two non-integer eigenvalues of the order-n, cycle-length-k unicyclic
/// path matrix: ((n+k-3) +- sqrt((n+k-3)^2 + 4(k^2-nk+2n-2))) / 2.
inline UnicyclicRho unicyclic_rho12(int n, int k) {
  detail::check_unicyclic_range(n, k, n - 1);
  const double b = static_cast<double>(n) + k - 3;
  const double disc = b * b + 4.0 * static_cast<double>(detail::unicyclic_g(n, k));
  if (disc < 0)
    throw std::logic_error("negative discriminant for n=" + std::to_string(n) +
                           ", k=" + std::to_string(k));
  const double root = std::sqrt(disc);
  return {(b + root) / 2, (b - root) / 2};
}

/// True exactly when rho2 > 0, i.e. k^2 - nk + 2n - 2 < 0 (integer test).
inline bool rho2_positive(int n, int k) {
  detail::check_unicyclic_range(n, k, n - 1);
  return detail::unicyclic_g(n, k) < 0;
}

/// Full closed-form spectrum: -2 with multiplicity k-1, -1 with multiplicity
/// n-k-1, plus rho1 and rho2; the k = n case degenerates to -2 with
/// multiplicity n-1 and the single positive value 2(n-1).
inline Spectrum unicyclic_spectrum_closed(int n, int k) {
  detail::check_unicyclic_range(n, k, n);
  Spectrum spec;
  spec.values.reserve(n);
  if (k == n) {
    spec.values.push_back(2.0 * (n - 1));
    spec.values.insert(spec.values.end(), n - 1, -2.0);
    return spec;
  }
  const auto [rho1, rho2] = unicyclic_rho12(n, k);
  spec.values.push_back(rho1);
  spec.values.push_back(rho2);
  spec.values.insert(spec.values.end(), k - 1, -2.0);
  spec.values.insert(spec.values.end(), n - k - 1, -1.0);
  std::sort(spec.values.begin(), spec.values.end(), std::greater<>());
  return spec;
}

/// Piecewise closed form for the path energy of a unicyclic graph. Branches
/// on the computed sign of rho2, which coincides with the two-positive-
/// eigenvalue case; both branches agree where rho2 = 0.
inline double unicyclic_energy_closed(int n, int k) {
  detail::check_unicyclic_range(n, k, n);
  if (k == n) return 4.0 * (n - 1);
  if (rho2_positive(n, k)) return 2.0 * (n + k - 3);
  return 2.0 * unicyclic_rho12(n, k).rho1;
}

struct EnergyBounds {
  double lower;  // attained exactly by trees
  double upper;  // attained exactly by complete graphs
};

inline EnergyBounds general_energy_bounds(int n) {
  if (n < 1) throw std::invalid_argument("graph order must be at least 1");
  const double nm1 = static_cast<double>(n) - 1;
  return {2 * nm1, 2 * nm1 * nm1};
}

struct UnicyclicExtremes {
  double stated_min;     // n + sqrt(n^2 - 4n + 28)
  double max_energy;     // 4(n - 1)
  int argmin_k;          // 3
  bool argmax_is_cycle;  // maximum attained only at k = n
};

inline UnicyclicExtremes unicyclic_extremes(int n) {
  if (n < 3) throw std::invalid_argument("unicyclic graphs need n >= 3");
  const double nd = static_cast<double>(n);
  return {nd + std::sqrt(nd * nd - 4 * nd + 28), 4 * (nd - 1), 3, true};
}

}  // namespace pathmat
