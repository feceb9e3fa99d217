#include "ge/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ge {

std::uint64_t Rng::next_u64() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double Rng::uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

double Rng::gaussian() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  // Box-Muller; u1 in (0, 1] so the log is finite.
  const double u1 = ((next_u64() >> 11) + 1) * 0x1.0p-53;
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(theta);
  has_cached_ = true;
  return r * std::cos(theta);
}

Vector basis_state(int d, int k) {
  if (d < 1) throw std::invalid_argument("basis_state: d must be positive");
  if (k < 0 || k >= d) throw std::out_of_range("basis_state: index out of range");
  Vector psi = Vector::Zero(d);
  psi(k) = 1.0;
  return psi;
}

Vector product_state(const std::vector<Vector>& locals) {
  if (locals.empty()) throw std::invalid_argument("product_state: empty input");
  Vector psi = locals.front();
  for (std::size_t l = 1; l < locals.size(); ++l) {
    const Vector& phi = locals[l];
    Vector out(psi.size() * phi.size());
    for (Eigen::Index i = 0; i < psi.size(); ++i)
      out.segment(i * phi.size(), phi.size()) = psi(i) * phi;
    psi = std::move(out);
  }
  psi.normalize();
  return psi;
}

Vector ghz(int n) {
  if (n < 2) throw std::invalid_argument("ghz: n must be >= 2");
  Vector psi = Vector::Zero(1 << n);
  psi(0) = psi((1 << n) - 1) = std::numbers::sqrt2 / 2.0;
  return psi;
}

Vector singlet_pairs(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("singlet_pairs: n must be even and >= 2");
  Vector singlet(4);
  singlet << 0.0, std::numbers::sqrt2 / 2.0, -std::numbers::sqrt2 / 2.0, 0.0;
  std::vector<Vector> pairs(n / 2, singlet);
  return product_state(pairs);
}

Vector w_state(int n) {
  if (n < 2) throw std::invalid_argument("w_state: n must be >= 2");
  Vector psi = Vector::Zero(1 << n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) psi(1 << j) = amp;
  return psi;
}

Vector random_state(int d, Rng& rng) {
  if (d < 2) throw std::invalid_argument("random_state: d must be >= 2");
  Vector psi(d);
  for (int k = 0; k < d; ++k) {
    const double re = rng.gaussian();
    const double im = rng.gaussian();
    psi(k) = cx(re, im);
  }
  psi.normalize();
  return psi;
}

Vector random_state(int d, RandomSeed seed) {
  Rng rng(seed);
  return random_state(d, rng);
}

Vector spin_state(int two_j, int two_m) {
  if (two_j < 1) throw std::invalid_argument("spin_state: two_j must be >= 1");
  if (std::abs(two_m) > two_j || (two_j - two_m) % 2 != 0)
    throw std::invalid_argument("spin_state: invalid m");
  return basis_state(two_j + 1, (two_j - two_m) / 2);
}

}  // namespace ge
