#include "banach_cover/sampling.hpp"

#include <cmath>

namespace bcover {

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // u1 in (0, 1] keeps the log finite.
  const double u1 = (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform01();
  const double mag = std::sqrt(-2.0 * std::log(u1));
  const double two_pi = 6.283185307179586476925286766559;
  spare_ = mag * std::sin(two_pi * u2);
  has_spare_ = true;
  return mag * std::cos(two_pi * u2);
}

std::vector<double> Rng::normal_vec(std::size_t n) {
  std::vector<double> v(n);
  for (auto& c : v) c = normal();
  return v;
}

std::vector<double> Rng::unit_direction(std::size_t n, double p) {
  std::vector<double> v;
  double nrm = 0.0;
  while (nrm == 0.0) {
    v = normal_vec(n);
    double acc = 0.0;
    for (double c : v) acc += std::pow(std::abs(c), p);
    nrm = std::pow(acc, 1.0 / p);
  }
  for (auto& c : v) c /= nrm;
  return v;
}

}  // namespace bcover
