#include "banach_cover/lp_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bcover {

namespace {

void check_cells(const StepFunction& f, const MeasureGrid& grid, const char* what) {
  if (f.cells() != grid.cells()) {
    throw std::invalid_argument(std::string(what) + ": function/grid cell count mismatch");
  }
}

}  // namespace

MeasureGrid::MeasureGrid(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.size() < 2) throw std::invalid_argument("measure grid needs at least 2 cells");
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("measure grid weights must be strictly positive and finite");
    }
  }
}

StepFunction::StepFunction(double p, std::vector<double> values)
    : p_(p), values_(std::move(values)) {
  if (!(p_ > kMinExponent) || !(p_ < kMaxExponent)) {
    throw std::invalid_argument("step function exponent must lie in (1 + 1e-6, 1e6)");
  }
  if (values_.empty()) throw std::invalid_argument("step function needs at least one cell");
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("step function has a non-finite value");
  }
}

StepFunction StepFunction::zero(double p, std::size_t n) {
  return StepFunction(p, std::vector<double>(n, 0.0));
}

bool StepFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

OrderedInterval::OrderedInterval(StepFunction lower, StepFunction upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.cells() != upper_.cells()) {
    throw std::invalid_argument("ordered interval endpoints differ in cell count");
  }
  if (lower_.p() != upper_.p()) {
    throw std::invalid_argument("ordered interval endpoints differ in exponent");
  }
  for (std::size_t i = 0; i < lower_.cells(); ++i) {
    if (!(lower_[i] <= upper_[i])) {
      throw std::invalid_argument("ordered interval requires lower <= upper on every cell");
    }
  }
}

bool OrderedInterval::contains(const StepFunction& phi) const {
  if (phi.cells() != lower_.cells()) {
    throw std::invalid_argument("interval_contains: cell count mismatch");
  }
  for (std::size_t i = 0; i < phi.cells(); ++i) {
    if (phi[i] < lower_[i] || phi[i] > upper_[i]) return false;
  }
  return true;
}

double norm(const StepFunction& f, const MeasureGrid& grid) {
  check_cells(f, grid, "norm");
  double m = 0.0;
  for (double v : f.values()) m = std::max(m, std::abs(v));
  if (m == 0.0) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < f.cells(); ++i) {
    acc += std::pow(std::abs(f[i]) / m, f.p()) * grid[i];
  }
  return m * std::pow(acc, 1.0 / f.p());
}

double pairing(const StepFunction& phi, const StepFunction& f, const MeasureGrid& grid) {
  check_cells(f, grid, "pairing");
  check_cells(phi, grid, "pairing");
  if (!conjugate_pair(f.p(), phi.p())) {
    throw std::invalid_argument("pairing: exponents are not conjugate (1/p + 1/q != 1)");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < f.cells(); ++i) acc += phi[i] * f[i] * grid[i];
  return acc;
}

StepFunction duality_map(const StepFunction& f, const MeasureGrid& grid) {
  check_cells(f, grid, "duality_map");
  const double q = conjugate_exponent(f.p());
  const double n = norm(f, grid);
  std::vector<double> out(f.cells(), 0.0);
  if (n == 0.0) return StepFunction(q, std::move(out));
  const double denom = std::pow(n, f.p() - 2.0);
  for (std::size_t i = 0; i < f.cells(); ++i) {
    if (f[i] == 0.0) continue;
    const double mag = std::pow(std::abs(f[i]), f.p() - 1.0) / denom;
    out[i] = f[i] > 0.0 ? mag : -mag;
  }
  return StepFunction(q, std::move(out));
}

std::pair<StepFunction, StepFunction> positive_negative_parts(const StepFunction& f) {
  std::vector<double> pos(f.cells(), 0.0);
  std::vector<double> neg(f.cells(), 0.0);
  for (std::size_t i = 0; i < f.cells(); ++i) {
    if (f[i] > 0.0) {
      pos[i] = f[i];
    } else if (f[i] < 0.0) {
      neg[i] = f[i];
    }
  }
  return {StepFunction(f.p(), std::move(pos)), StepFunction(f.p(), std::move(neg))};
}

bool in_positive_cone(const StepFunction& f) {
  return std::all_of(f.values().begin(), f.values().end(), [](double v) { return v >= 0.0; });
}

StepFunction add(const StepFunction& a, const StepFunction& b) {
  if (a.cells() != b.cells()) throw std::invalid_argument("add: cell count mismatch");
  std::vector<double> out(a.cells());
  for (std::size_t i = 0; i < a.cells(); ++i) out[i] = a[i] + b[i];
  return StepFunction(a.p(), std::move(out));
}

StepFunction sub(const StepFunction& a, const StepFunction& b) {
  if (a.cells() != b.cells()) throw std::invalid_argument("sub: cell count mismatch");
  std::vector<double> out(a.cells());
  for (std::size_t i = 0; i < a.cells(); ++i) out[i] = a[i] - b[i];
  return StepFunction(a.p(), std::move(out));
}

StepFunction scale(double c, const StepFunction& a) {
  std::vector<double> out(a.cells());
  for (std::size_t i = 0; i < a.cells(); ++i) out[i] = c * a[i];
  return StepFunction(a.p(), std::move(out));
}

}  // namespace bcover
