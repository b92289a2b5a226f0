#include "banach_cover/lp_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bcover {

namespace {

void check_exponent(double e, const char* what) {
  if (!(e > kMinExponent) || !(e < kMaxExponent)) {
    throw std::invalid_argument(std::string(what) +
                                " must lie in (1 + 1e-6, 1e6), got " + std::to_string(e));
  }
}

void check_finite(const std::vector<double>& v, const char* what) {
  for (double c : v) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument(std::string(what) + " has a non-finite coordinate");
    }
  }
}

// Scaled p-norm: m * (sum |v_i/m|^p)^(1/p) to keep |.|^p away from the
// overflow/underflow range.
double p_norm(const std::vector<double>& v, double p) {
  double m = 0.0;
  for (double c : v) m = std::max(m, std::abs(c));
  if (m == 0.0) return 0.0;
  double acc = 0.0;
  for (double c : v) acc += std::pow(std::abs(c) / m, p);
  return m * std::pow(acc, 1.0 / p);
}

std::vector<double> duality_coords(const std::vector<double>& v, double e) {
  const double n = p_norm(v, e);
  std::vector<double> out(v.size(), 0.0);
  if (n == 0.0) return out;
  const double denom = std::pow(n, e - 2.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0.0) continue;
    const double mag = std::pow(std::abs(v[i]), e - 1.0) / denom;
    out[i] = v[i] > 0.0 ? mag : -mag;
  }
  return out;
}

}  // namespace

LpVector::LpVector(double p, std::vector<double> coords) : p_(p), coords_(std::move(coords)) {
  check_exponent(p_, "exponent p");
  if (coords_.empty()) throw std::invalid_argument("LpVector needs at least one coordinate");
  check_finite(coords_, "LpVector");
}

LpVector LpVector::zero(double p, std::size_t n) {
  return LpVector(p, std::vector<double>(n, 0.0));
}

bool LpVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](double c) { return c == 0.0; });
}

DualVector::DualVector(double q, std::vector<double> coords) : q_(q), coords_(std::move(coords)) {
  check_exponent(q_, "exponent q");
  if (coords_.empty()) throw std::invalid_argument("DualVector needs at least one coordinate");
  check_finite(coords_, "DualVector");
}

DualVector DualVector::zero(double q, std::size_t n) {
  return DualVector(q, std::vector<double>(n, 0.0));
}

bool DualVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](double c) { return c == 0.0; });
}

IndexMask::IndexMask(std::vector<std::size_t> members) : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("index mask must be nonempty");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.front() == 0) throw std::invalid_argument("index mask is 1-based");
}

IndexMask IndexMask::full(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i + 1;
  return IndexMask(std::move(m));
}

bool IndexMask::contains(std::size_t i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

bool IndexMask::is_full(std::size_t n) const { return members_.size() == n; }

double norm(const LpVector& x) { return p_norm(x.coords(), x.p()); }
double norm(const DualVector& w) { return p_norm(w.coords(), w.q()); }

double pairing(const DualVector& w, const LpVector& x) {
  if (w.dim() != x.dim()) throw std::invalid_argument("pairing: dimension mismatch");
  if (!conjugate_pair(x.p(), w.q())) {
    throw std::invalid_argument("pairing: exponents are not conjugate (1/p + 1/q != 1)");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) acc += w[i] * x[i];
  return acc;
}

DualVector duality_map(const LpVector& x) {
  return DualVector(conjugate_exponent(x.p()), duality_coords(x.coords(), x.p()));
}

LpVector duality_map_star(const DualVector& w) {
  return LpVector(conjugate_exponent(w.q()), duality_coords(w.coords(), w.q()));
}

namespace {

template <typename V>
std::pair<V, V> decompose_impl(const V& v, double tag, const IndexMask& mask) {
  if (mask.max_index() > v.dim()) {
    throw std::invalid_argument("mask index exceeds vector dimension");
  }
  std::vector<double> on(v.dim(), 0.0);
  std::vector<double> off = v.coords();
  for (std::size_t i : mask.members()) {
    on[i - 1] = v[i - 1];
    off[i - 1] = 0.0;
  }
  return {V(tag, std::move(on)), V(tag, std::move(off))};
}

}  // namespace

std::pair<LpVector, LpVector> mask_decompose(const LpVector& x, const IndexMask& mask) {
  return decompose_impl(x, x.p(), mask);
}

std::pair<DualVector, DualVector> mask_decompose(const DualVector& w, const IndexMask& mask) {
  return decompose_impl(w, w.q(), mask);
}

LpVector mask_part(const LpVector& x, const IndexMask& mask) {
  return mask_decompose(x, mask).first;
}

DualVector mask_part(const DualVector& w, const IndexMask& mask) {
  return mask_decompose(w, mask).first;
}

DualVector duality_map_on_subspace(const LpVector& x, const IndexMask& mask) {
  // x_M has zero complement coordinates, so the full-space formula applied to
  // x_M already uses the subspace norm ||x_M||.
  return duality_map(mask_part(x, mask));
}

LpVector add(const LpVector& a, const LpVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("add: dimension mismatch");
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
  return LpVector(a.p(), std::move(out));
}

LpVector sub(const LpVector& a, const LpVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("sub: dimension mismatch");
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] - b[i];
  return LpVector(a.p(), std::move(out));
}

LpVector scale(double c, const LpVector& a) {
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = c * a[i];
  return LpVector(a.p(), std::move(out));
}

DualVector add(const DualVector& a, const DualVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("add: dimension mismatch");
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
  return DualVector(a.q(), std::move(out));
}

DualVector sub(const DualVector& a, const DualVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("sub: dimension mismatch");
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] - b[i];
  return DualVector(a.q(), std::move(out));
}

DualVector scale(double c, const DualVector& a) {
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = c * a[i];
  return DualVector(a.q(), std::move(out));
}

}  // namespace bcover
