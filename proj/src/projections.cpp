#include "banach_cover/projections.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "banach_cover/sampling.hpp"

namespace bcover {

namespace {

void check_radius(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument("set radius must be strictly positive and finite");
  }
}

// Convex 1-d minimization by golden section on [lo, hi].
template <typename F>
double minimize_convex(F&& f, double lo, double hi) {
  const double phi = 0.6180339887498948482;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a);
  double x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 200 && (b - a) > 1e-13 * (1.0 + std::abs(a) + std::abs(b)); ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    }
  }
  return std::min({f(a), f1, f2, f(b)});
}

}  // namespace

LpVector project_ball(const LpVector& x, double r) {
  check_radius(r);
  const double n = norm(x);
  if (n <= r) return x;
  return scale(r / n, x);
}

LpVector project_cylinder(const LpVector& x, double r, const IndexMask& mask) {
  check_radius(r);
  auto [xm, xc] = mask_decompose(x, mask);
  const double nm = norm(xm);
  if (nm <= r) return x;
  return add(scale(r / nm, xm), xc);
}

StepFunction project_cone(const StepFunction& f, const MeasureGrid& grid) {
  if (f.cells() != grid.cells()) {
    throw std::invalid_argument("project_cone: function/grid cell count mismatch");
  }
  return positive_negative_parts(f).first;
}

bool member(const BallSet& set, const LpVector& x) { return norm(x) <= set.r; }

bool member(const CylinderSet& set, const LpVector& x) {
  return norm(mask_part(x, set.mask)) <= set.r;
}

bool member(const ConeSet& set, const StepFunction& f) {
  if (f.cells() != set.grid.cells()) {
    throw std::invalid_argument("member: function/grid cell count mismatch");
  }
  return in_positive_cone(f);
}

LpVector sample_member(const BallSet& set, double p, std::size_t n, Rng& rng) {
  // Unit direction scaled into the ball; the radial bias is irrelevant for a
  // falsifier, full support is what matters.
  auto d = rng.unit_direction(n, p);
  const double t = set.r * std::pow(rng.uniform01(), 1.0 / static_cast<double>(n));
  for (auto& c : d) c *= t;
  return LpVector(p, std::move(d));
}

LpVector sample_member(const CylinderSet& set, double p, std::size_t n, Rng& rng) {
  if (set.mask.max_index() > n) throw std::invalid_argument("cylinder mask exceeds dimension");
  const std::size_t m = set.mask.members().size();
  auto dm = rng.unit_direction(m, p);
  const double t = set.r * std::pow(rng.uniform01(), 1.0 / static_cast<double>(m));
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = 2.0 * rng.normal();
  std::size_t k = 0;
  for (std::size_t i : set.mask.members()) out[i - 1] = t * dm[k++];
  return LpVector(p, std::move(out));
}

StepFunction sample_member(const ConeSet& set, double p, Rng& rng) {
  std::vector<double> v(set.grid.cells());
  for (auto& c : v) c = std::abs(rng.normal());
  return StepFunction(p, std::move(v));
}

namespace {

VariationalReport variational_vector(const LpVector& x, const LpVector& u,
                                     const std::function<LpVector(Rng&)>& draw,
                                     std::size_t sample_count, std::uint64_t seed) {
  Rng rng(seed);
  const DualVector j = duality_map(sub(x, u));
  double min_slack = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < sample_count; ++k) {
    const LpVector z = draw(rng);
    min_slack = std::min(min_slack, pairing(j, sub(u, z)));
  }
  return {min_slack, sample_count};
}

}  // namespace

VariationalReport variational_check(const BallSet& set, const LpVector& x,
                                    std::size_t sample_count, std::uint64_t seed) {
  const LpVector u = project_ball(x, set.r);
  return variational_vector(
      x, u, [&](Rng& rng) { return sample_member(set, x.p(), x.dim(), rng); }, sample_count,
      seed);
}

VariationalReport variational_check(const CylinderSet& set, const LpVector& x,
                                    std::size_t sample_count, std::uint64_t seed) {
  const LpVector u = project_cylinder(x, set.r, set.mask);
  return variational_vector(
      x, u, [&](Rng& rng) { return sample_member(set, x.p(), x.dim(), rng); }, sample_count,
      seed);
}

VariationalReport variational_check(const ConeSet& set, const StepFunction& f,
                                    std::size_t sample_count, std::uint64_t seed) {
  Rng rng(seed);
  const StepFunction u = project_cone(f, set.grid);
  const StepFunction j = duality_map(sub(f, u), set.grid);
  double min_slack = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < sample_count; ++k) {
    const StepFunction z = sample_member(set, f.p(), rng);
    min_slack = std::min(min_slack, pairing(j, sub(u, z), set.grid));
  }
  return {min_slack, sample_count};
}

std::optional<double> preimage_distance(const BallSet& set, const LpVector& x,
                                        const LpVector& y_target) {
  return preimage_distance(CylinderSet{set.r, IndexMask::full(x.dim())}, x, y_target);
}

std::optional<double> preimage_distance(const CylinderSet& set, const LpVector& x,
                                        const LpVector& y_target) {
  if (x.dim() != y_target.dim()) {
    throw std::invalid_argument("preimage_distance: dimension mismatch");
  }
  const auto [ym, yc] = mask_decompose(y_target, set.mask);
  const double nym = norm(ym);
  const double band = boundary_tol(set.r);
  if (nym > set.r + band) return std::nullopt;  // infeasible target
  if (nym < set.r - band) {
    // Interior target: the only preimage point is the target itself.
    return norm(sub(y_target, x));
  }
  // Boundary target: masked preimage is the outward ray {t y_M : t >= 1},
  // complement forced equal to y. ||t y_M + y_Mbar - x|| is convex in t.
  const auto h = [&](double t) { return norm(sub(add(scale(t, ym), yc), x)); };
  const double t_hi = 1.0 + (norm(x) + norm(sub(y_target, x)) + 1.0) / std::max(nym, 1e-12);
  return minimize_convex(h, 1.0, t_hi);
}

std::optional<double> preimage_distance(const ConeSet& set, const StepFunction& f,
                                        const StepFunction& y_target) {
  if (f.cells() != y_target.cells() || f.cells() != set.grid.cells()) {
    throw std::invalid_argument("preimage_distance: cell count mismatch");
  }
  if (!in_positive_cone(y_target)) return std::nullopt;
  // Preimage of y: cells with y > 0 are pinned, cells with y = 0 range over
  // (-inf, 0]. Distance is therefore cellwise.
  double m = 0.0;
  std::vector<double> gaps(f.cells(), 0.0);
  for (std::size_t i = 0; i < f.cells(); ++i) {
    gaps[i] = y_target[i] > 0.0 ? std::abs(y_target[i] - f[i]) : std::max(f[i], 0.0);
    m = std::max(m, gaps[i]);
  }
  if (m == 0.0) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < f.cells(); ++i) {
    acc += std::pow(gaps[i] / m, f.p()) * set.grid[i];
  }
  return m * std::pow(acc, 1.0 / f.p());
}

namespace {

DirectionClass classify_impl(double boundary_at_x, double r, const LpVector& v,
                             const std::function<double(double)>& functional_at_t,
                             const std::vector<double>& t_samples) {
  if (v.is_zero()) throw std::invalid_argument("classify_direction: v must be nonzero");
  if (std::abs(boundary_at_x - r) > boundary_tol(r)) {
    throw std::invalid_argument("classify_direction: x is not on the boundary");
  }
  if (t_samples.empty()) throw std::invalid_argument("classify_direction: empty t sample");
  bool all_up = true, all_down = true;
  for (double t : t_samples) {
    const double b = functional_at_t(t);
    if (b > r) {
      all_down = false;
    } else {
      all_up = false;
    }
  }
  if (all_up) return DirectionClass::Up;
  if (all_down) return DirectionClass::Down;
  return DirectionClass::Indeterminate;
}

}  // namespace

DirectionClass classify_direction(const LpVector& x, const LpVector& v, const BallSet& set,
                                  const std::vector<double>& t_samples) {
  return classify_impl(
      norm(x), set.r, v, [&](double t) { return norm(add(x, scale(t, v))); }, t_samples);
}

DirectionClass classify_direction(const LpVector& x, const LpVector& v, const CylinderSet& set,
                                  const std::vector<double>& t_samples) {
  return classify_impl(
      norm(mask_part(x, set.mask)), set.r, v,
      [&](double t) { return norm(mask_part(add(x, scale(t, v)), set.mask)); }, t_samples);
}

const std::vector<double>& default_direction_samples() {
  static const std::vector<double> t = {1e-2, 1e-4, 1e-6};
  return t;
}

}  // namespace bcover
