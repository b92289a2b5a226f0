#include "banach_cover/covering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "banach_cover/sampling.hpp"

namespace bcover {

namespace {

double weighted_norm_of(const std::vector<double>& v, double p, const MeasureGrid& grid) {
  return norm(StepFunction(p, v), grid);
}

StepFunction sample_in_function_ball(const StepFunction& center, const MeasureGrid& grid,
                                     double eta, Rng& rng) {
  const std::size_t n = center.cells();
  std::vector<double> d;
  double nrm = 0.0;
  while (nrm == 0.0) {
    d = rng.normal_vec(n);
    nrm = weighted_norm_of(d, center.p(), grid);
  }
  const double t = eta * std::pow(rng.uniform01(), 1.0 / static_cast<double>(n)) / nrm;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = center[i] + t * d[i];
  return StepFunction(center.p(), std::move(out));
}

LpVector sample_in_vector_ball(const LpVector& center, double eta, Rng& rng) {
  const std::size_t n = center.dim();
  auto d = rng.unit_direction(n, center.p());
  const double t = eta * std::pow(rng.uniform01(), 1.0 / static_cast<double>(n));
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = center[i] + t * d[i];
  return LpVector(center.p(), std::move(out));
}

DualVector sample_unit_dual(std::size_t n, double q, Rng& rng) {
  return DualVector(q, rng.unit_direction(n, q));
}

// True when the closed-form evaluation certifies theta* membership.
bool certifies_zero(const CoderivativeValue& cd) {
  if (const auto* s = std::get_if<SingletonValue>(&cd)) {
    return norm(s->value) <= 1e-10;
  }
  if (const auto* p = std::get_if<PredicateValue>(&cd)) {
    return p->zero_member == ZeroMembership::Yes;
  }
  return false;
}

std::vector<double> running_min(std::vector<double> raw) {
  for (std::size_t i = 1; i < raw.size(); ++i) raw[i] = std::min(raw[i], raw[i - 1]);
  return raw;
}

void check_eta_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("eta grid must be nonempty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || (i > 0 && !(grid[i] > grid[i - 1]))) {
      throw std::invalid_argument("eta grid must be positive and strictly increasing");
    }
  }
}

}  // namespace

double theoretical_covering_constant(const VectorMap& target, const LpVector& base) {
  return std::visit(
      [&](const auto& t) -> double {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, BallSet>) {
          return norm(base) < t.r ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<T, CylinderSet>) {
          return norm(mask_part(base, t.mask)) < t.r ? 1.0 : 0.0;
        } else {
          if (std::abs(t.lambda) > 1.0) {
            throw std::invalid_argument(
                "covering constant for lambda I is only stated for |lambda| <= 1");
          }
          return std::abs(t.lambda);
        }
      },
      target);
}

double theoretical_covering_constant_cone() { return 0.0; }

std::vector<double> default_eta_grid(double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("eta grid scale must be positive");
  const double lo = 1e-3 * scale;
  const double hi = 4.0 * scale;
  const int points = 13;
  std::vector<double> grid(points);
  const double ratio = std::pow(hi / lo, 1.0 / (points - 1));
  double v = lo;
  for (int i = 0; i < points; ++i) {
    grid[i] = v;
    v *= ratio;
  }
  grid.back() = hi;
  return grid;
}

std::optional<BallWitness> witness_zero_ball(const LpVector& base, double eta, double r) {
  if (!(eta > 0.0) || !(r > 0.0)) {
    throw std::invalid_argument("witness_zero_ball: eta and r must be positive");
  }
  const double nb = norm(base);
  const double band = boundary_tol(r);

  if (nb >= r - band) {
    if (nb == 0.0) return std::nullopt;  // unreachable: r > band
    // On or outside the sphere: scale outward along the base ray. The
    // exterior closed form annihilates multiples of J there.
    const double beta = 1.0 + eta / (2.0 * nb);
    const LpVector u = scale(beta, base);
    const DualVector w = scale(-1.0 / norm(u), duality_map(u));
    return BallWitness{u, w};
  }

  const double gap = r - nb;
  if (eta < gap - band) return std::nullopt;  // neighborhood stays interior

  if (eta > gap + 2.0 * band) {
    // Strictly beyond the gap: an exterior point fits inside the
    // eta-neighborhood and gives an exact Singleton{theta*}.
    LpVector u = base;
    if (nb > 0.0) {
      u = scale(0.5 * (eta + nb + r) / nb, base);
    } else {
      std::vector<double> c(base.dim(), 0.0);
      c[0] = 0.5 * (r + std::min(eta, 3.0 * r));
      u = LpVector(base.p(), std::move(c));
    }
    const DualVector w = scale(-1.0 / norm(u), duality_map(u));
    return BallWitness{u, w};
  }

  // eta ~ gap: the sphere-touch point, with the inward unit multiple of J.
  // Certified through the sphere-branch membership predicate.
  if (nb == 0.0) {
    std::vector<double> c(base.dim(), 0.0);
    c[0] = r;
    const LpVector u(base.p(), std::move(c));
    const DualVector w = scale(-1.0 / norm(u), duality_map(u));
    return BallWitness{u, w};
  }
  const LpVector u = scale(r / nb, base);
  const DualVector w = scale(-1.0 / norm(u), duality_map(u));
  return BallWitness{u, w};
}

std::optional<BallWitness> witness_zero_cylinder(const LpVector& base, double eta, double r,
                                                 const IndexMask& mask) {
  if (!(eta > 0.0) || !(r > 0.0)) {
    throw std::invalid_argument("witness_zero_cylinder: eta and r must be positive");
  }
  const auto [bm, bc] = mask_decompose(base, mask);
  const double nbm = norm(bm);
  const double band = boundary_tol(r);

  const auto dual_for = [&](const LpVector& u) {
    const DualVector jm = duality_map_on_subspace(u, mask);
    return scale(-1.0 / norm(jm), jm);
  };

  if (nbm >= r - band) {
    if (nbm == 0.0) return std::nullopt;  // r > band makes this unreachable
    const double beta = 1.0 + eta / (2.0 * nbm);
    const LpVector u = add(scale(beta, bm), bc);
    return BallWitness{u, dual_for(u)};
  }

  const double gap = r - nbm;
  if (eta < gap - band) return std::nullopt;

  if (eta > gap + 2.0 * band) {
    LpVector u = base;
    if (nbm > 0.0) {
      u = add(scale(0.5 * (eta + nbm + r) / nbm, bm), bc);
    } else {
      std::vector<double> c(base.dim(), 0.0);
      c[mask.members().front() - 1] = 0.5 * (r + std::min(eta, 3.0 * r));
      u = add(LpVector(base.p(), std::move(c)), bc);
    }
    return BallWitness{u, dual_for(u)};
  }

  if (nbm == 0.0) {
    std::vector<double> c(base.dim(), 0.0);
    c[mask.members().front() - 1] = r;
    const LpVector u = add(LpVector(base.p(), std::move(c)), bc);
    return BallWitness{u, dual_for(u)};
  }
  const LpVector u = add(scale(r / nbm, bm), bc);
  return BallWitness{u, dual_for(u)};
}

std::optional<ConeWitness> witness_zero_cone(const StepFunction& base, double eta,
                                             const MeasureGrid& grid) {
  if (!(eta > 0.0)) throw std::invalid_argument("witness_zero_cone: eta must be positive");
  if (base.cells() != grid.cells()) {
    throw std::invalid_argument("witness_zero_cone: cell count mismatch");
  }
  const std::size_t n = base.cells();
  const double p = base.p();
  const double q = conjugate_exponent(p);

  // Cost of moving cell k to a given target value, measured in the grid norm.
  const auto cell_cost = [&](std::size_t k, double target) {
    return std::abs(target - base[k]) * std::pow(grid[k], 1.0 / p);
  };

  // Pick the cheapest cell to make strictly negative.
  std::size_t neg_cell = n;
  double neg_cost = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    const double c = base[k] < 0.0 ? 0.0 : cell_cost(k, 0.0);
    if (c < neg_cost) {
      neg_cost = c;
      neg_cell = k;
    }
  }
  if (neg_cost > eta / 4.0) return std::nullopt;  // finite-grid caveat: K_p has interior here

  std::vector<double> values = base.values();
  if (values[neg_cell] >= 0.0) {
    const double eps = (eta / 4.0) / std::pow(grid[neg_cell], 1.0 / p);
    values[neg_cell] = -std::min(eps, 1.0 / std::pow(grid[neg_cell], 1.0 / p));
  }

  // Mirror the sign-mixed shape of the constructive proof when a positive
  // cell is affordable; the certificate does not depend on it.
  bool has_positive = false;
  for (std::size_t k = 0; k < n; ++k) has_positive |= values[k] > 0.0;
  if (!has_positive) {
    std::size_t pos_cell = n;
    double pos_cost = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      if (k == neg_cell) continue;
      const double c = cell_cost(k, 0.0);
      if (c < pos_cost) {
        pos_cost = c;
        pos_cell = k;
      }
    }
    if (pos_cell < n && pos_cost <= eta / 4.0) {
      const double eps = (eta / 8.0) / std::pow(grid[pos_cell], 1.0 / p);
      values[pos_cell] = std::min(eps, 1.0 / std::pow(grid[pos_cell], 1.0 / p));
    }
  }

  StepFunction f(p, std::move(values));
  // phi = mu(E)^(-1/q) on the negative cell, zero elsewhere: unit q-norm.
  std::vector<double> phi(n, 0.0);
  phi[neg_cell] = std::pow(grid[neg_cell], -1.0 / q);
  return ConeWitness{std::move(f), StepFunction(q, std::move(phi))};
}

namespace {

// Shared sampling estimator for ball and cylinder targets. The ball is run as
// the full-mask cylinder, which makes the reduction of the cylinder theorem
// to the ball theorem a structural identity of the reports.
CoveringReport estimate_cylinder_target(const LpVector& base, double r, const IndexMask& mask,
                                        const std::vector<double>& eta_grid,
                                        std::size_t samples_per_eta, std::uint64_t seed) {
  check_eta_grid(eta_grid);
  if (samples_per_eta < 1) throw std::invalid_argument("samples_per_eta must be >= 1");
  Rng rng(seed);
  const double q = conjugate_exponent(base.p());
  const double band = boundary_tol(r);
  const LpVector py = project_cylinder(base, r, mask);

  CoveringReport report;
  report.eta_grid = eta_grid;
  std::vector<double> raw;
  raw.reserve(eta_grid.size());

  for (double eta : eta_grid) {
    double best = std::numeric_limits<double>::infinity();

    if (auto w = witness_zero_cylinder(base, eta, r, mask)) {
      const auto cd = coderivative_cylinder(w->point, r, mask, w->dual);
      if (certifies_zero(cd)) {
        best = 0.0;
        report.witnesses.push_back({eta, w->point.coords(), w->dual.coords()});
      }
    }

    for (std::size_t k = 0; k < samples_per_eta; ++k) {
      const LpVector x = sample_in_vector_ball(base, eta, rng);
      const DualVector w = sample_unit_dual(base.dim(), q, rng);
      const LpVector y = project_cylinder(x, r, mask);
      if (norm(sub(y, py)) > eta) continue;  // outside B(ybar, eta): not in the domain
      const double nxm = norm(mask_part(x, mask));
      if (std::abs(nxm - r) <= band) continue;  // shell band: witness logic owns it
      const auto cd = coderivative_cylinder(x, r, mask, w);
      if (const auto* s = std::get_if<SingletonValue>(&cd)) {
        best = std::min(best, norm(s->value));
      }
    }
    raw.push_back(best);
  }

  // The infimum domain grows with eta, so records propagate upward.
  report.per_eta_inf = running_min(std::move(raw));
  report.alpha_hat = *std::max_element(report.per_eta_inf.begin(), report.per_eta_inf.end());
  return report;
}

CoveringReport estimate_scaled_identity(double lambda, const LpVector& base,
                                        const std::vector<double>& eta_grid,
                                        std::size_t samples_per_eta, std::uint64_t seed) {
  check_eta_grid(eta_grid);
  if (samples_per_eta < 1) throw std::invalid_argument("samples_per_eta must be >= 1");
  if (std::abs(lambda) > 1.0) {
    throw std::invalid_argument(
        "covering constant for lambda I is only stated for |lambda| <= 1");
  }
  Rng rng(seed);
  const double q = conjugate_exponent(base.p());
  const LpVector py = scale(lambda, base);

  CoveringReport report;
  report.eta_grid = eta_grid;
  std::vector<double> raw;
  raw.reserve(eta_grid.size());
  for (double eta : eta_grid) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < samples_per_eta; ++k) {
      const LpVector x = sample_in_vector_ball(base, eta, rng);
      const DualVector w = sample_unit_dual(base.dim(), q, rng);
      if (norm(sub(scale(lambda, x), py)) > eta) continue;
      best = std::min(best, norm(scale(lambda, w)));
    }
    if (!std::isfinite(best)) best = std::abs(lambda);  // every sample filtered out
    raw.push_back(best);
  }
  report.per_eta_inf = running_min(std::move(raw));
  report.alpha_hat = *std::max_element(report.per_eta_inf.begin(), report.per_eta_inf.end());
  return report;
}

}  // namespace

CoveringReport estimate_covering_constant(const VectorMap& target, const LpVector& base,
                                          const std::vector<double>& eta_grid,
                                          std::size_t samples_per_eta, std::uint64_t seed) {
  return std::visit(
      [&](const auto& t) -> CoveringReport {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, BallSet>) {
          return estimate_cylinder_target(base, t.r, IndexMask::full(base.dim()), eta_grid,
                                          samples_per_eta, seed);
        } else if constexpr (std::is_same_v<T, CylinderSet>) {
          return estimate_cylinder_target(base, t.r, t.mask, eta_grid, samples_per_eta, seed);
        } else {
          return estimate_scaled_identity(t.lambda, base, eta_grid, samples_per_eta, seed);
        }
      },
      target);
}

CoveringReport estimate_covering_constant_cone(const StepFunction& base, const MeasureGrid& grid,
                                               const std::vector<double>& eta_grid,
                                               std::size_t samples_per_eta, std::uint64_t seed) {
  check_eta_grid(eta_grid);
  if (samples_per_eta < 1) throw std::invalid_argument("samples_per_eta must be >= 1");
  if (base.cells() != grid.cells()) {
    throw std::invalid_argument("estimate_covering_constant_cone: cell count mismatch");
  }
  Rng rng(seed);
  const double q = conjugate_exponent(base.p());
  const StepFunction py = project_cone(base, grid);

  CoveringReport report;
  report.eta_grid = eta_grid;
  std::vector<double> raw;
  raw.reserve(eta_grid.size());

  for (double eta : eta_grid) {
    double best = std::numeric_limits<double>::infinity();

    if (auto w = witness_zero_cone(base, eta, grid)) {
      if (cone_zero_membership(w->point, w->dual, grid)) {
        best = 0.0;
        report.witnesses.push_back({eta, w->point.values(), w->dual.values()});
      }
    }

    for (std::size_t k = 0; k < samples_per_eta; ++k) {
      const StepFunction f = sample_in_function_ball(base, grid, eta, rng);
      if (norm(sub(project_cone(f, grid), py), grid) > eta) continue;
      bool strictly_positive = true;
      std::size_t nonpos = f.cells();
      for (std::size_t i = 0; i < f.cells(); ++i) {
        if (f[i] <= 0.0) {
          strictly_positive = false;
          nonpos = i;
          break;
        }
      }
      if (strictly_positive) {
        // The projection is the identity near f, so the coderivative is the
        // identity and every unit direction records 1.
        best = std::min(best, 1.0);
      } else {
        // A normalized indicator on the nonpositive cell passes the
        // membership characterization, so theta* is attained at f itself.
        std::vector<double> phi(f.cells(), 0.0);
        phi[nonpos] = std::pow(grid[nonpos], -1.0 / q);
        if (cone_zero_membership(f, StepFunction(q, phi), grid)) best = 0.0;
      }
    }
    if (!std::isfinite(best)) best = 1.0;  // no usable sample: interior regime
    raw.push_back(best);
  }
  report.per_eta_inf = running_min(std::move(raw));
  report.alpha_hat = *std::max_element(report.per_eta_inf.begin(), report.per_eta_inf.end());
  return report;
}

namespace {

template <typename Set, typename Point, typename Project, typename Distance, typename SampleDir>
CoveringPropertyReport covering_property_impl(const Set& set, const Point& x, double alpha,
                                              double rho, std::size_t target_samples,
                                              Project&& project, Distance&& preimage_dist,
                                              SampleDir&& shift_target, std::uint64_t seed) {
  if (!(rho > 0.0) || !(alpha > 0.0)) {
    throw std::invalid_argument("covering_property_check: alpha and rho must be positive");
  }
  Rng rng(seed);
  const Point y0 = project(x);
  CoveringPropertyReport report{0, -std::numeric_limits<double>::infinity(), 0};
  for (std::size_t k = 0; k < target_samples; ++k) {
    const auto y = shift_target(y0, alpha * rho, rng);
    if (!y) continue;  // target left the set
    ++report.samples_kept;
    const auto d = preimage_dist(x, *y);
    if (!d) continue;
    const double deficit = *d - rho;
    report.max_deficit = std::max(report.max_deficit, deficit);
    if (deficit > 1e-9) ++report.violations;
  }
  if (report.samples_kept == 0) report.max_deficit = 0.0;
  return report;
}

}  // namespace

CoveringPropertyReport covering_property_check(const BallSet& set, const LpVector& x,
                                               double alpha, double rho,
                                               std::size_t target_samples, std::uint64_t seed) {
  return covering_property_impl(
      set, x, alpha, rho, target_samples,
      [&](const LpVector& v) { return project_ball(v, set.r); },
      [&](const LpVector& from, const LpVector& to) { return preimage_distance(set, from, to); },
      [&](const LpVector& y0, double radius, Rng& rng) -> std::optional<LpVector> {
        const LpVector y = sample_in_vector_ball(y0, radius, rng);
        if (!member(set, y)) return std::nullopt;
        return y;
      },
      seed);
}

CoveringPropertyReport covering_property_check(const CylinderSet& set, const LpVector& x,
                                               double alpha, double rho,
                                               std::size_t target_samples, std::uint64_t seed) {
  return covering_property_impl(
      set, x, alpha, rho, target_samples,
      [&](const LpVector& v) { return project_cylinder(v, set.r, set.mask); },
      [&](const LpVector& from, const LpVector& to) { return preimage_distance(set, from, to); },
      [&](const LpVector& y0, double radius, Rng& rng) -> std::optional<LpVector> {
        const LpVector y = sample_in_vector_ball(y0, radius, rng);
        if (!member(set, y)) return std::nullopt;
        return y;
      },
      seed);
}

CoveringPropertyReport covering_property_check(const ConeSet& set, const StepFunction& f,
                                               double alpha, double rho,
                                               std::size_t target_samples, std::uint64_t seed) {
  return covering_property_impl(
      set, f, alpha, rho, target_samples,
      [&](const StepFunction& v) { return project_cone(v, set.grid); },
      [&](const StepFunction& from, const StepFunction& to) {
        return preimage_distance(set, from, to);
      },
      [&](const StepFunction& y0, double radius, Rng& rng) -> std::optional<StepFunction> {
        const StepFunction y = sample_in_function_ball(y0, set.grid, radius, rng);
        if (!member(set, y)) return std::nullopt;
        return y;
      },
      seed);
}

}  // namespace bcover
