#include "banach_cover/coderivative.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "banach_cover/sampling.hpp"

namespace bcover {

namespace {

// Detects w = c * J(x). Returns the coefficient candidate and whether the
// residual is below the identity tolerance.
struct Proportionality {
  bool proportional;
  double coefficient;
};

Proportionality proportional_to(const DualVector& w, const DualVector& jx, double jx_norm,
                                const LpVector& x) {
  // <J(x), x> = ||x||^2, so the coefficient of a true multiple is
  // <w, x> / ||x||^2.
  const double nx = norm(x);
  const double c = pairing(w, x) / (nx * nx);
  const double resid = norm(sub(w, scale(c, jx)));
  const bool ok = resid <= identity_tol(norm(w) + std::abs(c) * jx_norm);
  return {ok, c};
}

}  // namespace

CoderivativeValue coderivative_ball(const LpVector& x, double r, const DualVector& w) {
  if (!(r > 0.0)) throw std::invalid_argument("coderivative_ball: r must be positive");
  const double nx = norm(x);
  const double band = boundary_tol(r);
  if (std::abs(nx - r) <= band) {
    // Sphere point: the formula split is discontinuous here, so the band
    // routes to the partially characterized branch.
    if (w.is_zero()) return SingletonValue{DualVector::zero(w.q(), w.dim())};
    const DualVector jx = duality_map(x);
    const auto prop = proportional_to(w, jx, nx, x);
    if (!prop.proportional) return PredicateValue{ZeroMembership::Unknown};
    if (std::abs(prop.coefficient - 1.0) <= identity_tol(1.0)) return EmptyValue{};
    if (prop.coefficient > 0.0) return PredicateValue{ZeroMembership::No};
    return PredicateValue{ZeroMembership::Yes};
  }
  if (nx < r) return SingletonValue{w};
  const DualVector jx = duality_map(x);
  const double c = pairing(w, x) / (nx * nx);
  return SingletonValue{scale(r / nx, sub(w, scale(c, jx)))};
}

CoderivativeValue coderivative_cylinder(const LpVector& x, double r, const IndexMask& mask,
                                        const DualVector& w) {
  if (!(r > 0.0)) throw std::invalid_argument("coderivative_cylinder: r must be positive");
  if (x.dim() != w.dim()) throw std::invalid_argument("coderivative_cylinder: dimension mismatch");
  const LpVector xm = mask_part(x, mask);
  const double nxm = norm(xm);
  const double band = boundary_tol(r);

  if (std::abs(nxm - r) <= band) {
    if (w.is_zero()) return SingletonValue{DualVector::zero(w.q(), w.dim())};
    const DualVector jx = duality_map(x);
    if (norm(sub(w, jx)) <= identity_tol(norm(w) + norm(jx))) return EmptyValue{};
    // Full shell characterization: w*_Mbar = theta*, <w*_M, x_M> = -r||w*_M||,
    // and the reversed dual direction does not re-enter the cylinder.
    const auto [wm, wc] = mask_decompose(w, mask);
    const double nwm = norm(wm);
    if (norm(wc) > identity_tol(norm(w))) return PredicateValue{ZeroMembership::No};
    if (nwm == 0.0) return PredicateValue{ZeroMembership::No};  // w = wc was nonzero
    const double pair_m = pairing(wm, xm);
    if (std::abs(pair_m + r * nwm) > identity_tol(r * nwm + std::abs(pair_m))) {
      return PredicateValue{ZeroMembership::No};
    }
    const LpVector v = scale(-1.0, mask_part(duality_map_star(w), mask));
    if (v.is_zero()) return PredicateValue{ZeroMembership::Unknown};
    switch (classify_direction(x, v, CylinderSet{r, mask}, default_direction_samples())) {
      case DirectionClass::Up:
        return PredicateValue{ZeroMembership::Yes};
      case DirectionClass::Down:
        return PredicateValue{ZeroMembership::No};
      case DirectionClass::Indeterminate:
        return PredicateValue{ZeroMembership::Unknown};
    }
    return PredicateValue{ZeroMembership::Unknown};
  }

  if (nxm < r) return SingletonValue{w};

  const auto [wm, wc] = mask_decompose(w, mask);
  const DualVector jm = duality_map_on_subspace(x, mask);
  const double c = pairing(wm, xm) / (nxm * nxm);
  return SingletonValue{add(scale(r / nxm, sub(wm, scale(c, jm))), wc)};
}

bool cone_zero_membership(const StepFunction& f, const StepFunction& phi,
                          const MeasureGrid& grid) {
  if (f.cells() != grid.cells() || phi.cells() != grid.cells()) {
    throw std::invalid_argument("cone_zero_membership: cell count mismatch");
  }
  if (!conjugate_pair(f.p(), phi.p())) {
    throw std::invalid_argument("cone_zero_membership: exponents are not conjugate");
  }
  for (std::size_t i = 0; i < f.cells(); ++i) {
    if (phi[i] != 0.0 && f[i] > 0.0) return false;
    if (phi[i] < 0.0 && f[i] <= 0.0) return false;
  }
  return true;
}

CoderivativeValue cone_coderivative_at_origin(const StepFunction& psi) {
  if (!in_positive_cone(psi)) {
    throw std::invalid_argument("cone_coderivative_at_origin: psi must lie in the dual cone");
  }
  return IntervalValue{OrderedInterval(StepFunction::zero(psi.p(), psi.cells()), psi)};
}

CoderivativeValue scaled_identity_coderivative(double lambda, const DualVector& w) {
  return SingletonValue{scale(lambda, w)};
}

LpVector apply_map(const VectorMap& map, const LpVector& x) {
  return std::visit(
      [&](const auto& m) -> LpVector {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, BallSet>) {
          return project_ball(x, m.r);
        } else if constexpr (std::is_same_v<T, CylinderSet>) {
          return project_cylinder(x, m.r, m.mask);
        } else {
          return scale(m.lambda, x);
        }
      },
      map);
}

QuotientReport numeric_quotient_sup(const VectorMap& map, const LpVector& x,
                                    const DualVector& z, const DualVector& w,
                                    const std::vector<double>& radii,
                                    std::size_t directions_per_radius, std::uint64_t seed) {
  if (directions_per_radius < 1) {
    throw std::invalid_argument("numeric_quotient_sup: need at least one direction per radius");
  }
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0) || (i > 0 && !(radii[i] < radii[i - 1]))) {
      throw std::invalid_argument("numeric_quotient_sup: radii must be strictly decreasing > 0");
    }
  }
  Rng rng(seed);
  const LpVector px = apply_map(map, x);
  const std::size_t n = x.dim();

  std::vector<std::vector<double>> directions;
  directions.reserve(directions_per_radius + 2 * n);
  for (std::size_t k = 0; k < directions_per_radius; ++k) {
    directions.push_back(rng.unit_direction(n, x.p()));
  }
  // The worst quotient directions for these maps are often axis-aligned.
  for (std::size_t i = 0; i < n; ++i) {
    for (double s : {1.0, -1.0}) {
      std::vector<double> e(n, 0.0);
      e[i] = s;
      directions.push_back(std::move(e));
    }
  }

  double sup = -std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  for (double t : radii) {
    for (const auto& d : directions) {
      const LpVector u = add(x, scale(t, LpVector(x.p(), d)));
      const LpVector pu = apply_map(map, u);
      const double den = norm(sub(u, x)) + norm(sub(pu, px));
      ++used;
      if (den == 0.0) {
        sup = std::max(sup, 0.0);  // limsup is over u != x; defensive only
        continue;
      }
      const double num = pairing(z, sub(u, x)) - pairing(w, sub(pu, px));
      sup = std::max(sup, num / den);
    }
  }
  return {sup, used, radii};
}

}  // namespace bcover
