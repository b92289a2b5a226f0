#include "banach_cover/fixpoint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "banach_cover/sampling.hpp"

namespace bcover {

double euclidean_norm(const RealVec& v) {
  double acc = 0.0;
  for (double c : v) acc += c * c;
  return std::sqrt(acc);
}

double euclidean_distance(const RealVec& a, const RealVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("distance: dimension mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(acc);
}

bool RealBox::contains(const RealVec& x) const {
  if (x.size() != lo.size() || x.size() != hi.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < lo[i] || x[i] > hi[i]) return false;
  }
  return true;
}

double event_probability(const RealInterval& w, EventMeasure measure) {
  if (!(w.lo <= w.hi)) throw std::invalid_argument("event interval requires lo <= hi");
  switch (measure) {
    case EventMeasure::UniformUnit: {
      const double lo = std::max(w.lo, 0.0);
      const double hi = std::min(w.hi, 1.0);
      return std::max(hi - lo, 0.0);
    }
    case EventMeasure::StandardNormal: {
      const auto cdf = [](double t) {
        if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
        return 0.5 * std::erfc(-t / std::sqrt(2.0));
      };
      return cdf(w.hi) - cdf(w.lo);
    }
  }
  return 0.0;
}

VerticalSegment evaluate_segment(const SegmentMapProblem& problem, const PlanePoint& x,
                                 double s) {
  VerticalSegment seg = problem.base(x);
  const PlanePoint shift = problem.shift(s);
  return {seg.x + shift.x, seg.y_lo + shift.y, seg.y_hi + shift.y};
}

double segment_distance(const PlanePoint& p, const VerticalSegment& seg) {
  const double dy = p.y < seg.y_lo ? seg.y_lo - p.y : (p.y > seg.y_hi ? p.y - seg.y_hi : 0.0);
  return std::hypot(p.x - seg.x, dy);
}

double hausdorff_excess(const VerticalSegment& a, const VerticalSegment& b) {
  // Distance to a segment is convex along a's range, so the sup sits at an
  // endpoint of a.
  return std::max(segment_distance({a.x, a.y_lo}, b), segment_distance({a.x, a.y_hi}, b));
}

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Converged:
      return "converged";
    case SolveStatus::NoConvergence:
      return "no-convergence";
    case SolveStatus::LeftDomain:
      return "left-domain";
    case SolveStatus::BadLambda:
      return "bad-lambda";
  }
  return "unknown";
}

FixpointRecord picard_solve(const SingleValuedProblem& problem, double s, double lambda,
                            const RealVec& x0, double tol, std::size_t max_iter) {
  FixpointRecord rec;
  rec.s = s;
  rec.sigma = x0;
  if (!(lambda > problem.declared_modulus) || !(lambda <= 1.0)) {
    rec.status = SolveStatus::BadLambda;
    return rec;
  }
  if (!problem.solve_domain.contains(x0)) {
    rec.status = SolveStatus::LeftDomain;
    return rec;
  }

  RealVec x = x0;
  double prev_step = std::numeric_limits<double>::infinity();
  for (std::size_t it = 1; it <= max_iter; ++it) {
    RealVec gx = problem.map(x, s);
    for (auto& c : gx) c /= lambda;
    const double step = euclidean_distance(gx, x);
    rec.iterations = it;
    if (prev_step > 0.0 && std::isfinite(prev_step)) rec.observed_ratio = step / prev_step;
    prev_step = step;
    x = std::move(gx);
    if (!problem.solve_domain.contains(x)) {
      rec.sigma = x;
      rec.status = SolveStatus::LeftDomain;
      return rec;
    }
    if (step <= tol) {
      rec.sigma = x;
      // Residual of the scaled inclusion, independent of the loop.
      RealVec lx = x;
      for (auto& c : lx) c *= lambda;
      rec.residual = euclidean_distance(lx, problem.map(x, s));
      rec.status = SolveStatus::Converged;
      return rec;
    }
  }
  rec.sigma = x;
  rec.status = SolveStatus::NoConvergence;
  return rec;
}

double estimate_lipschitz(const SingleValuedProblem& problem, std::size_t pair_samples,
                          std::uint64_t seed) {
  if (pair_samples < 1) throw std::invalid_argument("estimate_lipschitz: need samples >= 1");
  Rng rng(seed);
  const auto& box = problem.lipschitz_domain;
  const std::size_t d = box.lo.size();
  const auto draw = [&]() {
    RealVec v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = rng.uniform(box.lo[i], box.hi[i]);
    return v;
  };
  double best = 0.0;
  for (std::size_t k = 0; k < pair_samples; ++k) {
    const RealVec x = draw();
    const RealVec u = draw();
    const double dist = euclidean_distance(x, u);
    if (dist == 0.0) continue;
    const double s = rng.uniform(problem.event_domain.lo, problem.event_domain.hi);
    best = std::max(best, euclidean_distance(problem.map(x, s), problem.map(u, s)) / dist);
  }
  return best;
}

double estimate_lipschitz(const SegmentMapProblem& problem, const RealBox& region,
                          const RealInterval& events, std::size_t pair_samples,
                          std::uint64_t seed) {
  if (pair_samples < 1) throw std::invalid_argument("estimate_lipschitz: need samples >= 1");
  Rng rng(seed);
  double best = 0.0;
  for (std::size_t k = 0; k < pair_samples; ++k) {
    const PlanePoint a{rng.uniform(region.lo[0], region.hi[0]),
                       rng.uniform(region.lo[1], region.hi[1])};
    const PlanePoint b{rng.uniform(region.lo[0], region.hi[0]),
                       rng.uniform(region.lo[1], region.hi[1])};
    const double dist = std::hypot(a.x - b.x, a.y - b.y);
    if (dist == 0.0) continue;
    const double s = rng.uniform(events.lo, events.hi);
    const double exc = hausdorff_excess(evaluate_segment(problem, a, s),
                                        evaluate_segment(problem, b, s));
    best = std::max(best, exc / dist);
  }
  return best;
}

namespace {

void check_alpha(double alpha, double modulus, double lambda) {
  if (!(alpha > modulus) || !(alpha < lambda)) {
    throw std::invalid_argument("residual_bound_check: alpha must lie in (modulus, lambda)");
  }
}

}  // namespace

FixpointRecord residual_bound_check(FixpointRecord record, const SingleValuedProblem& problem,
                                    double s, double lambda, double alpha) {
  check_alpha(alpha, problem.declared_modulus, lambda);
  RealVec lx = problem.base_point;
  for (auto& c : lx) c *= lambda;
  const double dist = euclidean_distance(lx, problem.map(problem.base_point, s));
  record.bound_rhs = dist / (alpha - problem.declared_modulus);
  record.bound_ok =
      euclidean_distance(record.sigma, problem.base_point) <= record.bound_rhs + 1e-9;
  record.bound_checked = true;
  return record;
}

FixpointRecord residual_bound_check(FixpointRecord record, const SegmentMapProblem& problem,
                                    double s, double lambda, double alpha) {
  check_alpha(alpha, problem.declared_modulus, lambda);
  const PlanePoint scaled{lambda * problem.base_point.x, lambda * problem.base_point.y};
  const double dist = segment_distance(scaled, evaluate_segment(problem, problem.base_point, s));
  record.bound_rhs = dist / (alpha - problem.declared_modulus);
  const double dev = std::hypot(record.sigma.at(0) - problem.base_point.x,
                                record.sigma.at(1) - problem.base_point.y);
  record.bound_ok = dev <= record.bound_rhs + 1e-9;
  record.bound_checked = true;
  return record;
}

bool segment_contains(const SegmentMapProblem& problem, const PlanePoint& pt, double s,
                      double tol) {
  const VerticalSegment seg = evaluate_segment(problem, pt, s);
  return std::abs(pt.x - seg.x) <= tol && pt.y >= seg.y_lo - tol && pt.y <= seg.y_hi + tol;
}

FixpointRecord segment_selection_solve(const SegmentMapProblem& problem, double s,
                                       const PlanePoint& x0, double tol, std::size_t max_iter) {
  FixpointRecord rec;
  rec.s = s;
  PlanePoint x = x0;
  double prev_step = std::numeric_limits<double>::infinity();
  for (std::size_t it = 1; it <= max_iter; ++it) {
    const VerticalSegment seg = evaluate_segment(problem, x, s);
    const PlanePoint next{seg.x, std::clamp(x.y, seg.y_lo, seg.y_hi)};
    const double step = std::hypot(next.x - x.x, next.y - x.y);
    rec.iterations = it;
    if (prev_step > 0.0 && std::isfinite(prev_step)) rec.observed_ratio = step / prev_step;
    prev_step = step;
    x = next;
    if (step <= tol) {
      rec.sigma = {x.x, x.y};
      rec.residual = segment_distance(x, evaluate_segment(problem, x, s));
      rec.status = SolveStatus::Converged;
      return rec;
    }
  }
  rec.sigma = {x.x, x.y};
  rec.residual = segment_distance(x, evaluate_segment(problem, x, s));
  rec.status = SolveStatus::NoConvergence;
  return rec;
}

BuiltinProblem builtin_example(const std::string& id) {
  BuiltinProblem b;
  b.id = id;
  if (id == "6.7") {
    SingleValuedProblem p;
    p.map = [](const RealVec& x, double s) { return RealVec{0.25 * x[0] * x[0] + s}; };
    p.base_point = {0.0};
    p.lipschitz_domain = {{-1.0}, {1.0}};
    p.solve_domain = {{-3.0}, {3.0}};
    p.event_domain = {0.0, 1.0};
    p.declared_modulus = 0.5;
    p.measure = EventMeasure::UniformUnit;
    b.problem = std::move(p);
    b.sigma = [](double s) { return 2.0 * (1.0 - std::sqrt(1.0 - s)); };
    b.zeta = [](double s) { return 2.0 * (1.0 + std::sqrt(1.0 - s)); };
    b.gamma_threshold = [](double tbar) {
      return 0.5 + tbar / (2.0 * (1.0 + std::sqrt(1.0 - tbar)));
    };
    return b;
  }
  if (id == "6.8") {
    SingleValuedProblem p;
    p.map = [](const RealVec& x, double s) { return RealVec{0.25 * x[0] * x[0] * s}; };
    p.base_point = {0.0};
    p.lipschitz_domain = {{-1.0}, {1.0}};
    p.solve_domain = {{-3.0}, {3.0}};
    p.event_domain = {0.0, 1.0};
    p.declared_modulus = 0.5;
    p.measure = EventMeasure::UniformUnit;
    b.problem = std::move(p);
    b.sigma = [](double) { return 0.0; };
    b.zeta = [](double s) {
      if (s <= 0.0) throw std::domain_error("second branch of 6.8 needs s > 0");
      return 4.0 / s;
    };
    return b;
  }
  if (id == "6.9") {
    SegmentMapProblem p;
    p.base = [](const PlanePoint& x) {
      return VerticalSegment{0.25 * x.x, 0.0, 0.25 * std::sqrt(1.0 + x.y * x.y)};
    };
    p.shift = [](double s) { return PlanePoint{s * s, std::abs(s)}; };
    p.base_point = {0.0, 0.0};
    p.declared_modulus = 0.5;
    p.measure = EventMeasure::StandardNormal;
    b.problem = std::move(p);
    b.sigma_family = [](double lambda, double s) {
      return PlanePoint{4.0 / 3.0 * s * s, lambda * std::abs(s)};
    };
    b.origin_distance = [](double s) { return std::abs(s) * std::sqrt(s * s + 1.0); };
    return b;
  }
  throw std::invalid_argument("unknown built-in example id: " + id);
}

}  // namespace bcover
