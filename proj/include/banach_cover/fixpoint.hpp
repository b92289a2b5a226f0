#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace bcover {

/// Points live in a small Euclidean R^d; the worked problems are 1-d and 2-d.
using RealVec = std::vector<double>;

double euclidean_norm(const RealVec& v);
double euclidean_distance(const RealVec& a, const RealVec& b);

struct RealBox {
  RealVec lo;
  RealVec hi;
  bool contains(const RealVec& x) const;
};

struct RealInterval {
  double lo;
  double hi;
};

enum class EventMeasure { UniformUnit, StandardNormal };

/// Probability of the event interval under the problem's measure.
/// UniformUnit is Lebesgue on [0,1]; StandardNormal uses the complementary
/// error function (absolute error well below 1e-12).
double event_probability(const RealInterval& w, EventMeasure measure);

/// Single-valued parameterized map x -> g(x, s) with the data the existence
/// theorem consumes. lipschitz_domain is the modulus-certificate region; the
/// solver is allowed to roam the (larger) solve_domain, since the fixed point
/// has no a-priori reason to stay where the modulus was certified.
struct SingleValuedProblem {
  std::function<RealVec(const RealVec&, double)> map;
  RealVec base_point;
  RealBox lipschitz_domain;
  RealBox solve_domain;
  RealInterval event_domain;
  double declared_modulus;  // l in (0,1)
  EventMeasure measure;
};

/// Vertical segment {x} x [y_lo, y_hi] in the plane.
struct VerticalSegment {
  double x;
  double y_lo;
  double y_hi;
};

struct PlanePoint {
  double x;
  double y;
};

/// Segment-valued map G(x, s) = base(x) + shift(s), base mapping each plane
/// point to a vertical segment.
struct SegmentMapProblem {
  std::function<VerticalSegment(const PlanePoint&)> base;
  std::function<PlanePoint(double)> shift;
  PlanePoint base_point;
  double declared_modulus;
  EventMeasure measure;
};

VerticalSegment evaluate_segment(const SegmentMapProblem& problem, const PlanePoint& x, double s);
double segment_distance(const PlanePoint& p, const VerticalSegment& seg);

/// sup over segA of the distance to segB; attained at an endpoint of segA for
/// vertical segments, so it is evaluated in closed form.
double hausdorff_excess(const VerticalSegment& a, const VerticalSegment& b);

enum class SolveStatus { Converged, NoConvergence, LeftDomain, BadLambda };

struct FixpointRecord {
  double s = 0.0;
  RealVec sigma;
  std::size_t iterations = 0;
  double residual = 0.0;
  double observed_ratio = 0.0;
  double bound_rhs = 0.0;
  bool bound_ok = false;
  bool bound_checked = false;
  SolveStatus status = SolveStatus::Converged;
};

const char* to_string(SolveStatus status);

/// Picard iteration x <- g(x, s) / lambda. Requires lambda in (l, 1]; the
/// contraction ratio l/lambda then makes the iteration geometric. The
/// residual ||lambda sigma - g(sigma, s)|| is re-evaluated independently of
/// the loop.
FixpointRecord picard_solve(const SingleValuedProblem& problem, double s, double lambda,
                            const RealVec& x0, double tol, std::size_t max_iter);

/// Sampled lower bound on the uniform Lipschitz modulus over the certificate
/// region and the event domain.
double estimate_lipschitz(const SingleValuedProblem& problem, std::size_t pair_samples,
                          std::uint64_t seed);

/// Segment-map analogue: max sampled hausdorff_excess / argument distance.
double estimate_lipschitz(const SegmentMapProblem& problem, const RealBox& region,
                          const RealInterval& events, std::size_t pair_samples,
                          std::uint64_t seed);

/// Fills bound_rhs = dist(lambda xbar, G(xbar, s)) / (alpha - l) and bound_ok.
/// alpha must lie strictly between the modulus and lambda.
FixpointRecord residual_bound_check(FixpointRecord record, const SingleValuedProblem& problem,
                                    double s, double lambda, double alpha);
FixpointRecord residual_bound_check(FixpointRecord record, const SegmentMapProblem& problem,
                                    double s, double lambda, double alpha);

bool segment_contains(const SegmentMapProblem& problem, const PlanePoint& pt, double s,
                      double tol);

/// Nearest-point selection iteration for segment maps: the first coordinate
/// is forced to the segment abscissa, the second clamped into its range.
FixpointRecord segment_selection_solve(const SegmentMapProblem& problem, double s,
                                       const PlanePoint& x0, double tol, std::size_t max_iter);

/// Built-in worked problems. Closed-form reference branches are exposed by
/// name so report code never re-derives them.
struct BuiltinProblem {
  std::string id;
  std::variant<SingleValuedProblem, SegmentMapProblem> problem;
  // Scalar problems: stable branch sigma(s) and the second branch zeta(s).
  std::function<double(double)> sigma;
  std::function<double(double)> zeta;
  // Restricted-neighborhood data for the third scalar branch: the largest
  // admissible gamma for W = [tbar, 1].
  std::function<double(double)> gamma_threshold;
  // Segment problem: the fixed-point family and the origin distance.
  std::function<PlanePoint(double, double)> sigma_family;  // (lambda, s)
  std::function<double(double)> origin_distance;
};

BuiltinProblem builtin_example(const std::string& id);  // "6.7" | "6.8" | "6.9"

}  // namespace bcover
