#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "banach_cover/lp_function.hpp"
#include "banach_cover/lp_space.hpp"
#include "banach_cover/projections.hpp"

namespace bcover {

struct SingletonValue {
  DualVector value;
};

struct EmptyValue {};

struct IntervalValue {
  OrderedInterval interval;
};

enum class ZeroMembership { Yes, No, Unknown };

/// Partial answer at sphere points: only what the closed forms state about
/// membership of theta*; the full coderivative set is never fabricated there.
struct PredicateValue {
  ZeroMembership zero_member;
};

using CoderivativeValue =
    std::variant<SingletonValue, EmptyValue, IntervalValue, PredicateValue>;

/// Coderivative of the ball projection at x applied to w*.
///   interior:  {w*}
///   exterior:  {(r/||x||)(w* - (<w*,x>/||x||^2) J(x))}
///   sphere:    theta* -> {theta*}; J(x) -> empty; multiples of J(x) decide
///              theta*-membership by the sign of the coefficient; anything
///              else stays Unknown.
/// Points within the boundary band route to the sphere branch.
CoderivativeValue coderivative_ball(const LpVector& x, double r, const DualVector& w);

/// Cylinder analogue: masked part transforms, complement passes through. At
/// shell points the full membership characterization is evaluated, with the
/// directional clause delegated to classify_direction.
CoderivativeValue coderivative_cylinder(const LpVector& x, double r, const IndexMask& mask,
                                        const DualVector& w);

/// Membership test theta* in D*P_cone(f)(phi): true iff no cell has
/// (phi != 0 and f > 0) or (phi < 0 and f <= 0). Exact sign comparisons.
bool cone_zero_membership(const StepFunction& f, const StepFunction& phi,
                          const MeasureGrid& grid);

/// At the origin the cone coderivative of psi in K_q is the ordered interval
/// [theta*, psi]. Throws when psi has a negative cell.
CoderivativeValue cone_coderivative_at_origin(const StepFunction& psi);

/// lambda I has coderivative {lambda w*} at every base point.
CoderivativeValue scaled_identity_coderivative(double lambda, const DualVector& w);

struct ScaledIdentityMap {
  double lambda;
};

using VectorMap = std::variant<BallSet, CylinderSet, ScaledIdentityMap>;

LpVector apply_map(const VectorMap& map, const LpVector& x);

struct QuotientReport {
  double sup_quotient;
  std::size_t samples_used;
  std::vector<double> radii;
};

/// Samples the defining difference quotient of the coderivative at shrinking
/// radii. A large positive sup falsifies the claim z* in D*P(x)(w*); a small
/// sup is consistent with it but proves nothing. Directions are Gaussian
/// unit vectors plus the deterministic axes +-e_i.
QuotientReport numeric_quotient_sup(const VectorMap& map, const LpVector& x,
                                    const DualVector& z, const DualVector& w,
                                    const std::vector<double>& radii,
                                    std::size_t directions_per_radius, std::uint64_t seed);

}  // namespace bcover
