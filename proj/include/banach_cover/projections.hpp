#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "banach_cover/lp_function.hpp"
#include "banach_cover/lp_space.hpp"

namespace bcover {

struct BallSet {
  double r;
};

struct CylinderSet {
  double r;
  IndexMask mask;
};

struct ConeSet {
  MeasureGrid grid;
};

using ConvexSet = std::variant<BallSet, CylinderSet, ConeSet>;

/// P(x) = x inside the ball, (r/||x||) x outside. Eq of the radial form.
LpVector project_ball(const LpVector& x, double r);

/// Radial scaling on the masked coordinates, complement untouched.
LpVector project_cylinder(const LpVector& x, double r, const IndexMask& mask);

/// Cone projection is the positive part f+.
StepFunction project_cone(const StepFunction& f, const MeasureGrid& grid);

bool member(const BallSet& set, const LpVector& x);
bool member(const CylinderSet& set, const LpVector& x);
bool member(const ConeSet& set, const StepFunction& f);

struct VariationalReport {
  double min_slack;
  std::size_t samples;
};

/// Samples z in the set and returns min <J(x - Px), Px - z>. Projection
/// consistency requires the minimum to stay above -1e-10; this is a
/// falsifier, not a proof.
VariationalReport variational_check(const BallSet& set, const LpVector& x,
                                    std::size_t sample_count, std::uint64_t seed);
VariationalReport variational_check(const CylinderSet& set, const LpVector& x,
                                    std::size_t sample_count, std::uint64_t seed);
VariationalReport variational_check(const ConeSet& set, const StepFunction& f,
                                    std::size_t sample_count, std::uint64_t seed);

/// min { ||u - x|| : P(u) = y_target }, computed from the analytic preimages:
/// interior targets have singleton preimage, boundary targets a scalar ray,
/// cone targets a cellwise box. Returns nullopt when y_target is not in the set.
std::optional<double> preimage_distance(const BallSet& set, const LpVector& x,
                                        const LpVector& y_target);
std::optional<double> preimage_distance(const CylinderSet& set, const LpVector& x,
                                        const LpVector& y_target);
std::optional<double> preimage_distance(const ConeSet& set, const StepFunction& f,
                                        const StepFunction& y_target);

enum class DirectionClass { Up, Down, Indeterminate };

/// Heuristic classifier for the boundary direction sets: evaluates the
/// boundary functional at x + t v over a decreasing t sample. Up means every
/// sample left the set strictly, Down means none did. Never claims a proof.
DirectionClass classify_direction(const LpVector& x, const LpVector& v, const BallSet& set,
                                  const std::vector<double>& t_samples);
DirectionClass classify_direction(const LpVector& x, const LpVector& v, const CylinderSet& set,
                                  const std::vector<double>& t_samples);

/// Default t sample for the classifier.
const std::vector<double>& default_direction_samples();

class Rng;

// Seeded full-support samplers of set members, shared by the variational and
// covering-property checks.
LpVector sample_member(const BallSet& set, double p, std::size_t n, Rng& rng);
LpVector sample_member(const CylinderSet& set, double p, std::size_t n, Rng& rng);
StepFunction sample_member(const ConeSet& set, double p, Rng& rng);

}  // namespace bcover
