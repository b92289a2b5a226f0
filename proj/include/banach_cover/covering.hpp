#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "banach_cover/coderivative.hpp"
#include "banach_cover/lp_function.hpp"
#include "banach_cover/lp_space.hpp"
#include "banach_cover/projections.hpp"

namespace bcover {

struct WitnessRecord {
  double eta;
  std::vector<double> point;
  std::vector<double> dual;
};

/// Per-eta infima of coderivative norms plus the sup over the grid. Sampled
/// values are upper bounds on the true infima; exactness at desk scale comes
/// from the interior closed form (constant 1) and the zero witnesses.
struct CoveringReport {
  std::vector<double> eta_grid;
  std::vector<double> per_eta_inf;
  double alpha_hat;
  std::vector<WitnessRecord> witnesses;
};

/// Reference values: 1 strictly inside the ball/cylinder, 0 on and outside,
/// 0 for the cone, |lambda| for lambda I (stated only for |lambda| <= 1,
/// larger values throw).
double theoretical_covering_constant(const VectorMap& target, const LpVector& base);
double theoretical_covering_constant_cone();

/// Geometric grid from 1e-3*scale to 4*scale, 13 points. Callers pick scale
/// so the grid straddles the regime switch (the gap to the boundary).
std::vector<double> default_eta_grid(double scale);

CoveringReport estimate_covering_constant(const VectorMap& target, const LpVector& base,
                                          const std::vector<double>& eta_grid,
                                          std::size_t samples_per_eta, std::uint64_t seed);
CoveringReport estimate_covering_constant_cone(const StepFunction& base, const MeasureGrid& grid,
                                               const std::vector<double>& eta_grid,
                                               std::size_t samples_per_eta, std::uint64_t seed);

struct BallWitness {
  LpVector point;
  DualVector dual;
};

/// Point-and-direction pair certifying a zero of the coderivative norm inside
/// the eta-neighborhood, built from the constructive proofs: scaled base
/// points outside, sphere-touch points at the gap. Returns nullopt when the
/// neighborhood stays strictly inside (no zero exists, the infimum is 1).
std::optional<BallWitness> witness_zero_ball(const LpVector& base, double eta, double r);
std::optional<BallWitness> witness_zero_cylinder(const LpVector& base, double eta, double r,
                                                 const IndexMask& mask);

struct ConeWitness {
  StepFunction point;
  StepFunction dual;
};

/// Perturbs the base toward a sign-mixed function and pairs it with a
/// normalized indicator on a nonpositive cell. On a finite grid the cone has
/// nonempty interior, so unlike the measure-space setting the perturbation
/// must fit inside eta; nullopt when it cannot.
std::optional<ConeWitness> witness_zero_cone(const StepFunction& base, double eta,
                                             const MeasureGrid& grid);

struct CoveringPropertyReport {
  std::size_t violations;
  double max_deficit;
  std::size_t samples_kept;
};

/// Direct check of the covering inclusion: targets sampled in the
/// alpha*rho-ball around P(x) must have a preimage point within rho of x.
CoveringPropertyReport covering_property_check(const BallSet& set, const LpVector& x,
                                               double alpha, double rho,
                                               std::size_t target_samples, std::uint64_t seed);
CoveringPropertyReport covering_property_check(const CylinderSet& set, const LpVector& x,
                                               double alpha, double rho,
                                               std::size_t target_samples, std::uint64_t seed);
CoveringPropertyReport covering_property_check(const ConeSet& set, const StepFunction& f,
                                               double alpha, double rho,
                                               std::size_t target_samples, std::uint64_t seed);

}  // namespace bcover
