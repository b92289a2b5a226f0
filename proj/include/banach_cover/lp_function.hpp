#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "banach_cover/common.hpp"

namespace bcover {

/// Finite weighted measure grid: n cells with strictly positive measures.
/// n >= 2 so that the cone and its negative never cover a whole sign pattern.
class MeasureGrid {
 public:
  explicit MeasureGrid(std::vector<double> weights);

  std::size_t cells() const { return weights_.size(); }
  const std::vector<double>& weights() const { return weights_; }
  double operator[](std::size_t i) const { return weights_[i]; }

 private:
  std::vector<double> weights_;
};

/// Step function on a measure grid: one value per cell, tagged with the
/// exponent of the L_p space it lives in (primal p or dual q).
class StepFunction {
 public:
  StepFunction(double p, std::vector<double> values);

  static StepFunction zero(double p, std::size_t n);

  double p() const { return p_; }
  std::size_t cells() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  bool is_zero() const;

 private:
  double p_;
  std::vector<double> values_;
};

/// Ordered interval [lower, upper] in the dual cone order: lower <= upper on
/// every cell (the discrete mu-a.e. order, since every cell has mu > 0).
class OrderedInterval {
 public:
  OrderedInterval(StepFunction lower, StepFunction upper);

  const StepFunction& lower() const { return lower_; }
  const StepFunction& upper() const { return upper_; }
  bool contains(const StepFunction& phi) const;

 private:
  StepFunction lower_;
  StepFunction upper_;
};

double norm(const StepFunction& f, const MeasureGrid& grid);

/// Weighted pairing <phi, f> = sum_i phi_i f_i mu_i. phi must carry the
/// conjugate exponent of f.
double pairing(const StepFunction& phi, const StepFunction& f, const MeasureGrid& grid);

/// Cellwise (Jf)_i = |f_i|^(p-1) sign(f_i) / ||f||_p^(p-2), J(theta) = theta*.
StepFunction duality_map(const StepFunction& f, const MeasureGrid& grid);

/// (f+, f-): f+ keeps strictly positive cells, f- strictly negative ones,
/// cells at exactly 0 belong to neither support; f+ + f- == f bitwise.
std::pair<StepFunction, StepFunction> positive_negative_parts(const StepFunction& f);

/// Exact sign test: true iff every cell value >= 0. No tolerance by design;
/// callers wanting fuzz apply it before the call.
bool in_positive_cone(const StepFunction& f);

StepFunction add(const StepFunction& a, const StepFunction& b);
StepFunction sub(const StepFunction& a, const StepFunction& b);
StepFunction scale(double c, const StepFunction& a);

}  // namespace bcover
