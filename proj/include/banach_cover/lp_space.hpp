#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "banach_cover/common.hpp"

namespace bcover {

/// Element of l_p supported on {1..n}: a finite coordinate vector tagged with
/// its exponent. Finitely supported vectors lie in l_p exactly, so no
/// truncation error is introduced anywhere downstream.
class LpVector {
 public:
  LpVector(double p, std::vector<double> coords);

  static LpVector zero(double p, std::size_t n);

  double p() const { return p_; }
  std::size_t dim() const { return coords_.size(); }
  const std::vector<double>& coords() const { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }  // 0-based
  bool is_zero() const;

 private:
  double p_;
  std::vector<double> coords_;
};

/// Element of the dual sequence space l_q, 1/p + 1/q = 1.
class DualVector {
 public:
  DualVector(double q, std::vector<double> coords);

  static DualVector zero(double q, std::size_t n);

  double q() const { return q_; }
  std::size_t dim() const { return coords_.size(); }
  const std::vector<double>& coords() const { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const;

 private:
  double q_;
  std::vector<double> coords_;
};

/// Nonempty subset of {1..n}, stored sorted, 1-based.
class IndexMask {
 public:
  explicit IndexMask(std::vector<std::size_t> members);

  static IndexMask full(std::size_t n);

  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t max_index() const { return members_.back(); }
  bool contains(std::size_t i) const;  // 1-based
  bool is_full(std::size_t n) const;

 private:
  std::vector<std::size_t> members_;
};

double norm(const LpVector& x);
double norm(const DualVector& w);

/// Canonical pairing <w, x> = sum_i w_i x_i. Throws on dimension or
/// conjugate-exponent mismatch.
double pairing(const DualVector& w, const LpVector& x);

/// Normalized duality mapping, coordinate-wise
///   J(x)_i = |x_i|^(p-1) sign(x_i) / ||x||_p^(p-2),
/// with J(theta) = theta* by convention (the unique value consistent with
/// ||J(x)||_* = ||x||).
DualVector duality_map(const LpVector& x);

/// Inverse duality mapping l_q -> l_p, same formula with q in place of p.
LpVector duality_map_star(const DualVector& w);

/// Splits x into (x_M, x_Mbar) with disjoint supports and exact recomposition.
std::pair<LpVector, LpVector> mask_decompose(const LpVector& x, const IndexMask& mask);
std::pair<DualVector, DualVector> mask_decompose(const DualVector& w, const IndexMask& mask);

LpVector mask_part(const LpVector& x, const IndexMask& mask);
DualVector mask_part(const DualVector& w, const IndexMask& mask);

/// Duality mapping of the subspace l_p^M applied to x_M, i.e. J(x_M) with the
/// norm taken inside the subspace. Satisfies
///   J(x)_M = (||x_M||^(p-2) / ||x||^(p-2)) * J_M(x_M).
DualVector duality_map_on_subspace(const LpVector& x, const IndexMask& mask);

// Coordinate arithmetic (exponent tags must match).
LpVector add(const LpVector& a, const LpVector& b);
LpVector sub(const LpVector& a, const LpVector& b);
LpVector scale(double c, const LpVector& a);
DualVector add(const DualVector& a, const DualVector& b);
DualVector sub(const DualVector& a, const DualVector& b);
DualVector scale(double c, const DualVector& a);

}  // namespace bcover
