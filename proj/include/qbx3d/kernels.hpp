#pragma once

#include <optional>
#include <vector>

#include "qbx3d/vec3.hpp"

namespace qbx {

// Free-space Green's function of the 3D Laplace equation, (4 pi)^-1 / |x-y|.
double laplace_green(const Vec3& x, const Vec3& y);

// Field of a point dipole at y with moment m: m . grad_y G(x,y).
double laplace_dipole(const Vec3& x, const Vec3& y, const Vec3& m);

// Monopole/dipole point source collection. Weights are premultiplied
// (quadrature weight x density); dipole moments carry weight x density x normal.
struct SourceEnsemble {
  std::vector<Vec3> positions;
  std::vector<double> weights;
  std::vector<Vec3> dipole_moments;  // empty or same length as positions

  std::size_t size() const { return positions.size(); }
  bool has_dipoles() const { return !dipole_moments.empty(); }
  void validate() const;

  // sum_i |w_i|; the strength factor in acceleration error bounds.
  double total_abs_weight() const;
};

struct TargetSet {
  std::vector<Vec3> positions;
  // association[i] >= 0: QBX center id the target evaluates through; -1: conventional.
  std::vector<int> association;

  std::size_t size() const { return positions.size(); }
};

// Dense O(N*M) summation; the ground-truth oracle for everything else.
std::vector<double> direct_sum(const SourceEnsemble& sources, const TargetSet& targets);

}  // namespace qbx
