#include "qbx3d/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qbx {

namespace {
constexpr double kFourPiInv = 0.07957747154594766788;
}

double laplace_green(const Vec3& x, const Vec3& y) {
  const double r = norm2(x - y);
  if (r == 0.0) throw std::domain_error("laplace_green: coincident points");
  return kFourPiInv / r;
}

double laplace_dipole(const Vec3& x, const Vec3& y, const Vec3& m) {
  const Vec3 d = x - y;
  const double r2 = dot(d, d);
  if (r2 == 0.0) throw std::domain_error("laplace_dipole: coincident points");
  const double r = std::sqrt(r2);
  return kFourPiInv * dot(m, d) / (r2 * r);
}

void SourceEnsemble::validate() const {
  if (weights.size() != positions.size())
    throw std::invalid_argument("SourceEnsemble: weights/positions size mismatch");
  if (!dipole_moments.empty() && dipole_moments.size() != positions.size())
    throw std::invalid_argument("SourceEnsemble: dipole_moments size mismatch");
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (!std::isfinite(positions[i].x) || !std::isfinite(positions[i].y) ||
        !std::isfinite(positions[i].z) || !std::isfinite(weights[i]))
      throw std::invalid_argument("SourceEnsemble: non-finite entry at index " +
                                  std::to_string(i));
  }
}

double SourceEnsemble::total_abs_weight() const {
  double s = 0;
  for (double w : weights) s += std::abs(w);
  return s;
}

std::vector<double> direct_sum(const SourceEnsemble& sources, const TargetSet& targets) {
  sources.validate();
  std::vector<double> pot(targets.size(), 0.0);
  const bool dip = sources.has_dipoles();
  long long bad_t = -1, bad_s = -1;
#pragma omp parallel for schedule(static)
  for (long long ti = 0; ti < (long long)targets.size(); ++ti) {
    const Vec3 x = targets.positions[ti];
    double acc = 0;
    for (std::size_t j = 0; j < sources.size(); ++j) {
      const Vec3 d = x - sources.positions[j];
      const double r2 = dot(d, d);
      if (r2 == 0.0) {
#pragma omp critical
        { bad_t = ti; bad_s = (long long)j; }
        continue;
      }
      const double rinv = 1.0 / std::sqrt(r2);
      acc += sources.weights[j] * rinv;
      if (dip) acc += dot(sources.dipole_moments[j], d) * rinv * rinv * rinv;
    }
    pot[ti] = 0.07957747154594766788 * acc;
  }
  if (bad_t >= 0)
    throw std::domain_error("direct_sum: target " + std::to_string(bad_t) +
                            " coincides with source " + std::to_string(bad_s));
  return pot;
}

}  // namespace qbx
