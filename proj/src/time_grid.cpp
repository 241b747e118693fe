#include "evosg/time_grid.hpp"

#include <cmath>
#include <string>

namespace evosg {

const Tolerances& Tolerances::defaults() {
  static const Tolerances t{};
  return t;
}

TimeGrid::TimeGrid(double t_start, double dt, Index n_points)
    : t_start_(t_start), dt_(dt), n_(n_points) {
  if (!(dt > 0.0)) throw AlignmentError("TimeGrid: dt must be positive");
  if (n_points < 2) throw AlignmentError("TimeGrid: need at least 2 nodes");
  if (t_start < 0.0 && t_end() > 0.0 && !aligned(0.0)) {
    throw AlignmentError(
        "TimeGrid: a window spanning negative and positive times must place 0 "
        "on a node");
  }
}

TimeGrid TimeGrid::spanning(double t_neg, double t_pos, Index n_points) {
  if (!(t_neg <= 0.0 && 0.0 <= t_pos && t_neg < t_pos))
    throw AlignmentError("TimeGrid::spanning: need t_neg <= 0 <= t_pos");
  // dt = span/n keeps dt dyadic for power-of-two n and round spans, so that
  // delays like 0.25 stay grid-aligned. The last node lands in
  // (t_pos - dt, t_pos]; the start is snapped so that 0 is exactly a node.
  const double dt = (t_pos - t_neg) / static_cast<double>(n_points);
  const double k0 = std::ceil(-t_neg / dt - 1e-12);
  return TimeGrid(-k0 * dt, dt, n_points);
}

bool TimeGrid::aligned(double time, double tol) const {
  const double r = (time - t_start_) / dt_;
  return std::abs(r - std::round(r)) <= tol * std::max(1.0, std::abs(r));
}

Index TimeGrid::index_of(double time, double tol) const {
  const double r = (time - t_start_) / dt_;
  const double k = std::round(r);
  if (std::abs(r - k) > tol * std::max(1.0, std::abs(r)))
    throw AlignmentError("time " + std::to_string(time) +
                         " is not aligned with the grid (dt=" +
                         std::to_string(dt_) + ")");
  if (k < 0 || k >= static_cast<double>(n_))
    throw AlignmentError("time " + std::to_string(time) +
                         " lies outside the grid window");
  return static_cast<Index>(k);
}

}  // namespace evosg
