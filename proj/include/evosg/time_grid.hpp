#pragma once

#include "evosg/errors.hpp"
#include "evosg/types.hpp"

namespace evosg {

// Uniform time grid t_k = t_start + k*dt, k = 0..n-1. Whenever the window
// spans negative and positive times, 0 must sit on a node: the history/future
// split and the cut-off conventions rely on it.
class TimeGrid {
public:
  TimeGrid(double t_start, double dt, Index n_points);

  // Window [t_neg, ~t_pos] with n nodes and dt = (t_pos - t_neg)/n; requires
  // t_neg <= 0 <= t_pos and places 0 exactly on a node.
  static TimeGrid spanning(double t_neg, double t_pos, Index n_points);

  double t_start() const { return t_start_; }
  double dt() const { return dt_; }
  Index size() const { return n_; }
  double t(Index k) const { return t_start_ + static_cast<double>(k) * dt_; }
  double t_end() const { return t(n_ - 1); }
  double span() const { return static_cast<double>(n_) * dt_; }

  bool aligned(double time, double tol = Tolerances::defaults().alignment) const;
  // Node index of an aligned time; throws AlignmentError otherwise.
  Index index_of(double time, double tol = Tolerances::defaults().alignment) const;
  bool contains(double time) const { return time >= t_start() - 0.5 * dt_ && time <= t_end() + 0.5 * dt_; }

  bool operator==(const TimeGrid& o) const {
    return n_ == o.n_ && t_start_ == o.t_start_ && dt_ == o.dt_;
  }
  bool operator!=(const TimeGrid& o) const { return !(*this == o); }

private:
  double t_start_;
  double dt_;
  Index n_;
};

}  // namespace evosg
