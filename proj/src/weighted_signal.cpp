#include "evosg/weighted_signal.hpp"

#include <cmath>
#include <vector>

namespace evosg {

void WeightedSignal::require_compatible(const WeightedSignal& o) const {
  if (grid_ != o.grid_)
    throw CompatibilityError("signals live on different time grids");
  if (rho_ != o.rho_)
    throw CompatibilityError("signals carry different weights rho");
  if (dim() != o.dim())
    throw CompatibilityError("signals have different state dimensions");
}

WeightedSignal& WeightedSignal::operator+=(const WeightedSignal& o) {
  require_compatible(o);
  values_ += o.values_;
  return *this;
}

WeightedSignal& WeightedSignal::operator-=(const WeightedSignal& o) {
  require_compatible(o);
  values_ -= o.values_;
  return *this;
}

WeightedSignal& WeightedSignal::operator*=(Complex c) {
  values_ *= c;
  return *this;
}

Complex weighted_inner(const WeightedSignal& f, const WeightedSignal& g) {
  f.require_compatible(g);
  const TimeGrid& gr = f.grid();
  Complex acc(0.0, 0.0);
  for (Index k = 0; k < gr.size(); ++k) {
    const double w = std::exp(-2.0 * f.rho() * gr.t(k));
    acc += w * f.values().col(k).dot(g.values().col(k));
  }
  return acc * gr.dt();
}

double weighted_norm(const WeightedSignal& f) {
  const TimeGrid& gr = f.grid();
  double acc = 0.0;
  for (Index k = 0; k < gr.size(); ++k) {
    const double w = std::exp(-2.0 * f.rho() * gr.t(k));
    acc += w * f.values().col(k).squaredNorm();
  }
  return std::sqrt(acc * gr.dt());
}

WeightedSignal translate(const WeightedSignal& f, double t) {
  const TimeGrid& gr = f.grid();
  const double r = t / gr.dt();
  const double kr = std::round(r);
  if (std::abs(r - kr) > Tolerances::defaults().alignment * std::max(1.0, std::abs(r)))
    throw AlignmentError("translate: shift is not an integer multiple of dt");
  const Index shift = static_cast<Index>(kr);
  WeightedSignal out(gr, f.rho(), f.dim());
  for (Index k = 0; k < gr.size(); ++k) {
    const Index src = k + shift;
    if (src >= 0 && src < gr.size()) out.values().col(k) = f.values().col(src);
  }
  return out;
}

namespace {

// Neville polynomial extrapolation to offset 0 from nodes x_j = j*dt, j>=1.
HilbertPoint neville_to_zero(const std::vector<HilbertPoint>& y, double dt,
                             double* last_change) {
  auto extrapolate = [dt](std::vector<HilbertPoint> tab) {
    const int p = static_cast<int>(tab.size());
    for (int level = 1; level < p; ++level)
      for (int i = 0; i + level < p; ++i) {
        const double xi = (i + 1) * dt;
        const double xj = (i + 1 + level) * dt;
        tab[i] = (xj * tab[i] - xi * tab[i + 1]) / (xj - xi);
      }
    return tab[0];
  };
  HilbertPoint full = extrapolate(y);
  if (last_change) {
    // Compare the final two extrapolation orders.
    HilbertPoint lower = extrapolate({y.begin(), y.end() - 1});
    *last_change = (full - lower).norm() / (1.0 + full.norm());
  }
  return full;
}

}  // namespace

HilbertPoint one_sided_limit(const WeightedSignal& f, double t, Side side,
                             double* stability, const Tolerances& tol) {
  const TimeGrid& gr = f.grid();
  const Index k0 = gr.index_of(t);
  const int dir = (side == Side::right) ? 1 : -1;
  const int p = 5;
  if (k0 + dir * p < 0 || k0 + dir * p >= gr.size())
    throw NoLimitError("one_sided_limit: not enough samples on the requested side");
  std::vector<HilbertPoint> y;
  y.reserve(p);
  for (int j = 1; j <= p; ++j) y.push_back(f.values().col(k0 + dir * j));
  double change = 0.0;
  HilbertPoint lim = neville_to_zero(y, gr.dt(), &change);
  if (stability) *stability = change;
  if (change > tol.limit_oscillation)
    throw NoLimitError("one_sided_limit: extrapolation did not settle (change " +
                       std::to_string(change) + ")");
  return lim;
}

double cweighted_norm(const WeightedSignal& f, double omega) {
  const TimeGrid& gr = f.grid();
  double best = 0.0;
  for (Index k = 0; k < gr.size(); ++k) {
    const double tk = gr.t(k);
    if (tk < 0.0) continue;
    best = std::max(best, f.values().col(k).norm() * std::exp(-omega * tk));
  }
  return best;
}

WeightedSignal sample_signal(const TimeGrid& grid, double rho, Index dim,
                             const std::function<HilbertPoint(double)>& fn) {
  WeightedSignal out(grid, rho, dim);
  for (Index k = 0; k < grid.size(); ++k) out.values().col(k) = fn(grid.t(k));
  return out;
}

WeightedSignal sample_scalar(const TimeGrid& grid, double rho,
                             const std::function<Complex(double)>& fn) {
  WeightedSignal out(grid, rho, 1);
  for (Index k = 0; k < grid.size(); ++k) out.values()(0, k) = fn(grid.t(k));
  return out;
}

WeightedSignal chi_right(const WeightedSignal& f, double t) {
  const Index kc = f.grid().index_of(t);
  WeightedSignal out(f.grid(), f.rho(), f.dim());
  out.values().rightCols(f.size() - kc) = f.values().rightCols(f.size() - kc);
  return out;
}

WeightedSignal chi_strict_left(const WeightedSignal& f, double t) {
  const Index kc = f.grid().index_of(t);
  WeightedSignal out(f.grid(), f.rho(), f.dim());
  if (kc > 0) out.values().leftCols(kc) = f.values().leftCols(kc);
  return out;
}

}  // namespace evosg
