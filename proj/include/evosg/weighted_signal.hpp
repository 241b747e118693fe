#pragma once

#include <functional>

#include "evosg/time_grid.hpp"
#include "evosg/types.hpp"

namespace evosg {

// Sampled H-valued function on a uniform grid together with the exponential
// weight rho of the ambient space. Column k of values() is f(t_k).
class WeightedSignal {
public:
  WeightedSignal(TimeGrid grid, double rho, Index dim)
      : grid_(grid), rho_(rho), values_(ComplexMatrix::Zero(dim, grid.size())) {}
  WeightedSignal(TimeGrid grid, double rho, ComplexMatrix values)
      : grid_(grid), rho_(rho), values_(std::move(values)) {}

  const TimeGrid& grid() const { return grid_; }
  double rho() const { return rho_; }
  Index dim() const { return values_.rows(); }
  Index size() const { return values_.cols(); }

  const ComplexMatrix& values() const { return values_; }
  ComplexMatrix& values() { return values_; }
  HilbertPoint at(Index k) const { return values_.col(k); }
  HilbertPoint at_time(double t) const { return values_.col(grid_.index_of(t)); }

  bool compatible(const WeightedSignal& o) const {
    return grid_ == o.grid_ && rho_ == o.rho_ && dim() == o.dim();
  }
  void require_compatible(const WeightedSignal& o) const;

  WeightedSignal& operator+=(const WeightedSignal& o);
  WeightedSignal& operator-=(const WeightedSignal& o);
  WeightedSignal& operator*=(Complex c);
  friend WeightedSignal operator+(WeightedSignal a, const WeightedSignal& b) { return a += b; }
  friend WeightedSignal operator-(WeightedSignal a, const WeightedSignal& b) { return a -= b; }
  friend WeightedSignal operator*(Complex c, WeightedSignal f) { return f *= c; }

private:
  TimeGrid grid_;
  double rho_;
  ComplexMatrix values_;
};

enum class Side { left, right };

// <f, g>_rho = sum_k <f(t_k), g(t_k)> e^{-2 rho t_k} dt, conjugate-linear in f.
Complex weighted_inner(const WeightedSignal& f, const WeightedSignal& g);
double weighted_norm(const WeightedSignal& f);

// (tau_t f)(s) = f(s + t); t must be grid-aligned; samples shifted off the
// window are dropped, vacated samples are zero.
WeightedSignal translate(const WeightedSignal& f, double t);

// Richardson/Neville-extrapolated limit f(t+) or f(t-) from samples strictly
// on the requested side of the node. An attached stability estimate (relative
// difference of the last two extrapolation orders) is written to *stability.
// Throws NoLimitError on oscillation above tol.limit_oscillation.
HilbertPoint one_sided_limit(const WeightedSignal& f, double t, Side side,
                             double* stability = nullptr,
                             const Tolerances& tol = Tolerances::defaults());

// sup-style C_omega norm over t_k >= 0: max ||f(t_k)|| e^{-omega t_k}.
double cweighted_norm(const WeightedSignal& f, double omega);

// Pointwise sampler: f(t_k) = fn(t_k).
WeightedSignal sample_signal(const TimeGrid& grid, double rho, Index dim,
                             const std::function<HilbertPoint(double)>& fn);
// Scalar convenience (dim = 1).
WeightedSignal sample_scalar(const TimeGrid& grid, double rho,
                             const std::function<Complex(double)>& fn);

// Multiplication by the characteristic function of [t, infty) resp. (-inf, t).
// Discrete convention: chi_{>= t} keeps the node at t, chi_{< t} excludes it;
// the two are exactly complementary.
WeightedSignal chi_right(const WeightedSignal& f, double t);
WeightedSignal chi_strict_left(const WeightedSignal& f, double t);

}  // namespace evosg
