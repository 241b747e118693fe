#pragma once

#include <Eigen/Dense>
#include <complex>

namespace evosg {

using Complex = std::complex<double>;
using Index = Eigen::Index;

// Element of the state space H = C^m.
using HilbertPoint = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Numeric knobs shared across modules. Every tolerance that shows up in a
// report or decides a domain question is named here so configs can override
// it and reports can cite the key.
struct Tolerances {
  // H^1 surrogate: energy fraction of (i xi + rho) * F in the top octave.
  double spectral_tail_fraction = 1e-6;
  // One-sided limit estimator: relative oscillation guard between orders.
  double limit_oscillation = 1e-4;
  // His membership surrogate: |v(0+) - g(0-)| <= jump_tolerance * (1+|g(0-)|).
  double jump_tolerance = 1e-6;
  // Per-bin linear solves: condition proxy above this is ill-posed.
  double bin_condition_max = 1e12;
  // Per-bin relative residual required after refinement.
  double bin_residual = 1e-10;
  // Grid alignment: |t/dt - round(t/dt)| below this counts as aligned.
  double alignment = 1e-9;

  static const Tolerances& defaults();
};

}  // namespace evosg
