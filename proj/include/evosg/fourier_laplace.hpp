#pragma once

#include <functional>
#include <string>

#include "evosg/weighted_signal.hpp"

namespace evosg {

// Frequency-side image of a signal under the weighted transform. Values are
// stored in DFT bin order; xi(j) wraps to (-pi/dt, pi/dt].
class Spectrum {
public:
  Spectrum(TimeGrid grid, double rho, ComplexMatrix values)
      : grid_(grid), rho_(rho), values_(std::move(values)) {}

  const TimeGrid& grid() const { return grid_; }
  double rho() const { return rho_; }
  Index dim() const { return values_.rows(); }
  Index size() const { return values_.cols(); }
  const ComplexMatrix& values() const { return values_; }
  ComplexMatrix& values() { return values_; }

  double dxi() const { return 2.0 * pi / (grid_.dt() * static_cast<double>(grid_.size())); }
  double xi(Index j) const {
    const Index n = grid_.size();
    const Index w = (j < (n + 1) / 2) ? j : j - n;
    return dxi() * static_cast<double>(w);
  }
  // The symbol argument of bin j: z_j = i xi_j + rho.
  Complex z(Index j) const { return Complex(rho_, xi(j)); }

private:
  TimeGrid grid_;
  double rho_;
  ComplexMatrix values_;
};

// Unitary realization of the weighted transform: the unweighted l2 norm of
// the spectrum equals the weighted norm of the signal exactly (Parseval).
Spectrum laplace(const WeightedSignal& f);
WeightedSignal inverse_laplace(const Spectrum& F);
double spectrum_norm(const Spectrum& F);

// Energy fraction of F in the top frequency octave (|xi| >= Nyquist/2); the
// discrete membership surrogate for H^1-type domains.
double spectral_tail_fraction(const Spectrum& F);

// Time derivative via the symbol i*xi + rho. Throws NotInDomainError when the
// spectral tail of the differentiated signal exceeds the tolerance.
WeightedSignal derivative(const WeightedSignal& f,
                          const Tolerances& tol = Tolerances::defaults());
// Spectral division by the same symbol; requires rho != 0.
WeightedSignal antiderivative(const WeightedSignal& f);
// Adjoint symbol -i*xi + rho (= -d/dt + 2 rho).
WeightedSignal adjoint_derivative(const WeightedSignal& f,
                                  const Tolerances& tol = Tolerances::defaults());

// Analytic, bounded, operator-valued function on a right half-plane together
// with its abscissa. eval must be re-entrant.
struct MaterialLaw {
  double rho0 = 0.0;
  Index dim = 1;
  std::string kind;  // constant | delay | inv_z | delay_block | anticausal_test | user
  std::function<ComplexMatrix(Complex)> eval;
  // Closed-form regularising limit x -> (M(d/dt) chi_{>=0} x)(0+), when known.
  std::function<HilbertPoint(const HilbertPoint&)> reg_limit;
  bool claims_causal = true;

  ComplexMatrix operator()(Complex z) const { return eval(z); }
};

MaterialLaw constant_law(const ComplexMatrix& E);
MaterialLaw scalar_delay_law(double h, Complex coeff, Index dim);
MaterialLaw inv_z_law(Index dim);
// Deliberately invalid test law M(z) = e^{+hz}; unbounded on half-planes.
MaterialLaw anticausal_law(double h, Index dim);

// Functional calculus: L* M(i xi + rho) L. Requires f.rho() > law.rho0.
WeightedSignal apply_material_law(const MaterialLaw& law, const WeightedSignal& f);

// Analyticity proxy: relative Cauchy-Riemann stencil residual at z.
double cauchy_riemann_residual(const MaterialLaw& law, Complex z, double h = 1e-4);
// Sampled sup of ||M(z)|| over the half-plane Re z >= rho1.
double sampled_half_plane_bound(const MaterialLaw& law, double rho1,
                                int xi_samples = 64);

}  // namespace evosg
