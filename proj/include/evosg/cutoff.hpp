#pragma once

#include <vector>

#include "evosg/fourier_laplace.hpp"

namespace evosg {

// Point mass y * delta_s. The antiderivative of delta_s is the constant
// e^{2 rho s} on [s, infty) (and 0 before), so atoms are handled in closed
// form throughout.
struct DiracAtom {
  double location = 0.0;
  HilbertPoint weight;
};

// Element of the extrapolation space H_rho^{-1}: F = d/dt(w) where
// w = regular_antiderivative + sum of atom antiderivatives. rho > 0 always.
class MinusOneElement {
public:
  MinusOneElement(WeightedSignal regular_antiderivative,
                  std::vector<DiracAtom> atoms = {});

  const WeightedSignal& regular_antiderivative() const { return reg_; }
  WeightedSignal& regular_antiderivative() { return reg_; }
  const std::vector<DiracAtom>& atoms() const { return atoms_; }
  std::vector<DiracAtom>& atoms() { return atoms_; }

  double rho() const { return reg_.rho(); }
  const TimeGrid& grid() const { return reg_.grid(); }
  Index dim() const { return reg_.dim(); }

private:
  WeightedSignal reg_;
  std::vector<DiracAtom> atoms_;
};

// Exactly causal discrete integrator: w(t_k) = dt * sum_{j<k} f(t_j).
// Left-rule weights make the cut-off algebra below exact; see the module
// notes in the README for when to prefer the spectral antiderivative.
WeightedSignal cumulative_integral_left(const WeightedSignal& f);
// Exact inverse of the above (forward difference).
WeightedSignal forward_difference(const WeightedSignal& w);

MinusOneElement zero_element(const TimeGrid& grid, double rho, Index dim);
// Embedding L_{2,rho} -> H^{-1}: atoms empty, antiderivative integrated.
MinusOneElement embed(const WeightedSignal& f);
// w = regular part + sum_atoms y e^{2 rho s} chi_{>= s}.
WeightedSignal total_antiderivative(const MinusOneElement& F);
// The regular L2 density (exact forward difference of the regular part).
WeightedSignal regular_density(const MinusOneElement& F);
// ||F||_{-1} = ||total antiderivative||_rho.
double minus_one_norm(const MinusOneElement& F);

MinusOneElement add(const MinusOneElement& a, const MinusOneElement& b);
MinusOneElement scale(Complex c, const MinusOneElement& a);

// Cut-off operators on the extrapolation space. Domain condition: the
// one-sided limit of the regular antiderivative at t must exist; atoms are
// routed in closed form. Throws NotInDomainError otherwise.
MinusOneElement cutoff_P(const MinusOneElement& F, double t,
                         const Tolerances& tol = Tolerances::defaults());
MinusOneElement cutoff_Q(const MinusOneElement& F, double t,
                         const Tolerances& tol = Tolerances::defaults());

}  // namespace evosg
