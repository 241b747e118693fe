#include "evosg/fourier_laplace.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>

namespace evosg {

namespace {

Eigen::FFT<double>& fft_engine() {
  thread_local Eigen::FFT<double> fft;
  return fft;
}

// Row-wise unscaled DFT: out(j) = sum_k in(k) e^{-2 pi i jk/n}.
void dft_rows(ComplexMatrix& m, bool forward) {
  auto& fft = fft_engine();
  const Index n = m.cols();
  Eigen::VectorXcd in(n), out(n);
  for (Index r = 0; r < m.rows(); ++r) {
    in = m.row(r).transpose();
    if (forward)
      fft.fwd(out, in);
    else
      fft.inv(out, in);  // scaled by 1/n
    m.row(r) = out.transpose();
  }
}

}  // namespace

Spectrum laplace(const WeightedSignal& f) {
  const TimeGrid& gr = f.grid();
  const Index n = gr.size();
  const double dt = gr.dt();
  ComplexMatrix g = f.values();
  for (Index k = 0; k < n; ++k) g.col(k) *= std::exp(-f.rho() * gr.t(k));
  dft_rows(g, true);
  Spectrum F(gr, f.rho(), std::move(g));
  const double scale = dt / std::sqrt(2.0 * pi);
  for (Index j = 0; j < n; ++j) {
    const Complex phase = std::exp(Complex(0.0, -F.xi(j) * gr.t_start()));
    F.values().col(j) *= scale * phase;
  }
  return F;
}

WeightedSignal inverse_laplace(const Spectrum& F) {
  const TimeGrid& gr = F.grid();
  const Index n = gr.size();
  const double dt = gr.dt();
  ComplexMatrix g = F.values();
  const double scale = std::sqrt(2.0 * pi) / dt;
  for (Index j = 0; j < n; ++j) {
    const Complex phase = std::exp(Complex(0.0, F.xi(j) * gr.t_start()));
    g.col(j) *= scale * phase;
  }
  dft_rows(g, false);
  for (Index k = 0; k < n; ++k) g.col(k) *= std::exp(F.rho() * gr.t(k));
  return WeightedSignal(gr, F.rho(), std::move(g));
}

double spectrum_norm(const Spectrum& F) {
  return F.values().norm() * std::sqrt(F.dxi());
}

double spectral_tail_fraction(const Spectrum& F) {
  const double xi_cut = 0.5 * pi / F.grid().dt();
  double total = 0.0, tail = 0.0;
  for (Index j = 0; j < F.size(); ++j) {
    const double e = F.values().col(j).squaredNorm();
    total += e;
    if (std::abs(F.xi(j)) >= xi_cut) tail += e;
  }
  return total > 0.0 ? tail / total : 0.0;
}

namespace {

WeightedSignal apply_scalar_symbol(const WeightedSignal& f,
                                   const std::function<Complex(Complex)>& sym) {
  Spectrum F = laplace(f);
  for (Index j = 0; j < F.size(); ++j) F.values().col(j) *= sym(F.z(j));
  return inverse_laplace(F);
}

}  // namespace

WeightedSignal derivative(const WeightedSignal& f, const Tolerances& tol) {
  Spectrum F = laplace(f);
  for (Index j = 0; j < F.size(); ++j) F.values().col(j) *= F.z(j);
  const double frac = spectral_tail_fraction(F);
  if (frac > tol.spectral_tail_fraction)
    throw NotInDomainError(
        "derivative: signal is not in the discrete H^1 domain (tail fraction " +
        std::to_string(frac) + ")");
  return inverse_laplace(F);
}

WeightedSignal antiderivative(const WeightedSignal& f) {
  if (f.rho() == 0.0)
    throw InvalidWeightError("antiderivative requires rho != 0");
  return apply_scalar_symbol(f, [](Complex z) { return 1.0 / z; });
}

WeightedSignal adjoint_derivative(const WeightedSignal& f, const Tolerances& tol) {
  Spectrum F = laplace(f);
  for (Index j = 0; j < F.size(); ++j) F.values().col(j) *= std::conj(F.z(j));
  const double frac = spectral_tail_fraction(F);
  if (frac > tol.spectral_tail_fraction)
    throw NotInDomainError(
        "adjoint_derivative: signal is not in the discrete H^1 domain");
  return inverse_laplace(F);
}

MaterialLaw constant_law(const ComplexMatrix& E) {
  MaterialLaw law;
  law.rho0 = 0.0;
  law.dim = E.rows();
  law.kind = "constant";
  law.eval = [E](Complex) { return E; };
  law.reg_limit = [E](const HilbertPoint& x) -> HilbertPoint { return E * x; };
  return law;
}

MaterialLaw scalar_delay_law(double h, Complex coeff, Index dim) {
  MaterialLaw law;
  law.rho0 = 0.0;
  law.dim = dim;
  law.kind = "delay";
  law.eval = [h, coeff, dim](Complex z) -> ComplexMatrix {
    return coeff * std::exp(-h * z) * ComplexMatrix::Identity(dim, dim);
  };
  law.reg_limit = [dim](const HilbertPoint&) -> HilbertPoint {
    return HilbertPoint::Zero(dim);  // shifted step vanishes at 0+
  };
  return law;
}

MaterialLaw inv_z_law(Index dim) {
  MaterialLaw law;
  law.rho0 = 0.0;
  law.dim = dim;
  law.kind = "inv_z";
  law.eval = [dim](Complex z) -> ComplexMatrix {
    return (1.0 / z) * ComplexMatrix::Identity(dim, dim);
  };
  law.reg_limit = [dim](const HilbertPoint&) -> HilbertPoint {
    return HilbertPoint::Zero(dim);  // antiderivative of a step starts at 0
  };
  return law;
}

MaterialLaw anticausal_law(double h, Index dim) {
  MaterialLaw law;
  law.rho0 = 0.0;
  law.dim = dim;
  law.kind = "anticausal_test";
  law.claims_causal = false;
  law.eval = [h, dim](Complex z) -> ComplexMatrix {
    return std::exp(h * z) * ComplexMatrix::Identity(dim, dim);
  };
  return law;
}

WeightedSignal apply_material_law(const MaterialLaw& law, const WeightedSignal& f) {
  if (!(f.rho() > law.rho0))
    throw AbscissaError("apply_material_law: rho = " + std::to_string(f.rho()) +
                        " does not exceed the abscissa rho0 = " +
                        std::to_string(law.rho0));
  if (f.dim() != law.dim)
    throw CompatibilityError("material law dimension mismatch");
  Spectrum F = laplace(f);
  for (Index j = 0; j < F.size(); ++j) {
    const HilbertPoint y = law.eval(F.z(j)) * F.values().col(j);
    F.values().col(j) = y;
  }
  return inverse_laplace(F);
}

double cauchy_riemann_residual(const MaterialLaw& law, Complex z, double h) {
  const ComplexMatrix dx = (law.eval(z + h) - law.eval(z - h)) / (2.0 * h);
  const ComplexMatrix dy =
      (law.eval(z + Complex(0, h)) - law.eval(z - Complex(0, h))) /
      (2.0 * Complex(0, h));
  const double scale = 1.0 + law.eval(z).norm();
  return (dx - dy).norm() / scale;
}

double sampled_half_plane_bound(const MaterialLaw& law, double rho1,
                                int xi_samples) {
  double best = 0.0;
  const double sigmas[] = {rho1, 2.0 * rho1 + 1.0, 10.0 * rho1 + 10.0};
  for (double sigma : sigmas) {
    for (int i = 0; i < xi_samples; ++i) {
      // log-spaced xi from ~1e-2 to ~1e4, both signs, plus xi = 0
      const double mag =
          (i == 0) ? 0.0 : std::pow(10.0, -2.0 + 6.0 * (i - 1) / std::max(1, xi_samples - 2));
      for (double sgn : {1.0, -1.0}) {
        const Complex z(sigma, sgn * mag);
        Eigen::JacobiSVD<ComplexMatrix> svd(law.eval(z));
        best = std::max(best, svd.singularValues()(0));
        if (mag == 0.0) break;
      }
    }
  }
  return best;
}

}  // namespace evosg
