#include "evosg/cutoff.hpp"

#include <cmath>

namespace evosg {

MinusOneElement::MinusOneElement(WeightedSignal regular_antiderivative,
                                 std::vector<DiracAtom> atoms)
    : reg_(std::move(regular_antiderivative)), atoms_(std::move(atoms)) {
  if (!(reg_.rho() > 0.0))
    throw InvalidWeightError("MinusOneElement requires rho > 0");
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!reg_.grid().aligned(atoms_[i].location) ||
        !reg_.grid().contains(atoms_[i].location))
      throw AlignmentError("atom location must be a grid node inside the window");
    if (atoms_[i].weight.size() != reg_.dim())
      throw CompatibilityError("atom weight dimension mismatch");
    for (std::size_t j = 0; j < i; ++j)
      if (atoms_[j].location == atoms_[i].location)
        throw CompatibilityError("atom locations must be distinct");
  }
}

WeightedSignal cumulative_integral_left(const WeightedSignal& f) {
  WeightedSignal w(f.grid(), f.rho(), f.dim());
  HilbertPoint acc = HilbertPoint::Zero(f.dim());
  const double dt = f.grid().dt();
  for (Index k = 0; k < f.size(); ++k) {
    w.values().col(k) = acc;
    acc += dt * f.values().col(k);
  }
  return w;
}

WeightedSignal forward_difference(const WeightedSignal& w) {
  WeightedSignal f(w.grid(), w.rho(), w.dim());
  const double dt = w.grid().dt();
  const Index n = w.size();
  for (Index k = 0; k + 1 < n; ++k)
    f.values().col(k) = (w.values().col(k + 1) - w.values().col(k)) / dt;
  f.values().col(n - 1).setZero();
  return f;
}

MinusOneElement zero_element(const TimeGrid& grid, double rho, Index dim) {
  return MinusOneElement(WeightedSignal(grid, rho, dim));
}

MinusOneElement embed(const WeightedSignal& f) {
  if (!(f.rho() > 0.0)) throw InvalidWeightError("embed requires rho > 0");
  return MinusOneElement(cumulative_integral_left(f));
}

WeightedSignal total_antiderivative(const MinusOneElement& F) {
  WeightedSignal w = F.regular_antiderivative();
  const TimeGrid& gr = w.grid();
  for (const DiracAtom& a : F.atoms()) {
    const Index ks = gr.index_of(a.location);
    const double c = std::exp(2.0 * F.rho() * a.location);
    for (Index k = ks; k < gr.size(); ++k) w.values().col(k) += c * a.weight;
  }
  return w;
}

WeightedSignal regular_density(const MinusOneElement& F) {
  return forward_difference(F.regular_antiderivative());
}

double minus_one_norm(const MinusOneElement& F) {
  return weighted_norm(total_antiderivative(F));
}

MinusOneElement add(const MinusOneElement& a, const MinusOneElement& b) {
  a.regular_antiderivative().require_compatible(b.regular_antiderivative());
  WeightedSignal reg = a.regular_antiderivative() + b.regular_antiderivative();
  std::vector<DiracAtom> atoms = a.atoms();
  for (const DiracAtom& atom : b.atoms()) {
    bool merged = false;
    for (DiracAtom& mine : atoms)
      if (mine.location == atom.location) {
        mine.weight += atom.weight;
        merged = true;
        break;
      }
    if (!merged) atoms.push_back(atom);
  }
  return MinusOneElement(std::move(reg), std::move(atoms));
}

MinusOneElement scale(Complex c, const MinusOneElement& a) {
  WeightedSignal reg = a.regular_antiderivative();
  reg *= c;
  std::vector<DiracAtom> atoms = a.atoms();
  for (DiracAtom& atom : atoms) atom.weight *= c;
  return MinusOneElement(std::move(reg), std::move(atoms));
}

namespace {

HilbertPoint regular_limit_or_domain_error(const WeightedSignal& w, double t,
                                           Side side, const Tolerances& tol,
                                           const char* op) {
  try {
    return one_sided_limit(w, t, side, nullptr, tol);
  } catch (const NoLimitError& e) {
    throw NotInDomainError(std::string(op) +
                           ": element not in the operator domain; " + e.what());
  }
}

}  // namespace

MinusOneElement cutoff_P(const MinusOneElement& F, double t,
                         const Tolerances& tol) {
  const TimeGrid& gr = F.grid();
  const Index kc = gr.index_of(t);
  const WeightedSignal& w = F.regular_antiderivative();
  const HilbertPoint wp =
      regular_limit_or_domain_error(w, t, Side::right, tol, "cutoff_P");

  // chi_{>= t}(m) w  -  w(t+) chi_{>= t}; the correction atom folds into the
  // regular antiderivative, atoms route per their location.
  WeightedSignal reg(gr, F.rho(), F.dim());
  for (Index k = kc; k < gr.size(); ++k)
    reg.values().col(k) = w.values().col(k) - wp;
  std::vector<DiracAtom> atoms;
  for (const DiracAtom& a : F.atoms())
    if (a.location > t) atoms.push_back(a);
  return MinusOneElement(std::move(reg), std::move(atoms));
}

MinusOneElement cutoff_Q(const MinusOneElement& F, double t,
                         const Tolerances& tol) {
  const TimeGrid& gr = F.grid();
  const Index kc = gr.index_of(t);
  const WeightedSignal& w = F.regular_antiderivative();
  const HilbertPoint wm =
      regular_limit_or_domain_error(w, t, Side::left, tol, "cutoff_Q");

  // chi_{<= t}(m) w  +  w(t-) chi_{>= t}; discretely the left half is the
  // nodes < t, the constant continuation keeps the antiderivative flat.
  WeightedSignal reg(gr, F.rho(), F.dim());
  for (Index k = 0; k < kc; ++k) reg.values().col(k) = w.values().col(k);
  for (Index k = kc; k < gr.size(); ++k) reg.values().col(k) = wm;
  std::vector<DiracAtom> atoms;
  for (const DiracAtom& a : F.atoms())
    if (a.location < t) atoms.push_back(a);
  return MinusOneElement(std::move(reg), std::move(atoms));
}

}  // namespace evosg
