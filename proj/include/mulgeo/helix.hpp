#pragma once

// Helix invariants and the classification chain
//   general (f = tau /* kappa constant)
//   slant   (sigma constant)
//   clad    (Gamma constant)
//   g-clad  (psi constant)
// All quantities are computed in the log chart from (kappa, tau) jets along
// a naturally parametrized curve. With lambda^2 = 1 + f^2, mu^2 = 1 + sigma^2
// (classical values of log-chart kappa, tau):
//   f     = tau / kappa
//   sigma = f' / (kappa lambda^3)
//   Gamma = sigma' / (kappa lambda^2 mu^3)
//   psi   = Gamma' / (sqrt(kappa^2+tau^2) mu (1+Gamma^2)^{3/2})

#include <string>
#include <vector>

#include "mulgeo/curve.hpp"

namespace mulgeo {

// Jets of the invariant chain at one parameter. Valid orders: f 3, sigma 2,
// gamma 1, psi value-only; exactly consumed by order-6 curve jets.
struct ProfileJets {
  Jet kappa, tau;
  Jet f, lambda2;  // lambda2 = 1 + f^2
  Jet sigma, mu2;  // mu2 = 1 + sigma^2
  Jet gamma;
  double psi;
};

// Kernel on (kappa, tau) jets; the torsion jet is the injection point for
// perturbation experiments (negative controls).
ProfileJets profile_jets(const Jet& kappa, const Jet& tau);

// Eq. (n3) route for sigma: [kappa^{2*} /* (kappa^{2*} +* tau^{2*})^{3/2*}]
// .* (tau /* kappa)*. Algebraically identical to the ProfileJets form; kept
// separate so the identity is testable.
double sigma_eq_n3(const Jet& kappa, const Jet& tau);

struct HelixQuantities {
  double f, sigma, gamma, psi;  // logvals
};

HelixQuantities helix_profiles(const MulCurve& c, MulScalar s);

// Same chain with tau replaced by tau .* e^{amplitude * sin(log s)}.
HelixQuantities helix_profiles_perturbed_torsion(const MulCurve& c,
                                                 MulScalar s,
                                                 double amplitude);

struct HelixReport {
  std::vector<double> grid_s;  // parameter values (positive reals)
  std::vector<double> f, sigma, gamma, psi;          // logvals, NaN = excluded
  std::vector<std::string> sample_errors;            // "" = ok
  double max_dev_f = 0, max_dev_sigma = 0, max_dev_gamma = 0, max_dev_psi = 0;
  bool member_general = false, member_slant = false, member_clad = false,
       member_gclad = false;
  std::string verdict;  // general | slant-not-general | clad-not-slant |
                        // gclad-not-clad | none
  double tol = 0;
  int excluded = 0;

  // Deviation of the verdict's defining quantity (psi when verdict is none).
  double verdict_dev() const;
  std::string to_json() const;
};

// A quantity "tests constant" iff max |logval - mean logval| <= tol over the
// included samples. Samples where the profile chain fails are excluded and
// annotated; more than 10% excluded is an error.
HelixReport classify(const MulCurve& c, const std::vector<MulScalar>& grid,
                     double tol);

// Default constancy tolerance: 1e-6 closed-form, 1e-4 once a numeric
// reparametrization is in the loop.
inline double default_classify_tol(const MulCurve& c) {
  return c.reparametrized ? 1e-4 : 1e-6;
}

}  // namespace mulgeo
