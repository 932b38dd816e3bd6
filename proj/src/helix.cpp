#include "mulgeo/helix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "json.hpp"
#include "mulgeo/format.hpp"

namespace mulgeo {

ProfileJets profile_jets(const Jet& kappa, const Jet& tau) {
  ProfileJets p;
  p.kappa = kappa;
  p.tau = tau;
  p.f = tau / kappa;
  p.lambda2 = 1.0 + p.f * p.f;
  Jet fp = jet_derivative(p.f);
  p.sigma = fp / (kappa * jet_pow(p.lambda2, 1.5));
  p.mu2 = 1.0 + p.sigma * p.sigma;
  Jet sp = jet_derivative(p.sigma);
  p.gamma = sp / (kappa * p.lambda2 * jet_pow(p.mu2, 1.5));
  Jet gp = jet_derivative(p.gamma);
  double k = kappa.value(), t = tau.value();
  double denom = std::sqrt(k * k + t * t) * std::sqrt(p.mu2.value()) *
                 std::pow(1.0 + p.gamma.value() * p.gamma.value(), 1.5);
  p.psi = gp.value() / denom;
  return p;
}

double sigma_eq_n3(const Jet& kappa, const Jet& tau) {
  // [kappa^{2*} /* (kappa^{2*} +* tau^{2*})^{3/2*}] .* (tau /* kappa)*
  double k = kappa.value(), t = tau.value();
  double front = (k * k) / std::pow(k * k + t * t, 1.5);
  Jet f = tau / kappa;
  return front * jet_derivative(f).value();
}

namespace {

HelixQuantities quantities_at(const MulCurve& c, MulScalar s,
                              double perturb_amplitude) {
  FrameJets fr = frame_jets(*c.impl, s.logval);
  Jet tau = fr.tau;
  if (perturb_amplitude != 0.0)
    tau = tau * (perturb_amplitude * jet_sin(Jet::variable(s.logval)));
  ProfileJets p = profile_jets(fr.kappa, tau);
  return {p.f.value(), p.sigma.value(), p.gamma.value(), p.psi};
}

}  // namespace

HelixQuantities helix_profiles(const MulCurve& c, MulScalar s) {
  return quantities_at(c, s, 0.0);
}

HelixQuantities helix_profiles_perturbed_torsion(const MulCurve& c,
                                                 MulScalar s,
                                                 double amplitude) {
  return quantities_at(c, s, amplitude);
}

namespace {

double max_abs_dev(const std::vector<double>& xs) {
  double sum = 0.0;
  int n = 0;
  for (double x : xs)
    if (!std::isnan(x)) {
      sum += x;
      ++n;
    }
  if (n == 0) return std::numeric_limits<double>::quiet_NaN();
  double mean = sum / n;
  double dev = 0.0;
  for (double x : xs)
    if (!std::isnan(x)) dev = std::max(dev, std::fabs(x - mean));
  return dev;
}

}  // namespace

double HelixReport::verdict_dev() const {
  if (verdict == "general") return max_dev_f;
  if (verdict == "slant-not-general") return max_dev_sigma;
  if (verdict == "clad-not-slant") return max_dev_gamma;
  if (verdict == "gclad-not-clad") return max_dev_psi;
  return max_dev_psi;
}

HelixReport classify(const MulCurve& c, const std::vector<MulScalar>& grid,
                     double tol) {
  if (grid.size() < 2) fail(ErrCode::domain, "classify needs >= 2 samples");
  HelixReport r;
  r.tol = tol;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (MulScalar s : grid) {
    r.grid_s.push_back(s.value());
    try {
      HelixQuantities q = helix_profiles(c, s);
      r.f.push_back(q.f);
      r.sigma.push_back(q.sigma);
      r.gamma.push_back(q.gamma);
      r.psi.push_back(q.psi);
      r.sample_errors.emplace_back();
    } catch (const Error& e) {
      r.f.push_back(nan);
      r.sigma.push_back(nan);
      r.gamma.push_back(nan);
      r.psi.push_back(nan);
      r.sample_errors.emplace_back(e.what());
      ++r.excluded;
    }
  }
  if (10 * r.excluded > static_cast<int>(grid.size()))
    fail(ErrCode::numeric,
         "classification failed on more than 10% of the grid (" +
             std::to_string(r.excluded) + "/" +
             std::to_string(grid.size()) + " samples)");
  r.max_dev_f = max_abs_dev(r.f);
  r.max_dev_sigma = max_abs_dev(r.sigma);
  r.max_dev_gamma = max_abs_dev(r.gamma);
  r.max_dev_psi = max_abs_dev(r.psi);
  r.member_general = r.max_dev_f <= tol;
  r.member_slant = r.max_dev_sigma <= tol;
  r.member_clad = r.max_dev_gamma <= tol;
  r.member_gclad = r.max_dev_psi <= tol;
  r.verdict = r.member_general  ? "general"
              : r.member_slant  ? "slant-not-general"
              : r.member_clad   ? "clad-not-slant"
              : r.member_gclad  ? "gclad-not-clad"
                                : "none";
  return r;
}

std::string HelixReport::to_json() const {
  nlohmann::ordered_json j;
  auto col = [](const std::vector<double>& xs) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (double x : xs)
      a.push_back(std::isnan(x) ? nlohmann::ordered_json(nullptr)
                                : nlohmann::ordered_json(x));
    return a;
  };
  j["grid"] = col(grid_s);
  j["profiles"]["f"] = col(f);
  j["profiles"]["sigma"] = col(sigma);
  j["profiles"]["gamma"] = col(gamma);
  j["profiles"]["psi"] = col(psi);
  j["max_dev"]["f"] = max_dev_f;
  j["max_dev"]["sigma"] = max_dev_sigma;
  j["max_dev"]["gamma"] = max_dev_gamma;
  j["max_dev"]["psi"] = max_dev_psi;
  j["memberships"]["general"] = member_general;
  j["memberships"]["slant"] = member_slant;
  j["memberships"]["clad"] = member_clad;
  j["memberships"]["gclad"] = member_gclad;
  j["verdict"] = verdict;
  j["tol"] = tol;
  j["excluded"] = excluded;
  nlohmann::ordered_json errs = nlohmann::ordered_json::array();
  for (const std::string& e : sample_errors) errs.push_back(e);
  j["sample_errors"] = errs;
  return j.dump(2);
}

}  // namespace mulgeo
