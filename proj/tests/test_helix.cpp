#include <cmath>
#include <random>

#include "doctest.h"
#include "json.hpp"
#include "mulgeo/helix.hpp"
#include "mulgeo/presets.hpp"

using namespace mulgeo;

namespace {

std::vector<MulScalar> preset_grid(const MulCurve& c, int n) {
  return log_uniform_grid(std::exp(c.impl->u_lo()), std::exp(c.impl->u_hi()),
                          n);
}

}  // namespace

TEST_CASE("circular helix: f = e^{4/3}, higher invariants vanish") {
  MulCurve c = preset("helix35");
  for (MulScalar s : preset_grid(c, 25)) {
    HelixQuantities q = helix_profiles(c, s);
    CHECK(std::fabs(q.f - 4.0 / 3.0) <= 1e-9);
    CHECK(std::fabs(q.sigma) <= 1e-8);
    CHECK(std::fabs(q.gamma) <= 1e-8);
    CHECK(std::fabs(q.psi) <= 1e-8);
  }
  HelixReport r = classify(c, preset_grid(c, 40), default_classify_tol(c));
  CHECK(r.verdict == "general");
  CHECK(r.member_general);
  CHECK(r.max_dev_f <= 1e-8);
  CHECK(r.excluded == 0);
  CHECK(r.verdict_dev() == r.max_dev_f);
}

TEST_CASE("membership chain is monotone: general implies the rest") {
  for (const char* name :
       {"helix35", "circle-fig1", "example411-corrected", "slant-corrected"}) {
    MulCurve c = ensure_natural(preset(name));
    HelixReport r = classify(c, preset_grid(c, 40), default_classify_tol(c));
    INFO(name, " -> ", r.verdict);
    if (r.member_general) CHECK(r.member_slant);
    if (r.member_slant) CHECK(r.member_clad);
    if (r.member_clad) CHECK(r.member_gclad);
  }
}

TEST_CASE("twisted cubic is a general helix with f = 1*") {
  MulCurve c = ensure_natural(preset("example411-corrected"));
  CHECK(c.reparametrized);
  CHECK(default_classify_tol(c) == 1e-4);
  HelixReport r = classify(c, preset_grid(c, 40), default_classify_tol(c));
  CHECK(r.verdict == "general");
  double mean = 0;
  for (double v : r.f) mean += v;
  mean /= static_cast<double>(r.f.size());
  CHECK(mean == doctest::Approx(1.0).epsilon(1e-6));  // f = e = 1*
}

TEST_CASE("constant-precession curve is slant but not general") {
  MulCurve c = preset("slant-corrected");
  CHECK(is_natural(c));
  HelixReport r = classify(c, preset_grid(c, 60), default_classify_tol(c));
  CHECK(r.verdict == "slant-not-general");
  CHECK_FALSE(r.member_general);
  CHECK(r.member_slant);
  CHECK(r.max_dev_sigma <= 1e-4);
  double mean = 0;
  for (double v : r.sigma) mean += v;
  mean /= static_cast<double>(r.sigma.size());
  CHECK(mean == doctest::Approx(-8.0 / 15.0).epsilon(1e-6));
}

TEST_CASE("clad candidate tests non-constant in Gamma and is reported so") {
  MulCurve c = ensure_natural(preset("clad-corrected"));
  HelixReport r = classify(c, preset_grid(c, 40), default_classify_tol(c));
  CHECK_FALSE(r.member_clad);
  CHECK(r.verdict != "clad-not-slant");
  CHECK(r.max_dev_gamma > 10.0 * r.tol);  // decisively non-constant
}

TEST_CASE("generic curve classifies as none") {
  MulCurve c = ensure_natural(preset("random-smooth"));
  HelixReport r = classify(c, preset_grid(c, 40), default_classify_tol(c));
  CHECK(r.verdict == "none");
  CHECK_FALSE(r.member_general);
  CHECK_FALSE(r.member_slant);
  CHECK(r.verdict_dev() == r.max_dev_psi);
}

TEST_CASE("negative control: torsion perturbation breaks constancy 10x over") {
  MulCurve h = preset("helix35");
  auto grid = preset_grid(h, 40);
  double base_dev = 0, pert_dev = 0;
  std::vector<double> fs, fsp;
  for (MulScalar s : grid) {
    fs.push_back(helix_profiles(h, s).f);
    fsp.push_back(helix_profiles_perturbed_torsion(h, s, 0.1).f);
  }
  auto max_dev = [](const std::vector<double>& v) {
    double mean = 0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double d = 0;
    for (double x : v) d = std::max(d, std::fabs(x - mean));
    return d;
  };
  base_dev = max_dev(fs);
  pert_dev = max_dev(fsp);
  CHECK(base_dev <= 1e-8);
  CHECK(pert_dev >= 10.0 * default_classify_tol(h));
  CHECK(pert_dev >= 10.0 * base_dev);

  // same control on the slant curve's sigma
  MulCurve sl = preset("slant-corrected");
  std::vector<double> sg, sgp;
  for (MulScalar s : preset_grid(sl, 40)) {
    sg.push_back(helix_profiles(sl, s).sigma);
    sgp.push_back(helix_profiles_perturbed_torsion(sl, s, 0.1).sigma);
  }
  CHECK(max_dev(sg) <= 1e-4);
  CHECK(max_dev(sgp) >= 10.0 * max_dev(sg));
}

TEST_CASE("sigma via eq. (n3) equals the chain form") {
  std::mt19937_64 rng(55001);
  std::uniform_real_distribution<double> coef(-0.8, 0.8);
  std::uniform_real_distribution<double> kap0(0.3, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    Jet kappa, tau;
    kappa.c[0] = kap0(rng);
    tau.c[0] = coef(rng);
    for (int k = 1; k <= 4; ++k) {
      kappa.c[k] = coef(rng);
      tau.c[k] = coef(rng);
    }
    double chain = profile_jets(kappa, tau).sigma.value();
    double n3 = sigma_eq_n3(kappa, tau);
    CHECK(std::fabs(chain - n3) <= 1e-10 * (1.0 + std::fabs(chain)));
  }
}

TEST_CASE("profiles are isometry invariants") {
  const double th = -1.2;
  std::array<Vec3, 3> rows = {Vec3{1.0, 0.0, 0.0},
                              Vec3{0.0, std::cos(th), -std::sin(th)},
                              Vec3{0.0, std::sin(th), std::cos(th)}};
  MulCurve c = preset("slant-corrected");
  MulCurve m = isometry_image(c, rows, Vec3{3.0, 0.0, -2.0});
  for (MulScalar s : preset_grid(c, 15)) {
    HelixQuantities a = helix_profiles(c, s), b = helix_profiles(m, s);
    CHECK(std::fabs(a.f - b.f) <= 1e-9);
    CHECK(std::fabs(a.sigma - b.sigma) <= 1e-9);
    CHECK(std::fabs(a.gamma - b.gamma) <= 1e-8);
  }
}

TEST_CASE("degenerate curves fail classification loudly") {
  MulCurve line = preset("example411-literal");  // kappa = 0* everywhere
  auto grid = preset_grid(line, 20);
  CHECK_THROWS_AS(classify(line, grid, 1e-6), Error);
  CHECK_THROWS_AS(classify(line, {MulScalar{1.0}}, 1e-6), Error);  // n < 2
}

TEST_CASE("classification report serializes to JSON") {
  MulCurve c = preset("helix35");
  HelixReport r = classify(c, preset_grid(c, 10), 1e-6);
  auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["verdict"] == "general");
  CHECK(j["grid"].size() == 10);
  CHECK(j["profiles"]["f"].size() == 10);
  CHECK(j["max_dev"].contains("sigma"));
  CHECK(j["memberships"]["general"] == true);
  CHECK(j["tol"] == 1e-6);
  CHECK(j["excluded"] == 0);
}
