#include <cmath>
#include <random>

#include "doctest.h"
#include "mulgeo/curve.hpp"
#include "mulgeo/presets.hpp"

using namespace mulgeo;

namespace {

double vdev(const MulVec3& a, const Vec3& expected_logvec) {
  Vec3 d = a.logvec() - expected_logvec;
  return std::max({std::fabs(d[0]), std::fabs(d[1]), std::fabs(d[2])});
}

}  // namespace

TEST_CASE("circular helix: frame and curvatures in closed form") {
  MulCurve c = preset("helix35");
  CHECK(is_natural(c));
  auto grid = log_uniform_grid(1.0, std::exp(2.0 * M_PI), 25);
  for (MulScalar s : grid) {
    double u = s.logval;
    FrenetSample fr = frenet(c, s);
    CHECK(vdev(fr.t, {-0.6 * std::sin(u), 0.6 * std::cos(u), 0.8}) <= 1e-9);
    CHECK(vdev(fr.n, {-std::cos(u), -std::sin(u), 0.0}) <= 1e-9);
    CHECK(vdev(fr.b, {0.8 * std::sin(u), -0.8 * std::cos(u), 0.6}) <= 1e-9);
    CHECK(std::fabs(fr.kappa.logval - 0.6) <= 1e-9);
    CHECK(std::fabs(fr.tau.logval - 0.8) <= 1e-9);
    // the frame is multiplicative-orthonormal
    CHECK(std::fabs(mnorm(fr.t).logval - 1.0) <= 1e-9);
    CHECK(std::fabs(mnorm(fr.n).logval - 1.0) <= 1e-9);
    CHECK(std::fabs(mnorm(fr.b).logval - 1.0) <= 1e-9);
    CHECK(std::fabs(minner(fr.t, fr.n).logval) <= 1e-9);
    CHECK(std::fabs(minner(fr.t, fr.b).logval) <= 1e-9);
    CHECK(std::fabs(minner(fr.n, fr.b).logval) <= 1e-9);
  }
}

TEST_CASE("Frenet formula residuals stay below 1e-7 on the test curves") {
  for (const char* name : {"helix35", "circle-fig1", "example411-corrected",
                           "slant-corrected", "clad-corrected",
                           "random-smooth"}) {
    MulCurve c = ensure_natural(preset(name));
    auto grid = log_uniform_grid(std::exp(c.impl->u_lo()),
                                 std::exp(c.impl->u_hi()), 15);
    for (MulScalar s : grid) {
      auto r = frenet_residuals(c, s);
      for (const MulScalar& ri : r)
        CHECK_MESSAGE(ri.logval <= 1e-7, name, " at log s = ", s.logval);
    }
  }
}

TEST_CASE("multiplicative arc length: additivity and helix value") {
  MulCurve c = preset("helix35");
  MulScalar a{0.1}, m{1.0}, b{2.0};
  double whole = arclength(c, a, b).logval;
  double split = arclength(c, a, m).logval + arclength(c, m, b).logval;
  CHECK(whole == doctest::Approx(split).epsilon(1e-11));
  // unit-speed curve: length equals the log-parameter interval
  CHECK(whole == doctest::Approx(1.9).epsilon(1e-10));
  CHECK_THROWS_AS(arclength(c, b, a), Error);
}

TEST_CASE("speed and velocity agree with component derivatives") {
  MulCurve c = preset("random-smooth");
  std::mt19937_64 rng(44001);
  std::uniform_real_distribution<double> lv(0.25, 1.15);
  for (int i = 0; i < 20; ++i) {
    MulScalar s{lv(rng)};
    MulVec3 v = velocity(c, s);
    CHECK(std::fabs(speed(c, s).logval - mnorm(v).logval) <= 1e-13);
  }
  CHECK(is_regular(c, log_uniform_grid(std::exp(0.25), std::exp(1.15), 40)));
}

TEST_CASE("reparametrization produces unit multiplicative speed") {
  MulCurve c = preset("example411-corrected");
  CHECK_FALSE(is_natural(c));
  MulCurve r = reparam_natural(c);
  CHECK(r.reparametrized);
  CHECK(is_natural(r));
  CHECK(r.impl->u_lo() == 0.0);
  for (int i = 0; i <= 32; ++i) {
    double v = r.impl->u_hi() * i / 32.0;
    CHECK(std::fabs(r.impl->speed_at(v) - 1.0) <= 1e-9);
  }
  // total length is preserved
  double direct = arclength(c, c.lo(), c.hi()).logval;
  CHECK(r.impl->u_hi() == doctest::Approx(direct).epsilon(1e-9));
  // ensure_natural is the identity on an already-natural curve
  MulCurve h = preset("helix35");
  CHECK(ensure_natural(h).impl.get() == h.impl.get());
}

TEST_CASE("planar circle lies on a multiplicative sphere") {
  MulCurve c = preset("circle-fig1");
  CHECK(is_natural(c));
  const double z = -2.0 * std::sqrt(3.0);
  MulSphere sph{MulVec3::from_logvec({0.0, 0.0, z}), mone()};
  auto grid = log_uniform_grid(1.0, std::exp(2.0 * M_PI), 30);
  for (MulScalar s : grid) {
    MulVec3 p = MulVec3::from_logvec(c.impl->point(s.logval));
    CHECK(on_sphere(p, sph, 1e-9));
    CHECK(p.comp[2].logval == doctest::Approx(z).epsilon(1e-12));
    // torsion of a planar curve is 0*
    CHECK(std::fabs(frenet(c, s).tau.logval) <= 1e-9);
  }
}

TEST_CASE("isometries preserve kappa and tau") {
  // rotation by 0.7 about x3 plus a shift in the log chart
  const double th = 0.7;
  std::array<Vec3, 3> rows = {Vec3{std::cos(th), -std::sin(th), 0.0},
                              Vec3{std::sin(th), std::cos(th), 0.0},
                              Vec3{0.0, 0.0, 1.0}};
  Vec3 shift{0.4, -1.1, 2.0};
  MulCurve c = preset("helix35");
  MulCurve m = isometry_image(c, rows, shift);
  auto grid = log_uniform_grid(1.5, 100.0, 12);
  for (MulScalar s : grid) {
    FrenetSample a = frenet(c, s), b = frenet(m, s);
    CHECK(std::fabs(a.kappa.logval - b.kappa.logval) <= 1e-9);
    CHECK(std::fabs(a.tau.logval - b.tau.logval) <= 1e-9);
  }
}

TEST_CASE("domain and regularity failures raise domain errors") {
  MulCurve c = preset("helix35");
  CHECK_THROWS_AS(frenet(c, MulScalar{-1.0}), Error);   // outside [0, 2pi]
  CHECK_THROWS_AS(velocity(c, MulScalar{7.0}), Error);  // outside too

  // multiplicative straight line: kappa = 0*, frame undefined
  MulCurve line = make_curve("s", "e^0", "e^0", 1.0, 10.0);
  try {
    frenet(line, MulScalar{1.0});
    FAIL("expected a domain error for kappa = 0*");
  } catch (const Error& e) {
    CHECK(e.code() == ErrCode::domain);
  }

  // non-natural input is rejected with advice to reparametrize
  MulCurve fast = make_curve("e^2 .* s", "e^0", "e^0", 1.0, 10.0);
  try {
    frenet(fast, MulScalar{1.0});
    FAIL("expected a domain error for non-natural parametrization");
  } catch (const Error& e) {
    CHECK(e.code() == ErrCode::domain);
    CHECK(std::string(e.what()).find("reparametrize") != std::string::npos);
  }

  CHECK_THROWS_AS(make_curve("s", "s", "s", -1.0, 5.0), Error);
  CHECK_THROWS_AS(make_curve("s", "s", "s", 5.0, 5.0), Error);
}

TEST_CASE("curve JSON loader") {
  MulCurve c = curve_from_json(R"json({
    "x1": "e^3 /* e^5 .* mcos(s)",
    "x2": "e^3 /* e^5 .* msin(s)",
    "x3": "e^4 /* e^5 .* s",
    "domain": [1.0, 2.5],
    "name": "mini-helix"
  })json");
  CHECK(c.name == "mini-helix");
  CHECK(c.impl->u_lo() == doctest::Approx(0.0));
  CHECK(c.impl->u_hi() == doctest::Approx(std::log(2.5)));
  CHECK(std::fabs(frenet(c, MulScalar{0.5}).kappa.logval - 0.6) <= 1e-9);

  CHECK_THROWS_AS(curve_from_json("not json"), Error);
  CHECK_THROWS_AS(curve_from_json("{\"x1\": \"s\"}"), Error);
  CHECK_THROWS_AS(curve_from_json(
                      R"({"x1":"s","x2":"s","x3":"s","domain":[1.0]})"),
                  Error);
}

TEST_CASE("log-uniform grids include both endpoints") {
  auto g = log_uniform_grid(2.0, 32.0, 5);
  REQUIRE(g.size() == 5);
  CHECK(g.front().logval == doctest::Approx(std::log(2.0)));
  CHECK(g.back().logval == doctest::Approx(std::log(32.0)));
  // uniform spacing in the log chart
  double step = g[1].logval - g[0].logval;
  for (size_t i = 1; i < g.size(); ++i)
    CHECK(g[i].logval - g[i - 1].logval == doctest::Approx(step));
  CHECK_THROWS_AS(log_uniform_grid(-1.0, 2.0, 5), Error);
  CHECK_THROWS_AS(log_uniform_grid(1.0, 2.0, 1), Error);
}
