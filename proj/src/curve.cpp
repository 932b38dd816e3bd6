#include "mulgeo/curve.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "mulgeo/quadrature.hpp"

namespace mulgeo {

Vec3 LogCurve::point(double u) const {
  JetVec3 j = jets(u);
  return {j[0].value(), j[1].value(), j[2].value()};
}

Vec3 LogCurve::dpoint(double u) const {
  JetVec3 j = jets(u);
  return {j[0].c[1], j[1].c[1], j[2].c[1]};
}

double LogCurve::speed_at(double u) const { return norm(dpoint(u)); }

void LogCurve::check_domain(double u) const {
  double pad = 1e-9 * (1.0 + std::fabs(u_hi() - u_lo()));
  if (u < u_lo() - pad || u > u_hi() + pad)
    fail(ErrCode::domain, "parameter outside curve domain");
}

ExprLogCurve::ExprLogCurve(CurveExpr x1, CurveExpr x2, CurveExpr x3,
                           double ulo, double uhi)
    : x_{std::move(x1), std::move(x2), std::move(x3)}, ulo_(ulo), uhi_(uhi) {
  if (!(ulo < uhi))
    fail(ErrCode::domain, "curve domain needs lo < hi");
}

JetVec3 ExprLogCurve::jets(double u) const {
  check_domain(u);
  return {x_[0].eval_jet(u), x_[1].eval_jet(u), x_[2].eval_jet(u)};
}

ReparamLogCurve::ReparamLogCurve(std::shared_ptr<const LogCurve> base,
                                 int cache_size)
    : base_(std::move(base)) {
  int m = std::max(cache_size, 16);
  double a = base_->u_lo(), b = base_->u_hi();
  nodes_.resize(m + 1);
  cum_.resize(m + 1);
  cum_[0] = 0.0;
  for (int i = 0; i <= m; ++i) nodes_[i] = a + (b - a) * i / m;
  auto spd = [&](double u) { return base_->speed_at(u); };
  for (int i = 0; i < m; ++i) {
    double seg = adaptive_simpson(spd, nodes_[i], nodes_[i + 1], 1e-12, 40);
    if (!(seg > 0.0))
      fail(ErrCode::numeric, "arc length not strictly increasing");
    cum_[i + 1] = cum_[i] + seg;
  }
  length_ = cum_[m];
}

double ReparamLogCurve::arc_from_node(int i, double u) const {
  auto spd = [&](double uu) { return base_->speed_at(uu); };
  return cum_[i] + adaptive_simpson(spd, nodes_[i], u, 1e-13, 40);
}

double ReparamLogCurve::arc_of(double base_u) const {
  int i = static_cast<int>(std::upper_bound(nodes_.begin(), nodes_.end(), base_u) -
                           nodes_.begin());
  i = std::clamp(i - 1, 0, static_cast<int>(nodes_.size()) - 2);
  return arc_from_node(i, base_u);
}

double ReparamLogCurve::base_u_of(double v) const {
  double pad = 1e-9 * (1.0 + length_);
  if (v < -pad || v > length_ + pad)
    fail(ErrCode::domain, "natural parameter outside [0*, length]");
  v = std::clamp(v, 0.0, length_);
  int i = static_cast<int>(std::upper_bound(cum_.begin(), cum_.end(), v) -
                           cum_.begin());
  i = std::clamp(i - 1, 0, static_cast<int>(cum_.size()) - 2);
  double lo = nodes_[i], hi = nodes_[i + 1];
  double frac = (v - cum_[i]) / (cum_[i + 1] - cum_[i]);
  double u = lo + frac * (hi - lo);
  double tol = 1e-13 * std::max(1.0, length_);
  for (int it = 0; it < 80; ++it) {
    double err = arc_from_node(i, u) - v;
    if (std::fabs(err) <= tol) return u;
    if (err > 0.0)
      hi = u;
    else
      lo = u;
    double step = err / base_->speed_at(u);
    double next = u - step;
    u = (next > lo && next < hi) ? next : 0.5 * (lo + hi);
  }
  fail(ErrCode::numeric, "arc-length inversion did not converge");
}

JetVec3 ReparamLogCurve::jets(double v) const {
  double u = base_u_of(v);
  JetVec3 y = base_->jets(u);
  JetVec3 yp = {jet_derivative(y[0]), jet_derivative(y[1]),
                jet_derivative(y[2])};
  Jet spd = jet_sqrt(dot(yp, yp));  // valid to order 5
  // Arc-length increment as a series in du: a(du) = sum spd_c[k-1]/k du^k.
  Jet a{};
  for (int k = 1; k <= Jet::kOrder; ++k) a.c[k] = spd.c[k - 1] / k;
  Jet du_of_dv = jet_revert(a);
  return {jet_compose(y[0], du_of_dv), jet_compose(y[1], du_of_dv),
          jet_compose(y[2], du_of_dv)};
}

IsometryLogCurve::IsometryLogCurve(std::shared_ptr<const LogCurve> base,
                                   const std::array<Vec3, 3>& rows,
                                   const Vec3& shift)
    : base_(std::move(base)), rows_(rows), shift_(shift) {}

JetVec3 IsometryLogCurve::jets(double u) const {
  JetVec3 y = base_->jets(u);
  JetVec3 r;
  for (int i = 0; i < 3; ++i) {
    r[i] = rows_[i][0] * y[0] + rows_[i][1] * y[1] + rows_[i][2] * y[2];
    r[i].c[0] += shift_[i];
  }
  return r;
}

MulCurve make_curve(const std::string& x1, const std::string& x2,
                    const std::string& x3, double s_lo, double s_hi,
                    const std::string& name) {
  if (!(s_lo > 0.0) || !(s_hi > s_lo))
    fail(ErrCode::domain, "curve domain needs 0 < lo < hi");
  auto parse_c = [](const std::string& text, const char* which) {
    try {
      return CurveExpr::parse(text);
    } catch (const Error& e) {
      throw Error(e.code(), std::string(which) + ": " + e.what(), e.offset());
    }
  };
  MulCurve c;
  c.impl = std::make_shared<ExprLogCurve>(
      parse_c(x1, "x1"), parse_c(x2, "x2"), parse_c(x3, "x3"),
      std::log(s_lo), std::log(s_hi));
  c.name = name;
  c.components = {x1, x2, x3};
  return c;
}

MulCurve curve_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrCode::parse, std::string("curve file is not valid JSON: ") + e.what());
  }
  for (const char* key : {"x1", "x2", "x3", "domain"})
    if (!j.contains(key))
      fail(ErrCode::parse, std::string("curve file missing field '") + key + "'");
  if (!j["domain"].is_array() || j["domain"].size() != 2 ||
      !j["domain"][0].is_number() || !j["domain"][1].is_number())
    fail(ErrCode::parse, "curve file 'domain' must be [lo, hi]");
  return make_curve(j["x1"].get<std::string>(), j["x2"].get<std::string>(),
                    j["x3"].get<std::string>(), j["domain"][0].get<double>(),
                    j["domain"][1].get<double>(),
                    j.value("name", std::string{}));
}

FrameJets frame_jets(const LogCurve& c, double u) {
  c.check_domain(u);
  JetVec3 y = c.jets(u);
  JetVec3 yp = {jet_derivative(y[0]), jet_derivative(y[1]),
                jet_derivative(y[2])};
  FrameJets f;
  f.speed = jet_sqrt(dot(yp, yp));
  if (std::fabs(f.speed.value() - 1.0) > kNaturalTol)
    fail(ErrCode::domain,
         "curve is not naturally parametrized here (|log speed - 1| = " +
             std::to_string(std::fabs(f.speed.value() - 1.0)) +
             "); reparametrize first");
  f.t = yp;
  JetVec3 ypp = {jet_derivative(yp[0]), jet_derivative(yp[1]),
                 jet_derivative(yp[2])};
  Jet k2 = dot(ypp, ypp);
  if (k2.value() < kKappaMin * kKappaMin)
    fail(ErrCode::domain, "undefined frame: kappa = 0*");
  f.kappa = jet_sqrt(k2);
  f.n = {ypp[0] / f.kappa, ypp[1] / f.kappa, ypp[2] / f.kappa};
  f.b = cross(f.t, f.n);
  JetVec3 np = {jet_derivative(f.n[0]), jet_derivative(f.n[1]),
                jet_derivative(f.n[2])};
  f.tau = dot(np, f.b);
  return f;
}

MulVec3 velocity(const MulCurve& c, MulScalar s) {
  c.impl->check_domain(s.logval);
  return MulVec3::from_logvec(c.impl->dpoint(s.logval));
}

MulScalar speed(const MulCurve& c, MulScalar s) {
  return mnorm(velocity(c, s));
}

bool is_regular(const MulCurve& c, const std::vector<MulScalar>& grid) {
  for (MulScalar s : grid)
    if (speed(c, s).logval < 1e-12) return false;
  return true;
}

MulScalar arclength(const MulCurve& c, MulScalar s0, MulScalar s1) {
  if (s0.logval > s1.logval) fail(ErrCode::domain, "arclength needs s0 <= s1");
  c.impl->check_domain(s0.logval);
  c.impl->check_domain(s1.logval);
  auto spd = [&](double u) { return c.impl->speed_at(u); };
  return MulScalar{adaptive_simpson(spd, s0.logval, s1.logval, 1e-12, 40)};
}

bool is_natural(const MulCurve& c, int samples, double tol) {
  double a = c.impl->u_lo(), b = c.impl->u_hi();
  for (int i = 0; i <= samples; ++i) {
    double u = a + (b - a) * i / samples;
    if (std::fabs(c.impl->speed_at(u) - 1.0) > tol) return false;
  }
  return true;
}

MulCurve reparam_natural(const MulCurve& c, int grid_size) {
  MulCurve r;
  r.impl = std::make_shared<ReparamLogCurve>(c.impl, grid_size);
  r.name = c.name;
  r.corrected = c.corrected;
  r.reparametrized = true;
  r.note = c.note;
  return r;
}

MulCurve ensure_natural(const MulCurve& c, int grid_size) {
  return is_natural(c) ? c : reparam_natural(c, grid_size);
}

FrenetSample frenet(const MulCurve& c, MulScalar s) {
  FrameJets f = frame_jets(*c.impl, s.logval);
  FrenetSample out;
  out.s = s;
  out.t = MulVec3::from_logvec({f.t[0].value(), f.t[1].value(), f.t[2].value()});
  out.n = MulVec3::from_logvec({f.n[0].value(), f.n[1].value(), f.n[2].value()});
  out.b = MulVec3::from_logvec({f.b[0].value(), f.b[1].value(), f.b[2].value()});
  out.kappa = MulScalar{f.kappa.value()};
  out.tau = MulScalar{f.tau.value()};
  return out;
}

std::array<MulScalar, 3> frenet_residuals(const MulCurve& c, MulScalar s) {
  FrameJets f = frame_jets(*c.impl, s.logval);
  auto value_of = [](const JetVec3& v) {
    return Vec3{v[0].value(), v[1].value(), v[2].value()};
  };
  auto dvalue_of = [](const JetVec3& v) {
    return Vec3{v[0].c[1], v[1].c[1], v[2].c[1]};
  };
  double kap = f.kappa.value(), tau = f.tau.value();
  Vec3 t = value_of(f.t), n = value_of(f.n), b = value_of(f.b);
  Vec3 tp = dvalue_of(f.t), np = dvalue_of(f.n), bp = dvalue_of(f.b);
  Vec3 r1 = tp - kap * n;
  Vec3 r2 = np + kap * t - tau * b;
  Vec3 r3 = bp + tau * n;
  return {MulScalar{norm(r1)}, MulScalar{norm(r2)}, MulScalar{norm(r3)}};
}

bool on_sphere(const MulVec3& p, const MulSphere& sph, double tol) {
  double d = mnorm(vsub(p, sph.center)).logval;
  return std::fabs(d - sph.radius.logval) <= tol;
}

MulCurve isometry_image(const MulCurve& c, const std::array<Vec3, 3>& rows,
                        const Vec3& shift) {
  MulCurve r;
  r.impl = std::make_shared<IsometryLogCurve>(c.impl, rows, shift);
  r.name = c.name.empty() ? "isometry-image" : c.name + "-isometry";
  r.corrected = c.corrected;
  r.reparametrized = c.reparametrized;
  return r;
}

std::vector<MulScalar> log_uniform_grid(double s_lo, double s_hi, int n) {
  if (!(s_lo > 0.0) || !(s_hi > s_lo) || n < 2)
    fail(ErrCode::domain, "grid needs 0 < lo < hi and n >= 2");
  std::vector<MulScalar> g(n);
  double a = std::log(s_lo), b = std::log(s_hi);
  for (int i = 0; i < n; ++i)
    g[i] = MulScalar{a + (b - a) * i / (n - 1)};
  return g;
}

}  // namespace mulgeo
