#include "mulgeo/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "mulgeo/format.hpp"
#include "mulgeo/helix.hpp"
#include "mulgeo/quadrature.hpp"

namespace mulgeo {

ClassicalCurveView to_log_chart(const MulCurve& c) { return {c.impl}; }

MulVec3 lift(const ClassicalCurveView& v, MulScalar s) {
  return MulVec3::from_logvec(v.point(s.logval));
}

namespace {

JetVec3 d1(const JetVec3& x) {
  return {jet_derivative(x[0]), jet_derivative(x[1]), jet_derivative(x[2])};
}

// Frenet apparatus of a jet-valued curve u -> x(u) in general
// parametrization. Used twice: on the log image itself and on its
// frame-vector curves.
struct GeneralFrenet {
  JetVec3 t, n, b;
  Jet kappa, tau, speed;
};

GeneralFrenet general_frenet(const JetVec3& x) {
  JetVec3 xp = d1(x), xpp = d1(xp), xppp = d1(xpp);
  Jet n2 = dot(xp, xp);
  if (n2.value() < 1e-20)
    fail(ErrCode::numeric, "classical frenet: irregular point (|x'| ~ 0)");
  Jet sp = jet_sqrt(n2);
  JetVec3 cr = cross(xp, xpp);
  Jet crn2 = dot(cr, cr);
  if (crn2.value() < kKappaMin * kKappaMin)
    fail(ErrCode::numeric, "classical frenet: degenerate curvature");
  Jet crn = jet_sqrt(crn2);
  GeneralFrenet g;
  g.speed = sp;
  g.t = {xp[0] / sp, xp[1] / sp, xp[2] / sp};
  g.b = {cr[0] / crn, cr[1] / crn, cr[2] / crn};
  g.n = cross(g.b, g.t);
  g.kappa = crn / (n2 * sp);
  g.tau = dot(cr, xppp) / crn2;
  return g;
}

Vec3 value_of(const JetVec3& v) {
  return {v[0].value(), v[1].value(), v[2].value()};
}

}  // namespace

ClassicalFrenet classical_frenet(const ClassicalCurveView& v, double u) {
  v.y->check_domain(u);
  GeneralFrenet g = general_frenet(v.jets(u));
  ClassicalFrenet r;
  r.t = value_of(g.t);
  r.n = value_of(g.n);
  r.b = value_of(g.b);
  r.kappa = g.kappa.value();
  r.tau = g.tau.value();
  r.speed = g.speed.value();
  return r;
}

ClassicalChain classical_chain(const ClassicalCurveView& v, double u) {
  v.y->check_domain(u);
  GeneralFrenet g = general_frenet(v.jets(u));
  auto ds = [&](const Jet& q) { return jet_derivative(q) / g.speed; };
  Jet f = g.tau / g.kappa;
  Jet lambda2 = 1.0 + f * f;
  Jet sigma = ds(f) / (g.kappa * jet_pow(lambda2, 1.5));
  Jet mu2 = 1.0 + sigma * sigma;
  Jet gamma = ds(sigma) / (g.kappa * lambda2 * jet_pow(mu2, 1.5));
  double k = g.kappa.value(), t = g.tau.value();
  double denom = std::sqrt(k * k + t * t) * std::sqrt(mu2.value()) *
                 std::pow(1.0 + gamma.value() * gamma.value(), 1.5);
  ClassicalChain r;
  r.f = f.value();
  r.sigma = sigma.value();
  r.gamma = gamma.value();
  r.psi = ds(gamma).value() / denom;
  return r;
}

namespace {

const JetVec3& pick(const GeneralFrenet& g, IndicatrixKind kind) {
  switch (kind) {
    case IndicatrixKind::tangent:
      return g.t;
    case IndicatrixKind::normal:
      return g.n;
    case IndicatrixKind::binormal:
      return g.b;
  }
  return g.t;
}

}  // namespace

ClassicalIndicatrix classical_indicatrix(const ClassicalCurveView& v,
                                         IndicatrixKind kind, double u) {
  v.y->check_domain(u);
  GeneralFrenet base = general_frenet(v.jets(u));
  GeneralFrenet ind = general_frenet(pick(base, kind));
  ClassicalIndicatrix r;
  r.T = value_of(ind.t);
  r.N = value_of(ind.n);
  r.B = value_of(ind.b);
  r.kappa = ind.kappa.value();
  r.tau = ind.tau.value();
  return r;
}

double classical_indicatrix_arc(const ClassicalCurveView& v,
                                IndicatrixKind kind, double u0, double u1) {
  if (u0 > u1)
    fail(ErrCode::domain, "classical_indicatrix_arc needs u0 <= u1");
  auto integrand = [&](double u) {
    GeneralFrenet base = general_frenet(v.jets(u));
    if (kind == IndicatrixKind::binormal)
      return base.tau.value() * base.speed.value();
    const JetVec3& x = pick(base, kind);
    Vec3 xp = {x[0].deriv(1), x[1].deriv(1), x[2].deriv(1)};
    return norm(xp);
  };
  return adaptive_simpson(integrand, u0, u1);
}

namespace {

void push_vec(std::vector<CompareRow>& rows, double s, const std::string& name,
              const Vec3& mult, const Vec3& cls) {
  for (int i = 0; i < 3; ++i)
    rows.push_back({s, name + "." + std::to_string(i + 1), mult[i], cls[i],
                    std::fabs(mult[i] - cls[i])});
}

void push_scalar(std::vector<CompareRow>& rows, double s,
                 const std::string& name, double mult, double cls) {
  rows.push_back({s, name, mult, cls, std::fabs(mult - cls)});
}

}  // namespace

CompareReport compare(const MulCurve& c, const std::vector<MulScalar>& grid) {
  if (grid.size() < 2) fail(ErrCode::invalid, "compare needs >= 2 samples");
  ClassicalCurveView view = to_log_chart(c);
  CompareReport rep;

  // Arc parameters accumulate segment by segment along the (ascending) grid.
  double mult_arc[3] = {0, 0, 0};
  double cls_arc[3] = {0, 0, 0};
  const IndicatrixKind kinds[3] = {IndicatrixKind::tangent,
                                   IndicatrixKind::normal,
                                   IndicatrixKind::binormal};
  const char* suffix[3] = {"t", "n", "b"};
  double prev_u = grid.front().logval;

  for (MulScalar s : grid) {
    if (s.logval < prev_u)
      fail(ErrCode::invalid, "compare grid must be ascending");
    try {
      double mult_seg[3], cls_seg[3];
      for (int k = 0; k < 3; ++k) {
        mult_seg[k] = arc_param(c, kinds[k], MulScalar{prev_u}, s).value.logval;
        cls_seg[k] = classical_indicatrix_arc(view, kinds[k], prev_u, s.logval);
      }
      for (int k = 0; k < 3; ++k) {
        mult_arc[k] += mult_seg[k];
        cls_arc[k] += cls_seg[k];
      }
      prev_u = s.logval;

      FrenetSample fs = frenet(c, s);
      HelixQuantities hq = helix_profiles(c, s);
      ClassicalFrenet cf = classical_frenet(view, s.logval);
      ClassicalChain cc = classical_chain(view, s.logval);

      double sv = s.value();
      push_vec(rep.rows, sv, "t", fs.t.logvec(), cf.t);
      push_vec(rep.rows, sv, "n", fs.n.logvec(), cf.n);
      push_vec(rep.rows, sv, "b", fs.b.logvec(), cf.b);
      push_scalar(rep.rows, sv, "kappa", fs.kappa.logval, cf.kappa);
      push_scalar(rep.rows, sv, "tau", fs.tau.logval, cf.tau);
      push_scalar(rep.rows, sv, "f", hq.f, cc.f);
      push_scalar(rep.rows, sv, "sigma", hq.sigma, cc.sigma);
      push_scalar(rep.rows, sv, "gamma", hq.gamma, cc.gamma);
      push_scalar(rep.rows, sv, "psi", hq.psi, cc.psi);

      for (int k = 0; k < 3; ++k) {
        std::string sx = suffix[k];
        if (kinds[k] == IndicatrixKind::binormal && hq.f < 0.05) {
          // closed forms divide by f; contracted for f > 0* only
          push_scalar(rep.rows, sv, "s_b", mult_arc[k], cls_arc[k]);
          continue;
        }
        IndicatrixApparatus ap =
            indicatrix_closed(c, kinds[k], s, /*with_arc=*/false);
        ClassicalIndicatrix ci = classical_indicatrix(view, kinds[k], s.logval);
        push_vec(rep.rows, sv, "T_" + sx, ap.T.logvec(), ci.T);
        push_vec(rep.rows, sv, "N_" + sx, ap.N.logvec(), ci.N);
        push_vec(rep.rows, sv, "B_" + sx, ap.B.logvec(), ci.B);
        push_scalar(rep.rows, sv, "kappa_" + sx, ap.kappa_ind.logval, ci.kappa);
        push_scalar(rep.rows, sv, "tau_" + sx, ap.tau_ind.logval, ci.tau);
        push_scalar(rep.rows, sv, "s_" + sx, mult_arc[k], cls_arc[k]);
      }
    } catch (const Error& e) {
      rep.sample_errors.emplace_back(s.value(), e.what());
      prev_u = s.logval;
    }
  }

  double sum = 0;
  for (const CompareRow& r : rep.rows) {
    rep.max_absdiff = std::max(rep.max_absdiff, r.absdiff);
    sum += r.absdiff;
  }
  rep.mean_absdiff = rep.rows.empty() ? 0.0 : sum / rep.rows.size();
  return rep;
}

std::string CompareReport::to_csv() const {
  std::string out = "s,quantity,mult_logval,classical,absdiff\n";
  for (const CompareRow& r : rows) {
    out += fmt_real(r.s);
    out += ',';
    out += r.quantity;
    out += ',';
    out += fmt_real(r.mult_logval);
    out += ',';
    out += fmt_real(r.classical);
    out += ',';
    out += fmt_real(r.absdiff);
    out += '\n';
  }
  return out;
}

}  // namespace mulgeo
