#include "mulgeo/indicatrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "json.hpp"
#include "mulgeo/format.hpp"
#include "mulgeo/quadrature.hpp"

namespace mulgeo {

const char* to_string(IndicatrixKind kind) {
  switch (kind) {
    case IndicatrixKind::tangent:
      return "tangent";
    case IndicatrixKind::normal:
      return "normal";
    case IndicatrixKind::binormal:
      return "binormal";
  }
  return "?";
}

IndicatrixKind indicatrix_kind_from(const std::string& name) {
  if (name == "tangent") return IndicatrixKind::tangent;
  if (name == "normal") return IndicatrixKind::normal;
  if (name == "binormal") return IndicatrixKind::binormal;
  fail(ErrCode::invalid, "unknown indicatrix kind '" + name +
                             "' (expected tangent, normal, or binormal)");
}

namespace {

Vec3 value_of(const JetVec3& v) {
  return {v[0].value(), v[1].value(), v[2].value()};
}

// Base frame and profile values at one parameter, everything the closed
// forms consume.
struct ClosedContext {
  Vec3 t, n, b;
  double f, lambda, sigma, mu, gamma;
  double kappa, tau;
};

ClosedContext closed_context(const LogCurve& impl, double u) {
  FrameJets fr = frame_jets(impl, u);
  ProfileJets p = profile_jets(fr.kappa, fr.tau);
  ClosedContext x;
  x.t = value_of(fr.t);
  x.n = value_of(fr.n);
  x.b = value_of(fr.b);
  x.f = p.f.value();
  x.lambda = std::sqrt(p.lambda2.value());
  x.sigma = p.sigma.value();
  x.mu = std::sqrt(p.mu2.value());
  x.gamma = p.gamma.value();
  x.kappa = fr.kappa.value();
  x.tau = fr.tau.value();
  return x;
}

}  // namespace

MulVec3 indicatrix_point(const MulCurve& c, IndicatrixKind kind, MulScalar s) {
  FrameJets fr = frame_jets(*c.impl, s.logval);
  const JetVec3& v = kind == IndicatrixKind::tangent   ? fr.t
                     : kind == IndicatrixKind::normal ? fr.n
                                                      : fr.b;
  return MulVec3::from_logvec(value_of(v));
}

std::vector<MulVec3> indicatrix_curve(const MulCurve& c, IndicatrixKind kind,
                                      const std::vector<MulScalar>& grid) {
  std::vector<MulVec3> out;
  out.reserve(grid.size());
  for (MulScalar s : grid) out.push_back(indicatrix_point(c, kind, s));
  return out;
}

ArcParamResult arc_param(const MulCurve& c, IndicatrixKind kind, MulScalar s0,
                         MulScalar s1) {
  c.impl->check_domain(s0.logval);
  c.impl->check_domain(s1.logval);
  if (s0.logval > s1.logval) fail(ErrCode::domain, "arc_param needs s0 <= s1");
  bool flagged = false;
  auto integrand = [&](double u) {
    FrameJets fr = frame_jets(*c.impl, u);
    double k = fr.kappa.value(), t = fr.tau.value();
    switch (kind) {
      case IndicatrixKind::tangent:
        return k;
      case IndicatrixKind::normal:
        return std::sqrt(k * k + t * t);
      case IndicatrixKind::binormal:
        if (t <= 0.0) flagged = true;
        return t;
    }
    return 0.0;
  };
  ArcParamResult r;
  r.value = MulScalar{adaptive_simpson(integrand, s0.logval, s1.logval)};
  r.tau_sign_flagged = flagged;
  return r;
}

IndicatrixApparatus indicatrix_closed(const MulCurve& c, IndicatrixKind kind,
                                      MulScalar s, bool with_arc) {
  ClosedContext x = closed_context(*c.impl, s.logval);
  IndicatrixApparatus a;
  a.s = s;
  a.f = MulScalar{x.f};
  a.sigma = MulScalar{x.sigma};
  Vec3 T{}, N{}, B{};
  double ki = 0, ti = 0;
  switch (kind) {
    case IndicatrixKind::tangent: {
      T = x.n;
      N = (-x.t + x.f * x.b) / x.lambda;
      B = (x.f * x.t + x.b) / x.lambda;
      ki = x.lambda;
      ti = x.sigma * x.lambda;
      break;
    }
    case IndicatrixKind::normal: {
      Vec3 Nt = (-x.t + x.f * x.b) / x.lambda;
      Vec3 Bt = (x.f * x.t + x.b) / x.lambda;
      T = Nt;
      N = (x.sigma * Bt - x.n) / x.mu;
      B = (x.sigma * x.n + Bt) / x.mu;
      ki = x.mu;
      ti = x.gamma * x.lambda * x.mu;
      break;
    }
    case IndicatrixKind::binormal: {
      if (std::fabs(x.f) < 1e-12)
        fail(ErrCode::domain,
             "binormal indicatrix closed forms divide by f = tau /* kappa, "
             "which is 0* at s = " + fmt_real(s.value()));
      T = -x.n;
      N = (x.t - x.f * x.b) / x.lambda;
      B = (x.f * x.t + x.b) / x.lambda;
      ki = x.lambda / x.f;
      ti = -x.sigma * x.lambda / x.f;
      break;
    }
  }
  a.T = MulVec3::from_logvec(T);
  a.N = MulVec3::from_logvec(N);
  a.B = MulVec3::from_logvec(B);
  a.kappa_ind = MulScalar{ki};
  a.tau_ind = MulScalar{ti};
  if (with_arc) a.arc_param = arc_param(c, kind, c.lo(), s).value;
  return a;
}

IndicatrixLogCurve::IndicatrixLogCurve(std::shared_ptr<const LogCurve> base,
                                       IndicatrixKind kind)
    : base_(std::move(base)), kind_(kind) {}

JetVec3 IndicatrixLogCurve::jets(double u) const {
  FrameJets fr = frame_jets(*base_, u);
  switch (kind_) {
    case IndicatrixKind::tangent:
      return fr.t;
    case IndicatrixKind::normal:
      return fr.n;
    case IndicatrixKind::binormal:
      return fr.b;
  }
  return fr.t;
}

DirectIndicatrix::DirectIndicatrix(const MulCurve& c, IndicatrixKind kind,
                                   int cache_size)
    : base_(c),
      ind_(std::make_shared<IndicatrixLogCurve>(c.impl, kind)),
      nat_(std::make_shared<ReparamLogCurve>(ind_, cache_size)) {}

MulScalar DirectIndicatrix::arc_to(MulScalar s) const {
  base_.impl->check_domain(s.logval);
  return MulScalar{nat_->arc_of(s.logval)};
}

IndicatrixApparatus DirectIndicatrix::at(MulScalar s) const {
  base_.impl->check_domain(s.logval);
  double v = nat_->arc_of(s.logval);
  FrameJets fj = frame_jets(*nat_, v);
  IndicatrixApparatus a;
  a.s = s;
  a.arc_param = MulScalar{v};
  a.T = MulVec3::from_logvec(value_of(fj.t));
  a.N = MulVec3::from_logvec(value_of(fj.n));
  a.B = MulVec3::from_logvec(value_of(fj.b));
  a.kappa_ind = MulScalar{fj.kappa.value()};
  a.tau_ind = MulScalar{fj.tau.value()};
  HelixQuantities q = helix_profiles(base_, s);
  a.f = MulScalar{q.f};
  a.sigma = MulScalar{q.sigma};
  return a;
}

std::vector<IndicatrixApparatus> indicatrix_direct(
    const MulCurve& c, IndicatrixKind kind,
    const std::vector<MulScalar>& grid) {
  DirectIndicatrix d(c, kind);
  std::vector<IndicatrixApparatus> out;
  out.reserve(grid.size());
  for (MulScalar s : grid) out.push_back(d.at(s));
  return out;
}

namespace {

double vec_diff(const Vec3& a, const Vec3& b) {
  return std::max({std::fabs(a[0] - b[0]), std::fabs(a[1] - b[1]),
                   std::fabs(a[2] - b[2])});
}

// Running max over the grid; -1 marks "no sample contributed" (skipped).
struct Acc {
  const char* kind;
  const char* quantity;
  const char* candidate;
  double maxdiff = -1.0;
  void add(double d) { maxdiff = std::max(maxdiff, d); }
};

}  // namespace

std::vector<AdjudicationRow> adjudicate_indicatrix(
    const MulCurve& c, const std::vector<MulScalar>& grid, double match_tol) {
  if (grid.empty()) fail(ErrCode::invalid, "adjudication needs a nonempty grid");

  DirectIndicatrix dir_t(c, IndicatrixKind::tangent);
  DirectIndicatrix dir_n(c, IndicatrixKind::normal);
  std::unique_ptr<DirectIndicatrix> dir_b;
  std::string binormal_error;
  try {
    dir_b = std::make_unique<DirectIndicatrix>(c, IndicatrixKind::binormal);
  } catch (const Error& e) {
    binormal_error = e.what();
  }

  Acc a_Tt{"tangent", "T_t", "n [printed]"};
  Acc a_Nt{"tangent", "N_t", "(-* t +* f .* b) /* lambda [printed]"};
  Acc a_Bt{"tangent", "B_t", "(f .* t +* b) /* lambda [printed]"};
  Acc a_kt{"tangent", "kappa_t", "lambda [printed]"};
  Acc a_tt{"tangent", "tau_t", "sigma .* lambda [printed]"};

  Acc a_Tn{"normal", "T_n", "N_t [printed]"};
  Acc a_Nn{"normal", "N_n", "(sigma .* B_t -* n) /* mu [printed, regrouped]"};
  Acc a_Bn1{"normal", "B_n", "(sigma .* n +* B_t) /* mu [amended]"};
  Acc a_Bn2{"normal", "B_n", "(B_t -* sigma .* n) /* mu [printed]"};
  Acc a_kn1{"normal", "kappa_n", "(e +* sigma^{2*})^{1/2*} = mu [amended]"};
  Acc a_kn2{"normal", "kappa_n", "e +* sigma^{2*} [printed]"};
  Acc a_tn1{"normal", "tau_n", "Gamma .* lambda .* mu [derived]"};
  Acc a_tn2{"normal", "tau_n", "Gamma .* mu [proof form]"};
  Acc a_tn3{"normal", "tau_n", "Gamma .* lambda^{2*} [printed]"};

  Acc a_Tb{"binormal", "T_b", "-* n [printed]"};
  Acc a_Nb{"binormal", "N_b", "(t -* f .* b) /* lambda [printed]"};
  Acc a_Bb{"binormal", "B_b", "(f .* t +* b) /* lambda [printed]"};
  Acc a_kb{"binormal", "kappa_b", "lambda /* f [printed]"};
  Acc a_tb1{"binormal", "tau_b", "-* sigma .* lambda /* f [amended]"};
  Acc a_tb2{"binormal", "tau_b", "-* sigma .* mu /* f [printed]"};

  Acc a_g1{"identity", "Gamma", "tau_n /* kappa_n [claimed]"};
  Acc a_g2{"identity", "Gamma", "(tau_n /* kappa_n) /* lambda [derived]"};

  for (MulScalar s : grid) {
    ClosedContext x = closed_context(*c.impl, s.logval);
    Vec3 Nt = (-x.t + x.f * x.b) / x.lambda;
    Vec3 Bt = (x.f * x.t + x.b) / x.lambda;

    IndicatrixApparatus dt = dir_t.at(s);
    a_Tt.add(vec_diff(dt.T.logvec(), x.n));
    a_Nt.add(vec_diff(dt.N.logvec(), Nt));
    a_Bt.add(vec_diff(dt.B.logvec(), Bt));
    a_kt.add(std::fabs(dt.kappa_ind.logval - x.lambda));
    a_tt.add(std::fabs(dt.tau_ind.logval - x.sigma * x.lambda));

    IndicatrixApparatus dn = dir_n.at(s);
    a_Tn.add(vec_diff(dn.T.logvec(), Nt));
    a_Nn.add(vec_diff(dn.N.logvec(), (x.sigma * Bt - x.n) / x.mu));
    a_Bn1.add(vec_diff(dn.B.logvec(), (x.sigma * x.n + Bt) / x.mu));
    a_Bn2.add(vec_diff(dn.B.logvec(), (Bt - x.sigma * x.n) / x.mu));
    a_kn1.add(std::fabs(dn.kappa_ind.logval - x.mu));
    a_kn2.add(std::fabs(dn.kappa_ind.logval - (1.0 + x.sigma * x.sigma)));
    a_tn1.add(std::fabs(dn.tau_ind.logval - x.gamma * x.lambda * x.mu));
    a_tn2.add(std::fabs(dn.tau_ind.logval - x.gamma * x.mu));
    a_tn3.add(std::fabs(dn.tau_ind.logval - x.gamma * x.lambda * x.lambda));

    double ratio = dn.tau_ind.logval / dn.kappa_ind.logval;
    a_g1.add(std::fabs(x.gamma - ratio));
    a_g2.add(std::fabs(x.gamma - ratio / x.lambda));

    // /* f divisions: skip samples too close to f = 0* (log f = 0).
    if (dir_b && std::fabs(x.f) >= 0.05) {
      IndicatrixApparatus db = dir_b->at(s);
      a_Tb.add(vec_diff(db.T.logvec(), -x.n));
      a_Nb.add(vec_diff(db.N.logvec(), (x.t - x.f * x.b) / x.lambda));
      a_Bb.add(vec_diff(db.B.logvec(), Bt));
      a_kb.add(std::fabs(db.kappa_ind.logval - x.lambda / x.f));
      a_tb1.add(std::fabs(db.tau_ind.logval + x.sigma * x.lambda / x.f));
      a_tb2.add(std::fabs(db.tau_ind.logval + x.sigma * x.mu / x.f));
    }
  }

  const Acc* accs[] = {&a_Tt,  &a_Nt,  &a_Bt,  &a_kt,  &a_tt,  &a_Tn,
                       &a_Nn,  &a_Bn1, &a_Bn2, &a_kn1, &a_kn2, &a_tn1,
                       &a_tn2, &a_tn3, &a_Tb,  &a_Nb,  &a_Bb,  &a_kb,
                       &a_tb1, &a_tb2, &a_g1,  &a_g2};
  std::vector<AdjudicationRow> rows;
  for (const Acc* a : accs) {
    AdjudicationRow r;
    r.kind = a->kind;
    r.quantity = a->quantity;
    r.candidate = a->candidate;
    if (a->maxdiff < 0) {
      r.max_absdiff = std::numeric_limits<double>::quiet_NaN();
      r.status = std::string(a->kind) == "binormal" && !binormal_error.empty()
                     ? "error: " + binormal_error
                     : "skipped";
    } else {
      r.max_absdiff = a->maxdiff;
      r.status = a->maxdiff <= match_tol ? "match" : "mismatch";
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string adjudication_to_json(const std::vector<AdjudicationRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const AdjudicationRow& r : rows) {
    nlohmann::ordered_json j;
    j["kind"] = r.kind;
    j["quantity"] = r.quantity;
    j["candidate"] = r.candidate;
    if (std::isnan(r.max_absdiff))
      j["max_absdiff"] = nullptr;
    else
      j["max_absdiff"] = r.max_absdiff;
    j["status"] = r.status;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace mulgeo
