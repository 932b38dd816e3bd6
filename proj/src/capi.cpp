#include "mulgeo.h"

#include <cstdlib>
#include <cstring>
#include <mutex>
#include <string>

#include "json.hpp"
#include "mulgeo/curve.hpp"
#include "mulgeo/expr.hpp"
#include "mulgeo/format.hpp"
#include "mulgeo/helix.hpp"
#include "mulgeo/indicatrix.hpp"
#include "mulgeo/mularith.hpp"
#include "mulgeo/mulvec.hpp"
#include "mulgeo/oracle.hpp"
#include "mulgeo/presets.hpp"

using namespace mulgeo;

struct mg_curve {
  MulCurve c;
  // lazily built direct-indicatrix engines, one per kind
  mutable std::mutex mu;
  mutable std::shared_ptr<const DirectIndicatrix> direct[3];
};

namespace {

thread_local std::string t_error;
thread_local size_t t_offset = MG_NO_OFFSET;

mg_status set_error(mg_status st, const std::string& msg,
                    size_t offset = MG_NO_OFFSET) {
  t_error = msg;
  t_offset = offset;
  return st;
}

mg_status status_of(ErrCode code) {
  switch (code) {
    case ErrCode::parse:
      return MG_ERR_PARSE;
    case ErrCode::domain:
      return MG_ERR_DOMAIN;
    case ErrCode::io:
      return MG_ERR_IO;
    case ErrCode::numeric:
      return MG_ERR_NUMERIC;
    case ErrCode::unsupported:
      return MG_ERR_UNSUPPORTED;
    case ErrCode::invalid:
      return MG_ERR_INVALID;
  }
  return MG_ERR_INVALID;
}

// Runs the body, converting exceptions to status codes.
template <typename F>
mg_status guarded(F&& body) {
  try {
    body();
    return MG_OK;
  } catch (const Error& e) {
    return set_error(status_of(e.code()), e.what(), e.offset());
  } catch (const std::exception& e) {
    return set_error(MG_ERR_INVALID, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

mg_status require(bool cond, const char* msg) {
  if (cond) return MG_OK;
  return set_error(MG_ERR_INVALID, msg);
}

MulVec3 vec_of(const double a[3]) {
  return MulVec3::from_logvec({a[0], a[1], a[2]});
}

void vec_out(const MulVec3& v, double out[3]) {
  Vec3 lv = v.logvec();
  out[0] = lv[0];
  out[1] = lv[1];
  out[2] = lv[2];
}

const DirectIndicatrix& direct_engine(const mg_curve* c, IndicatrixKind kind) {
  int i = static_cast<int>(kind);
  std::lock_guard<std::mutex> lock(c->mu);
  if (!c->direct[i])
    c->direct[i] = std::make_shared<const DirectIndicatrix>(c->c, kind);
  return *c->direct[i];
}

std::vector<MulScalar> grid_or_fail(double s_lo, double s_hi, int n) {
  return log_uniform_grid(s_lo, s_hi, n);
}

}  // namespace

extern "C" {

const char* mg_version(void) { return "1.0.0"; }

const char* mg_last_error(void) { return t_error.c_str(); }

size_t mg_last_error_offset(void) { return t_offset; }

void mg_string_free(char* s) { std::free(s); }

/* ---- scalar arithmetic ---- */

double mg_madd(double a, double b) {
  return madd(MulScalar{a}, MulScalar{b}).logval;
}
double mg_msub(double a, double b) {
  return msub(MulScalar{a}, MulScalar{b}).logval;
}
double mg_mmul(double a, double b) {
  return mmul(MulScalar{a}, MulScalar{b}).logval;
}
mg_status mg_mdiv(double a, double b, double* out) {
  if (mg_status st = require(out != nullptr, "mg_mdiv: out is NULL")) return st;
  return guarded([&] { *out = mdiv(MulScalar{a}, MulScalar{b}).logval; });
}
double mg_mneg(double a) { return mneg(MulScalar{a}).logval; }
mg_status mg_minv(double a, double* out) {
  if (mg_status st = require(out != nullptr, "mg_minv: out is NULL")) return st;
  return guarded([&] { *out = minv(MulScalar{a}).logval; });
}
double mg_mabs(double a) { return mabs(MulScalar{a}).logval; }
mg_status mg_mpow(double a, double k, double* out) {
  if (mg_status st = require(out != nullptr, "mg_mpow: out is NULL")) return st;
  return guarded([&] { *out = mpow(MulScalar{a}, k).logval; });
}
mg_status mg_msqrt(double a, double* out) {
  if (mg_status st = require(out != nullptr, "mg_msqrt: out is NULL"))
    return st;
  return guarded([&] { *out = msqrt(MulScalar{a}).logval; });
}
double mg_msin(double a) { return msin(MulScalar{a}).logval; }
double mg_mcos(double a) { return mcos(MulScalar{a}).logval; }
mg_status mg_mtan(double a, double* out) {
  if (mg_status st = require(out != nullptr, "mg_mtan: out is NULL")) return st;
  return guarded([&] { *out = mtan(MulScalar{a}).logval; });
}
mg_status mg_to_logval(double positive_value, double* out) {
  if (mg_status st = require(out != nullptr, "mg_to_logval: out is NULL"))
    return st;
  return guarded([&] { *out = MulScalar::from_value(positive_value).logval; });
}
double mg_from_logval(double logval) { return MulScalar{logval}.value(); }

/* ---- vectors ---- */

void mg_vadd(const double a[3], const double b[3], double out[3]) {
  vec_out(vadd(vec_of(a), vec_of(b)), out);
}
void mg_vsub(const double a[3], const double b[3], double out[3]) {
  vec_out(vsub(vec_of(a), vec_of(b)), out);
}
void mg_vneg(const double a[3], double out[3]) {
  vec_out(vneg(vec_of(a)), out);
}
void mg_smul(double k_logval, const double a[3], double out[3]) {
  vec_out(smul(MulScalar{k_logval}, vec_of(a)), out);
}
double mg_minner(const double a[3], const double b[3]) {
  return minner(vec_of(a), vec_of(b)).logval;
}
void mg_mcross(const double a[3], const double b[3], double out[3]) {
  vec_out(mcross(vec_of(a), vec_of(b)), out);
}
double mg_mnorm(const double a[3]) { return mnorm(vec_of(a)).logval; }
mg_status mg_mangle(const double a[3], const double b[3], double* out) {
  if (mg_status st = require(out != nullptr, "mg_mangle: out is NULL"))
    return st;
  return guarded([&] { *out = mangle(vec_of(a), vec_of(b)).logval; });
}

/* ---- expressions ---- */

mg_status mg_expr_canon(const char* src, char** out) {
  if (mg_status st = require(src && out, "mg_expr_canon: NULL argument"))
    return st;
  return guarded([&] { *out = dup_string(CurveExpr::parse(src).print()); });
}
mg_status mg_expr_eval(const char* src, double s, double* out_logval) {
  if (mg_status st = require(src && out_logval, "mg_expr_eval: NULL argument"))
    return st;
  return guarded([&] {
    CurveExpr e = CurveExpr::parse(src);
    *out_logval = e.eval(MulScalar::from_value(s)).logval;
  });
}
mg_status mg_expr_deriv(const char* src, double s, int order,
                        double* out_logval) {
  if (mg_status st = require(src && out_logval, "mg_expr_deriv: NULL argument"))
    return st;
  return guarded([&] {
    CurveExpr e = CurveExpr::parse(src);
    *out_logval = mderiv(e, MulScalar::from_value(s), order).logval;
  });
}
mg_status mg_expr_integral(const char* src, double s0, double s1,
                           double* out_logval) {
  if (mg_status st =
          require(src && out_logval, "mg_expr_integral: NULL argument"))
    return st;
  return guarded([&] {
    CurveExpr e = CurveExpr::parse(src);
    *out_logval =
        mintegral(e, MulScalar::from_value(s0), MulScalar::from_value(s1))
            .logval;
  });
}

/* ---- curves ---- */

mg_status mg_curve_from_exprs(const char* x1, const char* x2, const char* x3,
                              double s_lo, double s_hi, const char* name,
                              mg_curve** out) {
  if (mg_status st = require(x1 && x2 && x3 && out,
                             "mg_curve_from_exprs: NULL argument"))
    return st;
  return guarded([&] {
    auto* h = new mg_curve;
    try {
      h->c = make_curve(x1, x2, x3, s_lo, s_hi, name ? name : "");
    } catch (...) {
      delete h;
      throw;
    }
    *out = h;
  });
}

mg_status mg_curve_from_json(const char* json_text, mg_curve** out) {
  if (mg_status st =
          require(json_text && out, "mg_curve_from_json: NULL argument"))
    return st;
  return guarded([&] {
    auto* h = new mg_curve;
    try {
      h->c = curve_from_json(json_text);
    } catch (...) {
      delete h;
      throw;
    }
    *out = h;
  });
}

mg_status mg_curve_preset(const char* name, mg_curve** out) {
  if (mg_status st = require(name && out, "mg_curve_preset: NULL argument"))
    return st;
  return guarded([&] {
    auto* h = new mg_curve;
    try {
      h->c = preset(name);
    } catch (...) {
      delete h;
      throw;
    }
    *out = h;
  });
}

void mg_curve_free(mg_curve* c) { delete c; }

void mg_curve_domain(const mg_curve* c, double* s_lo, double* s_hi) {
  if (!c) return;
  if (s_lo) *s_lo = c->c.lo().value();
  if (s_hi) *s_hi = c->c.hi().value();
}
const char* mg_curve_name(const mg_curve* c) {
  return c ? c->c.name.c_str() : "";
}
const char* mg_curve_note(const mg_curve* c) {
  return c ? c->c.note.c_str() : "";
}
int mg_curve_is_corrected(const mg_curve* c) {
  return c && c->c.corrected ? 1 : 0;
}
int mg_curve_is_reparametrized(const mg_curve* c) {
  return c && c->c.reparametrized ? 1 : 0;
}
mg_status mg_curve_is_natural(const mg_curve* c, int* out) {
  if (mg_status st =
          require(c && out, "mg_curve_is_natural: NULL argument"))
    return st;
  return guarded([&] { *out = is_natural(c->c) ? 1 : 0; });
}
mg_status mg_curve_reparam_natural(const mg_curve* c, mg_curve** out) {
  if (mg_status st =
          require(c && out, "mg_curve_reparam_natural: NULL argument"))
    return st;
  return guarded([&] {
    auto* h = new mg_curve;
    try {
      h->c = reparam_natural(c->c);
    } catch (...) {
      delete h;
      throw;
    }
    *out = h;
  });
}

mg_status mg_curve_point(const mg_curve* c, double s, double out_logvec[3]) {
  if (mg_status st =
          require(c && out_logvec, "mg_curve_point: NULL argument"))
    return st;
  return guarded([&] {
    MulScalar ms = MulScalar::from_value(s);
    c->c.impl->check_domain(ms.logval);
    Vec3 p = c->c.impl->point(ms.logval);
    out_logvec[0] = p[0];
    out_logvec[1] = p[1];
    out_logvec[2] = p[2];
  });
}
mg_status mg_curve_velocity(const mg_curve* c, double s,
                            double out_logvec[3]) {
  if (mg_status st =
          require(c && out_logvec, "mg_curve_velocity: NULL argument"))
    return st;
  return guarded(
      [&] { vec_out(velocity(c->c, MulScalar::from_value(s)), out_logvec); });
}
mg_status mg_curve_speed(const mg_curve* c, double s, double* out_logval) {
  if (mg_status st =
          require(c && out_logval, "mg_curve_speed: NULL argument"))
    return st;
  return guarded(
      [&] { *out_logval = speed(c->c, MulScalar::from_value(s)).logval; });
}
mg_status mg_curve_arclength(const mg_curve* c, double s0, double s1,
                             double* out_logval) {
  if (mg_status st =
          require(c && out_logval, "mg_curve_arclength: NULL argument"))
    return st;
  return guarded([&] {
    *out_logval = arclength(c->c, MulScalar::from_value(s0),
                            MulScalar::from_value(s1))
                      .logval;
  });
}
mg_status mg_curve_frenet(const mg_curve* c, double s, double t[3],
                          double n[3], double b[3], double* kappa,
                          double* tau) {
  if (mg_status st = require(c && t && n && b && kappa && tau,
                             "mg_curve_frenet: NULL argument"))
    return st;
  return guarded([&] {
    FrenetSample fs = frenet(c->c, MulScalar::from_value(s));
    vec_out(fs.t, t);
    vec_out(fs.n, n);
    vec_out(fs.b, b);
    *kappa = fs.kappa.logval;
    *tau = fs.tau.logval;
  });
}
mg_status mg_curve_frenet_residuals(const mg_curve* c, double s,
                                    double out[3]) {
  if (mg_status st =
          require(c && out, "mg_curve_frenet_residuals: NULL argument"))
    return st;
  return guarded([&] {
    auto r = frenet_residuals(c->c, MulScalar::from_value(s));
    out[0] = r[0].logval;
    out[1] = r[1].logval;
    out[2] = r[2].logval;
  });
}

/* ---- helix ---- */

mg_status mg_helix_profiles(const mg_curve* c, double s, double* f,
                            double* sigma, double* gamma, double* psi) {
  if (mg_status st = require(c && f && sigma && gamma && psi,
                             "mg_helix_profiles: NULL argument"))
    return st;
  return guarded([&] {
    HelixQuantities q = helix_profiles(c->c, MulScalar::from_value(s));
    *f = q.f;
    *sigma = q.sigma;
    *gamma = q.gamma;
    *psi = q.psi;
  });
}

mg_status mg_classify_json(const mg_curve* c, double s_lo, double s_hi, int n,
                           double tol, char** out_json) {
  if (mg_status st =
          require(c && out_json, "mg_classify_json: NULL argument"))
    return st;
  return guarded([&] {
    double t = tol > 0 ? tol : default_classify_tol(c->c);
    HelixReport r = classify(c->c, grid_or_fail(s_lo, s_hi, n), t);
    *out_json = dup_string(r.to_json());
  });
}

/* ---- indicatrices ---- */

mg_status mg_indicatrix_point(const mg_curve* c, const char* kind, double s,
                              double out_logvec[3]) {
  if (mg_status st = require(c && kind && out_logvec,
                             "mg_indicatrix_point: NULL argument"))
    return st;
  return guarded([&] {
    vec_out(indicatrix_point(c->c, indicatrix_kind_from(kind),
                             MulScalar::from_value(s)),
            out_logvec);
  });
}
mg_status mg_indicatrix_arc(const mg_curve* c, const char* kind, double s0,
                            double s1, double* out_logval, int* tau_flagged) {
  if (mg_status st = require(c && kind && out_logval,
                             "mg_indicatrix_arc: NULL argument"))
    return st;
  return guarded([&] {
    ArcParamResult r =
        arc_param(c->c, indicatrix_kind_from(kind), MulScalar::from_value(s0),
                  MulScalar::from_value(s1));
    *out_logval = r.value.logval;
    if (tau_flagged) *tau_flagged = r.tau_sign_flagged ? 1 : 0;
  });
}
mg_status mg_indicatrix_closed(const mg_curve* c, const char* kind, double s,
                               double T[3], double N[3], double B[3],
                               double* kappa, double* tau, double* arc,
                               double* f, double* sigma) {
  if (mg_status st = require(c && kind && T && N && B && kappa && tau,
                             "mg_indicatrix_closed: NULL argument"))
    return st;
  return guarded([&] {
    IndicatrixApparatus a =
        indicatrix_closed(c->c, indicatrix_kind_from(kind),
                          MulScalar::from_value(s), arc != nullptr);
    vec_out(a.T, T);
    vec_out(a.N, N);
    vec_out(a.B, B);
    *kappa = a.kappa_ind.logval;
    *tau = a.tau_ind.logval;
    if (arc) *arc = a.arc_param.logval;
    if (f) *f = a.f.logval;
    if (sigma) *sigma = a.sigma.logval;
  });
}
mg_status mg_indicatrix_direct(const mg_curve* c, const char* kind, double s,
                               double T[3], double N[3], double B[3],
                               double* kappa, double* tau, double* arc) {
  if (mg_status st = require(c && kind && T && N && B && kappa && tau,
                             "mg_indicatrix_direct: NULL argument"))
    return st;
  return guarded([&] {
    const DirectIndicatrix& d = direct_engine(c, indicatrix_kind_from(kind));
    IndicatrixApparatus a = d.at(MulScalar::from_value(s));
    vec_out(a.T, T);
    vec_out(a.N, N);
    vec_out(a.B, B);
    *kappa = a.kappa_ind.logval;
    *tau = a.tau_ind.logval;
    if (arc) *arc = a.arc_param.logval;
  });
}
mg_status mg_adjudication_json(const mg_curve* c, double s_lo, double s_hi,
                               int n, double match_tol, char** out_json) {
  if (mg_status st =
          require(c && out_json, "mg_adjudication_json: NULL argument"))
    return st;
  return guarded([&] {
    double tol = match_tol > 0 ? match_tol : 1e-6;
    auto rows = adjudicate_indicatrix(c->c, grid_or_fail(s_lo, s_hi, n), tol);
    *out_json = dup_string(adjudication_to_json(rows));
  });
}

/* ---- oracle ---- */

mg_status mg_oracle_compare_csv(const mg_curve* c, double s_lo, double s_hi,
                                int n, char** out_csv, double* max_absdiff,
                                double* mean_absdiff, int* n_errors,
                                char** errors_text) {
  if (mg_status st =
          require(c && out_csv, "mg_oracle_compare_csv: NULL argument"))
    return st;
  return guarded([&] {
    CompareReport rep = compare(c->c, grid_or_fail(s_lo, s_hi, n));
    *out_csv = dup_string(rep.to_csv());
    if (max_absdiff) *max_absdiff = rep.max_absdiff;
    if (mean_absdiff) *mean_absdiff = rep.mean_absdiff;
    if (n_errors) *n_errors = static_cast<int>(rep.sample_errors.size());
    if (errors_text) {
      std::string all;
      for (const auto& [s, msg] : rep.sample_errors)
        all += "s=" + fmt_real(s) + ": " + msg + "\n";
      *errors_text = dup_string(all);
    }
  });
}

/* ---- presets and grids ---- */

int mg_preset_count(void) {
  return static_cast<int>(preset_names().size());
}
const char* mg_preset_name(int index) {
  static const std::vector<std::string> names = preset_names();
  if (index < 0 || index >= static_cast<int>(names.size())) return nullptr;
  return names[static_cast<size_t>(index)].c_str();
}
mg_status mg_preset_info_json(const char* name, char** out_json) {
  if (mg_status st =
          require(name && out_json, "mg_preset_info_json: NULL argument"))
    return st;
  return guarded([&] {
    const Preset& p = preset_info(name);
    nlohmann::ordered_json j;
    j["name"] = p.name;
    j["x1"] = p.x1;
    j["x2"] = p.x2;
    j["x3"] = p.x3;
    j["domain"] = {p.s_lo, p.s_hi};
    j["corrected"] = p.corrected;
    j["natural"] = p.natural;
    j["note"] = p.note;
    *out_json = dup_string(j.dump(2));
  });
}

mg_status mg_grid_log_uniform(double s_lo, double s_hi, int n, double* out_s) {
  if (mg_status st =
          require(out_s != nullptr, "mg_grid_log_uniform: out_s is NULL"))
    return st;
  return guarded([&] {
    std::vector<MulScalar> g = log_uniform_grid(s_lo, s_hi, n);
    for (size_t i = 0; i < g.size(); ++i) out_s[i] = g[i].value();
  });
}

}  // extern "C"
