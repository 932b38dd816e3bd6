#pragma once

// Multiplicative space curves. Every curve is carried by its log image
// y(u) = logvec x(e^u), exposed as exact order-6 jets; the multiplicative
// Frenet apparatus is computed in that chart, where the natural-parameter
// formulas t = x*, kappa = mnorm(x**), tau = minner(n*, b) are literal
// classical operations on jets.

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "mulgeo/expr.hpp"
#include "mulgeo/mulvec.hpp"

namespace mulgeo {

class LogCurve {
 public:
  virtual ~LogCurve() = default;
  // Order-6 Taylor jets of the log image at u; u must lie in [u_lo, u_hi].
  virtual JetVec3 jets(double u) const = 0;
  virtual double u_lo() const = 0;
  virtual double u_hi() const = 0;

  Vec3 point(double u) const;
  Vec3 dpoint(double u) const;   // y'(u)
  double speed_at(double u) const;  // |y'(u)|
  void check_domain(double u) const;
};

// A curve defined by three component expressions of s.
class ExprLogCurve : public LogCurve {
 public:
  ExprLogCurve(CurveExpr x1, CurveExpr x2, CurveExpr x3, double ulo,
               double uhi);
  JetVec3 jets(double u) const override;
  double u_lo() const override { return ulo_; }
  double u_hi() const override { return uhi_; }
  const CurveExpr& component(int i) const { return x_[i]; }

 private:
  std::array<CurveExpr, 3> x_;
  double ulo_, uhi_;
};

// Numeric reparametrization by multiplicative arc length. The natural
// parameter v runs over [0, L]; jets are exact compositions y(u(v)) built by
// series reversion of the arc-length series, so the resulting speed is 1*
// to truncation error (~1e-13), far inside the 1e-6 natural tolerance.
class ReparamLogCurve : public LogCurve {
 public:
  ReparamLogCurve(std::shared_ptr<const LogCurve> base, int cache_size);
  JetVec3 jets(double v) const override;
  double u_lo() const override { return 0.0; }
  double u_hi() const override { return length_; }

  double base_u_of(double v) const;  // inverse arc length
  double arc_of(double base_u) const;
  double length() const { return length_; }

 private:
  double arc_from_node(int i, double u) const;
  std::shared_ptr<const LogCurve> base_;
  std::vector<double> nodes_, cum_;
  double length_ = 0.0;
};

// Rigid motion of the log image: y -> R y + w (a multiplicative isometry).
class IsometryLogCurve : public LogCurve {
 public:
  IsometryLogCurve(std::shared_ptr<const LogCurve> base,
                   const std::array<Vec3, 3>& rows, const Vec3& shift);
  JetVec3 jets(double u) const override;
  double u_lo() const override { return base_->u_lo(); }
  double u_hi() const override { return base_->u_hi(); }

 private:
  std::shared_ptr<const LogCurve> base_;
  std::array<Vec3, 3> rows_;
  Vec3 shift_;
};

struct MulCurve {
  std::shared_ptr<const LogCurve> impl;
  std::string name;
  std::array<std::string, 3> components{};  // empty for derived curves
  bool corrected = false;        // marks a corrected reading of a printed example
  bool reparametrized = false;   // true after reparam_natural
  std::string note;

  MulScalar lo() const { return MulScalar{impl->u_lo()}; }
  MulScalar hi() const { return MulScalar{impl->u_hi()}; }
};

MulCurve make_curve(const std::string& x1, const std::string& x2,
                    const std::string& x3, double s_lo, double s_hi,
                    const std::string& name = "");
// { "x1": ..., "x2": ..., "x3": ..., "domain": [lo, hi], "name": ... }
MulCurve curve_from_json(const std::string& json_text);

struct FrenetSample {
  MulScalar s;
  MulVec3 t, n, b;
  MulScalar kappa, tau;
};

// Shared jet kernel: frame fields and their derivatives at one parameter.
// Valid orders: t 5, kappa/n/b 4, tau 3. Requires natural parametrization
// within kNaturalTol and kappa above kKappaMin.
struct FrameJets {
  JetVec3 t, n, b;
  Jet kappa, tau, speed;
};

inline constexpr double kNaturalTol = 1e-6;
inline constexpr double kKappaMin = 1e-10;

FrameJets frame_jets(const LogCurve& c, double u);

MulVec3 velocity(const MulCurve& c, MulScalar s);
MulScalar speed(const MulCurve& c, MulScalar s);
bool is_regular(const MulCurve& c, const std::vector<MulScalar>& grid);
MulScalar arclength(const MulCurve& c, MulScalar s0, MulScalar s1);

bool is_natural(const MulCurve& c, int samples = 64, double tol = kNaturalTol);
MulCurve reparam_natural(const MulCurve& c, int grid_size = 512);
// Returns c unchanged when already natural, else the reparametrized curve.
MulCurve ensure_natural(const MulCurve& c, int grid_size = 512);

FrenetSample frenet(const MulCurve& c, MulScalar s);
// mnorm(t* -* kappa .* n), mnorm(n* +* kappa .* t -* tau .* b),
// mnorm(b* +* tau .* n)
std::array<MulScalar, 3> frenet_residuals(const MulCurve& c, MulScalar s);

struct MulSphere {
  MulVec3 center;
  MulScalar radius;
};
bool on_sphere(const MulVec3& p, const MulSphere& sph, double tol = 1e-9);

MulCurve isometry_image(const MulCurve& c, const std::array<Vec3, 3>& rows,
                        const Vec3& shift);

// n parameter values, uniform in u = log s.
std::vector<MulScalar> log_uniform_grid(double s_lo, double s_hi, int n);

}  // namespace mulgeo
