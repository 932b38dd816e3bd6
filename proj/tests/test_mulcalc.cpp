// Derivative rules and the fundamental theorem, checked pointwise through
// the expression engine. Composition is built textually from templates with
// an '@' placeholder so that both (f o g) and f itself parse from one source.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "mulgeo/expr.hpp"

using namespace mulgeo;

namespace {

std::string instantiate(const std::string& tpl, const std::string& arg) {
  std::string out;
  for (char c : tpl)
    if (c == '@')
      out += arg;
    else
      out += c;
  return out;
}

MulScalar d1(const CurveExpr& e, MulScalar s) { return mderiv(e, s, 1); }

std::string exact17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Evaluation points with logvals safely inside every template's domain.
std::vector<MulScalar> sample_points(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> lv(0.3, 2.2);
  std::vector<MulScalar> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) pts.push_back(MulScalar{lv(rng)});
  return pts;
}

const std::string kF = "e^2 .* msin(@) +* @ ^* 2";   // F(u) = 2 sin u + u^2
const std::string kG = "e^3 +* mcos(@)";             // G(u) = 3 + cos u, never 0
const std::string kH = "e^{0.5} .* @ +* e^1";        // H(u) = u/2 + 1

}  // namespace

TEST_CASE("rule 1: constant multiple passes through the derivative") {
  std::mt19937_64 rng(33001);
  CurveExpr f = CurveExpr::parse(instantiate(kF, "s"));
  std::uniform_real_distribution<double> clv(-2.0, 2.0);
  double worst = 0;
  for (MulScalar s : sample_points(rng, 300)) {
    MulScalar a{clv(rng)};
    CurveExpr af = CurveExpr::parse("e^{" + exact17(a.logval) + "} .* (" +
                                    instantiate(kF, "s") + ")");
    double lhs = d1(af, s).logval;
    double rhs = mmul(a, d1(f, s)).logval;
    worst = std::max(worst, std::fabs(lhs - rhs));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("rule 2: derivative distributes over +* and -*") {
  std::mt19937_64 rng(33002);
  CurveExpr f = CurveExpr::parse(instantiate(kF, "s"));
  CurveExpr g = CurveExpr::parse(instantiate(kG, "s"));
  CurveExpr sum = CurveExpr::parse("(" + instantiate(kF, "s") + ") +* (" +
                                   instantiate(kG, "s") + ")");
  CurveExpr dif = CurveExpr::parse("(" + instantiate(kF, "s") + ") -* (" +
                                   instantiate(kG, "s") + ")");
  double worst = 0;
  for (MulScalar s : sample_points(rng, 300)) {
    worst = std::max(worst, std::fabs(d1(sum, s).logval -
                                      madd(d1(f, s), d1(g, s)).logval));
    worst = std::max(worst, std::fabs(d1(dif, s).logval -
                                      msub(d1(f, s), d1(g, s)).logval));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("rule 3: Leibniz rule for .*") {
  std::mt19937_64 rng(33003);
  CurveExpr f = CurveExpr::parse(instantiate(kF, "s"));
  CurveExpr g = CurveExpr::parse(instantiate(kG, "s"));
  CurveExpr prod = CurveExpr::parse("(" + instantiate(kF, "s") + ") .* (" +
                                    instantiate(kG, "s") + ")");
  double worst = 0;
  for (MulScalar s : sample_points(rng, 300)) {
    MulScalar rhs = madd(mmul(d1(f, s), g.eval(s)), mmul(d1(g, s), f.eval(s)));
    worst = std::max(worst, std::fabs(d1(prod, s).logval - rhs.logval));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("rule 4: quotient rule for /*") {
  std::mt19937_64 rng(33004);
  CurveExpr f = CurveExpr::parse(instantiate(kF, "s"));
  CurveExpr g = CurveExpr::parse(instantiate(kG, "s"));  // G in [2,4]: safe
  CurveExpr quot = CurveExpr::parse("(" + instantiate(kF, "s") + ") /* (" +
                                    instantiate(kG, "s") + ")");
  double worst = 0;
  for (MulScalar s : sample_points(rng, 300)) {
    MulScalar num =
        msub(mmul(d1(f, s), g.eval(s)), mmul(d1(g, s), f.eval(s)));
    MulScalar rhs = mdiv(num, mpow(g.eval(s), 2));
    worst = std::max(worst, std::fabs(d1(quot, s).logval - rhs.logval));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("rule 5: chain rule for multiplicative composition") {
  std::mt19937_64 rng(33005);
  CurveExpr f = CurveExpr::parse(instantiate(kF, "s"));
  CurveExpr g = CurveExpr::parse(instantiate(kG, "s"));
  CurveExpr comp =
      CurveExpr::parse(instantiate(kF, "(" + instantiate(kG, "s") + ")"));
  double worst = 0;
  for (MulScalar s : sample_points(rng, 300)) {
    MulScalar gs = g.eval(s);  // g(s) as the inner parameter point
    MulScalar rhs = mmul(d1(f, gs), d1(g, s));
    worst = std::max(worst, std::fabs(d1(comp, s).logval - rhs.logval));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("rule 6: higher derivatives iterate the first one") {
  // Pairs (f, f*) in closed form; mderiv order k of f must equal order k-1
  // of f*.
  struct Pair {
    std::string f, fstar;
  };
  const std::vector<Pair> pairs = {
      {"s ^* 3", "e^3 .* s ^* 2"},              // (u^3)' = 3u^2
      {"msin(s)", "mcos(s)"},                   // (sin u)' = cos u
      {"e^2 .* s ^* 2 +* mcos(s)", "e^4 .* s -* msin(s)"},
      {"e^{0.5} .* s", "e^{0.5}"},
  };
  std::mt19937_64 rng(33006);
  double worst = 0;
  for (const auto& [fsrc, fstarsrc] : pairs) {
    CurveExpr f = CurveExpr::parse(fsrc);
    CurveExpr fs = CurveExpr::parse(fstarsrc);
    for (MulScalar s : sample_points(rng, 100)) {
      CHECK(std::fabs(d1(f, s).logval - fs.eval(s).logval) <= 1e-10);
      for (int k = 2; k <= 4; ++k)
        worst = std::max(worst, std::fabs(mderiv(f, s, k).logval -
                                          mderiv(fs, s, k - 1).logval));
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("fundamental theorem: integral of f* telescopes f") {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"s ^* 3", "e^3 .* s ^* 2"},
      {"msin(s)", "mcos(s)"},
      {"e^2 .* s ^* 2 +* mcos(s)", "e^4 .* s -* msin(s)"},
  };
  std::mt19937_64 rng(33007);
  std::uniform_real_distribution<double> lv(0.3, 2.2);
  double worst = 0;
  for (const auto& [fsrc, fstarsrc] : pairs) {
    CurveExpr f = CurveExpr::parse(fsrc);
    CurveExpr fs = CurveExpr::parse(fstarsrc);
    for (int i = 0; i < 100; ++i) {
      double u0 = lv(rng), u1 = lv(rng);
      if (u0 > u1) std::swap(u0, u1);
      MulScalar a{u0}, b{u1};
      MulScalar integral = mintegral(fs, a, b);
      MulScalar telescoped = msub(f.eval(b), f.eval(a));
      worst = std::max(worst, std::fabs(integral.logval - telescoped.logval));
    }
  }
  CHECK(worst <= 1e-8);  // quadrature in the loop
}

TEST_CASE("derivative at a point also matches the numeric route") {
  CurveExpr f = CurveExpr::parse(instantiate(kF, "s"));
  auto fn = [&](double v) { return std::exp(f.eval_logval_at(v)); };
  for (double u : {0.5, 1.0, 1.8}) {
    MulScalar s{u};
    CHECK(std::fabs(d1(f, s).logval - mderiv_numeric(fn, s, 1).logval) <=
          1e-8);
  }
}
