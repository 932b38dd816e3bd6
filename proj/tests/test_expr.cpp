#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "mulgeo/expr.hpp"

using namespace mulgeo;

namespace {

double at(const std::string& src, double s_value) {
  return CurveExpr::parse(src).eval_logval_at(s_value);
}

}  // namespace

TEST_CASE("literals, parameter, precedence") {
  CHECK(at("e^2", 5.0) == doctest::Approx(2.0));
  CHECK(at("e^{0.5}", 5.0) == doctest::Approx(0.5));
  CHECK(at("e^-1.25", 5.0) == doctest::Approx(-1.25));
  CHECK(at("2.5", 5.0) == doctest::Approx(std::log(2.5)));
  CHECK(at("s", 3.0) == doctest::Approx(std::log(3.0)));
  // term binds tighter than +*: 2 + (3*4)
  CHECK(at("e^2 +* e^3 .* e^4", 1.0) == doctest::Approx(14.0));
  // ^* binds tighter than .*: 2 * 3^2
  CHECK(at("e^2 .* e^3 ^* 2", 1.0) == doctest::Approx(18.0));
  CHECK(at("(e^2 +* e^3) .* e^4", 1.0) == doctest::Approx(20.0));
  CHECK(at("-* e^2", 1.0) == doctest::Approx(-2.0));
  CHECK(at("e^1 -* e^3", 1.0) == doctest::Approx(-2.0));
  CHECK(at("e^6 /* e^3", 1.0) == doctest::Approx(2.0));
  CHECK(at("msin(e^{1.0})", 1.0) == doctest::Approx(std::sin(1.0)));
  CHECK(at("mcos(s)", std::exp(0.3)) == doctest::Approx(std::cos(0.3)));
  CHECK(at("mtan(e^{0.4})", 1.0) == doctest::Approx(std::tan(0.4)));
  // the parameter in the log chart: s ^* 2 is (log s)^2
  CHECK(at("s ^* 2", std::exp(1.7)) == doctest::Approx(1.7 * 1.7));
}

TEST_CASE("canonical print round-trips the AST") {
  const std::vector<std::string> sources = {
      "e^2",
      "s",
      "e^3 /* e^5 .* mcos(s)",
      "e^9 /* e^850 .* msin(e^25 .* s) -* e^25 /* e^306 .* msin(e^9 .* s)",
      "-* (s ^* 2 +* mcos(e^2 .* s))",
      "e^{0.5} .* s ^* 3 /* (e^1 -* msin(s))",
      "mtan(s /* e^2)",
      "2.5 +* s",
  };
  for (const auto& src : sources) {
    CurveExpr e = CurveExpr::parse(src);
    std::string printed = e.print();
    CurveExpr r = CurveExpr::parse(printed);
    CHECK_MESSAGE(r.equals(e), "round trip failed for: ", src);
    CHECK(r.print() == printed);  // printing is a fixed point
    // and evaluation agrees
    for (double s : {1.0, 2.0, 7.5})
      CHECK(e.eval_logval_at(s) == doctest::Approx(r.eval_logval_at(s)));
  }
}

TEST_CASE("parse errors carry byte offsets") {
  auto offset_of = [](const std::string& src) -> std::size_t {
    try {
      CurveExpr::parse(src);
    } catch (const Error& e) {
      CHECK(e.code() == ErrCode::parse);
      return e.offset();
    }
    return Error::npos;
  };
  CHECK(offset_of("mcos(s") != Error::npos);
  CHECK(offset_of("e^") != Error::npos);
  CHECK(offset_of("s +*") != Error::npos);
  CHECK(offset_of("foo(s)") != Error::npos);
  CHECK(offset_of("") != Error::npos);
  std::size_t at_sym = offset_of("e^2 @ e^3");
  CHECK(at_sym == 4);  // points at the stray '@'
  CHECK(offset_of("e^2 +* (e^3") != Error::npos);
}

TEST_CASE("eval matches eval_jet value and first derivative") {
  CurveExpr e = CurveExpr::parse("e^2 .* msin(s) +* s ^* 2");
  for (double s : {1.0, 1.7, 4.2}) {
    double u = std::log(s);
    Jet j = e.eval_jet(u);
    CHECK(j.value() == doctest::Approx(e.eval_logval_at(s)).epsilon(1e-13));
    CHECK(j.deriv(1) ==
          doctest::Approx(mderiv(e, MulScalar{u}, 1).logval).epsilon(1e-12));
  }
}

TEST_CASE("mderiv orders 1..4 agree with finite differences") {
  CurveExpr e = CurveExpr::parse("e^2 .* msin(s) +* s ^* 2 /* e^3");
  auto fn = [&](double v) { return std::exp(e.eval_logval_at(v)); };
  // finite-difference accuracy decays with order (~eps^{2/(k+2)}); this is a
  // cross-route sanity check, the 1e-10 accuracy claim lives with the jets
  const double tol[5] = {0, 1e-8, 1e-7, 3e-6, 3e-4};
  for (double s : {1.3, 2.0, 3.7}) {
    MulScalar ms{std::log(s)};
    for (int k = 1; k <= 4; ++k) {
      double exact = mderiv(e, ms, k).logval;
      double numeric = mderiv_numeric(fn, ms, k).logval;
      CHECK_MESSAGE(
          std::fabs(exact - numeric) <= tol[k] * (1 + std::fabs(exact)),
          "order ", k, " at s=", s, ": ", exact, " vs ", numeric);
    }
  }
}

TEST_CASE("mderiv order out of range is unsupported") {
  CurveExpr e = CurveExpr::parse("s");
  auto code_of = [&](int order) {
    try {
      mderiv(e, MulScalar{0.5}, order);
    } catch (const Error& err) {
      return err.code();
    }
    return ErrCode::parse;
  };
  CHECK(code_of(0) == ErrCode::unsupported);
  CHECK(code_of(5) == ErrCode::unsupported);
  CHECK(code_of(-1) == ErrCode::unsupported);
}

TEST_CASE("mintegral against closed forms") {
  // f = s: log chart g(u) = u, integral (u1^2 - u0^2)/2
  CurveExpr ident = CurveExpr::parse("s");
  double u0 = 0.2, u1 = 1.4;
  MulScalar a{u0}, b{u1};
  CHECK(mintegral(ident, a, b).logval ==
        doctest::Approx((u1 * u1 - u0 * u0) / 2.0).epsilon(1e-10));
  // constant e^2 integrates to 2 (u1 - u0)
  CHECK(mintegral(CurveExpr::parse("e^2"), a, b).logval ==
        doctest::Approx(2.0 * (u1 - u0)).epsilon(1e-10));
  // msin(s): integral of sin u
  CHECK(mintegral(CurveExpr::parse("msin(s)"), a, b).logval ==
        doctest::Approx(std::cos(u0) - std::cos(u1)).epsilon(1e-9));
  // reversed bounds are rejected
  CHECK_THROWS_AS(mintegral(ident, b, a), Error);
}

TEST_CASE("domain errors during evaluation carry source offsets") {
  // mdiv by 0*: the divisor e^0 has logval 0
  CurveExpr bad = CurveExpr::parse("s /* e^0");
  try {
    bad.eval(MulScalar{1.0});
    FAIL("expected domain error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrCode::domain);
  }
}
