#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "mulgeo/presets.hpp"

using namespace mulgeo;

TEST_CASE("every preset builds and matches its declared properties") {
  std::vector<std::string> names = preset_names();
  CHECK(names.size() == 9);
  for (const std::string& name : names) {
    INFO("preset ", name);
    const Preset& info = preset_info(name);
    CHECK(info.name == name);
    CHECK(info.s_lo > 0.0);
    CHECK(info.s_hi > info.s_lo);

    MulCurve c = preset(name);
    CHECK(c.name == name);
    CHECK(c.corrected == info.corrected);
    CHECK(std::fabs(c.impl->u_lo() - std::log(info.s_lo)) <= 1e-12);
    CHECK(std::fabs(c.impl->u_hi() - std::log(info.s_hi)) <= 1e-12);
    CHECK(is_natural(c) == info.natural);
  }
}

TEST_CASE("literal and corrected readings are both on the menu") {
  std::vector<std::string> names = preset_names();
  auto has = [&](const char* n) {
    return std::find(names.begin(), names.end(), n) != names.end();
  };
  for (const char* n :
       {"helix35", "circle-fig1", "example411-literal", "example411-corrected",
        "slant-literal", "slant-corrected", "clad-literal", "clad-corrected",
        "random-smooth"})
    CHECK_MESSAGE(has(n), "missing preset ", n);

  CHECK(preset_info("example411-literal").corrected == false);
  CHECK(preset_info("example411-corrected").corrected == true);
  // each corrected preset explains itself
  CHECK_FALSE(preset_info("example411-corrected").note.empty());
  CHECK_FALSE(preset_info("slant-corrected").note.empty());
  CHECK_FALSE(preset_info("clad-corrected").note.empty());
}

TEST_CASE("unknown preset names report the catalogue") {
  try {
    preset_info("no-such-curve");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrCode::invalid);
    // the message should help the caller find a valid name
    CHECK(std::string(e.what()).find("helix35") != std::string::npos);
  }
  CHECK_THROWS_AS(preset("no-such-curve"), Error);
}

TEST_CASE("literal readings exercise the documented failure modes") {
  // example411-literal: constant x2, x3 give kappa = 0* everywhere
  MulCurve lit = preset("example411-literal");
  try {
    frenet(lit, MulScalar{1.0});
    FAIL("expected a domain error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrCode::domain);
  }

  // printed slant/clad phase forms are not naturally parametrized
  for (const char* name : {"slant-literal", "clad-literal"}) {
    MulCurve c = preset(name);
    CHECK_FALSE(is_natural(c));
    double mid = 0.5 * (c.impl->u_lo() + c.impl->u_hi());
    CHECK_THROWS_AS(frenet(c, MulScalar{mid}), Error);
  }
}
