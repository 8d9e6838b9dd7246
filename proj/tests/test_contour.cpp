#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gkz/contour.hpp"
#include "gkz/errors.hpp"
#include "gkz/gammafn.hpp"

using namespace gkz;

namespace {
constexpr double pi = 3.14159265358979323846;
const cplx I2pi(0.0, 2.0 * pi);

cplx poch_closed_form(const std::vector<cplx>& a) {
  cplx num = 1.0, sum = 0.0;
  for (cplx ai : a) {
    num *= (1.0 - std::exp(-I2pi * ai)) * gamma_fn(ai);
    sum += ai;
  }
  return num * rgamma(sum);
}
}  // namespace

TEST_CASE("unit circle residue") {
  PathSpec spec;
  spec.segments.push_back(seg_arc(cplx(0, 0), 1.0, 0.0, 2.0 * pi));
  spec.factors.push_back({cplx(0, 0), cplx(1, 0), 0.0});
  BranchedPath path(spec);
  auto f = [](cplx z, const std::vector<cplx>&) { return 1.0 / z; };
  auto r = path_integral(path, f, 1e-12, 1e-14);
  CHECK(std::abs(r.value - I2pi) < 1e-11);
  // the tracked argument winds by 2*pi
  CHECK(std::abs(path.net_arg_change()[0] - 2.0 * pi) < 1e-12);
}

TEST_CASE("straight segment of exp") {
  PathSpec spec;
  spec.segments.push_back(seg_line(cplx(0, 0), cplx(1, 0)));
  spec.factors.push_back({cplx(1, 0), cplx(1, 0), 0.0});  // unused but tracked
  BranchedPath path(spec);
  auto f = [](cplx z, const std::vector<cplx>&) { return std::exp(z); };
  auto r = path_integral(path, f, 1e-12, 0.0);
  CHECK(std::abs(r.value - (std::exp(1.0) - 1.0)) < 1e-12);
}

TEST_CASE("beta integral along a graded real segment") {
  PathSpec spec;
  spec.segments.push_back(seg_graded_line(cplx(0, 0), cplx(1, 0), 6));
  BranchedPath path(spec);
  auto f = [](cplx zeta, const std::vector<cplx>&) {
    double t = zeta.real(), omt = 1.0 - zeta.real();
    if (t <= 0.0 || omt <= 0.0) return cplx(0.0, 0.0);  // ulp shadow of the endpoints
    return cplx(1.0 / std::sqrt(t * omt), 0.0);
  };
  auto r = path_integral(path, f, 1e-10, 1e-12);
  // accuracy floor ~2*sqrt(ulp): the 1-t distance saturates at ulp(1)
  CHECK(std::abs(r.value - pi) < 5e-8);
}

TEST_CASE("hankel contour reproduces 2 pi i / Gamma(1-alpha)") {
  auto check = [](cplx alpha, double tol) {
    auto r = hankel_integral(alpha, tol);
    cplx expect = I2pi * rgamma(1.0 - alpha);
    CHECK(std::abs(r.value - expect) <= 5e-9 * std::max(1.0, std::abs(expect)));
  };
  check(cplx(0.0, 0.0), 1e-10);   // single-valued: residue 2 pi i
  check(cplx(0.5, 0.0), 1e-10);   // 2 sqrt(pi) i
  check(cplx(0.3, 0.2), 1e-10);
  auto r = hankel_integral(cplx(0.5, 0.0), 1e-10);
  CHECK(std::abs(r.value - cplx(0.0, 2.0 * std::sqrt(pi))) < 1e-8);
}

TEST_CASE("hankel contour deformation invariance") {
  cplx alpha(0.4, -0.3);
  cplx base = hankel_integral(alpha, 0.5, 40.0, 1e-10).value;
  for (double delta : {0.25, 1.0}) {
    for (double R : {30.0, 60.0}) {
      auto r = hankel_integral(alpha, delta, R, 1e-10);
      CHECK(std::abs(r.value - base) < 1e-8 * std::abs(base));
    }
  }
}

TEST_CASE("pochhammer k=1 against the closed form") {
  auto r = pochhammer_integral({cplx(0.5), cplx(0.5)}, 1, 1e-10);
  CHECK(std::abs(r.value - 4.0 * pi) < 1e-8 * 4.0 * pi);

  auto r2 = pochhammer_integral({cplx(1.0 / 3.0), cplx(0.25)}, 1, 1e-10);
  cplx e2 = poch_closed_form({cplx(1.0 / 3.0), cplx(0.25)});
  CHECK(std::abs(r2.value - e2) < 1e-8 * std::abs(e2));

  auto r3 = pochhammer_integral({cplx(0.3, 0.1), cplx(0.6, 0.0)}, 1, 1e-10);
  cplx e3 = poch_closed_form({cplx(0.3, 0.1), cplx(0.6, 0.0)});
  CHECK(std::abs(r3.value - e3) < 1e-8 * std::abs(e3));

  // alpha1 = 1: the t-factor is single-valued, the commutator cancels
  auto r4 = pochhammer_integral({cplx(1.0), cplx(0.4)}, 1, 1e-10);
  CHECK(std::abs(r4.value) < 1e-9);
}

TEST_CASE("pochhammer k=1 loop-radius invariance") {
  std::vector<cplx> a{cplx(1.0 / 3.0), cplx(0.25)};
  cplx v1 = pochhammer_integral(a, 1, 1e-10, 0.1).value;
  cplx v2 = pochhammer_integral(a, 1, 1e-10, 0.25).value;
  CHECK(std::abs(v1 - v2) < 1e-8 * std::abs(v1));
}

TEST_CASE("commutator winding returns to zero") {
  BranchedPath path(pochhammer_loop_path(0.2));
  for (double w : path.net_arg_change()) CHECK(std::abs(w) < 1e-9);
}

TEST_CASE("pochhammer k=2 against the closed form") {
  std::vector<cplx> a{cplx(1.0 / 3.0), cplx(0.25), cplx(0.2)};
  auto r = pochhammer_integral(a, 2, 1e-7);
  cplx expect = poch_closed_form(a);
  CHECK(std::abs(r.value - expect) < 1e-5 * std::abs(expect));
}

TEST_CASE("pochhammer k=2 radius invariance") {
  std::vector<cplx> a{cplx(1.0 / 3.0), cplx(0.25), cplx(0.2)};
  cplx v1 = pochhammer_integral(a, 2, 1e-6, 0.1).value;
  cplx v2 = pochhammer_integral(a, 2, 1e-6, 0.25).value;
  CHECK(std::abs(v1 - v2) < 2e-5 * std::abs(v1));
}

TEST_CASE("k=3 unsupported") {
  CHECK_THROWS_AS(pochhammer_integral({cplx(0.5), cplx(0.5), cplx(0.5), cplx(0.5)}, 3, 1e-6),
                  error);
}

TEST_CASE("singularity on path is detected") {
  PathSpec spec;
  spec.segments.push_back(seg_line(cplx(-1, 0), cplx(1, 0)));
  spec.factors.push_back({cplx(0, 0), cplx(1, 0), 0.0});
  CHECK_THROWS_AS(BranchedPath{spec}, error);
}
