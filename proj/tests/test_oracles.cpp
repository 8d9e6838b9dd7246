#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gkz/basis.hpp"
#include "gkz/contour.hpp"
#include "gkz/gammafn.hpp"
#include "gkz/series.hpp"

using namespace gkz;

namespace {
constexpr double pi = 3.14159265358979323846;
const cplx I(0.0, 1.0);

const IntMatrix A3{{1, 0, -1}, {0, 2, 3}};
const std::vector<long> L3{1, 2, 3};
Parameter c3() { return Parameter::from_rationals({Rat(1, 3), Rat(1, 5)}); }
}  // namespace

TEST_CASE("gauss representations: trivial cases") {
  for (auto repr : {GaussRepr::Series, GaussRepr::Euler, GaussRepr::Laplace, GaussRepr::Residue}) {
    auto r = gauss_oracle(0.3, 0.0, 1.5, 0.2, repr, 1e-9);
    CHECK(std::abs(r.value - 1.0) < 1e-8);
    auto r0 = gauss_oracle(0.3, 0.7, 1.5, 0.0, repr, 1e-9);
    CHECK(std::abs(r0.value - 1.0) < 1e-8);
  }
}

TEST_CASE("gauss representations agree pairwise") {
  struct Pt {
    double a, b, g, z;
  };
  std::vector<Pt> grid{{0.3, 0.7, 1.5, 0.2},
                       {0.5, 0.5, 1.2, -0.35},
                       {0.25, 1.3, 1.9, 0.45},
                       {0.8, 0.4, 1.6, 0.1},
                       {0.35, 0.65, 1.45, -0.2}};
  for (const auto& p : grid) {
    cplx s = gauss_oracle(p.a, p.b, p.g, p.z, GaussRepr::Series, 1e-10).value;
    cplx e = gauss_oracle(p.a, p.b, p.g, p.z, GaussRepr::Euler, 1e-10).value;
    cplx r = gauss_oracle(p.a, p.b, p.g, p.z, GaussRepr::Residue, 1e-10).value;
    cplx l = gauss_oracle(p.a, p.b, p.g, p.z, GaussRepr::Laplace, 1e-8).value;
    double scale = std::abs(s);
    CHECK(std::abs(s - e) < 1e-8 * scale);
    CHECK(std::abs(s - r) < 1e-8 * scale);
    CHECK(std::abs(e - r) < 1e-8 * scale);
    CHECK(std::abs(s - l) < 1e-6 * scale);
    CHECK(std::abs(e - l) < 1e-6 * scale);
  }
}

TEST_CASE("gauss oracle rejects prefactor poles") {
  // gamma - alpha a nonpositive integer
  CHECK_THROWS_WITH_AS(gauss_oracle(1.5, 0.7, 1.5, 0.2, GaussRepr::Euler, 1e-8),
                       doctest::Contains("ParameterPole"), error);
  CHECK_THROWS_WITH_AS(gauss_oracle(0.3, 0.7, -1.0, 0.2, GaussRepr::Series, 1e-8),
                       doctest::Contains("ParameterPole"), error);
}

TEST_CASE("laplace cycle at the degenerate point matches the closed form") {
  cplx c1(1.0 / 3.0, 0.0), c2(0.2, 0.0);
  std::vector<cplx> z{cplx(1, 0), cplx(1, 0), cplx(1e-9, 0)};
  auto r = laplace_cycle_oracle(c1, c2, z, {0, 0}, 1e-8);
  cplx X = c1 + 0.5 * c2;
  cplx expect = (1.0 - std::exp(-2.0 * pi * I * X)) * rgamma(1.0 - c1) * rgamma(1.0 - 0.5 * c2);
  CHECK(std::abs(r.value - expect) < 1e-7 * std::abs(expect));
}

TEST_CASE("laplace cycle equals the transform-matrix combination") {
  TriangulationData T = regular_triangulation(A3, L3, {Rat(0), Rat(0), Rat(1)});
  auto z = sample_point(T, 0.1, 0.5);
  const SimplexData& sd = T.simplices[0];  // sigma_1 = {1,2}
  REQUIRE(sd.sigma == std::vector<long>{1, 2});

  std::vector<cplx> phi;
  for (const auto& k : representatives(sd))
    phi.push_back(eval(make_series(sd, k, c3()), z, 24).value);

  TransformMatrix Tm = transform_matrix(TransformKind::Laplace, sd, c3());
  auto f = basis_eval(Tm, phi);

  // row 1: ktilde = (0,0)
  auto r0 = laplace_cycle_oracle(cplx(1.0 / 3.0, 0.0), cplx(0.2, 0.0), z, {0, 0}, 1e-7);
  CHECK(std::abs(r0.value - f[0]) < 1e-4 * std::abs(f[0]));

  // row 2: the deck transform ktilde = (0,1)
  auto r1 = laplace_cycle_oracle(cplx(1.0 / 3.0, 0.0), cplx(0.2, 0.0), z, {0, 1}, 1e-7);
  CHECK(std::abs(r1.value - f[1]) < 1e-4 * std::abs(f[1]));
}
