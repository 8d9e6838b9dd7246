#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gkz/fan.hpp"

using namespace gkz;

namespace {

const IntMatrix A3{{1, 0, -1}, {0, 2, 3}};
const std::vector<long> L3{1, 2, 3};
const IntMatrix A4{{1, 1, 1, 1}, {0, 1, 0, -1}, {0, 0, 2, 3}};
const std::vector<long> L4{0, 1, 2, 3};

RatVec rvec(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<std::vector<long>> sigmas_of(const TriangulationData& T) {
  std::vector<std::vector<long>> out;
  for (const auto& sd : T.simplices) out.push_back(sd.sigma);
  return out;
}

}  // namespace

TEST_CASE("rank-2 example triangulation") {
  TriangulationData T = regular_triangulation(A3, L3, rvec({0, 0, 1}));
  CHECK(sigmas_of(T) == std::vector<std::vector<long>>{{1, 2}, {2, 3}});
  CHECK(T.volume == 4);
  CHECK(normalized_volume(T) == 4);
}

TEST_CASE("3x4 example triangulation") {
  TriangulationData T = regular_triangulation(A4, L4, rvec({0, 0, 0, 1}));
  CHECK(sigmas_of(T) == std::vector<std::vector<long>>{{0, 1, 2}, {0, 2, 3}});
  CHECK(T.volume == 4);
}

TEST_CASE("square system: single simplex") {
  IntMatrix I2{{1, 0}, {0, 1}};
  TriangulationData T = regular_triangulation(I2, {1, 2}, rvec({0, 0}));
  CHECK(sigmas_of(T) == std::vector<std::vector<long>>{{1, 2}});
  CHECK(T.volume == 1);
  auto z = sample_point(T);
  CHECK(z == std::vector<cplx>(2, cplx(1.0, 0.0)));
}

TEST_CASE("wall weights are a hard error naming the offender") {
  CHECK_THROWS_WITH_AS(regular_triangulation(A3, L3, rvec({0, 0, 0})),
                       doctest::Contains("NonGenericWeight"), error);
}

TEST_CASE("cone rows and membership") {
  TriangulationData T = regular_triangulation(A3, L3, rvec({0, 0, 1}));
  // the expected facet row: omega_1 - (3/2) omega_2 + omega_3 > 0, as the
  // primitive integer row (2, -3, 2)
  RatVec expect{Rat(2), Rat(-3), Rat(2)};
  bool found = false;
  for (const auto& row : T.cone_rows)
    if (row == expect) found = true;
  CHECK(found);

  // random interior points reproduce the same triangulation
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<long> d(1, 40);
  int done = 0;
  while (done < 100) {
    // random positive combination of the defining omega and a cone ray
    RatVec w(3);
    Rat a(d(rng)), b(d(rng));
    for (int i = 0; i < 3; ++i) w[i] = a * T.omega[i] + b * expect[i] / 2;
    bool interior = true;
    for (const auto& row : T.cone_rows)
      if (!(rat_dot(row, w) > 0)) interior = false;
    if (!interior) continue;
    ++done;
    TriangulationData T2 = regular_triangulation(A3, L3, w);
    CHECK(sigmas_of(T2) == sigmas_of(T));
  }
}

TEST_CASE("gevrey exponents") {
  SimplexData sd = make_simplex(A3, L3, {1, 2});
  REQUIRE(sd.sbar == std::vector<long>{3});
  CHECK(sd.s[0] == Rat(1, 2));  // |(-1, 3/2)|
  CHECK(sbar_plus(sd).empty());

  // Cayley systems have s_j = 1 for every complement column
  for (auto sigma : {std::vector<long>{0, 1, 2}, std::vector<long>{0, 2, 3}}) {
    SimplexData s4 = make_simplex(A4, L4, sigma);
    for (const auto& sj : s4.s) CHECK(sj == 1);
  }
}

TEST_CASE("volume is invariant across generic weights") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<long> d(-20, 20);
  int done = 0;
  while (done < 5) {
    RatVec w(4);
    for (int i = 0; i < 4; ++i) w[i] = Rat(d(rng));
    try {
      TriangulationData T = regular_triangulation(A4, L4, w);
      CHECK(T.volume == 4);
      ++done;
    } catch (const error& e) {
      if (e.code() != errc::non_generic_weight) throw;
    }
  }
}

TEST_CASE("triangulation covers the cone") {
  TriangulationData T = regular_triangulation(A3, L3, rvec({0, 0, 1}));
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> d(0, 9);
  for (int trial = 0; trial < 50; ++trial) {
    // random nonnegative rational combination of the columns
    RatVec p(2, Rat(0));
    for (std::size_t j = 0; j < 3; ++j) {
      Rat c(d(rng), 3);
      for (std::size_t i = 0; i < 2; ++i) p[i] += c * Rat(A3.at(i, j));
    }
    int closed = 0, open = 0;
    for (const auto& sd : T.simplices) {
      RatVec x = solve_rational(sd.Asigma, p);
      bool nonneg = true, strict = true;
      for (const auto& xi : x) {
        if (xi < 0) nonneg = false;
        if (xi <= 0) strict = false;
      }
      if (nonneg) ++closed;
      if (strict) ++open;
    }
    CHECK(closed >= 1);
    CHECK(open <= 1);
  }
}

TEST_CASE("sample point satisfies every constraint") {
  TriangulationData T = regular_triangulation(A3, L3, rvec({0, 0, 1}));
  auto z = sample_point(T, 0.1, 0.5);
  REQUIRE(z.size() == 3);
  double v = std::abs(z[0]) * std::pow(std::abs(z[1]), -1.5) * std::abs(z[2]);
  CHECK(v < 0.1);

  TriangulationData T4 = regular_triangulation(A4, L4, rvec({0, 0, 0, 1}));
  auto z4 = sample_point(T4, 0.1, 0.5);
  double v4 = std::pow(std::abs(z4[0]), -0.5) * std::abs(z4[1]) *
              std::pow(std::abs(z4[2]), -1.5) * std::abs(z4[3]);
  CHECK(v4 < 0.1);
}
