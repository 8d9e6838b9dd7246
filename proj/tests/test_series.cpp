#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "gkz/gammafn.hpp"
#include "gkz/series.hpp"

using namespace gkz;

namespace {

const IntMatrix A3{{1, 0, -1}, {0, 2, 3}};
const std::vector<long> L3{1, 2, 3};
const IntMatrix A4{{1, 1, 1, 1}, {0, 1, 0, -1}, {0, 0, 2, 3}};
const std::vector<long> L4{0, 1, 2, 3};

Parameter c3() { return Parameter::from_rationals({Rat(1, 3), Rat(1, 5)}); }
Parameter d4() { return Parameter::from_rationals({Rat(2, 7), Rat(1, 3), Rat(1, 5)}); }

// independent oracle: the displayed rank-2 series summed directly
cplx direct_series_rank2(double c1v, double c2v, const std::vector<cplx>& z, long kpar,
                         long order) {
  cplx pref = std::pow(z[0], -c1v) * std::pow(z[1], -c2v / 2.0);
  cplx hat = z[0] * std::pow(z[1], -1.5) * z[2];
  cplx sum = 0.0;
  for (long m = (kpar % 2 + 2) % 2; m <= order; m += 2) {
    cplx term = std::pow(hat, double(m)) * rgamma(1.0 - c1v + double(m)) *
                rgamma(1.0 - c2v / 2.0 - 1.5 * double(m)) / std::tgamma(double(m) + 1.0);
    sum += term;
  }
  return pref * sum;
}

}  // namespace

TEST_CASE("exponent vectors") {
  SimplexData sd = make_simplex(A3, L3, {1, 2});
  auto v0 = exponent_vector(sd, IntVec{0}, c3());
  CHECK(std::abs(v0[0] - cplx(-1.0 / 3.0, 0.0)) < 1e-15);
  CHECK(std::abs(v0[1] - cplx(-0.1, 0.0)) < 1e-15);
  CHECK(std::abs(v0[2]) == 0.0);

  auto vz = exponent_vector(sd, IntVec{0}, Parameter::from_rationals({Rat(0), Rat(0)}));
  for (const auto& x : vz) CHECK(std::abs(x) == 0.0);

  SimplexData s4 = make_simplex(A4, L4, {0, 1, 2});
  auto w0 = exponent_vector(s4, IntVec{0}, d4());
  // sigma block (c1 + c2/2 - gamma, -c1, -c2/2)
  CHECK(std::abs(w0[0] - cplx(1.0 / 3.0 + 0.1 - 2.0 / 7.0, 0.0)) < 1e-14);
  CHECK(std::abs(w0[1] - cplx(-1.0 / 3.0, 0.0)) < 1e-14);
  CHECK(std::abs(w0[2] - cplx(-0.1, 0.0)) < 1e-14);
  CHECK(std::abs(w0[3]) == 0.0);
}

TEST_CASE("representatives") {
  SimplexData sd = make_simplex(A3, L3, {1, 2});
  auto reps = representatives(sd);
  REQUIRE(reps.size() == 2);
  CHECK(reps[0] == IntVec{0});
  CHECK(reps[1] == IntVec{1});

  // unimodular block: single class
  IntMatrix U{{1, 0, 3}, {0, 1, 4}};
  SimplexData su = make_simplex(U, {1, 2, 3}, {1, 2});
  CHECK(representatives(su) == std::vector<IntVec>{IntVec{0}});
}

TEST_CASE("lambda sets partition the octant") {
  SimplexData sd = make_simplex(A3, L3, {1, 2});
  auto l0 = lambda_set(sd, IntVec{0}, 6);
  CHECK(l0 == std::vector<IntVec>{IntVec{0}, IntVec{2}, IntVec{4}, IntVec{6}});
  auto l1 = lambda_set(sd, IntVec{1}, 6);
  CHECK(l1 == std::vector<IntVec>{IntVec{1}, IntVec{3}, IntVec{5}});

  CHECK(lambda_set(sd, IntVec{0}, 0) == std::vector<IntVec>{IntVec{0}});

  // partition: each bounded multi-index lies in exactly one Lambda
  long count = 0;
  for (const auto& l : {l0, l1}) count += long(l.size());
  CHECK(count == 7);  // all of 0..6
}

TEST_CASE("lambda partition for a determinant-3 simplex") {
  SimplexData sd = make_simplex(A3, L3, {1, 3});
  CHECK(sd.det == 3);
  auto reps = representatives(sd);
  REQUIRE(reps.size() == 3);
  std::set<IntVec> seen;
  long count = 0;
  for (const auto& k : reps)
    for (const auto& lam : lambda_set(sd, k, 6)) {
      CHECK(seen.insert(lam).second);
      ++count;
    }
  CHECK(count == 7);  // every multi-index 0..6 in exactly one class
}

TEST_CASE("very generic decisions are exact for rational parameters") {
  SimplexData sd = make_simplex(A3, L3, {1, 2});
  auto g = very_generic(sd, c3());
  CHECK(g.verdict == GenericityResult::Verdict::Yes);

  auto g0 = very_generic(sd, Parameter::from_rationals({Rat(0), Rat(0)}));
  CHECK(g0.verdict == GenericityResult::Verdict::No);
  CHECK(g0.witness == IntVec{0});

  auto g2 = very_generic(sd, Parameter::from_rationals({Rat(1, 3), Rat(2)}));
  CHECK(g2.verdict == GenericityResult::Verdict::No);
  CHECK(g2.entry == 1);
  CHECK(g2.witness == IntVec{0});

  // floating parameters: depth-bounded
  auto gf = very_generic(sd, Parameter::from_complex({cplx(0.341, 0.0), cplx(0.213, 0.0)}), 8);
  CHECK(gf.verdict == GenericityResult::Verdict::UnknownBeyondDepth);
}

TEST_CASE("series evaluation against the independent direct sum") {
  SimplexData sd = make_simplex(A3, L3, {1, 2});
  std::vector<cplx> z{cplx(0.9, 0.0), cplx(1.4, 0.0), cplx(0.05, 0.0)};
  for (long kpar : {0L, 1L}) {
    GammaSeriesSpec spec = make_series(sd, IntVec{kpar}, c3());
    SeriesValue v = eval(spec, z, 24);
    cplx expect = direct_series_rank2(1.0 / 3.0, 0.2, z, kpar, 24);
    CHECK(std::abs(v.value - expect) < 1e-12 * std::max(1.0, std::abs(expect)));
    CHECK(v.tail_bound < 1e-10);
  }
}

TEST_CASE("limit point: only the constant term survives") {
  SimplexData sd = make_simplex(A3, L3, {1, 2});
  GammaSeriesSpec spec = make_series(sd, IntVec{0}, c3());
  std::vector<cplx> z{cplx(1.0, 0.0), cplx(1.0, 0.0), cplx(1e-12, 0.0)};
  SeriesValue v = eval(spec, z, 8);
  cplx expect = rgamma(cplx(1.0 - 1.0 / 3.0, 0.0)) * rgamma(cplx(1.0 - 0.1, 0.0));
  CHECK(std::abs(v.value - expect) < 1e-10);

  CHECK_THROWS_WITH_AS(eval(spec, {cplx(1, 0), cplx(0, 0), cplx(1, 0)}, 4),
                       doctest::Contains("DomainError"), error);
}

TEST_CASE("gauss hypergeometric series through the Cayley encoding") {
  // two linear blocks in one variable: columns (1|0), (1|1) and (0|...)
  IntMatrix B1{{0, 1}};  // exponents of 1, x in block 1
  IntMatrix B2{{0, 1}};
  CayleyStructure cs = cayley_matrix({B1, B2}, std::nullopt, {1, 2, 3, 4});
  // parameters (g1, g2, c) give 2F1(c, g2; 1 + c - g1; w)
  double al = 0.3, be = 0.7, ga = 1.5;
  Rat c = Rat(3, 10), g2 = Rat(7, 10), g1 = Rat(-1, 5);  // 1 + c - g1 = ga
  Parameter d = Parameter::from_rationals({g1, g2, c});
  SimplexData sd = make_simplex(cs.assembled, cs.labels, {1, 2, 3});
  GammaSeriesSpec spec = make_series(sd, IntVec{0}, d);
  double w = 0.2;
  std::vector<cplx> z{cplx(1, 0), cplx(1, 0), cplx(1, 0), cplx(w, 0)};
  SeriesValue v = eval(spec, z, 40);
  // normalize by the m=0 coefficient and compare with direct summation
  cplx lead = rgamma(cplx(1.0 - (to_double(g1) - al), 0.0)) * rgamma(cplx(1.0 - al, 0.0)) *
              rgamma(cplx(1.0 - be, 0.0));
  cplx sum = 0.0, term = 1.0;
  for (int n = 0; n < 80; ++n) {
    sum += term;
    term *= (al + n) * (be + n) * w / ((ga + n) * (n + 1.0));
  }
  CHECK(std::abs(v.value / lead - sum) < 1e-12 * std::abs(sum));
}

TEST_CASE("euler operators annihilate exactly") {
  SimplexData sd = make_simplex(A3, L3, {1, 2});
  GammaSeriesSpec spec = make_series(sd, IntVec{0}, c3());
  SystemSpec sys = build_system(A3, c3());
  auto ops = operators(sys, {IntVec{2, -3, 2}});
  CHECK(operator_residual(spec, ops[0], 8) == 0.0);
  CHECK(operator_residual(spec, ops[1], 8) == 0.0);
}

TEST_CASE("box operators annihilate to roundoff") {
  SimplexData sd = make_simplex(A3, L3, {1, 2});
  SystemSpec sys = build_system(A3, c3());
  auto ops = operators(sys, {IntVec{2, -3, 2}});
  for (long kpar : {0L, 1L}) {
    GammaSeriesSpec spec = make_series(sd, IntVec{kpar}, c3());
    CHECK(operator_residual(spec, ops[2], 10) <= 1e-12);
  }

  SimplexData s4 = make_simplex(A4, L4, {0, 1, 2});
  SystemSpec sys4 = build_system(A4, d4(), {0, 1, 2, 3});
  auto ops4 = operators(sys4, {IntVec{1, -2, 3, -2}});
  for (long kpar : {0L, 1L}) {
    GammaSeriesSpec spec = make_series(s4, IntVec{kpar}, d4());
    CHECK(operator_residual(spec, ops4[3], 10) <= 1e-12);
  }

  GammaSeriesSpec spec = make_series(sd, IntVec{0}, c3());
  CHECK_THROWS_WITH_AS(operator_residual(spec, ops[2], 3),
                       doctest::Contains("TruncationTooSmall"), error);
}

TEST_CASE("class-equal offsets give the same support and values") {
  SimplexData sd = make_simplex(A3, L3, {1, 2});
  // k = 0 and k = 2 lie in the same class
  CHECK(lambda_set(sd, IntVec{0}, 8) == lambda_set(sd, IntVec{2}, 8));
  std::vector<cplx> z{cplx(0.8, 0.0), cplx(1.2, 0.0), cplx(0.03, 0.0)};
  SeriesValue a = eval(make_series(sd, IntVec{0}, c3()), z, 20);
  SeriesValue b = eval(make_series(sd, IntVec{2}, c3()), z, 20);
  CHECK(std::abs(a.value - b.value) < 1e-14 * std::abs(a.value));
}

TEST_CASE("leading coefficients of the r series are independent") {
  SimplexData sd = make_simplex(A3, L3, {1, 2});
  auto reps = representatives(sd);
  // disjoint supports plus nonvanishing first coefficients
  std::set<std::vector<Int>> seen;
  for (const auto& k : reps) {
    auto lam = lambda_set(sd, k, 10);
    REQUIRE(!lam.empty());
    for (const auto& l : lam) CHECK(seen.insert(l).second);
    GammaSeriesSpec spec = make_series(sd, k, c3());
    RatVec shift = sd.inv_Abar.mul(lam[0]);
    cplx coeff = 1.0;
    for (std::size_t i = 0; i < 2; ++i) {
      cplx wi = 0.0;
      for (std::size_t m = 0; m < 2; ++m)
        wi += to_double(sd.inv.at(i, m)) * spec.parameter.value[m];
      coeff *= rgamma(1.0 - (wi + to_double(shift[i])));
    }
    CHECK(std::abs(coeff) > 1e-10);
  }
}
