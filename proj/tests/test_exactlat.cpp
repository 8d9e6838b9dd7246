#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "gkz/exactlat.hpp"

using namespace gkz;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = d(rng);
  return m;
}

// Brute-force coset count of Z^n / Z B by flood fill over a residue box.
long brute_coset_count(const IntMatrix& B) {
  std::size_t n = B.rows();
  long M = 1;
  Int d = B.det();
  long bound = static_cast<long>(to_double(d < 0 ? Int(-d) : d)) + 1;
  for (std::size_t i = 0; i < n; ++i) M *= 2 * bound + 1;
  (void)M;
  QuotientGroup g(B);
  std::set<IntVec> forms;
  std::vector<long> idx(n, -bound);
  for (;;) {
    IntVec w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = idx[i];
    forms.insert(g.canonical_form(w));
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++idx[i] <= bound) break;
      idx[i] = -bound;
    }
    if (i == n) break;
  }
  return static_cast<long>(forms.size());
}

}  // namespace

TEST_CASE("snf identity cases") {
  SnfResult s = smith_normal_form(IntMatrix::identity(2));
  CHECK(s.D == IntMatrix::identity(2));
  CHECK(s.P.mul(IntMatrix::identity(2)).mul(s.Q) == s.D);

  IntMatrix m{{1, 0}, {0, 2}};
  s = smith_normal_form(m);
  CHECK(s.D.at(0, 0) == 1);
  CHECK(s.D.at(1, 1) == 2);
  QuotientGroup g(m);
  CHECK(g.order() == 2);
  CHECK(g.invariant_factors().size() == 1);
  CHECK(g.invariant_factors()[0] == 2);
}

TEST_CASE("snf randomized oracle: P M Q = D, divisibility, unimodularity") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m = random_matrix(rng, 3, -9, 9);
    SnfResult s = smith_normal_form(m);
    CHECK(s.P.mul(m).mul(s.Q) == s.D);
    Int dp = s.P.det(), dq = s.Q.det();
    CHECK((dp == 1 || dp == -1));
    CHECK((dq == 1 || dq == -1));
    for (std::size_t k = 0; k + 1 < 3; ++k) {
      if (s.D.at(k + 1, k + 1) != 0) {
        CHECK(s.D.at(k, k) != 0);
        CHECK(s.D.at(k + 1, k + 1) % s.D.at(k, k) == 0);
      }
    }
    // |det D| = |det M|
    Int dd = s.D.det(), dm = m.det();
    CHECK((dd == dm || dd == -dm));
  }
}

TEST_CASE("rational inverse") {
  IntMatrix d{{1, 0}, {0, 2}};
  RatMatrix inv = rational_inverse(d);
  CHECK(inv.at(0, 0) == 1);
  CHECK(inv.at(1, 1) == Rat(1, 2));

  CHECK(rational_inverse(IntMatrix::identity(3)) == RatMatrix::identity(3));

  // random unimodular 4x4 built from elementary operations
  std::mt19937_64 rng(7);
  IntMatrix u = IntMatrix::identity(4);
  std::uniform_int_distribution<int> pick(0, 3), coef(-3, 3);
  for (int k = 0; k < 25; ++k) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    u.add_row(i, j, coef(rng));
  }
  Int du = u.det();
  CHECK((du == 1 || du == -1));
  RatMatrix ui = rational_inverse(u);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(is_integer(ui.at(i, j)));
  CHECK(RatMatrix(u).mul(ui) == RatMatrix::identity(4));

  CHECK_THROWS_AS(rational_inverse(IntMatrix{{1, 2}, {2, 4}}), error);
}

TEST_CASE("lattice kernel") {
  IntMatrix A{{1, 0, -1}, {0, 2, 3}};
  auto basis = lattice_kernel(A);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == IntVec{2, -3, 2});

  CHECK(lattice_kernel(IntMatrix::identity(3)).empty());

  IntMatrix A4{{1, 1, 1, 1}, {0, 1, 0, -1}, {0, 0, 2, 3}};
  auto b4 = lattice_kernel(A4);
  REQUIRE(b4.size() == 1);
  CHECK(b4[0] == IntVec{1, -2, 3, -2});
  IntVec Au = A4.mul(b4[0]);
  for (const auto& x : Au) CHECK(x == 0);

  CHECK_THROWS_AS(lattice_kernel(IntMatrix{{1, 1}, {1, 1}}), error);
}

TEST_CASE("lattice membership") {
  IntMatrix B{{1, 0}, {0, 2}};
  CHECK(lattice_member(B, IntVec{5, 4}));
  CHECK_FALSE(lattice_member(B, IntVec{5, 3}));
  CHECK(lattice_member(B, IntVec{0, 0}));

  // A_sigmabar m = (-m, 3m) lies in Z diag(1,2) iff m is even
  for (long m = 0; m <= 6; ++m) {
    bool in = lattice_member(B, IntVec{-m, 3 * m});
    CHECK(in == (m % 2 == 0));
  }
}

TEST_CASE("quotient group") {
  QuotientGroup g(IntMatrix{{1, 0}, {0, 2}});
  CHECK(g.order() == 2);

  QuotientGroup triv(IntMatrix{{1, 1}, {0, 1}});
  CHECK(triv.order() == 1);
  CHECK(triv.invariant_factors().empty());

  IntMatrix B{{2, 1}, {0, 3}};
  QuotientGroup g6(B);
  CHECK(g6.order() == 6);
  CHECK(brute_coset_count(B) == 6);

  std::mt19937_64 rng(99);
  int tested = 0;
  while (tested < 12) {
    IntMatrix m = random_matrix(rng, 2, -4, 4);
    Int d = m.det();
    if (d == 0) continue;
    if ((d < 0 ? -d : d) > 12) continue;
    ++tested;
    QuotientGroup g2(m);
    CHECK(g2.order() == Int(brute_coset_count(m)));
  }
}

TEST_CASE("pairing basics and the example character value") {
  IntMatrix B{{1, 0}, {0, 2}};
  CHECK(pairing(IntVec{0, 0}, IntVec{7, -3}, B) == 0);
  CHECK(pairing(IntVec{0, 1}, IntVec{-1, 3}, B) == Rat(1, 2));
}

TEST_CASE("pairing is well-defined and bi-additive mod 1") {
  std::mt19937_64 rng(4242);
  IntMatrix B{{2, 1}, {0, 3}};
  IntMatrix Bt = B.transpose();
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    IntVec v{d(rng), d(rng)}, w{d(rng), d(rng)}, t{d(rng), d(rng)};
    // v + tB t leaves the pairing unchanged
    IntVec v2 = v;
    IntVec shift = Bt.mul(t);
    for (int i = 0; i < 2; ++i) v2[i] += shift[i];
    CHECK(pairing(v, w, B) == pairing(v2, w, B));
    // additivity mod 1
    IntVec vw{v[0] + t[0], v[1] + t[1]};
    Rat lhs = pairing(vw, w, B);
    Rat rhs = mod1(pairing(v, w, B) + pairing(t, w, B));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("pairing nondegeneracy, brute force") {
  for (IntMatrix B : {IntMatrix{{2, 1}, {0, 3}}, IntMatrix{{1, 0}, {0, 2}},
                      IntMatrix{{2, 0}, {1, 3}}}) {
    QuotientGroup right(B);
    QuotientGroup left(B.transpose());
    long r = static_cast<long>(to_double(right.order()));
    // enumerate small representatives of both quotients
    auto reps = [&](const QuotientGroup& g) {
      std::vector<IntVec> out;
      std::set<IntVec> seen;
      for (long x = -8; x <= 8 && (long)out.size() < r; ++x)
        for (long y = -8; y <= 8 && (long)out.size() < r; ++y) {
          IntVec w{x, y};
          auto cf = g.canonical_form(w);
          if (seen.insert(cf).second) out.push_back(w);
        }
      return out;
    };
    auto lreps = reps(left), rreps = reps(right);
    REQUIRE((long)lreps.size() == r);
    REQUIRE((long)rreps.size() == r);
    for (const auto& v : lreps) {
      bool vzero = left.is_member(v);
      bool hit = false;
      for (const auto& w : rreps)
        if (pairing(v, w, B) != 0) hit = true;
      CHECK(hit == !vzero);
    }
    for (const auto& w : rreps) {
      bool wzero = right.is_member(w);
      bool hit = false;
      for (const auto& v : lreps)
        if (pairing(v, w, B) != 0) hit = true;
      CHECK(hit == !wzero);
    }
  }
}
