#include "gkz/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "gkz/basis.hpp"
#include "gkz/contour.hpp"
#include "gkz/gammafn.hpp"
#include "gkz/series.hpp"

namespace gkz {

namespace {

constexpr double pi = 3.14159265358979323846264338327950288;
const cplx I(0.0, 1.0);

const IntMatrix A3{{1, 0, -1}, {0, 2, 3}};
const std::vector<long> L3{1, 2, 3};
const IntMatrix A4{{1, 1, 1, 1}, {0, 1, 0, -1}, {0, 0, 2, 3}};
const std::vector<long> L4{0, 1, 2, 3};

Parameter c3() { return Parameter::from_rationals({Rat(1, 3), Rat(1, 5)}); }
Parameter d4() { return Parameter::from_rationals({Rat(2, 7), Rat(1, 3), Rat(1, 5)}); }

CayleyStructure cayley4() {
  IntMatrix A1{{0, 1, 0, -1}, {0, 0, 2, 3}};
  return cayley_matrix({A1}, std::nullopt, {0, 1, 2, 3});
}

CayleyStructure e36_structure() {
  IntMatrix B{{0, 1, 0}, {0, 0, 1}};
  return cayley_matrix({B, B, B}, std::nullopt, {1, 2, 3, 4, 5, 6, 7, 8, 9});
}

cplx poch_closed_form(const std::vector<cplx>& a) {
  cplx num = 1.0, sum = 0.0;
  for (cplx ai : a) {
    num *= (1.0 - std::exp(-2.0 * pi * I * ai)) * gamma_fn(ai);
    sum += ai;
  }
  return num * rgamma(sum);
}

IntMatrix random_square(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = d(rng);
  return m;
}

// max-norm defect of (1/r) C C* - I for the duality character table of B
double unitarity_defect(const IntMatrix& B) {
  long r = static_cast<long>(std::abs(to_double(B.det())));
  auto left = class_representatives(B.transpose(), r);
  auto right = class_representatives(B, r);
  std::vector<std::vector<cplx>> C(r, std::vector<cplx>(r));
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < r; ++j) {
      double t = 2.0 * pi * to_double(pairing(left[i], right[j], B));
      C[i][j] = cplx(std::cos(t), std::sin(t));
    }
  double worst = 0.0;
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < r; ++j) {
      cplx acc = 0.0;
      for (long m = 0; m < r; ++m) acc += C[i][m] * std::conj(C[j][m]);
      acc /= double(r);
      worst = std::max(worst, std::abs(acc - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

// exhaustive nondegeneracy of the pairing over all class pairs
bool pairing_nondegenerate(const IntMatrix& B) {
  long r = static_cast<long>(std::abs(to_double(B.det())));
  auto left = class_representatives(B.transpose(), r);
  auto right = class_representatives(B, r);
  QuotientGroup gl(B.transpose()), gr(B);
  for (const auto& v : left) {
    bool hit = false;
    for (const auto& w : right)
      if (pairing(v, w, B) != 0) hit = true;
    if (hit == gl.is_member(v)) return false;
  }
  for (const auto& w : right) {
    bool hit = false;
    for (const auto& v : left)
      if (pairing(v, w, B) != 0) hit = true;
    if (hit == gr.is_member(w)) return false;
  }
  return true;
}

double matrix_distance(const std::vector<std::vector<cplx>>& a,
                       const std::vector<std::vector<cplx>>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

using Clock = std::chrono::steady_clock;

struct Criterion {
  int number;
  std::string name;
  std::string paper_anchor;
  std::function<void(CheckResult&, const VerifyOptions&)> run;
};

void crit_hankel(CheckResult& out, const VerifyOptions&) {
  out.threshold = 1e-8;
  double worst = 0.0, worst_time = 0.0;
  for (double re = -0.8; re <= 0.81; re += 0.4) {
    for (double im : {-0.8, -0.27, 0.27, 0.8}) {
      cplx alpha(re, im);
      auto t0 = Clock::now();
      auto r = hankel_integral(alpha, 1e-10);
      double dt = std::chrono::duration<double>(Clock::now() - t0).count();
      cplx expect = 2.0 * pi * I * rgamma(1.0 - alpha);
      worst = std::max(worst, std::abs(r.value - expect) / std::abs(expect));
      worst_time = std::max(worst_time, dt);
    }
  }
  out.measured = worst;
  out.pass = worst <= out.threshold && worst_time < 1.0;
  std::ostringstream os;
  os << "20 alpha grid points, max per-call time " << std::fixed << std::setprecision(3)
     << worst_time << " s";
  out.detail = os.str();
}

void crit_poch1(CheckResult& out, const VerifyOptions&) {
  out.threshold = 1e-8;
  double worst = 0.0;
  std::vector<std::vector<cplx>> cases{{cplx(0.5), cplx(0.5)},
                                       {cplx(1.0 / 3.0), cplx(0.25)},
                                       {cplx(0.3, 0.1), cplx(0.6, 0.0)}};
  for (const auto& a : cases) {
    auto r = pochhammer_integral(a, 1, 1e-10);
    cplx expect = poch_closed_form(a);
    worst = std::max(worst, std::abs(r.value - expect) / std::abs(expect));
  }
  // the half-integer case equals 4 pi on the nose
  auto r = pochhammer_integral({cplx(0.5), cplx(0.5)}, 1, 1e-10);
  worst = std::max(worst, std::abs(r.value - 4.0 * pi) / (4.0 * pi));
  out.measured = worst;
  out.pass = worst <= out.threshold;
  out.detail = "pairs (1/2,1/2), (1/3,1/4), (0.3+0.1i,0.6); (1/2,1/2) checked against 4 pi";
}

void crit_poch2(CheckResult& out, const VerifyOptions& opts) {
  out.threshold = opts.tol_override.value_or(1e-5);
  std::vector<cplx> a{cplx(1.0 / 3.0), cplx(0.25), cplx(0.2)};
  auto t0 = Clock::now();
  auto r = pochhammer_integral(a, 2, 1e-7);
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  cplx expect = poch_closed_form(a);
  out.measured = std::abs(r.value - expect) / std::abs(expect);
  out.pass = out.measured <= out.threshold && dt <= 60.0;
  std::ostringstream os;
  os << "alpha = (1/3, 1/4, 1/5), " << r.evaluations << " evaluations, " << std::fixed
     << std::setprecision(2) << dt << " s";
  out.detail = os.str();
}

void crit_gauss(CheckResult& out, const VerifyOptions&) {
  out.threshold = 1e-8;  // Laplace pairs at 1e-6
  struct Pt {
    double a, b, g, z;
  };
  std::vector<Pt> grid{{0.3, 0.7, 1.5, 0.2},
                       {0.5, 0.5, 1.2, -0.35},
                       {0.25, 1.3, 1.9, 0.45},
                       {0.8, 0.4, 1.6, 0.1},
                       {0.35, 0.65, 1.45, -0.2}};
  double worst_core = 0.0, worst_laplace = 0.0;
  for (const auto& p : grid) {
    cplx s = gauss_oracle(p.a, p.b, p.g, p.z, GaussRepr::Series, 1e-10).value;
    cplx e = gauss_oracle(p.a, p.b, p.g, p.z, GaussRepr::Euler, 1e-10).value;
    cplx r = gauss_oracle(p.a, p.b, p.g, p.z, GaussRepr::Residue, 1e-10).value;
    cplx l = gauss_oracle(p.a, p.b, p.g, p.z, GaussRepr::Laplace, 1e-8).value;
    double scale = std::abs(s);
    worst_core = std::max({worst_core, std::abs(s - e) / scale, std::abs(s - r) / scale,
                           std::abs(e - r) / scale});
    worst_laplace = std::max({worst_laplace, std::abs(s - l) / scale, std::abs(e - l) / scale,
                              std::abs(r - l) / scale});
  }
  out.measured = std::max(worst_core, worst_laplace * 1e-2);  // scaled into one number
  out.pass = worst_core <= 1e-8 && worst_laplace <= 1e-6;
  std::ostringstream os;
  os << "series/euler/residue max " << std::scientific << std::setprecision(2) << worst_core
     << ", laplace max " << worst_laplace << " (tol 1e-6)";
  out.detail = os.str();
}

void crit_laplace_e2e(CheckResult& out, const VerifyOptions&) {
  out.threshold = 1e-4;
  auto t0 = Clock::now();
  TriangulationData T = regular_triangulation(A3, L3, {Rat(0), Rat(0), Rat(1)});
  auto z = sample_point(T, 0.1, 0.5);
  const SimplexData& sd = T.simplices[0];
  std::vector<cplx> phi;
  for (const auto& k : representatives(sd))
    phi.push_back(eval(make_series(sd, k, c3()), z, 24).value);
  TransformMatrix Tm = transform_matrix(TransformKind::Laplace, sd, c3());
  auto f = basis_eval(Tm, phi);
  auto r0 = laplace_cycle_oracle(cplx(1.0 / 3.0, 0.0), cplx(0.2, 0.0), z, {0, 0}, 1e-7);
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  out.measured = std::abs(r0.value - f[0]) / std::abs(f[0]);
  out.pass = out.measured <= out.threshold && dt <= 120.0;
  std::ostringstream os;
  os << "c = (1/3, 1/5), z from sample_point(R = 0.1), " << std::fixed << std::setprecision(2)
     << dt << " s";
  out.detail = os.str();
}

void crit_triangulation(CheckResult& out, const VerifyOptions& opts) {
  out.threshold = 0.0;
  TriangulationData T3 = regular_triangulation(A3, L3, {Rat(0), Rat(0), Rat(1)}, opts.jobs);
  TriangulationData T4 =
      regular_triangulation(A4, L4, {Rat(0), Rat(0), Rat(0), Rat(1)}, opts.jobs);
  bool ok = T3.simplices.size() == 2 && T3.simplices[0].sigma == std::vector<long>{1, 2} &&
            T3.simplices[1].sigma == std::vector<long>{2, 3} && T3.volume == 4 &&
            T4.simplices.size() == 2 && T4.simplices[0].sigma == std::vector<long>{0, 1, 2} &&
            T4.simplices[1].sigma == std::vector<long>{0, 2, 3} && T4.volume == 4;
  out.measured = ok ? 0.0 : 1.0;
  out.pass = ok;
  out.detail = "weights (0,0,1) and (0,0,0,1); both volumes 4";
}

void crit_tmatrix(CheckResult& out, const VerifyOptions&) {
  out.threshold = 1e-12;
  double worst = 0.0;

  {  // rank-2 Laplace factorization
    SimplexData sd = make_simplex(A3, L3, {1, 2});
    TransformOptions o;
    o.reps = std::vector<IntVec>{IntVec{0}, IntVec{1}};
    o.dual_reps = std::vector<IntVec>{IntVec{0, 0}, IntVec{0, 1}};
    TransformMatrix T = transform_matrix(TransformKind::Laplace, sd, c3(), o);
    double c1v = 1.0 / 3.0, c2v = 0.2;
    cplx E = std::exp(-2.0 * pi * I * cplx(c1v + c2v / 2.0, 0.0));
    cplx lp = std::exp(pi * I * cplx(c2v, 0.0));
    std::vector<std::vector<cplx>> expect{{(1.0 - E), (1.0 + E)},
                                          {lp * (1.0 - E), -lp * (1.0 + E)}};
    worst = std::max(worst, matrix_distance(T.entries, expect));
  }
  {  // 3x4 Residue factorization
    CayleyStructure cs = cayley4();
    SimplexData sd = make_simplex(cs.assembled, cs.labels, {0, 1, 2});
    TransformOptions o;
    o.cayley = &cs;
    o.reps = std::vector<IntVec>{IntVec{0}, IntVec{1}};
    o.dual_reps = std::vector<IntVec>{IntVec{0, 0, 0}, IntVec{0, 0, 1}};
    TransformMatrix T = transform_matrix(TransformKind::Residue, sd, d4(), o);
    double gv = 2.0 / 7.0, c2v = 0.2;
    cplx pref = std::exp(-pi * I * cplx(gv, 0.0)) * rgamma(cplx(gv, 0.0));
    cplx lp = std::exp(pi * I * cplx(c2v, 0.0));
    std::vector<std::vector<cplx>> expect{{pref, pref}, {pref * lp, -pref * lp}};
    worst = std::max(worst, matrix_distance(T.entries, expect));
  }
  {  // 5x9 Euler scalar
    CayleyStructure cs = e36_structure();
    SimplexData sd = make_simplex(cs.assembled, cs.labels, {2, 4, 5, 6, 7});
    Parameter d =
        Parameter::from_rationals({Rat(1, 3), Rat(1, 5), Rat(1, 7), Rat(1, 11), Rat(1, 13)});
    TransformOptions o;
    o.cayley = &cs;
    o.sigma0 = {2, 4, 7};
    TransformMatrix T = transform_matrix(TransformKind::Euler, sd, d, o);
    double g1 = 1.0 / 3.0, g2 = 0.2, g3 = 1.0 / 7.0;
    cplx expect = std::exp(-pi * I * cplx(1.0 + g1 - g2 + g3, 0.0)) * rgamma(cplx(g1, 0.0)) *
                  rgamma(cplx(g2, 0.0)) * rgamma(cplx(g3, 0.0)) /
                  ((1.0 - std::exp(-2.0 * pi * I * cplx(g1, 0.0))) *
                   (1.0 - std::exp(-2.0 * pi * I * cplx(g3, 0.0))));
    worst = std::max(worst, std::abs(T.entries[0][0] - expect));
  }
  out.measured = worst;
  out.pass = worst <= out.threshold;
  out.detail = "rank-2 laplace, 3x4 residue, 5x9 euler scalar, entrywise";
}

void crit_unitarity(CheckResult& out, const VerifyOptions& opts) {
  out.threshold = 1e-12;
  double worst = 0.0;
  for (auto sig : {std::vector<long>{1, 2}, std::vector<long>{2, 3}})
    worst = std::max(worst, unitarity_defect(make_simplex(A3, L3, sig).Asigma));
  for (auto sig : {std::vector<long>{0, 1, 2}, std::vector<long>{0, 2, 3}})
    worst = std::max(worst, unitarity_defect(make_simplex(A4, L4, sig).Asigma));
  std::mt19937_64 rng(opts.seed);
  int found = 0;
  while (found < 10) {
    std::size_t n = 2 + (found % 2);
    IntMatrix B = random_square(rng, n, -4, 4);
    Int d = B.det();
    if (d == 0) continue;
    if ((d < 0 ? -d : d) > 12) continue;
    ++found;
    worst = std::max(worst, unitarity_defect(B));
  }
  out.measured = worst;
  out.pass = worst <= out.threshold;
  out.detail = "4 example simplices plus 10 random blocks with |det| <= 12";
}

void crit_operators(CheckResult& out, const VerifyOptions&) {
  out.threshold = 1e-12;
  double worst_box = 0.0;
  double euler_worst = 0.0;

  SystemSpec sys3 = build_system(A3, c3());
  auto ops3 = operators(sys3, {IntVec{2, -3, 2}});
  SimplexData sd3 = make_simplex(A3, L3, {1, 2});
  for (long k : {0L, 1L}) {
    GammaSeriesSpec spec = make_series(sd3, IntVec{k}, c3());
    euler_worst = std::max(euler_worst, operator_residual(spec, ops3[0], 8));
    euler_worst = std::max(euler_worst, operator_residual(spec, ops3[1], 8));
    worst_box = std::max(worst_box, operator_residual(spec, ops3[2], 10));
  }

  SystemSpec sys4 = build_system(A4, d4(), L4);
  auto ops4 = operators(sys4, {IntVec{1, -2, 3, -2}});
  SimplexData sd4 = make_simplex(A4, L4, {0, 1, 2});
  for (long k : {0L, 1L}) {
    GammaSeriesSpec spec = make_series(sd4, IntVec{k}, d4());
    for (std::size_t i = 0; i < 3; ++i)
      euler_worst = std::max(euler_worst, operator_residual(spec, ops4[i], 8));
    worst_box = std::max(worst_box, operator_residual(spec, ops4[3], 10));
  }

  out.measured = worst_box;
  out.pass = euler_worst == 0.0 && worst_box <= out.threshold;
  std::ostringstream os;
  os << "euler residual " << euler_worst << " (exact), box residual " << std::scientific
     << std::setprecision(2) << worst_box << " at order 10";
  out.detail = os.str();
}

void crit_snf(CheckResult& out, const VerifyOptions& opts) {
  out.threshold = 0.0;
  std::mt19937_64 rng(opts.seed + 1);
  bool ok = true;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = trial < 100 ? 3 : 4;
    IntMatrix m = random_square(rng, n, -9, 9);
    SnfResult s = smith_normal_form(m);
    if (!(s.P.mul(m).mul(s.Q) == s.D)) ok = false;
    Int dp = s.P.det(), dq = s.Q.det();
    if (!((dp == 1 || dp == -1) && (dq == 1 || dq == -1))) ok = false;
    for (std::size_t k = 0; k + 1 < n; ++k)
      if (s.D.at(k + 1, k + 1) != 0) {
        if (s.D.at(k, k) == 0 || s.D.at(k + 1, k + 1) % s.D.at(k, k) != 0) ok = false;
      }
  }
  // pairing nondegeneracy over every simplex block in play with |det| <= 12
  std::vector<IntMatrix> blocks;
  for (auto sig : {std::vector<long>{1, 2}, std::vector<long>{2, 3}})
    blocks.push_back(make_simplex(A3, L3, sig).Asigma);
  for (auto sig : {std::vector<long>{0, 1, 2}, std::vector<long>{0, 2, 3}})
    blocks.push_back(make_simplex(A4, L4, sig).Asigma);
  std::mt19937_64 rng2(opts.seed);
  int found = 0;
  while (found < 10) {
    std::size_t n = 2 + (found % 2);
    IntMatrix B = random_square(rng2, n, -4, 4);
    Int d = B.det();
    if (d == 0) continue;
    if ((d < 0 ? -d : d) > 12) continue;
    ++found;
    blocks.push_back(B);
  }
  for (const auto& B : blocks)
    if (!pairing_nondegenerate(B)) ok = false;
  out.measured = ok ? 0.0 : 1.0;
  out.pass = ok;
  out.detail = "200 random matrices; nondegeneracy brute-forced on 14 blocks";
}

void crit_deck(CheckResult& out, const VerifyOptions& opts) {
  out.threshold = 1e-12;
  std::mt19937_64 rng(opts.seed + 2);
  std::uniform_int_distribution<int> d(-3, 3);
  double worst = 0.0;

  {  // rank-2 Laplace
    SimplexData sd = make_simplex(A3, L3, {1, 2});
    TransformMatrix T = transform_matrix(TransformKind::Laplace, sd, c3());
    IntMatrix At = sd.Asigma.transpose();
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<IntVec> shifted = T.dual_reps;
      for (auto& kt : shifted) {
        IntVec t{d(rng), d(rng)};
        IntVec delta = At.mul(t);
        for (std::size_t i = 0; i < kt.size(); ++i) kt[i] += delta[i];
      }
      TransformOptions o;
      o.dual_reps = shifted;
      TransformMatrix T2 = transform_matrix(TransformKind::Laplace, sd, c3(), o);
      worst = std::max(worst, matrix_distance(T.entries, T2.entries));
    }
  }
  {  // 3x4 Residue
    CayleyStructure cs = cayley4();
    SimplexData sd = make_simplex(cs.assembled, cs.labels, {0, 1, 2});
    TransformOptions base;
    base.cayley = &cs;
    TransformMatrix T = transform_matrix(TransformKind::Residue, sd, d4(), base);
    IntMatrix At = sd.Asigma.transpose();
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<IntVec> shifted = T.dual_reps;
      for (auto& kt : shifted) {
        IntVec t{d(rng), d(rng), d(rng)};
        IntVec delta = At.mul(t);
        for (std::size_t i = 0; i < kt.size(); ++i) kt[i] += delta[i];
      }
      TransformOptions o;
      o.cayley = &cs;
      o.dual_reps = shifted;
      TransformMatrix T2 = transform_matrix(TransformKind::Residue, sd, d4(), o);
      worst = std::max(worst, matrix_distance(T.entries, T2.entries));
    }
  }
  out.measured = worst;
  out.pass = worst <= out.threshold;
  out.detail = "5 random transposed-block shifts per kind, entrywise";
}

std::vector<Criterion> criteria() {
  return {
      {1, "hankel", "hankel-contour-lemma", crit_hankel},
      {2, "poch1", "pochhammer-cycle-lemma-k1", crit_poch1},
      {3, "poch2", "pochhammer-cycle-lemma-k2", crit_poch2},
      {4, "gauss", "gauss-four-representations", crit_gauss},
      {5, "laplace-e2e", "laplace-transform-worked-example", crit_laplace_e2e},
      {6, "triangulation", "worked-example-triangulations", crit_triangulation},
      {7, "tmatrix", "transform-matrix-factorizations", crit_tmatrix},
      {8, "unitarity", "character-table-unitarity", crit_unitarity},
      {9, "operators", "series-annihilation", crit_operators},
      {10, "snf", "smith-normal-form-and-pairing", crit_snf},
      {11, "deck", "deck-transform-class-invariance", crit_deck},
  };
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts, std::ostream* progress) {
  std::vector<CheckResult> results;
  for (const auto& c : criteria()) {
    CheckResult r;
    r.criterion = c.number;
    r.name = c.name;
    r.paper_anchor = c.paper_anchor;
    if (!opts.only.empty() && opts.only != c.name) {
      r.skipped = true;
      results.push_back(r);
      continue;
    }
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(r, opts);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (progress) {
      std::ostream& os = *progress;
      os << (r.pass ? "[PASS] " : "[FAIL] ") << r.criterion << " " << r.name << ": measured "
         << std::scientific << std::setprecision(3) << r.measured << " (threshold "
         << r.threshold << ") " << r.detail << "\n";
      os.flush();
    }
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.skipped && !r.pass) return false;
  return true;
}

}  // namespace gkz
