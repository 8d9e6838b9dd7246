#include "gkz/contour.hpp"

#include <algorithm>
#include <cmath>

#include "gkz/errors.hpp"
#include "gkz/gammafn.hpp"

namespace gkz {

namespace {
constexpr double pi = 3.14159265358979323846264338327950288;
const cplx two_pi_i(0.0, 2.0 * pi);

bool near_nonpositive_int(cplx v, double tol = 1e-12) {
  double r = std::round(v.real());
  return std::abs(v.imag()) <= tol && r <= 0.0 && std::abs(v.real() - r) <= tol;
}
}  // namespace

Segment seg_line(cplx a, cplx b) {
  Segment s;
  s.pos = [a, b](double t) { return a + (b - a) * t; };
  s.dpos = [a, b](double) { return b - a; };
  return s;
}

Segment seg_arc(cplx center, double radius, double theta0, double theta1) {
  Segment s;
  s.pos = [=](double t) {
    double th = theta0 + (theta1 - theta0) * t;
    return center + radius * cplx(std::cos(th), std::sin(th));
  };
  s.dpos = [=](double t) {
    double th = theta0 + (theta1 - theta0) * t;
    return radius * (theta1 - theta0) * cplx(-std::sin(th), std::cos(th));
  };
  return s;
}

Segment seg_graded_line(cplx a, cplx b, int m) {
  Segment s;
  auto g = [m](double t) {
    double u = std::pow(t, m), v = std::pow(1.0 - t, m);
    return u / (u + v);
  };
  auto dg = [m](double t) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    double u = std::pow(t, m), v = std::pow(1.0 - t, m);
    double den = (u + v) * (u + v);
    return m * std::pow(t, m - 1) * std::pow(1.0 - t, m - 1) / den;
  };
  s.pos = [=](double t) { return a + (b - a) * g(t); };
  s.dpos = [=](double t) { return (b - a) * dg(t); };
  return s;
}

BranchedPath::BranchedPath(const PathSpec& spec) : spec_(spec) {
  std::size_t nf = spec_.factors.size();
  std::vector<double> args(nf);
  for (std::size_t i = 0; i < nf; ++i) args[i] = spec_.factors[i].start_arg;
  std::vector<double> args0 = args;

  auto eval_factors = [&](cplx zeta, std::vector<cplx>& vals) {
    vals.resize(nf);
    for (std::size_t i = 0; i < nf; ++i) {
      const auto& f = spec_.factors[i];
      cplx v = f.a + f.b * zeta;
      if (std::abs(v) == 0.0)
        fail(errc::singular_on_path, "power-factor base vanishes on the contour");
      vals[i] = v;
    }
  };

  // A segment endpoint where a factor base vanishes (integrable endpoint
  // singularity) is clipped off the tracking walk; everywhere else the walk
  // covers the full parameter range so closed loops accumulate their exact
  // winding.
  const double eps = 1e-7;
  auto vanishes_at = [&](const Segment& seg, double tau) {
    for (const auto& f : spec_.factors)
      if (std::abs(f.a + f.b * seg.pos(tau)) == 0.0) return true;
    return false;
  };

  anchors_.resize(spec_.segments.size());
  std::vector<cplx> va, vb;
  cplx prev_end;
  bool have_prev = false;
  for (std::size_t k = 0; k < spec_.segments.size(); ++k) {
    const Segment& seg = spec_.segments[k];
    if (k > 0) {
      cplx start = seg.pos(0.0);
      if (std::abs(start - prev_end) > 1e-9 * std::max(1.0, std::abs(start)))
        fail(errc::shape_error, "path segments do not concatenate continuously");
    }
    double lo = vanishes_at(seg, 0.0) ? eps : 0.0;
    double hi = vanishes_at(seg, 1.0) ? 1.0 - eps : 1.0;
    auto& list = anchors_[k];
    eval_factors(seg.pos(lo), vb);
    if (have_prev) {
      // carry the (tiny) junction step from the previous walk endpoint
      for (std::size_t i = 0; i < nf; ++i) {
        double d = std::arg(vb[i] / va[i]);
        if (!std::isfinite(d) || std::abs(d) > pi / 2.0)
          fail(errc::singular_on_path, "cannot continue branch across a segment junction");
        args[i] += d;
      }
    }
    va = vb;
    list.push_back({lo, args});
    // in-order refinement so every anchor step is principal-safe
    std::function<void(double, double, int)> walk = [&](double ta, double tb, int depth) {
      eval_factors(seg.pos(tb), vb);
      double worst = 0.0;
      for (std::size_t i = 0; i < nf; ++i) {
        double d = std::abs(std::arg(vb[i] / va[i]));
        if (!std::isfinite(d)) d = pi;
        worst = std::max(worst, d);
      }
      if (worst > pi / 4.0 && depth < 48) {
        double tm = 0.5 * (ta + tb);
        walk(ta, tm, depth + 1);
        walk(tm, tb, depth + 1);
        return;
      }
      if (worst > pi / 2.0)
        fail(errc::singular_on_path, "cannot track branch: argument step too large");
      for (std::size_t i = 0; i < nf; ++i) args[i] += std::arg(vb[i] / va[i]);
      va = vb;
      if (tb < hi) list.push_back({tb, args});
    };
    const int seed = 16;
    for (int j = 0; j < seed; ++j)
      walk(lo + (hi - lo) * j / seed, lo + (hi - lo) * (j + 1) / seed, 0);
    have_prev = true;
    prev_end = seg.pos(1.0);
  }
  net_change_.resize(nf);
  for (std::size_t i = 0; i < nf; ++i) net_change_[i] = args[i] - args0[i];
}

void BranchedPath::logs_at(std::size_t k, double tau, std::vector<cplx>& out) const {
  const auto& list = anchors_[k];
  // last anchor with tau_anchor <= tau
  std::size_t lo = 0, hi = list.size();
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (list[mid].tau <= tau)
      lo = mid;
    else
      hi = mid;
  }
  const Anchor& anc = list[lo];
  cplx za = spec_.segments[k].pos(anc.tau);
  cplx z = spec_.segments[k].pos(tau);
  std::size_t nf = spec_.factors.size();
  out.resize(nf);
  for (std::size_t i = 0; i < nf; ++i) {
    const auto& f = spec_.factors[i];
    cplx va = f.a + f.b * za;
    cplx v = f.a + f.b * z;
    if (std::abs(v) == 0.0)
      fail(errc::singular_on_path, "power-factor base vanishes on the contour");
    double arg = anc.args[i] + std::arg(v / va);
    out[i] = cplx(std::log(std::abs(v)), arg);
  }
}

PathIntegralResult path_integral(const BranchedPath& path, const BranchedIntegrand& f,
                                 double rel_tol, double abs_tol, int max_intervals_per_segment) {
  PathIntegralResult r;
  std::size_t ns = path.num_segments();
  double seg_abs = abs_tol > 0.0 ? abs_tol / double(ns) : 0.0;
  for (std::size_t k = 0; k < ns; ++k) {
    const Segment& seg = path.segment(k);
    std::vector<cplx> logs;
    auto g = [&](double tau) {
      path.logs_at(k, tau, logs);
      return f(seg.pos(tau), logs) * seg.dpos(tau);
    };
    QuadResult q = quad_gk(g, 0.0, 1.0, rel_tol, seg_abs, max_intervals_per_segment);
    r.value += q.value;
    r.est_error += q.est_error;
    r.evaluations += q.evaluations;
    r.converged = r.converged && q.converged;
  }
  return r;
}

PathIntegralResult hankel_integral(cplx alpha, double delta, double R, double tol) {
  PathSpec spec;
  spec.segments.push_back(seg_line(cplx(-R, 0.0), cplx(-delta, 0.0)));
  spec.segments.push_back(seg_arc(cplx(0.0, 0.0), delta, -pi, pi));
  spec.segments.push_back(seg_line(cplx(-delta, 0.0), cplx(-R, 0.0)));
  spec.factors.push_back({cplx(0.0, 0.0), cplx(1.0, 0.0), -pi});
  BranchedPath path(spec);
  auto f = [&](cplx zeta, const std::vector<cplx>& logs) {
    return std::exp(zeta + (alpha - 1.0) * logs[0]);
  };
  PathIntegralResult r = path_integral(path, f, tol * 0.1, tol * 0.01);
  // tail of the two truncated rays
  double re = alpha.real() - 1.0;
  double tail = 2.0 * std::exp(-R + pi * std::abs(alpha.imag())) *
                (re <= 0.0 ? std::pow(R, re) : 2.0 * std::pow(R, re));
  r.est_error += tail;
  return r;
}

PathIntegralResult hankel_integral(cplx alpha, double tol) {
  double R = std::max(35.0, -std::log(std::max(tol, 1e-300)) + 12.0);
  return hankel_integral(alpha, 0.5, R, tol);
}

namespace {

// Appends a full loop around `center` to spec: base -> near point -> full
// circle -> back to base.  ccw=false traverses the circle clockwise.
void append_loop(PathSpec& spec, cplx base, cplx center, double radius, bool ccw) {
  cplx dir = base - center;
  double th0 = std::arg(dir);
  cplx near = center + radius * dir / std::abs(dir);
  spec.segments.push_back(seg_line(base, near));
  spec.segments.push_back(seg_arc(center, radius, th0, ccw ? th0 + 2.0 * pi : th0 - 2.0 * pi));
  spec.segments.push_back(seg_line(near, base));
}

}  // namespace

PathSpec pochhammer_loop_path(double radius, double base) {
  // Commutator realization whose pairing with t^(a1-1)(1-t)^(a2-1) carries
  // the phases (1-e^{-2 pi i a1})(1-e^{-2 pi i a2}): clockwise loop around
  // 1, clockwise around 0, then counterclockwise around 1 and around 0.
  PathSpec spec;
  cplx b(base, 0.0);
  append_loop(spec, b, cplx(1.0, 0.0), radius, false);
  append_loop(spec, b, cplx(0.0, 0.0), radius, false);
  append_loop(spec, b, cplx(1.0, 0.0), radius, true);
  append_loop(spec, b, cplx(0.0, 0.0), radius, true);
  spec.factors.push_back({cplx(0.0, 0.0), cplx(1.0, 0.0), 0.0});   // t
  spec.factors.push_back({cplx(1.0, 0.0), cplx(-1.0, 0.0), 0.0});  // 1 - t
  return spec;
}

namespace {

PathIntegralResult pochhammer1(cplx a1, cplx a2, double tol, double radius) {
  BranchedPath path(pochhammer_loop_path(radius));
  auto f = [&](cplx, const std::vector<cplx>& logs) {
    return std::exp((a1 - 1.0) * logs[0] + (a2 - 1.0) * logs[1]);
  };
  return path_integral(path, f, tol * 0.1, tol * 0.1);
}

PathIntegralResult pochhammer2(cplx a1, cplx a2, cplx a3, double tol, double radius) {
  // Outer commutator in t1; inner cycle in t2 around {0, 1-t1} realized in
  // the scaled coordinate t2 = (1-t1) s, with the branch of log(1-t1)
  // continued along the outer path.  The product cycle carries the
  // monodromy factor (1 - e^{-2 pi i (a2+a3)}) of the inner cycle in
  // addition to the simplex-cycle phases, so the result is normalized by
  // that factor.
  cplx norm = 1.0 - std::exp(-two_pi_i * (a2 + a3));
  if (std::abs(norm) < 1e-12)
    fail(errc::convergence_error, "pochhammer k=2: a2+a3 integral, cycle normalization degenerates");

  BranchedPath inner(pochhammer_loop_path(radius));
  BranchedPath outer(pochhammer_loop_path(radius));

  long evals = 0;
  const long eval_cap = 10000000;
  double inner_err = 0.0;

  auto inner_integral = [&](cplx log_v) {
    auto f = [&](cplx, const std::vector<cplx>& logs) {
      // t2^(a2-1) (1-t1-t2)^(a3-1) dt2/ds with t2 = v s, 1-t1-t2 = v(1-s)
      return std::exp((a2 - 1.0) * (log_v + logs[0]) + (a3 - 1.0) * (log_v + logs[1]) + log_v);
    };
    PathIntegralResult q = path_integral(inner, f, tol * 0.02, tol * 0.02);
    evals += q.evaluations;
    inner_err = std::max(inner_err, q.est_error);
    if (evals > eval_cap) fail(errc::max_refinement, "pochhammer k=2: evaluation budget exceeded");
    return q.value;
  };

  auto f_outer = [&](cplx, const std::vector<cplx>& logs) {
    return std::exp((a1 - 1.0) * logs[0]) * inner_integral(logs[1]);
  };
  PathIntegralResult r = path_integral(outer, f_outer, tol * 0.1, tol * 0.1, 512);
  r.evaluations += evals;
  r.est_error += inner_err * 4.0;  // outer path length is O(1)
  r.value /= norm;
  r.est_error /= std::abs(norm);
  return r;
}

}  // namespace

PathIntegralResult pochhammer_integral(const std::vector<cplx>& alphas, int k, double tol,
                                       double radius) {
  if (k == 1) {
    if (alphas.size() != 2) fail(errc::shape_error, "pochhammer k=1 needs 2 exponents");
    return pochhammer1(alphas[0], alphas[1], tol, radius);
  }
  if (k == 2) {
    if (alphas.size() != 3) fail(errc::shape_error, "pochhammer k=2 needs 3 exponents");
    return pochhammer2(alphas[0], alphas[1], alphas[2], tol, radius);
  }
  fail(errc::dimension_unsupported, "pochhammer cycles implemented for k <= 2 only");
}

namespace {

OracleResult gauss_series(cplx alpha, cplx beta, cplx gamma, cplx z, double tol) {
  if (near_nonpositive_int(gamma)) fail(errc::parameter_pole, "gauss series: gamma nonpositive integer");
  OracleResult r;
  cplx term = 1.0, sum = 1.0;
  for (int n = 0; n < 200000; ++n) {
    term *= (alpha + double(n)) * (beta + double(n)) * z / ((gamma + double(n)) * double(n + 1));
    sum += term;
    ++r.evaluations;
    if (std::abs(term) <= 1e-18 * std::max(1.0, std::abs(sum)) && n > 2) {
      r.value = sum;
      r.est_error = std::abs(term);
      return r;
    }
  }
  if (std::abs(z) >= 1.0) fail(errc::convergence_error, "gauss series: |z| >= 1");
  r.value = sum;
  r.est_error = std::abs(term);
  (void)tol;
  return r;
}

OracleResult gauss_euler(cplx alpha, cplx beta, cplx gamma, cplx z, double tol) {
  if (near_nonpositive_int(alpha) || near_nonpositive_int(gamma - alpha) ||
      near_nonpositive_int(gamma))
    fail(errc::parameter_pole, "gauss euler: prefactor gamma argument at a pole");
  if (alpha.real() <= 0.0 || (gamma - alpha).real() <= 0.0)
    fail(errc::convergence_error, "gauss euler: integral diverges at an endpoint");
  auto f = [&](double t, double omt) {
    return std::exp((alpha - 1.0) * std::log(t) + (gamma - alpha - 1.0) * std::log(omt) -
                    beta * std::log(1.0 - z * t));
  };
  QuadResult q = quad_tanh_sinh_01(f, tol * 0.1);
  cplx pref = gamma_fn(gamma) * rgamma(gamma - alpha) * rgamma(alpha);
  OracleResult r;
  r.value = pref * q.value;
  r.est_error = std::abs(pref) * q.est_error;
  r.evaluations = q.evaluations;
  return r;
}

OracleResult gauss_laplace(cplx alpha, cplx beta, cplx gamma, cplx z, double tol) {
  // Degenerate upper parameter: the function is identically 1 and the
  // triple integral loses its t3 (or t2) factor.
  if (alpha == cplx(0.0, 0.0) || beta == cplx(0.0, 0.0)) {
    OracleResult r;
    r.value = 1.0;
    return r;
  }
  // The triple integral converges only for 0 < Re(gamma - a) < 1; use the
  // alpha/beta symmetry of 2F1 to pick an admissible ordering.
  cplx a = alpha, b = beta;
  auto admissible = [&](cplx aa) {
    double d = (gamma - aa).real();
    return aa.real() > 0.0 && d > 0.0 && d < 1.0;
  };
  if (!admissible(a) && admissible(b)) std::swap(a, b);
  if (!admissible(a)) fail(errc::convergence_error, "gauss laplace: no admissible exponent ordering");
  if (near_nonpositive_int(a) || near_nonpositive_int(b) || near_nonpositive_int(gamma))
    fail(errc::parameter_pole, "gauss laplace: prefactor gamma argument at a pole");

  OracleResult r;
  long evals = 0;
  auto inner = [&](cplx expo, double rate) {
    // int_0^inf exp(-rate*s) s^expo ds by exp-sinh quadrature
    auto f = [&](double s) { return std::exp(expo * std::log(s) - rate * s); };
    QuadResult q = quad_exp_sinh(f, tol * 0.05);
    evals += q.evaluations;
    return q.value;
  };
  auto ft = [&](double t1, double omt1) {
    double rate2 = omt1;
    double rate3 = 1.0 - (z * t1).real();
    cplx i2 = inner(a - gamma, rate2);
    cplx i3 = inner(b - 1.0, rate3);
    return std::exp((a - 1.0) * std::log(t1)) * i2 * i3;
  };
  QuadResult q = quad_tanh_sinh_01(ft, tol * 0.2, 10);
  cplx pref = std::sin(pi * (gamma - a)) * gamma_fn(gamma) * rgamma(a) * rgamma(b) / pi;
  r.value = pref * q.value;
  r.est_error = std::abs(pref) * q.est_error;
  r.evaluations = q.evaluations + evals;
  return r;
}

OracleResult gauss_residue(cplx alpha, cplx beta, cplx gamma, cplx z, double tol) {
  if (near_nonpositive_int(gamma - alpha) || near_nonpositive_int(alpha) ||
      near_nonpositive_int(gamma))
    fail(errc::parameter_pole, "gauss residue: prefactor gamma argument at a pole");
  // -(1/2 pi i) . contour integral of y^e / (1 - y p) dy around y = 1/p
  // equals p^(-e-1); both inner circles are extracted analytically, the
  // outer t-integral is numeric.
  auto circle_residue = [](cplx p, cplx e) { return std::exp((-e - 1.0) * std::log(p)); };
  auto f = [&](double t, double omt) {
    cplx r1 = circle_residue(cplx(omt, 0.0), alpha - gamma);  // (1-t)^(gamma-alpha-1)
    cplx r2 = circle_residue(1.0 - z * t, beta - 1.0);        // (1-z t)^(-beta)
    return std::exp((alpha - 1.0) * std::log(t)) * r1 * r2;
  };
  QuadResult q = quad_tanh_sinh_01(f, tol * 0.1);
  cplx pref = gamma_fn(gamma) * rgamma(gamma - alpha) * rgamma(alpha);
  OracleResult r;
  r.value = pref * q.value;
  r.est_error = std::abs(pref) * q.est_error;
  r.evaluations = q.evaluations;
  return r;
}

}  // namespace

OracleResult gauss_oracle(cplx alpha, cplx beta, cplx gamma, cplx z, GaussRepr repr, double tol) {
  if (std::abs(z) >= 1.0) fail(errc::domain_error, "gauss oracle requires |z| < 1");
  switch (repr) {
    case GaussRepr::Series: return gauss_series(alpha, beta, gamma, z, tol);
    case GaussRepr::Euler: return gauss_euler(alpha, beta, gamma, z, tol);
    case GaussRepr::Laplace: return gauss_laplace(alpha, beta, gamma, z, tol);
    case GaussRepr::Residue: return gauss_residue(alpha, beta, gamma, z, tol);
  }
  fail(errc::input_error, "unknown gauss representation");
}

OracleResult laplace_cycle_oracle(cplx c1, cplx c2, const std::vector<cplx>& z,
                                  const std::vector<long>& ktilde, double tol) {
  if (z.size() != 3) fail(errc::shape_error, "laplace cycle oracle expects z of length 3");
  for (const auto& zi : z)
    if (zi == cplx(0.0, 0.0)) fail(errc::domain_error, "z must lie in the torus");
  if (ktilde.size() != 2) fail(errc::shape_error, "ktilde must have length 2");

  // Simplex block inverse diag(1, 1/2); deck row t(ktilde) A_sigma^{-1}
  // reduced mod 1 so the result depends only on the deck class.
  double row2 = 0.5 * double(((ktilde[1] % 2) + 2) % 2);  // (ktilde2)/2 mod 1; row1 reduces to 0
  cplx deck_w_phase = std::exp(two_pi_i * cplx(row2 * (+3.0), 0.0));  // row . a(3), a(3)=(-1,3)
  cplx deck_scalar = std::exp(two_pi_i * (row2 * c2));                // row . c

  cplx logz1 = std::log(z[0]), logz2 = std::log(z[1]), logz3 = std::log(z[2]);
  cplx w = std::exp(logz1 - 1.5 * logz2 + logz3) * deck_w_phase;
  cplx pref = std::exp(-c1 * logz1 - 0.5 * c2 * logz2) * deck_scalar;

  double wmag = std::abs(w);
  if (wmag >= 1.0)
    fail(errc::divergence_detected, "laplace cycle oracle: |z1 z2^{-3/2} z3| must be < 1");

  double R = std::max(35.0, -std::log(tol) + 15.0 + 4.0 * wmag);
  PathSpec hank;
  hank.segments.push_back(seg_line(cplx(-R, 0.0), cplx(-0.5, 0.0)));
  hank.segments.push_back(seg_arc(cplx(0.0, 0.0), 0.5, -pi, pi));
  hank.segments.push_back(seg_line(cplx(-0.5, 0.0), cplx(-R, 0.0)));
  hank.factors.push_back({cplx(0.0, 0.0), cplx(1.0, 0.0), -pi});
  BranchedPath outer(hank);
  BranchedPath inner(pochhammer_loop_path(0.2));

  long evals = 0;
  const long eval_cap = 10000000;
  cplx ch = c1 + 0.5 * c2;

  auto inner_integral = [&](cplx rho, cplx log_rho) {
    // u1 = 1-t, u2 = t on the commutator; du matches dt in this ordering
    auto f = [&](cplx, const std::vector<cplx>& logs) {
      const cplx& log_t = logs[0];
      const cplx& log_omt = logs[1];
      cplx coupling = w * std::exp(0.5 * log_rho - log_omt + 1.5 * log_t);
      return std::exp(coupling + (c1 - 1.0) * log_omt + (0.5 * c2 - 1.0) * log_t);
    };
    PathIntegralResult q = path_integral(inner, f, tol * 0.05, tol * 0.05);
    evals += q.evaluations;
    if (evals > eval_cap)
      fail(errc::max_refinement, "laplace cycle oracle: evaluation budget exceeded");
    (void)rho;
    return q.value;
  };

  auto f_outer = [&](cplx rho, const std::vector<cplx>& logs) {
    return std::exp(rho + (ch - 1.0) * logs[0]) * inner_integral(rho, logs[0]);
  };
  PathIntegralResult q = path_integral(outer, f_outer, tol * 0.2, tol * 0.1, 512);

  OracleResult r;
  r.value = pref * q.value / (two_pi_i * two_pi_i);
  r.est_error = std::abs(pref) * q.est_error / std::abs(two_pi_i * two_pi_i);
  r.evaluations = q.evaluations + evals;
  return r;
}

}  // namespace gkz
