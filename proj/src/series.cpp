#include "gkz/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "gkz/gammafn.hpp"

namespace gkz {

namespace {

// graded colex: by total degree, then by the last differing coordinate
bool colex_less(const IntVec& a, const IntVec& b) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

void compositions_of(long d, std::size_t parts, IntVec& cur, std::size_t at,
                     std::vector<IntVec>& out) {
  if (at + 1 == parts) {
    cur[at] = d;
    out.push_back(cur);
    return;
  }
  for (long v = 0; v <= d; ++v) {
    cur[at] = v;
    compositions_of(d - v, parts, cur, at + 1, out);
  }
}

std::vector<IntVec> degree_slice(long d, std::size_t parts) {
  std::vector<IntVec> out;
  if (parts == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  IntVec cur(parts, Int(0));
  compositions_of(d, parts, cur, 0, out);
  std::sort(out.begin(), out.end(), colex_less);
  return out;
}

long ivec_sum(const IntVec& v) {
  Int s = 0;
  for (const auto& x : v) s += x;
  return static_cast<long>(to_double(s));
}

}  // namespace

std::vector<cplx> exponent_vector(const SimplexData& sd, const IntVec& k,
                                  const Parameter& parameter) {
  std::size_t n = sd.Asigma.rows();
  if (k.size() != sd.sbar.size()) fail(errc::shape_error, "k must be indexed by sigmabar");
  if (parameter.size() != n) fail(errc::shape_error, "parameter length must equal n");

  std::size_t N = sd.sigma.size() + sd.sbar.size();
  std::vector<cplx> v(N, cplx(0.0, 0.0));

  // sigma block: -A_sigma^{-1}(c + A_sigmabar k)
  RatVec shift = sd.inv_Abar.mul(k);  // A_sigma^{-1} A_sigmabar k
  for (std::size_t i = 0; i < n; ++i) {
    cplx ci = 0.0;
    for (std::size_t m = 0; m < n; ++m) ci += to_double(sd.inv.at(i, m)) * parameter.value[m];
    v[sd.pos[i]] = -(ci + to_double(shift[i]));
  }
  for (std::size_t j = 0; j < sd.sbar.size(); ++j) v[sd.bpos[j]] = to_double(k[j]);

  // A v + c = 0 by construction; guard against degenerate inputs
  for (std::size_t row = 0; row < n; ++row) {
    cplx acc = parameter.value[row];
    for (std::size_t i = 0; i < n; ++i) acc += to_double(sd.Asigma.at(row, i)) * v[sd.pos[i]];
    for (std::size_t j = 0; j < sd.sbar.size(); ++j)
      acc += to_double(sd.Abar.at(row, j)) * v[sd.bpos[j]];
    double scale = 1.0 + std::abs(parameter.value[row]);
    if (std::abs(acc) > 1e-9 * scale)
      fail(errc::shape_error, "exponent vector fails A v = -c");
  }
  return v;
}

GammaSeriesSpec make_series(const SimplexData& sd, const IntVec& k, const Parameter& parameter) {
  GammaSeriesSpec spec{sd, k, parameter, exponent_vector(sd, k, parameter)};
  return spec;
}

std::vector<IntVec> representatives(const SimplexData& sd) {
  long r = static_cast<long>(to_double(sd.r()));
  std::vector<IntVec> reps;
  std::set<IntVec> seen;
  std::size_t s = sd.sbar.size();
  for (long d = 0; d <= 512 && (long)reps.size() < r; ++d) {
    for (const auto& m : degree_slice(d, s)) {
      IntVec w = sd.Abar.mul(m);
      auto cf = sd.group.canonical_form(w);
      if (seen.insert(cf).second) {
        reps.push_back(m);
        if ((long)reps.size() == r) break;
      }
    }
  }
  if ((long)reps.size() != r)
    fail(errc::incomplete_reps, "class search did not terminate at the group order");
  return reps;
}

std::vector<IntVec> lambda_set(const SimplexData& sd, const IntVec& k, long bound) {
  if (bound < 0) fail(errc::shape_error, "lambda_set bound must be nonnegative");
  std::size_t s = sd.sbar.size();
  std::vector<IntVec> out;
  for (long d = 0; d <= bound; ++d) {
    for (const auto& lam : degree_slice(d, s)) {
      // lam = k + m in Lambda_k iff A_sigmabar (lam - k) in Z A_sigma
      IntVec diff(s);
      for (std::size_t j = 0; j < s; ++j) diff[j] = lam[j] - k[j];
      if (sd.group.is_member(sd.Abar.mul(diff))) out.push_back(lam);
    }
  }
  return out;
}

std::vector<IntVec> lambda_set(const GammaSeriesSpec& spec, long bound) {
  return lambda_set(spec.simplex, spec.k, bound);
}

GenericityResult very_generic(const SimplexData& sd, const Parameter& parameter, long depth) {
  std::size_t n = sd.Asigma.rows();
  std::size_t s = sd.sbar.size();

  if (parameter.is_exact) {
    // entry i integral iff q_i + sum_j b_ij m_j in Z for some m >= 0;
    // with common denominator D this is a congruence a + sum B_j m_j = 0
    // mod D, solvable over Z_{>=0}^s iff gcd(D, B_1..B_s) divides a.
    RatVec q(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t m = 0; m < n; ++m) q[i] += sd.inv.at(i, m) * parameter.exact[m];
    for (std::size_t i = 0; i < n; ++i) {
      Int D = den(q[i]);
      for (std::size_t j = 0; j < s; ++j)
        D = boost::multiprecision::lcm(D, den(sd.inv_Abar.at(i, j)));
      Int a = num(q[i]) * (D / den(q[i]));
      Int g = D;
      for (std::size_t j = 0; j < s; ++j)
        g = boost::multiprecision::gcd(g, Int(num(sd.inv_Abar.at(i, j)) *
                                              (D / den(sd.inv_Abar.at(i, j)))));
      if (a % g == 0) {
        // solvable: search the minimal witness in graded colex order
        long cap = static_cast<long>(to_double(D)) * static_cast<long>(s) + 4;
        for (long d = 0; d <= cap; ++d) {
          for (const auto& m : degree_slice(d, s)) {
            Rat val = q[i];
            for (std::size_t j = 0; j < s; ++j) val += sd.inv_Abar.at(i, j) * Rat(m[j]);
            if (is_integer(val))
              return GenericityResult{GenericityResult::Verdict::No, m, i};
          }
        }
        fail(errc::incomplete_reps, "solvable congruence but witness search failed");
      }
    }
    return GenericityResult{GenericityResult::Verdict::Yes, {}, 0};
  }

  // floating parameters: bounded search
  std::vector<cplx> q(n, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t m = 0; m < n; ++m) q[i] += to_double(sd.inv.at(i, m)) * parameter.value[m];
  for (long d = 0; d <= depth; ++d) {
    for (const auto& m : degree_slice(d, s)) {
      for (std::size_t i = 0; i < n; ++i) {
        cplx val = q[i];
        for (std::size_t j = 0; j < s; ++j)
          val += to_double(sd.inv_Abar.at(i, j)) * to_double(m[j]);
        if (std::abs(val.imag()) < 1e-9 &&
            std::abs(val.real() - std::round(val.real())) < 1e-9)
          return GenericityResult{GenericityResult::Verdict::No, m, i};
      }
    }
  }
  return GenericityResult{GenericityResult::Verdict::UnknownBeyondDepth, {}, 0};
}

SeriesValue eval(const GammaSeriesSpec& spec, const std::vector<cplx>& z, long order) {
  const SimplexData& sd = spec.simplex;
  std::size_t n = sd.Asigma.rows();
  std::size_t s = sd.sbar.size();
  if (z.size() != sd.sigma.size() + s) fail(errc::shape_error, "z has wrong length");
  for (const auto& zi : z)
    if (zi == cplx(0.0, 0.0)) fail(errc::domain_error, "z must lie in the torus");

  std::vector<cplx> logz(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) logz[i] = std::log(z[i]);

  // prefactor z_sigma^{-A_sigma^{-1} c}
  std::vector<cplx> invc(n, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t m = 0; m < n; ++m) invc[i] += to_double(sd.inv.at(i, m)) * spec.parameter.value[m];
  cplx logpref = 0.0;
  for (std::size_t i = 0; i < n; ++i) logpref += -invc[i] * logz[sd.pos[i]];
  cplx pref = std::exp(logpref);

  // hatted coordinates log(z_sigma^{-A_sigma^{-1} a(j)} z_j)
  std::vector<cplx> loghat(s);
  for (std::size_t j = 0; j < s; ++j) {
    cplx L = logz[sd.bpos[j]];
    for (std::size_t i = 0; i < n; ++i) L -= to_double(sd.inv_Abar.at(i, j)) * logz[sd.pos[i]];
    loghat[j] = L;
  }

  SeriesValue out;
  out.truncation_order = order;
  cplx sum = 0.0, comp = 0.0;  // Kahan accumulation
  std::vector<double> degree_abs;
  for (long d = 0; d <= order; ++d) {
    double dabs = 0.0;
    for (const auto& lam : degree_slice(d, s)) {
      IntVec diff(s);
      for (std::size_t j = 0; j < s; ++j) diff[j] = lam[j] - spec.k[j];
      if (!sd.group.is_member(sd.Abar.mul(diff))) continue;
      // w = A_sigma^{-1}(c + A_sigmabar lam)
      RatVec shift = sd.inv_Abar.mul(lam);
      cplx coeff = 1.0;
      for (std::size_t i = 0; i < n; ++i) coeff *= rgamma(1.0 - (invc[i] + to_double(shift[i])));
      cplx logmono = 0.0;
      double lfact = 0.0;
      for (std::size_t j = 0; j < s; ++j) {
        double lj = to_double(lam[j]);
        logmono += lj * loghat[j];
        lfact += std::lgamma(lj + 1.0);
      }
      cplx term = coeff * std::exp(logmono - lfact);
      ++out.terms_summed;
      dabs += std::abs(term);
      cplx y = term - comp;
      cplx t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
    degree_abs.push_back(dabs);
  }
  out.value = pref * sum;

  double rho = 0.0;
  for (std::size_t j = 0; j < s; ++j) rho = std::max(rho, std::exp(loghat[j].real()));
  bool gevrey_ok = true;
  for (const auto& sj : sd.s)
    if (sj > 1) gevrey_ok = false;
  if (rho < 1.0 && gevrey_ok) {
    double recent = 0.0;
    for (std::size_t i = degree_abs.size() >= 3 ? degree_abs.size() - 3 : 0;
         i < degree_abs.size(); ++i)
      recent = std::max(recent, degree_abs[i]);
    out.tail_bound = std::abs(pref) * recent * rho / (1.0 - rho);
  } else {
    out.tail_bound = std::numeric_limits<double>::infinity();
  }
  return out;
}

double operator_residual(const GammaSeriesSpec& spec, const OperatorDescriptor& op, long order) {
  const SimplexData& sd = spec.simplex;
  std::size_t n = sd.Asigma.rows();
  std::size_t s = sd.sbar.size();

  if (op.kind == OperatorDescriptor::Kind::Euler) {
    // every emitted monomial exponent satisfies A e = -c; exact when the
    // parameter is exact rational
    if (spec.parameter.is_exact) {
      RatVec invc(n, Rat(0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t m = 0; m < n; ++m) invc[i] += sd.inv.at(i, m) * spec.parameter.exact[m];
      for (const auto& lam : lambda_set(spec, order)) {
        RatVec shift = sd.inv_Abar.mul(lam);
        // e_sigma = -(invc + shift); check A_sigma e_sigma + A_sigmabar lam = -c
        RatVec esig(n);
        for (std::size_t i = 0; i < n; ++i) esig[i] = -(invc[i] + shift[i]);
        for (std::size_t row = 0; row < n; ++row) {
          Rat acc = 0;
          for (std::size_t i = 0; i < n; ++i) acc += Rat(sd.Asigma.at(row, i)) * esig[i];
          for (std::size_t j = 0; j < s; ++j) acc += Rat(sd.Abar.at(row, j)) * Rat(lam[j]);
          if (acc + spec.parameter.exact[row] != 0)
            fail(errc::hypothesis_violated, "monomial fails the Euler homogeneity identity");
        }
      }
      return 0.0;
    }
    // floating parameters: report the numeric defect (roundoff scale)
    double worst = 0.0;
    std::vector<cplx> invc(n, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t m = 0; m < n; ++m) invc[i] += to_double(sd.inv.at(i, m)) * spec.parameter.value[m];
    for (const auto& lam : lambda_set(spec, order)) {
      RatVec shift = sd.inv_Abar.mul(lam);
      for (std::size_t row = 0; row < n; ++row) {
        cplx acc = spec.parameter.value[row];
        for (std::size_t i = 0; i < n; ++i)
          acc += double(sd.Asigma.at(row, i).convert_to<double>()) *
                 (-(invc[i] + to_double(shift[i])));
        for (std::size_t j = 0; j < s; ++j)
          acc += to_double(sd.Abar.at(row, j)) * to_double(lam[j]);
        worst = std::max(worst, std::abs(acc));
      }
    }
    return worst;
  }

  // Box operator: apply both derivative products to the truncated series
  // coefficient-wise and measure the surviving coefficients.
  long up_total = ivec_sum(op.box_up);
  if (order < up_total) fail(errc::truncation_too_small, "order below |u_+|");

  // split u_+/u_- into sigma and sigmabar parts by position
  RatVec up_sig(n, Rat(0)), un_sig(n, Rat(0));
  IntVec up_bar(s, Int(0)), un_bar(s, Int(0));
  for (std::size_t i = 0; i < n; ++i) {
    up_sig[i] = Rat(op.box_up[sd.pos[i]]);
    un_sig[i] = Rat(op.box_un[sd.pos[i]]);
  }
  for (std::size_t j = 0; j < s; ++j) {
    up_bar[j] = op.box_up[sd.bpos[j]];
    un_bar[j] = op.box_un[sd.bpos[j]];
  }

  std::vector<cplx> invc(n, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t m = 0; m < n; ++m) invc[i] += to_double(sd.inv.at(i, m)) * spec.parameter.value[m];

  std::map<IntVec, cplx> image;
  auto accumulate = [&](const IntVec& lam, const RatVec& d_sig, const IntVec& d_bar,
                        double sign) {
    RatVec shift = sd.inv_Abar.mul(lam);
    cplx coeff = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      cplx e = -(invc[i] + to_double(shift[i]));
      coeff *= rgamma(1.0 + e - to_double(d_sig[i]));
    }
    for (std::size_t j = 0; j < s; ++j)
      coeff *= rgamma(cplx(to_double(Int(lam[j] - d_bar[j])) + 1.0, 0.0));
    IntVec key(s);
    for (std::size_t j = 0; j < s; ++j) key[j] = lam[j] - d_bar[j];
    image[key] += sign * coeff;
  };
  for (const auto& lam : lambda_set(spec, order)) {
    accumulate(lam, up_sig, up_bar, +1.0);
    accumulate(lam, un_sig, un_bar, -1.0);
  }

  double worst = 0.0;
  for (const auto& [key, coeff] : image) {
    long deg = ivec_sum(key);
    if (deg > order - up_total) continue;
    worst = std::max(worst, std::abs(coeff));
  }
  return worst;
}

}  // namespace gkz
