#include "gkz/basis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "gkz/gammafn.hpp"

namespace gkz {

namespace {

constexpr double pi = 3.14159265358979323846264338327950288;
const cplx two_pi_i(0.0, 2.0 * pi);

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

// t(v) A_sigma^{-1} as an exact rational row, reduced into [0,1) entrywise
// (the canonical deck-transform logarithm, so every diagonal depends only
// on the class of v).
RatVec reduced_row(const SimplexData& sd, const IntVec& v) {
  std::size_t n = sd.Asigma.rows();
  RatVec row(n, Rat(0));
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i) row[m] += Rat(v[i]) * sd.inv.at(i, m);
  for (auto& x : row) x = mod1(x);
  return row;
}

cplx exp2pii(const Rat& x) {
  double t = 2.0 * pi * to_double(x);
  return cplx(std::cos(t), std::sin(t));
}

cplx exp2pii(cplx x) { return std::exp(two_pi_i * x); }

bool near_integer(cplx v, double tol = 1e-9) {
  return std::abs(v.imag()) < tol && std::abs(v.real() - std::round(v.real())) < tol;
}

bool near_nonpositive_integer(cplx v, double tol = 1e-9) {
  return near_integer(v, tol) && v.real() < 0.5;
}

}  // namespace

const char* transform_kind_name(TransformKind k) {
  switch (k) {
    case TransformKind::Laplace: return "laplace";
    case TransformKind::Residue: return "residue";
    case TransformKind::Euler: return "euler";
    case TransformKind::MixedResidue: return "mixed-residue";
    case TransformKind::MixedEuler: return "mixed-euler";
  }
  return "?";
}

std::vector<IntVec> class_representatives(const IntMatrix& modulus, long count) {
  QuotientGroup g(modulus);
  std::vector<IntVec> reps;
  std::set<IntVec> seen;
  std::size_t n = modulus.rows();
  for (long d = 0; d <= 512 && (long)reps.size() < count; ++d)
    for (const auto& m : degree_slice(d, n)) {
      auto cf = g.canonical_form(m);
      if (seen.insert(cf).second) {
        reps.push_back(m);
        if ((long)reps.size() == count) break;
      }
    }
  if ((long)reps.size() != count)
    fail(errc::incomplete_reps, "class search did not reach the group order");
  return reps;
}

DualReps dual_representatives(const SimplexData& sd) {
  long r = static_cast<long>(to_double(sd.r()));
  IntMatrix mod = sd.Asigma.transpose();
  return DualReps{class_representatives(mod, r), mod};
}

std::vector<std::vector<cplx>> character_matrix(const SimplexData& sd,
                                                const std::vector<IntVec>& reps,
                                                const std::vector<IntVec>& dual_reps) {
  long r = static_cast<long>(to_double(sd.r()));
  if ((long)reps.size() != r || (long)dual_reps.size() != r)
    fail(errc::incomplete_reps, "need exactly r representatives on both sides");
  // completeness: classes must be pairwise distinct
  {
    std::set<IntVec> seen;
    for (const auto& k : reps)
      if (!seen.insert(sd.group.canonical_form(sd.Abar.mul(k))).second)
        fail(errc::incomplete_reps, "series representatives collide in the quotient");
    QuotientGroup dual(sd.Asigma.transpose());
    seen.clear();
    for (const auto& kt : dual_reps)
      if (!seen.insert(dual.canonical_form(kt)).second)
        fail(errc::incomplete_reps, "dual representatives collide in the quotient");
  }
  std::vector<std::vector<cplx>> C(r, std::vector<cplx>(r));
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < r; ++j)
      C[i][j] = exp2pii(pairing(dual_reps[i], sd.Abar.mul(reps[j]), sd.Asigma));
  // (1/r) C C* = I, the duality orthogonality
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < r; ++j) {
      cplx acc = 0.0;
      for (long m = 0; m < r; ++m) acc += C[i][m] * std::conj(C[j][m]);
      if (std::abs(acc / double(r) - (i == j ? 1.0 : 0.0)) > 1e-12)
        fail(errc::incomplete_reps, "character table is not unitary");
    }
  return C;
}

namespace {

struct KindContext {
  // per-block data for Cayley kinds
  std::vector<std::vector<std::size_t>> sigma_rows;  // indices into sigma order, per block 0..k
  std::vector<bool> tau_empty;                       // per block 1..k
  std::size_t k = 0;
  std::vector<long> sigma0;
  SimplexPartition partition;
};

KindContext cayley_context(const SimplexData& sd, const TransformOptions& opts) {
  if (!opts.cayley)
    fail(errc::input_error, "this transform kind needs the Cayley block structure");
  const CayleyStructure& cs = *opts.cayley;
  KindContext ctx;
  ctx.partition = partition_simplex(cs, sd.sigma, opts.sigma0);
  ctx.k = cs.k;
  ctx.sigma0 = ctx.partition.sigma0;
  ctx.sigma_rows.assign(cs.k + 1, {});
  for (std::size_t i = 0; i < sd.sigma.size(); ++i)
    ctx.sigma_rows[cs.block_of(sd.sigma[i])].push_back(i);
  ctx.tau_empty.assign(cs.k + 1, true);
  for (std::size_t l = 1; l <= cs.k; ++l) ctx.tau_empty[l] = ctx.partition.tau_l[l].empty();
  return ctx;
}

}  // namespace

TransformMatrix transform_matrix(TransformKind kind, const SimplexData& sd, const Parameter& d,
                                 const TransformOptions& opts) {
  std::size_t n = sd.Asigma.rows();
  long r = static_cast<long>(to_double(sd.r()));

  TransformMatrix T;
  T.kind = kind;
  T.sigma = sd.sigma;
  T.r = r;
  T.reps = opts.reps ? *opts.reps : representatives(sd);

  // parameter as complex, and exact when available
  std::vector<cplx> invc(n, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t m = 0; m < n; ++m) invc[i] += to_double(sd.inv.at(i, m)) * d.value[m];
  std::optional<RatVec> invc_exact;
  if (d.is_exact) {
    RatVec q(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t m = 0; m < n; ++m) q[i] += sd.inv.at(i, m) * d.exact[m];
    invc_exact = std::move(q);
  }

  auto add_check = [&](const std::string& name, bool pass, const std::string& detail) {
    T.checks.push_back({name, pass, detail});
    if (!pass && opts.enforce_hypotheses)
      fail(errc::hypothesis_violated, name + (detail.empty() ? "" : ": " + detail));
  };

  // very generic parameter
  {
    GenericityResult g = very_generic(sd, d, opts.genericity_depth);
    bool ok = g.verdict != GenericityResult::Verdict::No;
    std::ostringstream os;
    if (!ok) {
      os << "entry " << g.entry << " integral at m=(";
      for (std::size_t j = 0; j < g.witness.size(); ++j) os << (j ? "," : "") << g.witness[j];
      os << ")";
    } else if (g.verdict == GenericityResult::Verdict::UnknownBeyondDepth) {
      os << "clean up to depth " << opts.genericity_depth;
    }
    add_check("very-generic", ok, os.str());
  }

  std::optional<KindContext> ctx;
  if (kind != TransformKind::Laplace) ctx = cayley_context(sd, opts);

  // Gevrey exponents at most 1 where the theorems demand it
  if (kind == TransformKind::Laplace || kind == TransformKind::MixedResidue ||
      kind == TransformKind::MixedEuler) {
    bool ok = true;
    for (const auto& sj : sd.s)
      if (sj > 1) ok = false;
    add_check("gevrey-exponents", ok, ok ? "" : "some s_j exceeds 1");
  }

  // dual representatives
  if (opts.dual_reps) {
    T.dual_reps = *opts.dual_reps;
  } else if (kind == TransformKind::Euler || kind == TransformKind::MixedEuler) {
    // classes of Z^n / Z t(reduced block), embedded as 0 on sigma_0
    const auto& part = ctx->partition;
    std::vector<IntVec> small = class_representatives(part.reduced.transpose(), r);
    for (const auto& kt : small) {
      IntVec emb(sd.sigma.size(), Int(0));
      for (std::size_t c = 0; c < part.tau.size(); ++c) {
        long lab = part.tau[c];
        std::size_t at =
            std::lower_bound(sd.sigma.begin(), sd.sigma.end(), lab) - sd.sigma.begin();
        emb[at] = kt[c];
      }
      T.dual_reps.push_back(std::move(emb));
    }
  } else {
    T.dual_reps = dual_representatives(sd).vectors;
  }

  T.character = character_matrix(sd, T.reps, T.dual_reps);

  // left diagonal from the canonically reduced deck rows
  T.left_diag.resize(r);
  for (long i = 0; i < r; ++i) {
    RatVec row = reduced_row(sd, T.dual_reps[i]);
    cplx expo = 0.0;
    for (std::size_t m = 0; m < n; ++m) expo += to_double(row[m]) * d.value[m];
    T.left_diag[i] = exp2pii(expo);
  }

  // sums X_j = |A_sigma^{-1}(c + A_sigmabar k(j))| and the sigma^(0) sums
  auto weight_sum = [&](const IntVec& kj, const std::vector<std::size_t>& rows) {
    RatVec shift = sd.inv_Abar.mul(kj);
    cplx x = 0.0;
    for (std::size_t i : rows) x += invc[i] + to_double(shift[i]);
    return x;
  };
  auto weight_sum_exact = [&](const IntVec& kj,
                              const std::vector<std::size_t>& rows) -> std::optional<Rat> {
    if (!invc_exact) return std::nullopt;
    RatVec shift = sd.inv_Abar.mul(kj);
    Rat x = 0;
    for (std::size_t i : rows) x += (*invc_exact)[i] + shift[i];
    return x;
  };
  std::vector<std::size_t> all_rows(n);
  for (std::size_t i = 0; i < n; ++i) all_rows[i] = i;

  // right diagonal and kind checks
  T.right_diag.assign(r, cplx(1.0, 0.0));
  switch (kind) {
    case TransformKind::Laplace: {
      for (long j = 0; j < r; ++j) {
        cplx X = weight_sum(T.reps[j], all_rows);
        auto Xe = weight_sum_exact(T.reps[j], all_rows);
        bool nonint = Xe ? !is_integer(*Xe) : !near_integer(X);
        std::ostringstream os;
        os << "|A^{-1}(c+Ak(" << j + 1 << "))|";
        add_check("laplace-sum-not-integer", nonint, os.str());
        T.right_diag[j] = 1.0 - exp2pii(-X);
      }
      break;
    }
    case TransformKind::Residue:
    case TransformKind::MixedResidue: {
      cplx W = 0.0;
      cplx gprod = 1.0;
      for (std::size_t l = 1; l <= ctx->k; ++l) {
        cplx wl = 0.0;
        for (std::size_t i : ctx->sigma_rows[l]) wl += invc[i];
        W += wl;
        bool ok = !near_nonpositive_integer(wl);
        add_check("block-weight-not-nonpositive-integer", ok,
                  "block " + std::to_string(l));
        gprod *= gamma_fn(wl);
      }
      T.prefactor = std::exp(-cplx(0.0, pi) * W) / gprod;
      if (kind == TransformKind::MixedResidue) {
        for (long j = 0; j < r; ++j) {
          cplx S0 = weight_sum(T.reps[j], ctx->sigma_rows[0]);
          auto S0e = weight_sum_exact(T.reps[j], ctx->sigma_rows[0]);
          bool nonint = S0e ? !is_integer(*S0e) : !near_integer(S0);
          add_check("mixed-sum-not-integer", nonint, "k(" + std::to_string(j + 1) + ")");
          T.right_diag[j] = 1.0 - exp2pii(-S0);
        }
      }
      break;
    }
    case TransformKind::Euler:
    case TransformKind::MixedEuler: {
      cplx num = 1.0, den = 1.0;
      for (std::size_t l = 1; l <= ctx->k; ++l) {
        cplx gl = d.value[l - 1];
        bool ok = !near_nonpositive_integer(gl);
        add_check("gamma-parameter-not-nonpositive-integer", ok, "block " + std::to_string(l));
        den *= gamma_fn(gl);
        if (ctx->tau_empty[l]) {
          bool ok2 = !near_integer(gl);
          add_check("gamma-parameter-not-integer-for-point-block", ok2,
                    "block " + std::to_string(l));
          num *= std::exp(-cplx(0.0, pi) * gl);
          den *= 1.0 - exp2pii(-gl);
        } else {
          num *= std::exp(-cplx(0.0, pi) * (1.0 - gl));
        }
      }
      T.prefactor = num / den;
      if (kind == TransformKind::MixedEuler) {
        for (long j = 0; j < r; ++j) {
          cplx S0 = weight_sum(T.reps[j], ctx->sigma_rows[0]);
          auto S0e = weight_sum_exact(T.reps[j], ctx->sigma_rows[0]);
          bool nonint = S0e ? !is_integer(*S0e) : !near_integer(S0);
          add_check("mixed-sum-not-integer", nonint, "k(" + std::to_string(j + 1) + ")");
          T.right_diag[j] = 1.0 - exp2pii(-S0);
        }
      }
      break;
    }
  }

  if (kind == TransformKind::Euler || kind == TransformKind::MixedEuler)
    T.sigma0 = ctx->sigma0;

  T.entries.assign(r, std::vector<cplx>(r));
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < r; ++j)
      T.entries[i][j] = T.prefactor * T.left_diag[i] * T.character[i][j] * T.right_diag[j];
  T.det = complex_det(T.entries);
  T.cond = condition_estimate(T.entries);
  return T;
}

std::vector<cplx> basis_eval(const TransformMatrix& T, const std::vector<cplx>& phi) {
  if (phi.size() != T.r) fail(errc::shape_error, "series vector length must equal r");
  std::vector<cplx> f(T.r, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < T.r; ++i)
    for (std::size_t j = 0; j < T.r; ++j) f[i] += T.entries[i][j] * phi[j];
  return f;
}

double condition_estimate(const std::vector<std::vector<cplx>>& m) {
  std::size_t n = m.size();
  auto norm1 = [n](const std::vector<std::vector<cplx>>& a) {
    double best = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double col = 0.0;
      for (std::size_t i = 0; i < n; ++i) col += std::abs(a[i][j]);
      best = std::max(best, col);
    }
    return best;
  };
  // invert by Gauss-Jordan with partial pivoting
  std::vector<std::vector<cplx>> a = m, inv(n, std::vector<cplx>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
    if (std::abs(a[p][k]) == 0.0) return std::numeric_limits<double>::infinity();
    if (p != k) {
      std::swap(a[p], a[k]);
      std::swap(inv[p], inv[k]);
    }
    cplx piv = a[k][k];
    for (std::size_t j = 0; j < n; ++j) {
      a[k][j] /= piv;
      inv[k][j] /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      cplx f = a[i][k];
      if (f == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[k][j];
        inv[i][j] -= f * inv[k][j];
      }
    }
  }
  return norm1(m) * norm1(inv);
}

cplx complex_det(const std::vector<std::vector<cplx>>& m) {
  std::size_t n = m.size();
  std::vector<std::vector<cplx>> a = m;
  cplx det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
    if (std::abs(a[p][k]) == 0.0) return 0.0;
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      cplx f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

}  // namespace gkz
