#include "gkz/exactlat.hpp"

#include <algorithm>
#include <sstream>

namespace gkz {

namespace {

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

// Position of the smallest-absolute-value nonzero entry in the trailing
// submatrix starting at (k,k); ties broken by lowest row, then column.
bool find_pivot(const IntMatrix& m, std::size_t k, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best = 0;
  for (std::size_t i = k; i < m.rows(); ++i)
    for (std::size_t j = k; j < m.cols(); ++j) {
      const Int& v = m.at(i, j);
      if (v == 0) continue;
      Int a = int_abs(v);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& M) {
  std::size_t m = M.rows(), n = M.cols();
  SnfResult r{IntMatrix::identity(m), M, IntMatrix::identity(n)};
  IntMatrix& A = r.D;
  IntMatrix& P = r.P;
  IntMatrix& Q = r.Q;

  std::size_t rank = std::min(m, n);
  for (std::size_t k = 0; k < rank; ++k) {
    std::size_t pi = k, pj = k;
    if (!find_pivot(A, k, pi, pj)) {
      rank = k;
      break;
    }
    if (pi != k) {
      A.swap_rows(k, pi);
      P.swap_rows(k, pi);
    }
    if (pj != k) {
      A.swap_cols(k, pj);
      Q.swap_cols(k, pj);
    }
    for (;;) {
      bool clean = true;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (A.at(i, k) == 0) continue;
        Int q = A.at(i, k) / A.at(k, k);
        if (q != 0) {
          A.add_row(i, k, -q);
          P.add_row(i, k, -q);
        }
        if (A.at(i, k) != 0) {
          // remainder smaller than pivot; swap it up and restart
          A.swap_rows(k, i);
          P.swap_rows(k, i);
          clean = false;
        }
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (A.at(k, j) == 0) continue;
        Int q = A.at(k, j) / A.at(k, k);
        if (q != 0) {
          A.add_col(j, k, -q);
          Q.add_col(j, k, -q);
        }
        if (A.at(k, j) != 0) {
          A.swap_cols(k, j);
          Q.swap_cols(k, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot must divide every entry of the trailing submatrix
      bool divides = true;
      for (std::size_t i = k + 1; i < m && divides; ++i)
        for (std::size_t j = k + 1; j < n && divides; ++j)
          if (A.at(i, j) % A.at(k, k) != 0) {
            A.add_row(k, i, 1);
            P.add_row(k, i, 1);
            divides = false;
          }
      if (divides) break;
    }
  }
  for (std::size_t k = 0; k < std::min(m, n); ++k) {
    if (A.at(k, k) < 0) {
      A.negate_row(k);
      P.negate_row(k);
    }
  }
  return r;
}

RatMatrix rational_inverse(const RatMatrix& M) {
  if (M.rows() != M.cols()) fail(errc::shape_error, "rational_inverse of non-square matrix");
  std::size_t n = M.rows();
  RatMatrix a = M, inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a.at(p, k) == 0) ++p;
    if (p == n) fail(errc::singular_matrix, "rational_inverse: det = 0");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(k, j), a.at(p, j));
        std::swap(inv.at(k, j), inv.at(p, j));
      }
    Rat piv = a.at(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(k, j) /= piv;
      inv.at(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a.at(i, k) == 0) continue;
      Rat f = a.at(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

RatMatrix rational_inverse(const IntMatrix& M) { return rational_inverse(RatMatrix(M)); }

std::vector<IntVec> lattice_kernel(const IntMatrix& A) {
  std::size_t n = A.rows(), N = A.cols();
  SnfResult s = smith_normal_form(A);
  std::size_t rank = 0;
  for (std::size_t k = 0; k < std::min(n, N); ++k)
    if (s.D.at(k, k) != 0) ++rank;
  if (rank < n) fail(errc::rank_deficient, "lattice_kernel: row rank < n");
  // A = P^{-1} D Q^{-1}, so A x = 0 iff Q^{-1} x is supported on the zero
  // columns of D; the last N - n columns of Q form a Z-basis of the kernel.
  std::vector<IntVec> basis;
  for (std::size_t j = n; j < N; ++j) {
    IntVec v(N);
    for (std::size_t i = 0; i < N; ++i) v[i] = s.Q.at(i, j);
    for (auto& x : v)
      if (x != 0) {
        if (x < 0)
          for (auto& y : v) y = -y;
        break;
      }
    basis.push_back(std::move(v));
  }
  return basis;
}

QuotientGroup::QuotientGroup(const IntMatrix& B) : base_(B) {
  if (B.rows() != B.cols()) fail(errc::shape_error, "QuotientGroup needs a square matrix");
  Int d = B.det();
  if (d == 0) fail(errc::singular_matrix, "QuotientGroup: det = 0");
  order_ = int_abs(d);
  snf_ = smith_normal_form(B);
  for (std::size_t k = 0; k < B.rows(); ++k) {
    diag_.push_back(snf_.D.at(k, k));
    if (snf_.D.at(k, k) > 1) factors_.push_back(snf_.D.at(k, k));
  }
}

IntVec QuotientGroup::canonical_form(const IntVec& w) const {
  if (w.size() != base_.rows()) fail(errc::shape_error, "canonical_form: bad vector length");
  // w ~ w' mod Z B  iff  P w ~ P w' mod D Z^n (componentwise mod d_i).
  IntVec pw = snf_.P.mul(w);
  for (std::size_t i = 0; i < pw.size(); ++i) {
    Int d = diag_[i];
    Int r = pw[i] % d;
    if (r < 0) r += d;
    pw[i] = r;
  }
  return pw;
}

bool QuotientGroup::is_member(const IntVec& w) const {
  for (const auto& x : canonical_form(w))
    if (x != 0) return false;
  return true;
}

std::vector<IntVec> QuotientGroup::enumerate_classes() const {
  std::vector<IntVec> out;
  IntVec cur(diag_.size(), Int(0));
  for (;;) {
    out.push_back(cur);
    std::size_t i = 0;
    for (; i < diag_.size(); ++i) {
      cur[i] += 1;
      if (cur[i] < diag_[i]) break;
      cur[i] = 0;
    }
    if (i == diag_.size()) break;
  }
  return out;
}

bool lattice_member(const IntMatrix& B, const IntVec& w) {
  return QuotientGroup(B).is_member(w);
}

Rat pairing(const IntVec& v, const IntVec& w, const IntMatrix& B) {
  if (B.rows() != B.cols()) fail(errc::shape_error, "pairing: non-square matrix");
  if (B.det() == 0) fail(errc::singular_matrix, "pairing: det = 0");
  if (v.size() != B.rows() || w.size() != B.rows())
    fail(errc::shape_error, "pairing: bad vector length");
  RatVec rw(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) rw[i] = Rat(w[i]);
  RatVec x = solve_rational(B, rw);  // B^{-1} w
  Rat s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += Rat(v[i]) * x[i];
  return mod1(s);
}

}  // namespace gkz
