#include "gkz/gkzsys.hpp"

#include <algorithm>
#include <sstream>

namespace gkz {

Parameter Parameter::from_rationals(const RatVec& r) {
  Parameter p;
  p.exact = r;
  p.is_exact = true;
  p.value.reserve(r.size());
  for (const auto& x : r) p.value.emplace_back(to_double(x), 0.0);
  return p;
}

Parameter Parameter::from_complex(const std::vector<cplx>& v) {
  Parameter p;
  p.value = v;
  return p;
}

std::size_t SystemSpec::position_of(long label) const {
  for (std::size_t j = 0; j < column_labels.size(); ++j)
    if (column_labels[j] == label) return j;
  fail(errc::bad_label, "unknown column label " + std::to_string(label));
}

IntVec SystemSpec::column(std::size_t pos) const {
  IntVec v(n());
  for (std::size_t i = 0; i < n(); ++i) v[i] = A.at(i, pos);
  return v;
}

SystemSpec build_system(const IntMatrix& A, const Parameter& parameter,
                        std::vector<long> labels) {
  std::size_t n = A.rows(), N = A.cols();
  if (n >= N) fail(errc::shape_error, "build_system requires n < N");
  if (parameter.size() != n) fail(errc::shape_error, "parameter length must equal row count");
  // Z A = Z^n iff all n invariant factors equal 1.
  SnfResult s = smith_normal_form(A);
  for (std::size_t k = 0; k < n; ++k)
    if (s.D.at(k, k) != 1)
      fail(errc::lattice_not_full, "columns generate a proper sublattice of Z^n");
  SystemSpec spec;
  spec.A = A;
  spec.parameter = parameter;
  if (labels.empty()) {
    labels.resize(N);
    for (std::size_t j = 0; j < N; ++j) labels[j] = long(j) + 1;
  } else if (labels.size() != N) {
    fail(errc::shape_error, "label list length must equal column count");
  }
  spec.column_labels = std::move(labels);
  return spec;
}

std::vector<OperatorDescriptor> operators(const SystemSpec& spec,
                                          const std::vector<IntVec>& kernel_basis) {
  std::vector<OperatorDescriptor> out;
  for (std::size_t i = 0; i < spec.n(); ++i) {
    OperatorDescriptor d;
    d.kind = OperatorDescriptor::Kind::Euler;
    d.row = i;
    d.euler_coeffs.resize(spec.N());
    for (std::size_t j = 0; j < spec.N(); ++j) d.euler_coeffs[j] = spec.A.at(i, j);
    d.euler_shift = spec.parameter.value[i];
    out.push_back(std::move(d));
  }
  for (const auto& u : kernel_basis) {
    if (u.size() != spec.N()) fail(errc::shape_error, "kernel vector has wrong length");
    IntVec Au = spec.A.mul(u);
    for (const auto& x : Au)
      if (x != 0) fail(errc::not_in_kernel, "supplied vector is not in Ker_Z A");
    OperatorDescriptor d;
    d.kind = OperatorDescriptor::Kind::Box;
    d.box_up.resize(u.size());
    d.box_un.resize(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) {
      d.box_up[j] = u[j] > 0 ? u[j] : Int(0);
      d.box_un[j] = u[j] < 0 ? Int(-u[j]) : Int(0);
    }
    out.push_back(std::move(d));
  }
  return out;
}

CayleyStructure cayley_matrix(const std::vector<IntMatrix>& blocks,
                              const std::optional<IntMatrix>& block0,
                              const std::vector<long>& labels) {
  if (blocks.empty()) fail(errc::shape_error, "cayley_matrix needs at least one block");
  std::size_t n = blocks[0].rows();
  for (const auto& b : blocks)
    if (b.rows() != n) fail(errc::shape_error, "cayley blocks must share the row count");
  if (block0 && block0->rows() != n)
    fail(errc::shape_error, "cayley blocks must share the row count");

  CayleyStructure cs;
  cs.blocks = blocks;
  cs.block0 = block0;
  cs.k = blocks.size();
  std::size_t N = block0 ? block0->cols() : 0;
  for (const auto& b : blocks) N += b.cols();

  cs.assembled = IntMatrix(n + cs.k, N);
  std::size_t col = 0;
  auto put_block = [&](const IntMatrix& b, std::size_t unit_row_or_none) {
    for (std::size_t j = 0; j < b.cols(); ++j, ++col) {
      if (unit_row_or_none < cs.k) cs.assembled.at(unit_row_or_none, col) = 1;
      for (std::size_t i = 0; i < n; ++i) cs.assembled.at(cs.k + i, col) = b.at(i, j);
    }
  };
  if (block0) put_block(*block0, cs.k);
  for (std::size_t l = 0; l < cs.k; ++l) put_block(blocks[l], l);

  if (labels.empty()) {
    cs.labels.resize(N);
    for (std::size_t j = 0; j < N; ++j) cs.labels[j] = long(j) + 1;
  } else if (labels.size() != N) {
    fail(errc::shape_error, "label list length must equal assembled column count");
  } else {
    cs.labels = labels;
  }
  cs.index_sets.assign(cs.k + 1, {});
  col = 0;
  if (block0)
    for (std::size_t j = 0; j < block0->cols(); ++j, ++col)
      cs.index_sets[0].push_back(cs.labels[col]);
  for (std::size_t l = 0; l < cs.k; ++l)
    for (std::size_t j = 0; j < blocks[l].cols(); ++j, ++col)
      cs.index_sets[l + 1].push_back(cs.labels[col]);
  return cs;
}

std::size_t CayleyStructure::block_of(long label) const {
  for (std::size_t l = 0; l < index_sets.size(); ++l)
    for (long x : index_sets[l])
      if (x == label) return l;
  fail(errc::bad_label, "unknown column label " + std::to_string(label));
}

namespace {

std::size_t label_position(const CayleyStructure& cs, long label) {
  for (std::size_t j = 0; j < cs.labels.size(); ++j)
    if (cs.labels[j] == label) return j;
  fail(errc::bad_label, "unknown column label " + std::to_string(label));
}

IntVec assembled_column(const CayleyStructure& cs, long label) {
  std::size_t j = label_position(cs, label);
  IntVec v(cs.assembled.rows());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = cs.assembled.at(i, j);
  return v;
}

// bottom n rows of a column (the geometric part under the indicator rows)
IntVec ring_column(const CayleyStructure& cs, long label) {
  IntVec full = assembled_column(cs, label);
  return IntVec(full.begin() + cs.k, full.end());
}

}  // namespace

SimplexPartition partition_simplex(const CayleyStructure& cs, const std::vector<long>& sigma,
                                   std::vector<long> sigma0) {
  std::size_t nk = cs.assembled.rows();  // n + k
  std::size_t n = nk - cs.k;
  if (sigma.size() != nk) fail(errc::shape_error, "simplex must have n + k elements");

  SimplexPartition sp;
  sp.sigma = sigma;
  std::sort(sp.sigma.begin(), sp.sigma.end());

  sp.sigma_l.assign(cs.k + 1, {});
  for (long lab : sp.sigma) sp.sigma_l[cs.block_of(lab)].push_back(lab);
  for (std::size_t l = 1; l <= cs.k; ++l)
    if (sp.sigma_l[l].empty()) fail(errc::empty_block, "simplex misses block " + std::to_string(l));

  std::vector<std::size_t> pos;
  for (long lab : sp.sigma) pos.push_back(label_position(cs, lab));
  IntMatrix Asig = cs.assembled.cols_subset(pos);
  if (Asig.det() == 0) fail(errc::singular_matrix, "simplex block is singular");

  if (sigma0.empty()) {
    for (std::size_t l = 1; l <= cs.k; ++l)
      sigma0.push_back(*std::min_element(sp.sigma_l[l].begin(), sp.sigma_l[l].end()));
  }
  if (sigma0.size() != cs.k) fail(errc::bad_label, "need one labeled point per block");
  for (std::size_t l = 1; l <= cs.k; ++l) {
    const auto& sl = sp.sigma_l[l];
    if (std::find(sl.begin(), sl.end(), sigma0[l - 1]) == sl.end())
      fail(errc::bad_label, "labeled point is not in its simplex block");
  }
  sp.sigma0 = sigma0;

  sp.tau_l.assign(cs.k + 1, {});
  for (std::size_t l = 1; l <= cs.k; ++l)
    for (long lab : sp.sigma_l[l])
      if (lab != sigma0[l - 1]) sp.tau_l[l].push_back(lab);
  // reduced coordinate block: sigma^(0) columns first, then the tau columns
  for (long lab : sp.sigma_l[0]) sp.tau.push_back(lab);
  for (std::size_t l = 1; l <= cs.k; ++l)
    for (long lab : sp.tau_l[l]) sp.tau.push_back(lab);

  // stair matrix over (sigma^(0), tau): e_l columns on tau^(l), zero on sigma^(0)
  sp.S = IntMatrix(cs.k, n);
  {
    std::size_t c = sp.sigma_l[0].size();
    for (std::size_t l = 1; l <= cs.k; ++l)
      for (std::size_t j = 0; j < sp.tau_l[l].size(); ++j, ++c) sp.S.at(l - 1, c) = 1;
  }

  // stair matrix over the complement
  std::vector<long> sbar;
  for (long lab : cs.labels)
    if (!std::binary_search(sp.sigma.begin(), sp.sigma.end(), lab)) sbar.push_back(lab);
  sp.T_stair = IntMatrix(cs.k, sbar.size());
  for (std::size_t j = 0; j < sbar.size(); ++j) {
    std::size_t l = cs.block_of(sbar[j]);
    if (l >= 1) sp.T_stair.at(l - 1, j) = 1;
  }

  // Q0 = [[I_k, O], [-Aring_{sigma_0}, I_n]]
  sp.Q0 = IntMatrix::identity(nk);
  for (std::size_t l = 0; l < cs.k; ++l) {
    IntVec a0 = ring_column(cs, sigma0[l]);
    for (std::size_t i = 0; i < n; ++i) sp.Q0.at(cs.k + i, l) = -a0[i];
  }

  // Q0 * A_sigma must be block-triangular [[I, S], [O, reduced]] when the
  // sigma columns are ordered (sigma_0, sigma^(0), tau).
  std::vector<long> ordered = sp.sigma0;
  for (long lab : sp.tau) ordered.push_back(lab);
  std::vector<std::size_t> opos;
  for (long lab : ordered) opos.push_back(label_position(cs, lab));
  IntMatrix Aord = cs.assembled.cols_subset(opos);
  IntMatrix prod = sp.Q0.mul(Aord);
  sp.reduced = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sp.reduced.at(i, j) = prod.at(cs.k + i, cs.k + j);
  for (std::size_t i = 0; i < cs.k; ++i) {
    for (std::size_t j = 0; j < cs.k; ++j)
      if (prod.at(i, j) != (i == j ? 1 : 0))
        fail(errc::shape_error, "Q0 normalization: identity block corrupted");
    for (std::size_t j = 0; j < n; ++j)
      if (prod.at(i, cs.k + j) != sp.S.at(i, j))
        fail(errc::shape_error, "Q0 normalization: stair block mismatch");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < cs.k; ++j)
      if (prod.at(cs.k + i, j) != 0)
        fail(errc::shape_error, "Q0 normalization: lower-left block not cleared");
  return sp;
}

Rat block_weight(const CayleyStructure& cs, const std::vector<long>& sigma, std::size_t l,
                 long j) {
  std::vector<long> sig = sigma;
  std::sort(sig.begin(), sig.end());
  std::vector<std::size_t> pos;
  for (long lab : sig) pos.push_back(label_position(cs, lab));
  IntMatrix Asig = cs.assembled.cols_subset(pos);
  if (Asig.det() == 0) fail(errc::singular_matrix, "block_weight: singular simplex block");
  IntVec aj = assembled_column(cs, j);
  RatVec rhs(aj.size());
  for (std::size_t i = 0; i < aj.size(); ++i) rhs[i] = Rat(aj[i]);
  RatVec x = solve_rational(Asig, rhs);  // A_sigma^{-1} a(j), indexed by sig order
  Rat w = 0;
  for (std::size_t i = 0; i < sig.size(); ++i)
    if (cs.block_of(sig[i]) == l) w += x[i];
  // row-sum identity: for a complement column and a denominator block the
  // weight is the block-membership indicator
  if (l >= 1 && !std::binary_search(sig.begin(), sig.end(), j)) {
    Rat expect = cs.block_of(j) == l ? 1 : 0;
    if (w != expect) fail(errc::shape_error, "block_weight: row-sum identity violated");
  }
  return w;
}

}  // namespace gkz
