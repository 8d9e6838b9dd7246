#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "gkz/exactlat.hpp"
#include "gkz/intmat.hpp"

namespace gkz {

// Parameter vector: always available as complex doubles; exact rational
// entries are kept when the input provides them, enabling exact
// genericity decisions.
struct Parameter {
  std::vector<cplx> value;
  std::vector<Rat> exact;  // same length as value when is_exact
  bool is_exact = false;

  static Parameter from_rationals(const RatVec& r);
  static Parameter from_complex(const std::vector<cplx>& v);
  std::size_t size() const { return value.size(); }
};

// The system data: matrix A with Z A = Z^n, n < N, and a parameter.
// Columns carry user-facing labels (worked examples index from 0 or 1).
struct SystemSpec {
  IntMatrix A;  // n x N
  Parameter parameter;
  std::vector<long> column_labels;

  std::size_t n() const { return A.rows(); }
  std::size_t N() const { return A.cols(); }
  std::size_t position_of(long label) const;
  IntVec column(std::size_t pos) const;
};

SystemSpec build_system(const IntMatrix& A, const Parameter& parameter,
                        std::vector<long> labels = {});

struct OperatorDescriptor {
  enum class Kind { Euler, Box } kind;
  // Euler: row index i, coefficients a_{ij}, and the parameter entry c_i.
  std::size_t row = 0;
  IntVec euler_coeffs;
  cplx euler_shift{0.0, 0.0};
  // Box: the lattice vector u split into nonnegative parts u = up - un.
  IntVec box_up, box_un;
};

std::vector<OperatorDescriptor> operators(const SystemSpec& spec,
                                          const std::vector<IntVec>& kernel_basis);

// Cayley-type assembly: k unit-indicator rows over the blocks A_1..A_k
// (zero over an optional A_0 block) stacked above (A_0|A_1|...|A_k).
struct CayleyStructure {
  std::vector<IntMatrix> blocks;     // A_1..A_k (n x N_l each)
  std::optional<IntMatrix> block0;   // A_0
  std::size_t k = 0;
  IntMatrix assembled;               // (n+k) x N
  std::vector<std::vector<long>> index_sets;  // labels of I_0 (if any), I_1..I_k
  std::vector<long> labels;          // all column labels in assembled order

  // block index of a column label: 0 for I_0, 1..k otherwise
  std::size_t block_of(long label) const;
  bool has_block0() const { return block0.has_value(); }
};

CayleyStructure cayley_matrix(const std::vector<IntMatrix>& blocks,
                              const std::optional<IntMatrix>& block0 = std::nullopt,
                              const std::vector<long>& labels = {});

// Partition data of an (n+k)-simplex of a Cayley system: per-block pieces,
// labeled points, stair matrices and the unimodular Q0 normalization.
struct SimplexPartition {
  std::vector<long> sigma;                    // sorted labels, |sigma| = n+k
  std::vector<std::vector<long>> sigma_l;     // sigma ^ I_l, l = 0..k (0 empty unless A_0)
  std::vector<long> sigma0;                   // labeled points i^(l), l = 1..k
  std::vector<std::vector<long>> tau_l;       // sigma_l minus the labeled point
  std::vector<long> tau;                      // concatenated tau_l (mixed: sigma_0-block + tau)
  IntMatrix S;        // stair matrix, k x (sigma^(0), tau)
  IntMatrix T_stair;  // stair matrix, k x sigmabar
  IntMatrix Q0;       // (n+k) square, det 1
  IntMatrix reduced;  // A_tau-like block: Aring_{(sigma0),tau} - Aring_{sigma_0} S
};

SimplexPartition partition_simplex(const CayleyStructure& cs, const std::vector<long>& sigma,
                                   std::vector<long> sigma0 = {});

// Sum over i in sigma^(l) of t(e_i) A_sigma^{-1} a(j), exact.
Rat block_weight(const CayleyStructure& cs, const std::vector<long>& sigma, std::size_t l,
                 long j);

}  // namespace gkz
