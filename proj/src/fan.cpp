#include "gkz/fan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

namespace gkz {

namespace {

std::size_t position_of_label(const std::vector<long>& labels, long lab) {
  for (std::size_t j = 0; j < labels.size(); ++j)
    if (labels[j] == lab) return j;
  fail(errc::bad_label, "unknown column label " + std::to_string(lab));
}

std::string set_string(const std::vector<long>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

}  // namespace

SimplexData make_simplex(const IntMatrix& A, const std::vector<long>& labels,
                         std::vector<long> sigma) {
  std::sort(sigma.begin(), sigma.end());
  std::vector<std::size_t> pos;
  for (long lab : sigma) pos.push_back(position_of_label(labels, lab));
  IntMatrix Asig = A.cols_subset(pos);
  Int d = Asig.det();
  if (d == 0) fail(errc::singular_matrix, "simplex block " + set_string(sigma) + " is singular");

  std::vector<long> sbar;
  std::vector<std::size_t> bpos;
  for (std::size_t j = 0; j < A.cols(); ++j) {
    if (std::binary_search(sigma.begin(), sigma.end(), labels[j])) continue;
    sbar.push_back(labels[j]);
    bpos.push_back(j);
  }
  IntMatrix Abar = A.cols_subset(bpos);
  RatMatrix inv = rational_inverse(Asig);
  RatMatrix inv_Abar = inv.mul(RatMatrix(Abar));

  RatVec s(sbar.size(), Rat(0));
  for (std::size_t j = 0; j < sbar.size(); ++j)
    for (std::size_t i = 0; i < A.rows(); ++i) s[j] += inv_Abar.at(i, j);

  QuotientGroup group(Asig);
  return SimplexData{std::move(sigma),    std::move(pos),  std::move(Asig),
                     std::move(inv),      d,               std::move(sbar),
                     std::move(bpos),     std::move(Abar), std::move(inv_Abar),
                     std::move(s),        std::move(group)};
}

SimplexData make_simplex(const SystemSpec& spec, const std::vector<long>& sigma) {
  return make_simplex(spec.A, spec.column_labels, sigma);
}

namespace {

// next n-combination of positions 0..N-1
bool next_combination(std::vector<std::size_t>& c, std::size_t N) {
  std::size_t n = c.size();
  for (std::size_t i = n; i-- > 0;) {
    if (c[i] + (n - i) < N) {
      ++c[i];
      for (std::size_t j = i + 1; j < n; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

namespace {

enum class Screen { Outside, Inside, Wall };

struct ScreenResult {
  Screen state = Screen::Outside;
  std::size_t wall_column = 0;
};

ScreenResult screen_candidate(const IntMatrix& A, const RatVec& omega,
                              const std::vector<std::size_t>& comb) {
  std::size_t n = A.rows(), N = A.cols();
  IntMatrix Asig = A.cols_subset(comb);
  if (Asig.det() == 0) return {Screen::Outside, 0};
  // the unique nvec with nvec . a(i) = omega_i on sigma
  RatVec rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = omega[comb[i]];
  RatVec nvec = solve_rational(Asig.transpose(), rhs);
  ScreenResult res{Screen::Inside, 0};
  for (std::size_t j = 0; j < N; ++j) {
    if (std::find(comb.begin(), comb.end(), j) != comb.end()) continue;
    Rat val = 0;
    for (std::size_t i = 0; i < n; ++i) val += nvec[i] * Rat(A.at(i, j));
    if (val == omega[j]) return {Screen::Wall, j};
    if (val > omega[j]) res.state = Screen::Outside;
  }
  return res;
}

}  // namespace

TriangulationData regular_triangulation(const IntMatrix& A, const std::vector<long>& labels,
                                        const RatVec& omega, int jobs) {
  std::size_t n = A.rows(), N = A.cols();
  if (omega.size() != N) fail(errc::shape_error, "omega must have one entry per column");
  if (labels.size() != N) fail(errc::shape_error, "labels must have one entry per column");

  std::vector<std::vector<std::size_t>> candidates;
  {
    std::vector<std::size_t> comb(n);
    for (std::size_t i = 0; i < n; ++i) comb[i] = i;
    do {
      candidates.push_back(comb);
    } while (next_combination(comb, N));
  }

  std::vector<ScreenResult> screened(candidates.size());
  if (jobs <= 1 || candidates.size() < 32) {
    for (std::size_t i = 0; i < candidates.size(); ++i)
      screened[i] = screen_candidate(A, omega, candidates[i]);
  } else {
    std::size_t nw = std::min<std::size_t>(jobs, candidates.size());
    std::vector<std::thread> workers;
    std::atomic<std::size_t> next{0};
    for (std::size_t w = 0; w < nw; ++w)
      workers.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= candidates.size()) return;
          screened[i] = screen_candidate(A, omega, candidates[i]);
        }
      });
    for (auto& t : workers) t.join();
  }

  TriangulationData T;
  T.omega = omega;
  T.labels = labels;
  T.volume = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (screened[i].state == Screen::Wall) {
      std::vector<long> sig;
      for (auto p : candidates[i]) sig.push_back(labels[p]);
      fail(errc::non_generic_weight,
           "omega lies on a wall: sigma=" + set_string(sig) + " column " +
               std::to_string(labels[screened[i].wall_column]) + " achieves equality");
    }
    if (screened[i].state != Screen::Inside) continue;
    std::vector<long> sig;
    for (auto p : candidates[i]) sig.push_back(labels[p]);
    SimplexData sd = make_simplex(A, labels, sig);
    T.volume += sd.r();
    T.simplices.push_back(std::move(sd));
  }

  if (T.simplices.empty()) fail(errc::empty_cone, "no simplex survives the weight test");
  T.cone_rows = cone_of(T, A, labels);
  return T;
}

TriangulationData regular_triangulation(const SystemSpec& spec, const RatVec& omega, int jobs) {
  return regular_triangulation(spec.A, spec.column_labels, omega, jobs);
}

namespace {

// omega_j - t(A_sigma^{-1} a(j)) . omega_sigma as an N-vector
RatVec raw_constraint_row(const SimplexData& sd, std::size_t jj, std::size_t N) {
  RatVec row(N, Rat(0));
  row[sd.bpos[jj]] = 1;
  for (std::size_t i = 0; i < sd.pos.size(); ++i) row[sd.pos[i]] -= sd.inv_Abar.at(i, jj);
  return row;
}

}  // namespace

std::vector<RatVec> cone_of(const TriangulationData& T, const IntMatrix& A,
                            const std::vector<long>& labels) {
  if (A.cols() != T.omega.size() || labels != T.labels)
    fail(errc::shape_error, "cone_of: triangulation belongs to a different system");
  std::vector<RatVec> rows;
  std::size_t N = T.omega.size();
  for (const auto& sd : T.simplices) {
    for (std::size_t jj = 0; jj < sd.sbar.size(); ++jj) {
      RatVec row = raw_constraint_row(sd, jj, N);
      // primitive integer normalization (positive multiple)
      Int l = 1;
      for (const auto& x : row) l = boost::multiprecision::lcm(l, den(x));
      Int g = 0;
      for (const auto& x : row) g = boost::multiprecision::gcd(g, Int(num(x) * (l / den(x))));
      if (g != 0)
        for (auto& x : row) x = x * Rat(l, g);
      if (std::find(rows.begin(), rows.end(), row) == rows.end()) rows.push_back(row);
    }
  }
  for (const auto& row : rows)
    if (!(rat_dot(row, T.omega) > 0))
      fail(errc::non_generic_weight, "cone row not strictly positive at omega");
  return rows;
}

RatVec gevrey_exponents(const SimplexData& sd) { return sd.s; }

std::vector<long> sbar_plus(const SimplexData& sd) {
  std::vector<long> out;
  for (std::size_t i = 0; i < sd.sbar.size(); ++i)
    if (sd.s[i] > 1) out.push_back(sd.sbar[i]);
  return out;
}

Int normalized_volume(const TriangulationData& T) { return T.volume; }

std::vector<cplx> sample_point(const TriangulationData& T, double R, double margin) {
  std::size_t N = T.omega.size();
  if (T.cone_rows.empty()) {
    return std::vector<cplx>(N, cplx(1.0, 0.0));
  }
  // analytic-center-like direction: average of sup-normalized rows,
  // falling back to the defining omega when the average is not interior
  RatVec w(N, Rat(0));
  for (const auto& row : T.cone_rows) {
    Rat m = 0;
    for (const auto& x : row) {
      Rat a = x < 0 ? Rat(-x) : x;
      if (a > m) m = a;
    }
    for (std::size_t i = 0; i < N; ++i) w[i] += row[i] / m;
  }
  bool interior = true;
  for (const auto& row : T.cone_rows)
    if (!(rat_dot(row, w) > 0)) interior = false;
  if (!interior) w = T.omega;
  for (const auto& row : T.cone_rows)
    if (!(rat_dot(row, w) > 0)) fail(errc::empty_cone, "no interior direction found");

  // unscaled constraints |z_sigma^{-A_sigma^{-1}a(j)} z_j| < R * margin
  std::vector<RatVec> raw;
  for (const auto& sd : T.simplices)
    for (std::size_t jj = 0; jj < sd.sbar.size(); ++jj)
      raw.push_back(raw_constraint_row(sd, jj, N));

  double L = std::log(R * margin);  // negative
  double cmin = 0.0;
  bool first = true;
  for (const auto& row : raw) {
    double c = to_double(rat_dot(row, w));
    if (c <= 0.0) fail(errc::empty_cone, "direction not interior for a raw constraint");
    if (first || c < cmin) cmin = c;
    first = false;
  }
  double t = L / cmin;

  std::vector<cplx> z(N);
  for (std::size_t i = 0; i < N; ++i) z[i] = cplx(std::exp(t * to_double(w[i])), 0.0);

  // post-hoc: every constraint evaluates below R at log|z|
  for (const auto& row : raw) {
    double v = 0.0;
    for (std::size_t i = 0; i < N; ++i) v += to_double(row[i]) * std::log(std::abs(z[i]));
    if (!(std::exp(v) < R)) fail(errc::empty_cone, "sample point violates a constraint");
  }
  return z;
}

}  // namespace gkz
